"""The independence decomposition L(G) / L^c(G) and the almost-bipartite
theorem checker.

L(G) = J + N(J) for any maximum critical independent set J; the set is the
same whichever J is picked.  G[L] is always Konig-Egervary, G[V - L] is
always 2-bicritical, and alpha splits additively across the two parts.  All
four properties are re-verified on every decomposition; a violation is a
library bug, never a valid outcome.
"""

from __future__ import annotations

from dataclasses import dataclass

from .critical import ker, max_critical_independent_set
from .errors import ScaleError
from .graph import (
    Graph,
    VertexSet,
    induced_subgraph,
    is_connected,
    neighborhood,
)
from .independence import alpha, core, corona, is_konig_egervary
from .matching import matching_number
from .sentinels import OVERFLOW, UNCOMPUTED, UNDECIDED


@dataclass(frozen=True)
class LarsonDecomposition:
    """The split L = J + N(J) with both induced sides and their label maps."""

    J: VertexSet
    L: VertexSet
    Lc: VertexSet
    L_graph: Graph
    L_map: tuple[int, ...]
    Lc_graph: Graph
    Lc_map: tuple[int, ...]


def larson_decompose(g: Graph) -> LarsonDecomposition:
    """Compute the decomposition and assert its four defining properties."""
    j = max_critical_independent_set(g)
    l_set = j | neighborhood(g, j)
    lc_set = l_set.complement()
    l_graph, l_map = induced_subgraph(g, l_set)
    lc_graph, lc_map = induced_subgraph(g, lc_set)

    alpha_l = alpha(l_graph)
    alpha_lc = alpha(lc_graph)
    if alpha(g) != alpha_l + alpha_lc:
        raise RuntimeError("larson_decompose: alpha is not additive across the split")
    if alpha_l + matching_number(l_graph) != l_graph.n:
        raise RuntimeError("larson_decompose: G[L] is not Konig-Egervary")
    if len(max_critical_independent_set(lc_graph)) != 0:
        raise RuntimeError("larson_decompose: G[V-L] is not 2-bicritical")

    return LarsonDecomposition(
        J=j,
        L=l_set,
        Lc=lc_set,
        L_graph=l_graph,
        L_map=l_map,
        Lc_graph=lc_graph,
        Lc_map=lc_map,
    )


def is_almost_bipartite(g: Graph, cycle_cap: int = 10**6):
    """True when ``g`` has exactly one odd simple cycle; UNDECIDED on cap hit."""
    from .graph import count_odd_cycles

    count = count_odd_cycles(g, cap=cycle_cap)
    if count is OVERFLOW:
        return UNDECIDED
    return count == 1


def _is_cycle_graph(g: Graph) -> bool:
    return (
        g.n >= 3
        and is_connected(g)
        and all(g.degree(v) == 2 for v in range(g.n))
    )


@dataclass(frozen=True)
class AlmostBipartiteReport:
    """Per-identity outcome of the almost-bipartite non-KE theorem."""

    ker_equals_core: bool
    size_identity: bool
    cover_identity: bool
    lc_is_odd_cycle: bool
    alpha: int
    core: VertexSet
    corona: VertexSet
    ker: VertexSet
    lc: VertexSet

    @property
    def passed(self) -> bool:
        return (
            self.ker_equals_core
            and self.size_identity
            and self.cover_identity
            and self.lc_is_odd_cycle
        )


def check_almost_bipartite_theorem(
    g: Graph, cycle_cap: int = 10**6, oracle_limit: int = 24
) -> AlmostBipartiteReport:
    """Evaluate the three almost-bipartite identities plus the L^c shape.

    Preconditions: ``g`` is almost bipartite and not Konig-Egervary.
    """
    ab = is_almost_bipartite(g, cycle_cap=cycle_cap)
    if ab is UNDECIDED:
        raise ScaleError("odd-cycle counting overflowed; cannot check preconditions")
    if not ab:
        raise ValueError("graph is not almost bipartite")
    if is_konig_egervary(g):
        raise ValueError("graph is Konig-Egervary; the theorem does not apply")

    a = alpha(g)
    core_set = core(g)
    corona_set = corona(g)
    ker_set = ker(g, limit=oracle_limit)
    if ker_set is UNCOMPUTED:
        raise ScaleError("ker is uncomputed at this order; raise the oracle limit")
    dec = larson_decompose(g)
    lc_graph = dec.Lc_graph
    return AlmostBipartiteReport(
        ker_equals_core=ker_set == core_set,
        size_identity=len(corona_set) + len(core_set) == 2 * a + 1,
        cover_identity=(corona_set | neighborhood(g, core_set)) == VertexSet.full(g.n),
        lc_is_odd_cycle=_is_cycle_graph(lc_graph) and lc_graph.n % 2 == 1,
        alpha=a,
        core=core_set,
        corona=corona_set,
        ker=ker_set,
        lc=dec.Lc,
    )
