"""Critical difference machinery: d(G), critical independent sets, ker,
diadem, nucleus, and the 2-bicritical test.

The polynomial route runs through the bipartite double cover: for any graph,
max |S| - |N(S)| over all vertex subsets equals alpha(cover) - n, and Konig
duality turns that into one bipartite matching.  Because every set X can be
shrunk to the independent set X - N(X) without lowering its difference, the
same matching also computes the maximum over independent sets, including
relativised variants with forced-in or excluded vertices.  Brute-force oracle
counterparts live in ``critindep.oracle`` and in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ScaleError
from .graph import Graph, VertexSet, _bits, neighborhood_mask
from .matching import _hopcroft_karp
from .sentinels import UNCOMPUTED


def set_difference(g: Graph, x: VertexSet) -> int:
    """d_G(X) = |X| - |N(X)|."""
    if x.n != g.n:
        raise ValueError("vertex set does not match the graph order")
    return x.mask.bit_count() - neighborhood_mask(g, x.mask).bit_count()


def _max_diff(g: Graph, alive: int, banned: int = 0) -> int:
    """max |S| - |N(S)| over S inside ``alive`` avoiding ``banned``.

    Neighbourhoods are taken within ``alive``.  Computed as a maximum
    independent set of the bipartite double cover of G[alive] with the banned
    unprimed copies deleted.
    """
    banned &= alive
    lefts = list(_bits(alive & ~banned))
    mu = len(_hopcroft_karp(lefts, {u: g.adj[u] & alive for u in lefts}))
    return alive.bit_count() - banned.bit_count() - mu


def critical_difference(g: Graph) -> int:
    """d(G), the maximum of |X| - |N(X)| over all vertex subsets.

    Equals the maximum over independent subsets as well, so d(G) >= 0 always
    (the empty set has difference 0).
    """
    return _max_diff(g, g.full_mask)


def _max_diff_forced(g: Graph, include_mask: int, banned: int = 0) -> int:
    """max d_G(S) over independent S containing ``include_mask``.

    Requires ``include_mask`` independent.  Splits as d_G(I) plus the best
    difference inside G - N[I]; the two neighbourhood contributions cannot
    overlap because nothing outside N[I] is adjacent to I.
    """
    nbrs = neighborhood_mask(g, include_mask)
    base = include_mask.bit_count() - nbrs.bit_count()
    alive = g.full_mask & ~(include_mask | nbrs)
    return base + _max_diff(g, alive, banned)


def max_critical_independent_set(g: Graph) -> VertexSet:
    """The lexicographically least maximum-cardinality critical independent set.

    Greedy over vertices in index order: keep v whenever some critical
    independent set extends the kept prefix through v.  Every critical
    independent set extends to a maximum one, so the inclusion-maximal result
    has maximum cardinality; the oracle tests pin this down exhaustively.
    """
    d = critical_difference(g)
    chosen = 0
    closed = 0
    for v in range(g.n):
        if closed >> v & 1:
            continue
        candidate = chosen | (1 << v)
        if _max_diff_forced(g, candidate) == d:
            chosen = candidate
            closed |= g.adj[v] | (1 << v)
    return VertexSet(g.n, chosen)


def critical_independent_sets(
    g: Graph,
    *,
    max_size_only: bool = False,
    limit: int = 24,
    node_cap: int = 5_000_000,
) -> list[VertexSet]:
    """Enumerate critical independent sets by pruned search.

    Exponential in the worst case; refuses graphs above ``limit`` vertices
    and aborts past ``node_cap`` search nodes.
    """
    if g.n > limit:
        raise ScaleError(f"critical set enumeration is gated to n <= {limit}")
    d = critical_difference(g)
    size_exact = len(max_critical_independent_set(g)) if max_size_only else None
    out: list[int] = []
    if d == 0 and (size_exact is None or size_exact == 0):
        out.append(0)
    adj = g.adj
    nodes = 0

    def rec(cand: int, chosen: int, nbrs: int, size: int) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > node_cap:
            raise ScaleError("critical set enumeration exceeded its node cap")
        if not cand:
            return
        # Adding k vertices raises the difference by at most k.
        if size + cand.bit_count() - nbrs.bit_count() < d:
            return
        if size_exact is not None and size + cand.bit_count() < size_exact:
            return
        v = (cand & -cand).bit_length() - 1
        bit = 1 << v
        new_chosen = chosen | bit
        new_nbrs = nbrs | adj[v]
        new_size = size + 1
        if new_size - new_nbrs.bit_count() == d and (
            size_exact is None or new_size == size_exact
        ):
            out.append(new_chosen)
        rec(cand & ~(adj[v] | bit), new_chosen, new_nbrs, new_size)
        rec(cand & ~bit, chosen, nbrs, size)

    rec(g.full_mask, 0, 0, 0)
    return [VertexSet(g.n, m) for m in out]


def ker(g: Graph, limit: int = 24):
    """The intersection of all critical independent sets.

    When d(G) = 0 the empty set is itself critical, which forces ker to be
    empty with no search at all.  Otherwise the intersection is taken over a
    bounded enumeration; graphs above ``limit`` report UNCOMPUTED rather than
    a guess.
    """
    if critical_difference(g) == 0:
        return VertexSet.empty(g.n)
    if g.n > limit:
        return UNCOMPUTED
    inter = g.full_mask
    for s in critical_independent_sets(g, limit=limit):
        inter &= s.mask
        if not inter:
            break
    return VertexSet(g.n, inter)


def diadem(g: Graph) -> VertexSet:
    """The union of all critical independent sets.

    Membership is decided per vertex by recomputing the best difference with
    the vertex forced into the set and comparing against d(G).
    """
    d = critical_difference(g)
    mask = 0
    for v in range(g.n):
        if _max_diff_forced(g, 1 << v) == d:
            mask |= 1 << v
    return VertexSet(g.n, mask)


def nucleus(g: Graph, limit: int = 24):
    """The intersection of all maximum-cardinality critical independent sets."""
    j = max_critical_independent_set(g)
    if len(j) == 0:
        return VertexSet.empty(g.n)
    if g.n > limit:
        return UNCOMPUTED
    inter = g.full_mask
    for s in critical_independent_sets(g, max_size_only=True, limit=limit):
        inter &= s.mask
        if not inter:
            break
    return VertexSet(g.n, inter)


def is_2bicritical(g: Graph) -> bool:
    """True when |N(S)| > |S| for every non-empty independent set S.

    Equivalent to the maximum critical independent set being empty.
    """
    return len(max_critical_independent_set(g)) == 0


@dataclass(frozen=True)
class CriticalProfile:
    """The critical-structure invariants of one graph.

    ``d`` is both the critical difference and the critical independence
    difference; the two coincide for every graph.  ``ker`` and ``nucleus``
    may be UNCOMPUTED on graphs past the enumeration limit.
    """

    d: int
    max_critical: VertexSet
    ker: VertexSet | object
    diadem: VertexSet
    nucleus: VertexSet | object
    two_bicritical: bool


def critical_profile(g: Graph, limit: int = 24) -> CriticalProfile:
    j = max_critical_independent_set(g)
    return CriticalProfile(
        d=critical_difference(g),
        max_critical=j,
        ker=ker(g, limit=limit),
        diadem=diadem(g),
        nucleus=nucleus(g, limit=limit),
        two_bicritical=len(j) == 0,
    )
