"""Exact independence machinery: alpha, Omega, core/corona, KE recognition.

alpha runs a bitset branch-and-bound (branch on a maximum-degree vertex of
the residual graph, greedy clique cover as the upper bound, degree <= 1
reductions).  core and corona are computed from n+1 alpha queries instead of
enumerating all maximum independent sets; the enumeration is kept as an
oracle and stays available through ``omega``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, VertexSet, _bits, is_independent, neighborhood
from .matching import MatchingMap, match_into, matching_number


def _clique_cover_bound(adj: tuple[int, ...], mask: int) -> int:
    """Size of a greedy clique cover of G[mask]; upper-bounds its alpha."""
    count = 0
    remaining = mask
    while remaining:
        v = (remaining & -remaining).bit_length() - 1
        clique = 1 << v
        cand = adj[v] & remaining
        while cand:
            w = (cand & -cand).bit_length() - 1
            clique |= 1 << w
            cand &= adj[w]
        remaining &= ~clique
        count += 1
    return count


def _greedy_independent_size(adj: tuple[int, ...], mask: int) -> int:
    size = 0
    while mask:
        best_v, best_d = -1, 1 << 62
        for v in _bits(mask):
            d = (adj[v] & mask).bit_count()
            if d < best_d:
                best_v, best_d = v, d
        size += 1
        mask &= ~(adj[best_v] | (1 << best_v))
    return size


def alpha_mask(adj: tuple[int, ...], mask: int) -> int:
    """Exact independence number of the subgraph induced by ``mask``."""
    best = _greedy_independent_size(adj, mask)

    def rec(mask: int, size: int) -> None:
        nonlocal best
        # Take isolated and degree-1 vertices outright; both are safe.
        reduced = True
        while reduced and mask:
            reduced = False
            for v in _bits(mask):
                if (adj[v] & mask).bit_count() <= 1:
                    size += 1
                    mask &= ~(adj[v] | (1 << v))
                    reduced = True
                    break
        if not mask:
            if size > best:
                best = size
            return
        if size + _clique_cover_bound(adj, mask) <= best:
            return
        branch_v, branch_d = -1, -1
        for v in _bits(mask):
            d = (adj[v] & mask).bit_count()
            if d > branch_d:
                branch_v, branch_d = v, d
        rec(mask & ~(adj[branch_v] | (1 << branch_v)), size + 1)
        rec(mask & ~(1 << branch_v), size)

    rec(mask, 0)
    return best


def alpha(g: Graph) -> int:
    """The independence number of ``g``."""
    return alpha_mask(g.adj, g.full_mask)


@dataclass(frozen=True)
class MaximumIndependentFamily:
    """All maximum independent sets, or a capped prefix in canonical order."""

    alpha: int
    sets: tuple[VertexSet, ...]
    truncated: bool

    def __iter__(self):
        return iter(self.sets)

    def __len__(self) -> int:
        return len(self.sets)


class _CapReached(Exception):
    pass


def omega(g: Graph, cap: int = 10**5) -> MaximumIndependentFamily:
    """Enumerate Omega(g) in lexicographic order on sorted vertex tuples."""
    adj = g.adj
    target = alpha(g)
    found: list[int] = []

    def rec(cand: int, chosen: int, size: int) -> None:
        if size == target:
            found.append(chosen)
            if len(found) >= cap:
                raise _CapReached
            return
        if size + cand.bit_count() < target:
            return
        v = (cand & -cand).bit_length() - 1
        bit = 1 << v
        rec(cand & ~(adj[v] | bit), chosen | bit, size + 1)
        rec(cand & ~bit, chosen, size)

    truncated = False
    try:
        rec(g.full_mask, 0, 0)
    except _CapReached:
        truncated = True
    sets = tuple(VertexSet(g.n, m) for m in found)
    return MaximumIndependentFamily(alpha=target, sets=sets, truncated=truncated)


def core(g: Graph) -> VertexSet:
    """The intersection of all maximum independent sets of ``g``.

    Membership test: v is in every maximum independent set exactly when
    deleting v drops alpha.
    """
    adj = g.adj
    a = alpha_mask(adj, g.full_mask)
    mask = 0
    for v in range(g.n):
        if alpha_mask(adj, g.full_mask & ~(1 << v)) < a:
            mask |= 1 << v
    return VertexSet(g.n, mask)


def corona(g: Graph) -> VertexSet:
    """The union of all maximum independent sets of ``g``.

    Membership test: v lies in some maximum independent set exactly when
    alpha(G - N[v]) == alpha(G) - 1.
    """
    adj = g.adj
    a = alpha_mask(adj, g.full_mask)
    mask = 0
    for v in range(g.n):
        rest = g.full_mask & ~(adj[v] | (1 << v))
        if alpha_mask(adj, rest) == a - 1:
            mask |= 1 << v
    return VertexSet(g.n, mask)


def is_konig_egervary(g: Graph) -> bool:
    """True when alpha(G) + mu(G) equals the order of G."""
    return alpha(g) + matching_number(g) == g.n


def _check_gamma(g: Graph, gamma) -> tuple[int, list[VertexSet]]:
    members = list(gamma)
    if not members:
        raise ValueError("Gamma must be a non-empty collection")
    a = alpha(g)
    for s in members:
        if len(s) != a or not is_independent(g, s):
            raise ValueError(f"{s!r} is not a maximum independent set")
    return a, members


def gamma_sum_check(g: Graph, gamma) -> tuple[int, bool]:
    """|union Gamma| + |intersection Gamma| and whether it equals 2 alpha."""
    a, members = _check_gamma(g, gamma)
    union = VertexSet.empty(g.n)
    inter = VertexSet.full(g.n)
    for s in members:
        union = union | s
        inter = inter & s
    total = len(union) + len(inter)
    return total, total == 2 * a


@dataclass(frozen=True)
class GammaMatchingResult:
    matching: MatchingMap | None
    covers: bool
    uncovered: VertexSet

    @property
    def passed(self) -> bool:
        return self.matching is not None and self.covers


def gamma_matching_check(g: Graph, gamma) -> GammaMatchingResult:
    """Check the KE matching and covering identities for a family Gamma.

    Requires a Konig-Egervary graph.  Verifies that V - union(Gamma) can be
    matched into intersection(Gamma) and that union(Gamma) together with
    N(intersection(Gamma)) covers V.
    """
    if not is_konig_egervary(g):
        raise ValueError("gamma_matching_check requires a Konig-Egervary graph")
    _, members = _check_gamma(g, gamma)
    union = VertexSet.empty(g.n)
    inter = VertexSet.full(g.n)
    for s in members:
        union = union | s
        inter = inter & s
    outside = union.complement()
    matching = match_into(g, outside, inter)
    covered = union | neighborhood(g, inter)
    return GammaMatchingResult(
        matching=matching,
        covers=covered == VertexSet.full(g.n),
        uncovered=covered.complement(),
    )
