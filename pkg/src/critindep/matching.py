"""Maximum matchings and matching-based predicates.

General graphs go through augmenting-path search with blossom contraction;
bipartite instances get a Hopcroft-Karp fast path.  Both are exact and
deterministic: vertices are scanned in index order, so repeated runs return
the identical matching.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Sequence

from .errors import ScaleError
from .graph import Graph, VertexSet, _bits, _mask_independent, subgraph_without


class MatchingMap:
    """An involution on the vertex set; fixed points are unmatched vertices."""

    __slots__ = ("mate",)

    def __init__(self, mate: Sequence[int]) -> None:
        mate = tuple(mate)
        for v, m in enumerate(mate):
            if not 0 <= m < len(mate) or mate[m] != v:
                raise ValueError("mate map is not an involution on 0..n-1")
        object.__setattr__(self, "mate", mate)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("MatchingMap is immutable")

    @classmethod
    def from_pairs(cls, g: Graph, pairs) -> MatchingMap:
        mate = list(range(g.n))
        for u, v in pairs:
            if not g.has_edge(u, v):
                raise ValueError(f"pair ({u}, {v}) is not an edge of the graph")
            if mate[u] != u or mate[v] != v:
                raise ValueError("pairs are not vertex disjoint")
            mate[u], mate[v] = v, u
        return cls(mate)

    @property
    def n(self) -> int:
        return len(self.mate)

    @property
    def size(self) -> int:
        return sum(1 for v, m in enumerate(self.mate) if m != v) // 2

    def __call__(self, v: int) -> int:
        return self.mate[v]

    def pairs(self) -> list[tuple[int, int]]:
        return [(v, m) for v, m in enumerate(self.mate) if v < m]

    def matched_vertices(self) -> VertexSet:
        return VertexSet(self.n, (v for v, m in enumerate(self.mate) if m != v))

    def validate_for(self, g: Graph) -> None:
        if self.n != g.n:
            raise ValueError("matching does not match the graph order")
        for u, v in self.pairs():
            if not g.has_edge(u, v):
                raise ValueError(f"matched pair ({u}, {v}) is not an edge")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MatchingMap) and self.mate == other.mate

    def __hash__(self) -> int:
        return hash(self.mate)

    def __repr__(self) -> str:
        return f"MatchingMap(size={self.size}, pairs={self.pairs()})"


def _mark_path(match, base, parent, in_blossom, v, stem, child) -> None:
    while base[v] != stem:
        in_blossom[base[v]] = True
        in_blossom[base[match[v]]] = True
        parent[v] = child
        child = match[v]
        v = parent[match[v]]


def _lowest_common_base(match, base, parent, a, b) -> int:
    seen = [False] * len(base)
    v = base[a]
    while True:
        seen[v] = True
        if match[v] == -1:
            break
        v = base[parent[match[v]]]
    v = base[b]
    while not seen[v]:
        v = base[parent[match[v]]]
    return v


def _augment_from(adj, n, match, root) -> bool:
    """Grow an alternating tree from ``root``, contracting blossoms on sight."""
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    queue = deque([root])
    finish = -1
    while queue and finish == -1:
        v = queue.popleft()
        for to in _bits(adj[v]):
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                # Odd cycle in the tree: shrink it to its lowest common base.
                stem = _lowest_common_base(match, base, parent, v, to)
                in_blossom = [False] * n
                _mark_path(match, base, parent, in_blossom, v, stem, to)
                _mark_path(match, base, parent, in_blossom, to, stem, v)
                for i in range(n):
                    if in_blossom[base[i]]:
                        base[i] = stem
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    finish = to
                    break
                used[match[to]] = True
                queue.append(match[to])
    if finish == -1:
        return False
    v = finish
    while v != -1:
        pv = parent[v]
        next_v = match[pv]
        match[v] = pv
        match[pv] = v
        v = next_v
    return True


def max_matching(g: Graph) -> MatchingMap:
    """A maximum matching of ``g``, certified by absence of augmenting paths."""
    n, adj = g.n, g.adj
    match = [-1] * n
    for v in range(n):  # cheap greedy seed
        if match[v] == -1:
            for w in _bits(adj[v]):
                if match[w] == -1:
                    match[v] = w
                    match[w] = v
                    break
    for v in range(n):
        if match[v] == -1:
            _augment_from(adj, n, match, v)
    return MatchingMap(tuple(v if m == -1 else m for v, m in enumerate(match)))


def matching_number(g: Graph) -> int:
    return max_matching(g).size


def _hopcroft_karp(lefts: list[int], nbr_mask: dict[int, int]) -> dict[int, int]:
    """Maximum bipartite matching; left vertices carry masks of right labels."""
    inf = float("inf")
    pair_left: dict[int, int] = {u: -1 for u in lefts}
    pair_right: dict[int, int] = {}
    dist: dict[int, float] = {}

    def bfs() -> bool:
        queue = deque()
        for u in lefts:
            if pair_left[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = inf
        reachable_free = False
        while queue:
            u = queue.popleft()
            for v in _bits(nbr_mask[u]):
                w = pair_right.get(v, -1)
                if w == -1:
                    reachable_free = True
                elif dist[w] is inf:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return reachable_free

    def dfs(u: int) -> bool:
        for v in _bits(nbr_mask[u]):
            w = pair_right.get(v, -1)
            if w == -1 or (dist[w] == dist[u] + 1 and dfs(w)):
                pair_left[u] = v
                pair_right[v] = u
                return True
        dist[u] = inf
        return False

    while bfs():
        for u in lefts:
            if pair_left[u] == -1:
                dfs(u)
    return {u: v for u, v in pair_left.items() if v != -1}


def max_matching_bipartite(g: Graph, a: VertexSet, b: VertexSet) -> MatchingMap:
    """Hopcroft-Karp fast path; (a, b) must be a valid bipartition of ``g``."""
    if a.n != g.n or b.n != g.n:
        raise ValueError("bipartition sets do not match the graph order")
    if a.mask & b.mask or (a.mask | b.mask) != g.full_mask:
        raise ValueError("(A, B) is not a partition of the vertex set")
    if not _mask_independent(g.adj, a.mask) or not _mask_independent(g.adj, b.mask):
        raise ValueError("(A, B) is not a bipartition: a part contains an edge")
    lefts = list(a)
    pairing = _hopcroft_karp(lefts, {u: g.adj[u] & b.mask for u in lefts})
    return MatchingMap.from_pairs(g, pairing.items())


def has_perfect_matching(g: Graph) -> bool:
    return g.n % 2 == 0 and matching_number(g) == g.n // 2


def has_near_perfect_matching(g: Graph) -> bool:
    return g.n % 2 == 1 and matching_number(g) == (g.n - 1) // 2


def is_factor_critical(g: Graph) -> bool:
    """True when G - v has a perfect matching for every vertex v."""
    if g.n % 2 == 0 and g.n > 0:
        return False
    want = (g.n - 1) // 2
    return all(
        matching_number(subgraph_without(g, 1 << v)) == want for v in range(g.n)
    )


def is_bipartite_matching_covered(g: Graph) -> bool:
    """Connected, bipartite, and every edge lies in some perfect matching."""
    from .graph import bipartition, is_connected

    if g.n == 0 or g.n % 2 == 1 or not is_connected(g):
        return False
    if bipartition(g) is None:
        return False
    half = g.n // 2
    if matching_number(g) != half:
        return False
    for u, v in g.edges():
        rest = subgraph_without(g, (1 << u) | (1 << v))
        if matching_number(rest) != half - 1:
            return False
    return True


def match_into(g: Graph, a: VertexSet, b: VertexSet) -> MatchingMap | None:
    """A matching of ``g`` covering all of A with mates in B, if one exists.

    Decided on the bipartite subgraph of g-edges between A and B.
    """
    if a.n != g.n or b.n != g.n:
        raise ValueError("vertex sets do not match the graph order")
    if a.mask & b.mask:
        raise ValueError("A and B must be disjoint")
    lefts = list(a)
    pairing = _hopcroft_karp(lefts, {u: g.adj[u] & b.mask for u in lefts})
    if len(pairing) != len(lefts):
        return None
    return MatchingMap.from_pairs(g, pairing.items())


def _maximal_independent_masks(adj, universe: int):
    """Yield the inclusion-maximal independent subsets of ``universe``.

    Bron-Kerbosch with pivoting on the complement graph, deterministic order.
    """
    non_adj = {}
    for v in _bits(universe):
        non_adj[v] = universe & ~adj[v] & ~(1 << v)

    def expand(r: int, p: int, x: int):
        if p == 0 and x == 0:
            yield r
            return
        pivot = -1
        best = -1
        for u in _bits(p | x):
            score = (p & non_adj[u]).bit_count()
            if score > best:
                best = score
                pivot = u
        for v in _bits(p & ~non_adj[pivot]):
            bit = 1 << v
            yield from expand(r | bit, p & non_adj[v], x & non_adj[v])
            p &= ~bit
            x |= bit

    yield from expand(0, universe, 0)


def berge_is_maximum(
    g: Graph, s: VertexSet, limit: int = 24
) -> tuple[bool, VertexSet | None]:
    """Berge's maximality test for an independent set ``s``.

    Returns (True, None) when every independent set disjoint from ``s`` can be
    matched into ``s`` (so ``s`` is maximum), else (False, witness) with the
    first independent set found that cannot be matched into ``s``.

    Matchability is downward closed, so only inclusion-maximal independent
    subsets of G - S are tested.  Exponential; refuses graphs above ``limit``.
    """
    if not _mask_independent(g.adj, s.mask):
        raise ValueError("S must be an independent set")
    if g.n > limit:
        raise ScaleError(f"berge_is_maximum is gated to n <= {limit}")
    outside = g.full_mask & ~s.mask
    for t_mask in _maximal_independent_masks(g.adj, outside):
        t = VertexSet(g.n, t_mask)
        if match_into(g, t, s) is None:
            return False, t
    return True, None
