"""Immutable simple graphs and vertex sets backed by integer bitmasks.

Vertices are always the dense labels ``0 .. n-1``.  Every neighbour set is a
Python int used as a bitmask, which keeps the exhaustive routines in the rest
of the package set-intersection bound and makes all values hashable and safe
to share across worker processes.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator

from .sentinels import OVERFLOW


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class VertexSet:
    """An immutable subset of the vertices of an n-vertex graph."""

    __slots__ = ("n", "mask")

    def __init__(self, n: int, members: Iterable[int] | int = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if isinstance(members, int):
            mask = members
            if mask < 0 or mask >> n:
                raise ValueError(f"bitmask {members:#x} out of range for n={n}")
        else:
            mask = 0
            for v in members:
                if not 0 <= v < n:
                    raise ValueError(f"vertex {v} out of range for n={n}")
                mask |= 1 << v
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("VertexSet is immutable")

    @classmethod
    def empty(cls, n: int) -> VertexSet:
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> VertexSet:
        return cls(n, (1 << n) - 1)

    def _coerce(self, other: VertexSet) -> int:
        if not isinstance(other, VertexSet):
            raise TypeError("expected a VertexSet")
        if other.n != self.n:
            raise ValueError("VertexSet operands belong to different graph orders")
        return other.mask

    def __or__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.n, self.mask | self._coerce(other))

    def __and__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.n, self.mask & self._coerce(other))

    def __sub__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.n, self.mask & ~self._coerce(other))

    def __le__(self, other: VertexSet) -> bool:
        return self.mask & ~self._coerce(other) == 0

    def __lt__(self, other: VertexSet) -> bool:
        m = self._coerce(other)
        return self.mask != m and self.mask & ~m == 0

    def complement(self) -> VertexSet:
        return VertexSet(self.n, ((1 << self.n) - 1) & ~self.mask)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and bool(self.mask >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return _bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, VertexSet)
            and self.n == other.n
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def to_list(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return "{" + ", ".join(str(v) for v in self) + "}"


class Graph:
    """A finite simple graph: symmetric, irreflexive, labels ``0 .. n-1``."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Graph is immutable")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in _bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet(self.n, self.adj[v])

    def vertex_set(self) -> VertexSet:
        return VertexSet.full(self.n)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def _require_subset(g: Graph, x: VertexSet) -> int:
    if x.n != g.n:
        raise ValueError("vertex set does not match the graph order")
    return x.mask


def neighborhood_mask(g: Graph, mask: int) -> int:
    out = 0
    for v in _bits(mask):
        out |= g.adj[v]
    return out


def neighborhood(g: Graph, x: VertexSet) -> VertexSet:
    """N(X), the union of the open neighbourhoods of the members of X."""
    return VertexSet(g.n, neighborhood_mask(g, _require_subset(g, x)))


def closed_neighborhood(g: Graph, x: VertexSet) -> VertexSet:
    """N[X] = X together with N(X)."""
    mask = _require_subset(g, x)
    return VertexSet(g.n, mask | neighborhood_mask(g, mask))


def is_independent(g: Graph, x: VertexSet) -> bool:
    """True when no edge of ``g`` has both endpoints in ``x``."""
    mask = _require_subset(g, x)
    return _mask_independent(g.adj, mask)


def _mask_independent(adj: tuple[int, ...], mask: int) -> bool:
    for v in _bits(mask):
        if adj[v] & mask:
            return False
    return True


def induced_subgraph(g: Graph, x: VertexSet) -> tuple[Graph, tuple[int, ...]]:
    """The subgraph induced by ``x`` plus the new-label -> old-label map.

    Vertices are relabelled ``0 .. |x|-1`` following increasing old labels.
    """
    mask = _require_subset(g, x)
    old = list(_bits(mask))
    index = {v: i for i, v in enumerate(old)}
    edges = []
    for v in old:
        for w in _bits(g.adj[v] & mask):
            if w > v:
                edges.append((index[v], index[w]))
    return Graph(len(old), edges), tuple(old)


def subgraph_without(g: Graph, banned_mask: int) -> Graph:
    """``g`` with the vertices in ``banned_mask`` deleted, labels preserved.

    Deleted vertices stay present as isolated, never-used slots so that all
    masks keep their meaning; callers restrict loops to the surviving set.
    """
    keep = g.full_mask & ~banned_mask
    h = Graph(g.n)
    object.__setattr__(h, "adj", tuple((a & keep) if (keep >> v) & 1 else 0 for v, a in enumerate(g.adj)))
    return h


def connected_component_mask(g: Graph, start: int, alive_mask: int | None = None) -> int:
    alive = g.full_mask if alive_mask is None else alive_mask
    seen = 1 << start
    queue = deque([start])
    while queue:
        v = queue.popleft()
        fresh = g.adj[v] & alive & ~seen
        seen |= fresh
        for w in _bits(fresh):
            queue.append(w)
    return seen


def connected_components(g: Graph) -> list[VertexSet]:
    remaining = g.full_mask
    parts = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = connected_component_mask(g, start, remaining)
        parts.append(VertexSet(g.n, comp))
        remaining &= ~comp
    return parts


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return connected_component_mask(g, 0) == g.full_mask


def bipartition(g: Graph) -> tuple[VertexSet, VertexSet] | None:
    """A 2-colouring (A, B), or None when some component has an odd cycle.

    Deterministic: the lowest-index vertex of each component lands in A.
    """
    color = [-1] * g.n
    a_mask = b_mask = 0
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in _bits(g.adj[v]):
                if color[w] == -1:
                    color[w] = color[v] ^ 1
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    for v, c in enumerate(color):
        if c == 0:
            a_mask |= 1 << v
        else:
            b_mask |= 1 << v
    return VertexSet(g.n, a_mask), VertexSet(g.n, b_mask)


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def bipartite_double_cover(g: Graph) -> Graph:
    """The tensor product with K2: vertex v splits into v and v' = v + n.

    Each edge uv of ``g`` becomes the pair (u, v') and (v, u'); the result is
    always bipartite with the unprimed copies on one side.
    """
    n = g.n
    edges = []
    for u, v in g.edges():
        edges.append((u, v + n))
        edges.append((v, u + n))
    return Graph(2 * n, edges)


def count_odd_cycles(g: Graph, cap: int = 10**6):
    """The number of odd simple cycles of ``g``, or OVERFLOW past ``cap``.

    Cycles are counted as vertex subsets with cyclic adjacency; rotations and
    the two traversal directions are identified.
    """
    n, adj = g.n, g.adj
    count = 0
    for a in range(n):
        allowed = g.full_mask >> (a + 1) << (a + 1)
        a_bit = 1 << a
        # Paths a, first, ..., v over vertices > a; the closing edge v-a is
        # accepted only when first < v, which picks one traversal direction.
        stack: list[tuple[int, int, int, int]] = []
        for first in _bits(adj[a] & allowed):
            stack.append((first, 1 << first, 1, first))
        while stack:
            v, visited, length, first = stack.pop()
            if length >= 2 and adj[v] & a_bit and first < v:
                if length % 2 == 0:  # closing edge makes an odd cycle
                    count += 1
                    if count > cap:
                        return OVERFLOW
            for w in _bits(adj[v] & allowed & ~visited):
                stack.append((w, visited | (1 << w), length + 1, first))
    return count
