"""Deterministic generators for the standard graph families."""

from __future__ import annotations

import random

from .graph import Graph


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("a path needs at least one vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least three vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    if leaves < 0:
        raise ValueError("leaf count must be non-negative")
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 0 or b < 0:
        raise ValueError("part sizes must be non-negative")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


# K4 edges in the fixed order used by the subdivision-length parameters.
_K4_EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def odd_homeomorph_k4(lengths: tuple[int, ...] | list[int]) -> Graph:
    """K4 with each edge replaced by an internally disjoint odd-length path.

    ``lengths`` gives the six path lengths for the edges (0,1), (0,2), (0,3),
    (1,2), (1,3), (2,3) in that order; every length must be odd and >= 1.
    Subdivision vertices are appended after the four branch vertices, edge by
    edge.
    """
    lengths = tuple(lengths)
    if len(lengths) != 6:
        raise ValueError("exactly six path lengths are required")
    for length in lengths:
        if length < 1 or length % 2 == 0:
            raise ValueError(f"path length {length} is not an odd positive integer")
    n = 4
    edges: list[tuple[int, int]] = []
    for (u, v), length in zip(_K4_EDGES, lengths):
        prev = u
        for _ in range(length - 1):
            edges.append((prev, n))
            prev = n
            n += 1
        edges.append((prev, v))
    return Graph(n, edges)


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), deterministic for a fixed seed."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)
