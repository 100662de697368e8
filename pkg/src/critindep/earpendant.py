"""Ear and pendant construction scripts, their recognizers, and the
almost-bipartite matching covered (ABMC) family.

A decomposition script starts from a base (odd cycle, odd homeomorph of K4,
or K2) and grows the graph step by step.  An ear is an odd-length path glued
at two existing vertices with fresh internal vertices; a pendant is a fresh
odd cycle joined to the existing graph by a positive-length path.  The abmc
kind builds from K2 with odd ears, reaching a bipartite matching covered
graph, and finishes with one even-length ear whose endpoints are the two base
vertices.

Recognition works by reverse peeling with memoised failure states and is a
desk-scale tool: callers above the vertex limit get UNDECIDED, never a guess.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import BuildError
from .graph import (
    Graph,
    VertexSet,
    _bits,
    bipartition,
    connected_component_mask,
    is_connected,
    neighborhood,
)
from .matching import is_bipartite_matching_covered
from .sentinels import UNDECIDED

KINDS = ("ear_pendant", "odd_ear", "abmc")


@dataclass(frozen=True)
class OddCycleBase:
    length: int


@dataclass(frozen=True)
class HomeomorphK4Base:
    lengths: tuple[int, int, int, int, int, int]


@dataclass(frozen=True)
class K2Base:
    pass


@dataclass(frozen=True)
class Ear:
    u: int
    v: int
    length: int


@dataclass(frozen=True)
class Pendant:
    cycle_length: int
    path_length: int
    end: int


@dataclass(frozen=True)
class EvenEar:
    u: int
    v: int
    length: int


Base = OddCycleBase | HomeomorphK4Base | K2Base
Step = Ear | Pendant | EvenEar


@dataclass(frozen=True)
class EarDecomposition:
    """An ordered construction script of one of the three kinds."""

    kind: str
    base: Base
    steps: tuple[Step, ...]

    def to_script(self) -> str:
        lines = [f"kind {self.kind}"]
        if isinstance(self.base, OddCycleBase):
            lines.append(f"base cycle {self.base.length}")
        elif isinstance(self.base, HomeomorphK4Base):
            lines.append("base homeomorph " + " ".join(map(str, self.base.lengths)))
        else:
            lines.append("base k2")
        for step in self.steps:
            if isinstance(step, Ear):
                lines.append(f"ear {step.u} {step.v} {step.length}")
            elif isinstance(step, EvenEar):
                lines.append(f"evenear {step.u} {step.v} {step.length}")
            else:
                lines.append(
                    f"pendant {step.cycle_length} {step.path_length} {step.end}"
                )
        return "\n".join(lines)

    @classmethod
    def from_script(cls, text: str) -> EarDecomposition:
        kind: str | None = None
        base: Base | None = None
        steps: list[Step] = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            try:
                if parts[0] == "kind":
                    kind = parts[1]
                elif parts[0] == "base":
                    if parts[1] == "cycle":
                        base = OddCycleBase(int(parts[2]))
                    elif parts[1] == "homeomorph":
                        lengths = tuple(int(x) for x in parts[2:])
                        if len(lengths) != 6:
                            raise BuildError(
                                f"line {lineno}: homeomorph base needs six lengths"
                            )
                        base = HomeomorphK4Base(lengths)
                    elif parts[1] == "k2":
                        base = K2Base()
                    else:
                        raise BuildError(f"line {lineno}: unknown base {parts[1]!r}")
                elif parts[0] == "ear":
                    steps.append(Ear(int(parts[1]), int(parts[2]), int(parts[3])))
                elif parts[0] == "evenear":
                    steps.append(EvenEar(int(parts[1]), int(parts[2]), int(parts[3])))
                elif parts[0] == "pendant":
                    steps.append(Pendant(int(parts[1]), int(parts[2]), int(parts[3])))
                else:
                    raise BuildError(f"line {lineno}: unknown directive {parts[0]!r}")
            except (IndexError, ValueError) as exc:
                raise BuildError(f"line {lineno}: malformed script line {line!r}") from exc
        if kind is None or base is None:
            raise BuildError("script must declare a kind and a base")
        return cls(kind=kind, base=base, steps=tuple(steps))


def _validate(dec: EarDecomposition) -> None:
    if dec.kind not in KINDS:
        raise BuildError(f"unknown decomposition kind {dec.kind!r}")
    if dec.kind == "abmc":
        if not isinstance(dec.base, K2Base):
            raise BuildError("abmc decompositions start from K2")
        if not dec.steps or not isinstance(dec.steps[-1], EvenEar):
            raise BuildError("abmc decompositions end with one even-length ear")
        body = dec.steps[:-1]
        if any(not isinstance(s, Ear) for s in body):
            raise BuildError("abmc decompositions admit only odd ears before the final ear")
        last = dec.steps[-1]
        if {last.u, last.v} != {0, 1}:
            raise BuildError("the final even ear must join the two base vertices")
        if last.length < 2 or last.length % 2:
            raise BuildError("the final ear length must be even and at least 2")
    elif dec.kind == "odd_ear":
        if not isinstance(dec.base, (OddCycleBase, K2Base)):
            raise BuildError("odd-ear decompositions start from an odd cycle or K2")
        if any(not isinstance(s, Ear) for s in dec.steps):
            raise BuildError("odd-ear decompositions admit only ears")
    else:
        if not isinstance(dec.base, (OddCycleBase, HomeomorphK4Base)):
            raise BuildError(
                "ear-pendant decompositions start from an odd cycle or an odd homeomorph of K4"
            )
        if any(isinstance(s, EvenEar) for s in dec.steps):
            raise BuildError("ear-pendant decompositions admit no even ears")
    for step in dec.steps:
        if isinstance(step, Ear) and (step.length < 1 or step.length % 2 == 0):
            raise BuildError(f"ear length {step.length} is not odd")
        if isinstance(step, Pendant):
            if step.cycle_length < 3 or step.cycle_length % 2 == 0:
                raise BuildError(f"pendant cycle length {step.cycle_length} is not an odd cycle")
            if step.path_length < 1:
                raise BuildError("pendant path length must be positive")


def build(dec: EarDecomposition) -> Graph:
    """Construct the graph described by ``dec``, validating every step.

    Fresh vertices are appended after existing ones, path/cycle order first.
    """
    _validate(dec)
    if isinstance(dec.base, OddCycleBase):
        k = dec.base.length
        if k < 3 or k % 2 == 0:
            raise BuildError(f"base cycle length {k} is not an odd cycle")
        n = k
        edges = {(i, (i + 1) % k) if i < (i + 1) % k else ((i + 1) % k, i) for i in range(k)}
    elif isinstance(dec.base, HomeomorphK4Base):
        from .generate import odd_homeomorph_k4

        try:
            base_graph = odd_homeomorph_k4(dec.base.lengths)
        except ValueError as exc:
            raise BuildError(str(exc)) from None
        n = base_graph.n
        edges = set(base_graph.edges())
    else:
        n = 2
        edges = {(0, 1)}

    def add_edge(a: int, b: int) -> None:
        key = (a, b) if a < b else (b, a)
        if key in edges:
            raise BuildError(f"edge ({a}, {b}) already exists")
        edges.add(key)

    def add_path(a: int, b: int, length: int) -> None:
        nonlocal n
        prev = a
        for _ in range(length - 1):
            add_edge(prev, n)
            prev = n
            n += 1
        add_edge(prev, b)

    for index, step in enumerate(dec.steps):
        if isinstance(step, (Ear, EvenEar)):
            if not (0 <= step.u < n and 0 <= step.v < n):
                raise BuildError(f"step {index}: ear endpoint does not exist yet")
            if step.u == step.v:
                raise BuildError(f"step {index}: ear endpoints must differ")
            if dec.kind == "abmc" and isinstance(step, EvenEar):
                # The graph built so far is G_r; the definition demands it be
                # connected, bipartite and matching covered.
                g_r = Graph(n, edges)
                if not is_bipartite_matching_covered(g_r):
                    raise BuildError(
                        "the graph before the final even ear is not bipartite matching covered"
                    )
            add_path(step.u, step.v, step.length)
        else:
            if not 0 <= step.end < n:
                raise BuildError(f"step {index}: pendant end does not exist yet")
            first = n
            cl = step.cycle_length
            n += cl
            for i in range(cl):
                add_edge(first + i, first + (i + 1) % cl)
            add_path(first, step.end, step.path_length)
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# reverse peeling


def _alive_degrees_ok(adj: list[int], alive: int) -> bool:
    return all((adj[v]).bit_count() >= 2 for v in _bits(alive))


def _connected_on(adj: list[int], alive: int) -> bool:
    if alive == 0:
        return False
    start = (alive & -alive).bit_length() - 1
    seen = 1 << start
    stack = [start]
    while stack:
        v = stack.pop()
        fresh = adj[v] & alive & ~seen
        seen |= fresh
        stack.extend(_bits(fresh))
    return seen == alive


def _without(adj: list[int], dead: int, removed_edges: tuple[tuple[int, int], ...] = ()):
    new = [a & ~dead for a in adj]
    for v in _bits(dead):
        new[v] = 0
    for a, b in removed_edges:
        new[a] &= ~(1 << b)
        new[b] &= ~(1 << a)
    return new


def _deg2_chains(adj: list[int], alive: int, protected: int = 0):
    """Maximal runs of degree-2 vertices and their two attachments.

    Yields (a, internals, b); skips petals (a == b) and pure cycles, which are
    never removable as ears.  ``protected`` vertices never count as internal.
    """
    removable = 0
    for v in _bits(alive & ~protected):
        if adj[v].bit_count() == 2:
            removable |= 1 << v
    seen = 0
    for v in _bits(removable):
        if seen >> v & 1:
            continue
        run = [v]
        seen |= 1 << v
        ends = []
        for direction in _bits(adj[v]):
            prev, cur = v, direction
            side: list[int] = []
            while removable >> cur & 1 and cur != v:
                side.append(cur)
                seen |= 1 << cur
                nxt_mask = adj[cur] & ~(1 << prev)
                prev, cur = cur, (nxt_mask & -nxt_mask).bit_length() - 1
            if cur == v:
                ends = None  # wrapped: the run is a pure cycle
                break
            ends.append((side, cur))
        if ends is None:
            continue
        (left_side, a), (right_side, b) = ends
        if a == b:
            continue
        internals = list(reversed(left_side)) + run + right_side
        yield a, internals, b


def _ear_moves(adj: list[int], alive: int, protected: int = 0, forbidden_edge=None):
    """Candidate last-added odd ears: chord edges and full degree-2 chains."""
    moves = []
    for a, internals, b in _deg2_chains(adj, alive, protected):
        if len(internals) % 2 == 0:  # odd length = even internal count
            moves.append((a, internals, b))
    for v in _bits(alive):
        for w in _bits(adj[v]):
            if w > v and (v, w) != forbidden_edge:
                moves.append((v, [], w))
    return moves


def _pendant_moves(adj: list[int], alive: int):
    """Candidate last-added pendants: odd all-degree-2 cycle at a degree-3
    vertex plus the degree-2 path leading away from it."""
    moves = []
    for c in _bits(alive):
        if adj[c].bit_count() != 3:
            continue
        nbrs = list(_bits(adj[c]))
        for x in nbrs:
            if adj[x].bit_count() != 2:
                continue
            run = []
            prev, cur = c, x
            while adj[cur].bit_count() == 2 and cur != c:
                run.append(cur)
                nxt_mask = adj[cur] & ~(1 << prev)
                prev, cur = cur, (nxt_mask & -nxt_mask).bit_length() - 1
            if cur != c or len(run) < 2 or x > run[-1]:
                continue  # no closed cycle here, or counted from the other side
            if (len(run) + 1) % 2 == 0:
                continue  # the pendant cycle must be odd
            cyc_mask = (1 << c) | sum(1 << t for t in run)
            third = [z for z in nbrs if z != x and z != run[-1]]
            if len(third) != 1:
                continue
            path: list[int] = []
            prev, cur = c, third[0]
            while adj[cur].bit_count() == 2:
                path.append(cur)
                nxt_mask = adj[cur] & ~(1 << prev)
                prev, cur = cur, (nxt_mask & -nxt_mask).bit_length() - 1
            end = cur
            if end == c or cyc_mask >> end & 1:
                continue
            moves.append(([c] + run, path, end))
    return moves


def _is_odd_cycle_state(adj: list[int], alive: int):
    """The ordered vertex list when the alive graph is a single odd cycle."""
    count = alive.bit_count()
    if count < 3 or count % 2 == 0:
        return None
    if any(adj[v].bit_count() != 2 for v in _bits(alive)):
        return None
    if not _connected_on(adj, alive):
        return None
    start = (alive & -alive).bit_length() - 1
    order = [start]
    prev, cur = start, (adj[start] & -adj[start]).bit_length() - 1
    while cur != start:
        order.append(cur)
        nxt_mask = adj[cur] & ~(1 << prev)
        prev, cur = cur, (nxt_mask & -nxt_mask).bit_length() - 1
    return order


def _is_homeomorph_k4_state(adj: list[int], alive: int):
    """Branch labels and oriented chains when the graph subdivides K4 oddly.

    Returns (branches, chains) with ``chains[(i, j)]`` the internal vertices
    from branch i to branch j, or None when the shape does not match.
    """
    branches = []
    for v in _bits(alive):
        d = adj[v].bit_count()
        if d == 3:
            branches.append(v)
        elif d != 2:
            return None
    if len(branches) != 4 or not _connected_on(adj, alive):
        return None
    index = {b: i for i, b in enumerate(branches)}
    chains: dict[tuple[int, int], list[int]] = {}
    for b in branches:
        for x in _bits(adj[b]):
            side = []
            prev, cur = b, x
            while cur not in index:
                if adj[cur].bit_count() != 2:
                    return None
                side.append(cur)
                nxt_mask = adj[cur] & ~(1 << prev)
                prev, cur = cur, (nxt_mask & -nxt_mask).bit_length() - 1
            i, j = index[b], index[cur]
            if i == j:
                return None
            if i > j:
                continue  # recorded from the lower endpoint
            if (i, j) in chains:
                return None  # parallel chains: not a simple K4 pattern
            if (len(side) + 1) % 2 == 0:
                return None  # every subdivided edge must have odd length
            chains[(i, j)] = side
    if len(chains) != 6:
        return None
    return branches, chains


def _peel_ear_pendant(g: Graph):
    """Reverse search for an ear-pendant construction; None when impossible."""
    failed: set[tuple[int, ...]] = set()

    def search(adj: list[int], alive: int):
        order = _is_odd_cycle_state(adj, alive)
        if order is not None:
            return ("cycle", order), []
        hom = _is_homeomorph_k4_state(adj, alive)
        if hom is not None:
            return ("homeomorph", hom), []
        key = tuple(adj)
        if key in failed:
            return None
        for cycle, path, end in _pendant_moves(adj, alive):
            dead = sum(1 << v for v in cycle + path)
            nadj = _without(adj, dead)
            nalive = alive & ~dead
            if nalive.bit_count() >= 3 and _alive_degrees_ok(nadj, nalive) and _connected_on(nadj, nalive):
                sub = search(nadj, nalive)
                if sub is not None:
                    base, steps = sub
                    steps.append(("pendant", cycle, path, end))
                    return base, steps
        for a, internals, b in _ear_moves(adj, alive):
            dead = sum(1 << v for v in internals)
            removed = ((a, b),) if not internals else ()
            nadj = _without(adj, dead, removed)
            nalive = alive & ~dead
            if nalive.bit_count() >= 3 and _alive_degrees_ok(nadj, nalive) and _connected_on(nadj, nalive):
                sub = search(nadj, nalive)
                if sub is not None:
                    base, steps = sub
                    steps.append(("ear", a, internals, b))
                    return base, steps
        failed.add(key)
        return None

    if g.n < 3 or not is_connected(g):
        return None
    if any(g.degree(v) < 2 for v in range(g.n)):
        return None
    return search(list(g.adj), g.full_mask)


def _assemble(g: Graph, base_info, chrono_steps, kind: str, extra=None) -> EarDecomposition:
    """Relabel a peel recipe into canonical build labels and double-check it."""
    mapping: dict[int, int] = {}
    fresh = 0

    def assign(v: int) -> int:
        nonlocal fresh
        mapping[v] = fresh
        fresh += 1
        return mapping[v]

    steps: list[Step] = []
    tag = base_info[0]
    if tag == "cycle":
        order = base_info[1]
        for v in order:
            assign(v)
        base: Base = OddCycleBase(len(order))
    elif tag == "homeomorph":
        branches, chains = base_info[1]
        for b in branches:
            assign(b)
        lengths = []
        for pair in ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)):
            side = chains[pair]
            lengths.append(len(side) + 1)
            for v in side:
                assign(v)
        base = HomeomorphK4Base(tuple(lengths))
    else:  # K2 base for abmc assemblies
        u, w = base_info[1]
        assign(u)
        assign(w)
        base = K2Base()

    # The peel recursion appends on the way out, so the list is already in
    # construction order: the move undone deepest is the first step applied.
    for step in chrono_steps:
        if step[0] == "ear":
            _, a, internals, b = step
            steps.append(Ear(mapping[a], mapping[b], len(internals) + 1))
            for v in internals:
                assign(v)
        else:
            _, cycle, path, end = step
            steps.append(Pendant(len(cycle), len(path) + 1, mapping[end]))
            for v in cycle:
                assign(v)
            for v in path:
                assign(v)
    if extra is not None:  # the final even ear of an abmc assembly
        u, w, internals = extra
        steps.append(EvenEar(mapping[u], mapping[w], len(internals) + 1))
        for v in internals:
            assign(v)

    dec = EarDecomposition(kind=kind, base=base, steps=tuple(steps))
    rebuilt = build(dec)
    if rebuilt.n != g.n:
        raise RuntimeError("peel reconstruction lost vertices; this is a bug")
    for u, v in g.edges():
        if not rebuilt.has_edge(mapping[u], mapping[v]):
            raise RuntimeError("peel reconstruction dropped an edge; this is a bug")
    if rebuilt.edge_count != g.edge_count:
        raise RuntimeError("peel reconstruction changed the edge count; this is a bug")
    return dec


def find_ear_pendant_decomposition(g: Graph, limit: int = 20):
    """An ear-pendant decomposition of ``g``, None if there is none, or
    UNDECIDED above the vertex limit.

    Presence is equivalent to ``g`` being connected and 2-bicritical; the
    equivalence is exercised, not assumed, by the verification suite.
    """
    if g.n > limit:
        return UNDECIDED
    found = _peel_ear_pendant(g)
    if found is None:
        return None
    base_info, rev_steps = found
    return _assemble(g, base_info, rev_steps, "ear_pendant")


def _peel_odd_ears_to_edge(adj: list[int], alive: int, u: int, w: int):
    """Reverse odd-ear search down to exactly the edge (u, w)."""
    failed: set[tuple[int, ...]] = set()
    target = (1 << u) | (1 << w)
    protected = target
    forbidden = (u, w) if u < w else (w, u)

    def search(adj: list[int], alive: int):
        if alive == target:
            if adj[u] == 1 << w:
                return []
            return None
        key = tuple(adj)
        if key in failed:
            return None
        for a, internals, b in _ear_moves(adj, alive, protected, forbidden):
            dead = sum(1 << v for v in internals)
            removed = ((a, b),) if not internals else ()
            nadj = _without(adj, dead, removed)
            nalive = alive & ~dead
            if nalive == target:
                ok = nadj[u] == 1 << w
            else:
                ok = _alive_degrees_ok(nadj, nalive) and _connected_on(nadj, nalive)
            if ok:
                sub = search(nadj, nalive)
                if sub is not None:
                    sub.append(("ear", a, internals, b))
                    return sub
        failed.add(key)
        return None

    return search(adj, alive)


def is_abmc(g: Graph, limit: int = 20):
    """An abmc decomposition witnessing that ``g`` is almost-bipartite
    matching covered, None if there is none, or UNDECIDED above the limit.
    """
    if g.n > limit:
        return UNDECIDED
    if g.n < 3 or not is_connected(g) or bipartition(g) is not None:
        return None
    for u in range(g.n):
        for w in _bits(g.adj[u]):
            if w < u:
                continue
            # The final even ear joins u and w through fresh degree-2
            # vertices; walk each candidate chain leaving u.
            for x in _bits(g.adj[u] & ~(1 << w)):
                if g.degree(x) != 2:
                    continue
                internals = []
                prev, cur = u, x
                while g.degree(cur) == 2 and cur not in (u, w):
                    internals.append(cur)
                    nxt_mask = g.adj[cur] & ~(1 << prev)
                    prev, cur = cur, (nxt_mask & -nxt_mask).bit_length() - 1
                if cur != w or (len(internals) + 1) % 2:
                    continue
                dead = sum(1 << v for v in internals)
                rest_adj = _without(list(g.adj), dead)
                rest_alive = g.full_mask & ~dead
                rest_vertices = VertexSet(g.n, rest_alive)
                from .graph import induced_subgraph

                rest_graph, _ = induced_subgraph(g, rest_vertices)
                if not is_bipartite_matching_covered(rest_graph):
                    continue
                peeled = _peel_odd_ears_to_edge(rest_adj, rest_alive, u, w)
                if peeled is not None:
                    return _assemble(
                        g, ("k2", (u, w)), peeled, "abmc", extra=(u, w, internals)
                    )
    return None


# ---------------------------------------------------------------------------
# ABMC generation


@dataclass(frozen=True)
class AbmcRecipe:
    """Seeded parameters for random ABMC construction."""

    odd_ears: int
    seed: int
    max_ear_length: int = 5
    even_ear_length: int = 2

    def validate(self) -> None:
        if self.odd_ears < 0:
            raise ValueError("odd ear count must be non-negative")
        if self.max_ear_length < 1:
            raise ValueError("ear length bound must be positive")
        if self.even_ear_length < 2 or self.even_ear_length % 2:
            raise ValueError("the final ear length must be even and at least 2")


def abmc_decomposition(recipe: AbmcRecipe) -> EarDecomposition:
    """A random abmc script: seeded odd ears over K2, then the even closer.

    Ear endpoints are always drawn from opposite colour classes, which keeps
    every intermediate graph bipartite (and therefore matching covered).
    """
    recipe.validate()
    rng = random.Random(recipe.seed)
    colors = [0, 1]
    edges = {(0, 1)}
    n = 2
    steps: list[Step] = []
    odd_choices = [L for L in range(1, recipe.max_ear_length + 1, 2)]
    for _ in range(recipe.odd_ears):
        u = rng.randrange(n)
        opposite = [v for v in range(n) if colors[v] != colors[u]]
        v = rng.choice(opposite)
        length = rng.choice(odd_choices)
        key = (u, v) if u < v else (v, u)
        if length == 1 and key in edges:
            longer = [L for L in odd_choices if L >= 3]
            length = rng.choice(longer) if longer else 3
        if length == 1:
            edges.add(key)
        else:
            for _ in range(length - 1):
                colors.append(colors[-1])  # placeholder, fixed below
                n += 1
            # colours alternate along the ear starting opposite to u
            c = colors[u]
            for i, vert in enumerate(range(n - (length - 1), n)):
                colors[vert] = c ^ (i % 2 == 0)
        steps.append(Ear(u, v, length))
    steps.append(EvenEar(0, 1, recipe.even_ear_length))
    return EarDecomposition(kind="abmc", base=K2Base(), steps=tuple(steps))


def random_abmc(recipe: AbmcRecipe) -> Graph:
    """Build the graph of ``abmc_decomposition(recipe)``."""
    return build(abmc_decomposition(recipe))


def rearrange_abmc(dec: EarDecomposition) -> tuple[EarDecomposition, dict[int, int]]:
    """Reorder an abmc script into an odd-ear script from an odd cycle.

    The base edge plus the final even ear form an odd cycle; adding the odd
    ears afterwards in their original order reproduces the same graph.  The
    returned map sends original build labels to rearranged build labels, so
    ``build(rearranged)`` equals ``build(dec)`` relabelled through it.
    """
    if dec.kind != "abmc":
        raise ValueError("rearrange_abmc expects an abmc decomposition")
    _validate(dec)
    even = dec.steps[-1]
    ears = dec.steps[:-1]
    total = 2 + sum(e.length - 1 for e in ears) + (even.length - 1)
    even_internals = list(range(total - (even.length - 1), total))

    mapping = {0: 0}
    ordered = even_internals if even.u == 0 else list(reversed(even_internals))
    for i, orig in enumerate(ordered):
        mapping[orig] = 1 + i
    mapping[1] = even.length
    next_new = even.length + 1
    next_orig = 2
    new_steps: list[Step] = []
    for ear in ears:
        new_steps.append(Ear(mapping[ear.u], mapping[ear.v], ear.length))
        for orig in range(next_orig, next_orig + ear.length - 1):
            mapping[orig] = next_new
            next_new += 1
        next_orig += ear.length - 1
    rearranged = EarDecomposition(
        kind="odd_ear", base=OddCycleBase(even.length + 1), steps=tuple(new_steps)
    )
    return rearranged, mapping


# ---------------------------------------------------------------------------
# the ABMC property bundle


@dataclass(frozen=True)
class AbmcLemmaReport:
    """Pass/fail for the eight structural properties of ABMC graphs."""

    order_identity: bool
    core_empty: bool
    ker_empty: bool
    corona_full: bool
    not_bipartite: bool
    factor_critical: bool
    two_bicritical: bool
    l_empty: bool
    alpha: int
    core: VertexSet
    corona: VertexSet

    @property
    def passed(self) -> bool:
        return (
            self.order_identity
            and self.core_empty
            and self.ker_empty
            and self.corona_full
            and self.not_bipartite
            and self.factor_critical
            and self.two_bicritical
            and self.l_empty
        )


def check_abmc_lemma(g: Graph, oracle_limit: int = 26) -> AbmcLemmaReport:
    """Evaluate the ABMC property bundle on ``g``."""
    from .critical import critical_difference, ker, max_critical_independent_set
    from .independence import alpha, core, corona
    from .matching import is_factor_critical
    from .sentinels import UNCOMPUTED

    a = alpha(g)
    core_set = core(g)
    corona_set = corona(g)
    kr = ker(g, limit=oracle_limit)
    if kr is UNCOMPUTED:
        # d > 0 here, and ker is itself a critical independent set, so its
        # size is at least d; it cannot be empty.
        ker_empty = False
    else:
        ker_empty = len(kr) == 0
    j = max_critical_independent_set(g)
    l_set = j | neighborhood(g, j)
    return AbmcLemmaReport(
        order_identity=g.n == 2 * a + 1,
        core_empty=len(core_set) == 0,
        ker_empty=ker_empty,
        corona_full=corona_set == VertexSet.full(g.n),
        not_bipartite=bipartition(g) is None,
        factor_critical=is_factor_critical(g),
        two_bicritical=len(j) == 0,
        l_empty=len(l_set) == 0,
        alpha=a,
        core=core_set,
        corona=corona_set,
    )
