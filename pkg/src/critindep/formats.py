"""graph6 and edge-list ingestion/emission.

graph6 is the interchange format: one graph per line, header byte n+63 for
n <= 62, then the upper triangle of the adjacency matrix in column-major
order packed into 6-bit chunks offset by 63.  Larger orders are out of scope.

The edge-list format is line oriented: an optional first line ``n=<k>``, then
one ``u v`` pair per line; ``#`` starts a comment and duplicate edges are
collapsed silently, while loops are rejected.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .errors import FormatError
from .graph import Graph

GRAPH6_MAX_N = 62
_G6_HEADER = ">>graph6<<"

FORMATS = ("graph6", "edge-list")


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line into a Graph."""
    data = text.strip()
    if data.startswith(_G6_HEADER):
        data = data[len(_G6_HEADER):]
    if not data:
        raise FormatError("empty graph6 string")
    n = ord(data[0]) - 63
    if n < 0 or ord(data[0]) > 126:
        raise FormatError(f"bad graph6 header byte {data[0]!r}")
    if n > GRAPH6_MAX_N:
        raise FormatError(f"graph6 order {n} exceeds the supported maximum {GRAPH6_MAX_N}")
    need_bits = n * (n - 1) // 2
    need_chars = (need_bits + 5) // 6
    body = data[1:]
    if len(body) != need_chars:
        raise FormatError(
            f"graph6 body for n={n} needs {need_chars} characters, got {len(body)}"
        )
    bits = 0
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise FormatError(f"bad graph6 character {ch!r}")
        bits = bits << 6 | val
    total_bits = 6 * need_chars
    if need_bits < total_bits and bits & ((1 << (total_bits - need_bits)) - 1):
        raise FormatError("graph6 padding bits are not zero")
    edges = []
    pos = 0
    for col in range(1, n):
        for row in range(col):
            if bits >> (total_bits - 1 - pos) & 1:
                edges.append((row, col))
            pos += 1
    return Graph(n, edges)


def emit_graph6(g: Graph) -> str:
    """Encode a Graph as one graph6 line (without the newline)."""
    n = g.n
    if n > GRAPH6_MAX_N:
        raise FormatError(f"graph6 order {n} exceeds the supported maximum {GRAPH6_MAX_N}")
    bits = []
    for col in range(1, n):
        for row in range(col):
            bits.append(1 if g.has_edge(row, col) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_edge_list(text: str) -> Graph:
    """Decode an edge-list document into a Graph."""
    n: int | None = None
    pairs: list[tuple[int, int]] = []
    saw_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("n="):
            if saw_content:
                raise FormatError(f"line {lineno}: n= header must come first")
            try:
                n = int(line[2:])
            except ValueError:
                raise FormatError(f"line {lineno}: bad vertex count {line!r}") from None
            if n < 0:
                raise FormatError(f"line {lineno}: negative vertex count")
            saw_content = True
            continue
        saw_content = True
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if u < 0 or v < 0:
            raise FormatError(f"line {lineno}: negative vertex label")
        if u == v:
            raise FormatError(f"line {lineno}: loop at vertex {u}")
        pairs.append((u, v))
    top = max((max(u, v) for u, v in pairs), default=-1)
    if n is None:
        n = top + 1
    elif top >= n:
        raise FormatError(f"vertex {top} out of range for declared n={n}")
    return Graph(n, pairs)


def emit_edge_list(g: Graph) -> str:
    """Encode a Graph as an edge-list document with an ``n=`` header."""
    lines = [f"n={g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines)


def parse(text: str, fmt: str) -> Graph:
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt == "edge-list":
        return parse_edge_list(text)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def emit(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return emit_graph6(g)
    if fmt == "edge-list":
        return emit_edge_list(g)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def iter_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse a graph6 stream, skipping blank lines."""
    for line in lines:
        if line.strip():
            yield parse_graph6(line)
