"""Edge-list text and graph6 encodings.

Edge-list: first non-comment line ``"n m"``, then ``m`` lines ``"u v"``
(0-based). Anything after ``#`` on a line is ignored.

graph6 follows the format described in nauty's ``formats.txt``: a size
header (``n + 63`` for ``n < 63``, ``~`` plus three bytes up to 258047,
``~~`` plus six bytes beyond), then the upper triangle of the adjacency
matrix in column order, six bits per byte, each byte offset by 63.
"""

from __future__ import annotations

from pathlib import Path

from .errors import GraphError, ParseError
from .graph import Graph

__all__ = [
    "parse_edge_list",
    "render_edge_list",
    "parse_graph6",
    "render_graph6",
    "parse_graph",
    "render_graph",
    "read_graph",
    "guess_format",
    "FORMATS",
]

FORMATS = ("edgelist", "graph6")
G6_HEADER = ">>graph6<<"


def parse_edge_list(text: str) -> Graph:
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("empty edge list", 1)
    lineno, head = rows[0]
    if len(head) != 2:
        raise ParseError("header must be 'n m'", lineno)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError("header values must be integers", lineno) from None
    if n < 1 or m < 0:
        raise ParseError("need n >= 1 and m >= 0", lineno)
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"header declares {m} edges but {len(body)} found", lineno)
    pairs = []
    for lineno, tok in body:
        if len(tok) != 2:
            raise ParseError("edge line must be 'u v'", lineno)
        try:
            pairs.append((int(tok[0]), int(tok[1])))
        except ValueError:
            raise ParseError("edge endpoints must be integers", lineno) from None
    try:
        return Graph(n, pairs)
    except GraphError as exc:
        raise ParseError(str(exc), None) from exc


def render_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n < 1 << 36:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("graph6 supports n < 2**36")


def render_graph6(g: Graph) -> str:
    bits = []
    adj = g._adj
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if i in adj[j] else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + sum(bits[k + t] << (5 - t) for t in range(6)) for k in range(0, len(bits), 6)
    )
    return (_encode_n(g.n) + body).decode("ascii")


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(G6_HEADER):
        s = s[len(G6_HEADER) :]
    data = s.encode("ascii", errors="replace")
    if not data:
        raise ParseError("empty graph6 string", 1)
    for pos, b in enumerate(data, start=1):
        if not 63 <= b <= 126:
            raise ParseError(f"invalid graph6 byte {b!r}", pos)
    if data[0] != 126:
        n, off = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise ParseError("truncated graph6 size header", len(data))
        n, off = 0, 8
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
    else:
        if len(data) < 4:
            raise ParseError("truncated graph6 size header", len(data))
        n, off = 0, 4
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[off:]
    if len(body) != need:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {need}", off + 1)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if ((body[k // 6] - 63) >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    if n == 0:
        raise ParseError("graph6 graph with zero vertices", 1)
    return Graph(n, edges)


def parse_graph(text: str, fmt: str) -> Graph:
    if fmt == "edgelist":
        return parse_edge_list(text)
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise ParseError(f"expected exactly one graph6 line, found {len(lines)}", 1)
        return parse_graph6(lines[0])
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def render_graph(g: Graph, fmt: str) -> str:
    if fmt == "edgelist":
        return render_edge_list(g)
    if fmt == "graph6":
        return render_graph6(g) + "\n"
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def guess_format(path: str | Path) -> str:
    return "graph6" if str(path).endswith((".g6", ".graph6")) else "edgelist"


def read_graph(path: str | Path, fmt: str | None = None) -> Graph:
    return parse_graph(Path(path).read_text(), fmt or guess_format(path))
