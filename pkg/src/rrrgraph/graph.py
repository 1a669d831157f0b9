"""Simple undirected graphs on vertices ``0..n-1`` and canonical labeling."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .errors import DuplicateEdge, LoopEdge, TooLarge, VertexOutOfRange

__all__ = [
    "Graph",
    "CanonicalCertificate",
    "MAX_CANONICAL_N",
    "from_edge_list",
    "degree",
    "is_connected",
    "is_unicyclic",
    "pendant_vertices",
    "delete_vertex",
    "canonical_certificate",
    "canonical_labeling",
    "are_isomorphic",
    "relabel",
]

MAX_CANONICAL_N = 64

Edge = tuple[int, int]


class Graph:
    """Immutable simple graph. Edges are stored as sorted pairs ``(u, v)``, ``u < v``."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        seen: set[Edge] = set()
        adj: list[set[int]] = [set() for _ in range(n)]
        for pair in edges:
            u, v = int(pair[0]), int(pair[1])
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"edge ({u}, {v}) references a vertex outside 0..{n - 1}")
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise DuplicateEdge(f"edge {e} given more than once")
            seen.add(e)
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(seen))
        self._adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in adj)

    def __setattr__(self, name, value):
        if hasattr(self, "_adj"):
            raise AttributeError("Graph is immutable")
        object.__setattr__(self, name, value)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self._adj]

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(f"vertex {v} not in 0..{self.n - 1}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return Graph(n, pairs)


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for w in g._adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == g.n


def is_unicyclic(g: Graph) -> bool:
    return g.m == g.n and is_connected(g)


def pendant_vertices(g: Graph) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if len(g._adj[v]) == 1)


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove ``v``; vertices above it shift down by one."""
    g._check(v)
    shift = lambda w: w - (w > v)  # noqa: E731
    return Graph(g.n - 1, [(shift(a), shift(b)) for a, b in g.edges if v not in (a, b)])


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of ``g`` under the vertex map ``i -> perm[i]``."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm must be a permutation of 0..n-1")
    return Graph(g.n, [(perm[a], perm[b]) for a, b in g.edges])


class CanonicalCertificate(bytes):
    """Byte string that is equal for two graphs iff they are isomorphic.

    Layout: ``n``, then the edge list under the canonical labeling, one byte
    per endpoint.
    """

    __slots__ = ()

    def hex_short(self) -> str:
        return self.hex()[:16]


# Canonical labeling: individualization-refinement with automorphism pruning.
#
# Partitions are lists of cells (lists of vertices); the cell order is derived
# only from adjacency counts, so it commutes with relabeling.  A discrete
# partition ordered this way is a labeling; the certificate is the smallest
# relabeled edge list over the search tree.


def _refine(adj: Sequence[frozenset[int]], cells: list[list[int]]) -> list[list[int]]:
    while True:
        where = {}
        for i, cell in enumerate(cells):
            for v in cell:
                where[v] = i
        k = len(cells)
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {}
            for v in cell:
                counts = [0] * k
                for w in adj[v]:
                    counts[where[w]] += 1
                sig[v] = tuple(counts)
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                out.append(cell)
                continue
            changed = True
            for key in keys:
                out.append([v for v in cell if sig[v] == key])
        cells = out
        if not changed:
            return cells


def _individualize(cells: list[list[int]], idx: int, v: int) -> list[list[int]]:
    cell = cells[idx]
    rest = [w for w in cell if w != v]
    return cells[:idx] + [[v], rest] + cells[idx + 1 :]


class _Search:
    def __init__(self, g: Graph):
        self.g = g
        self.adj = g._adj
        self.best_code: tuple | None = None
        self.best_order: list[int] | None = None
        self.first_code: tuple | None = None
        self.first_order: list[int] | None = None
        self.first_path: list[int] | None = None
        self.autos: list[list[int]] = []

    def code(self, order: list[int]) -> tuple:
        label = [0] * self.g.n
        for i, v in enumerate(order):
            label[v] = i
        return tuple(sorted(tuple(sorted((label[a], label[b]))) for a, b in self.g.edges))

    def _record_auto(self, order: list[int], ref_order: list[int]) -> None:
        # maps ref_order[i] -> order[i]
        perm = [0] * self.g.n
        for a, b in zip(ref_order, order):
            perm[a] = b
        self.autos.append(perm)

    def _orbit_rep(self, fixed: list[int]) -> list[int]:
        """Union-find over vertex orbits of the found automorphisms fixing ``fixed``."""
        parent = list(range(self.g.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for perm in self.autos:
            if any(perm[f] != f for f in fixed):
                continue
            for a, b in enumerate(perm):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
        return [find(x) for x in range(self.g.n)]

    def run(self, cells: list[list[int]], path: list[int]) -> int | None:
        """Explore below ``cells``. Returns a depth to unwind to, or None."""
        cells = _refine(self.adj, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = self.code(order)
            if self.first_code is None:
                self.first_code, self.first_order, self.first_path = code, order, list(path)
                self.best_code, self.best_order = code, order
                return None
            if code == self.first_code:
                self._record_auto(order, self.first_order)
                common = 0
                while common < len(path) and path[common] == self.first_path[common]:
                    common += 1
                return common
            if code == self.best_code:
                self._record_auto(order, self.best_order)
            elif code < self.best_code:
                self.best_code, self.best_order = code, order
            return None
        explored: list[int] = []
        for v in sorted(cells[target]):
            if explored:
                rep = self._orbit_rep(path)
                if any(rep[v] == rep[u] for u in explored):
                    continue
            explored.append(v)
            unwind = self.run(_individualize(cells, target, v), path + [v])
            if unwind is not None and unwind < len(path):
                return unwind
        return None


def canonical_labeling(g: Graph) -> list[int]:
    """Return ``order`` where ``order[i]`` is the vertex receiving canonical label ``i``."""
    if g.n > MAX_CANONICAL_N:
        raise TooLarge(f"canonical labeling supports n <= {MAX_CANONICAL_N}, got {g.n}")
    if g.n == 0:
        return []
    search = _Search(g)
    search.run([list(range(g.n))], [])
    return search.best_order


def canonical_certificate(g: Graph) -> CanonicalCertificate:
    order = canonical_labeling(g)
    label = [0] * g.n
    for i, v in enumerate(order):
        label[v] = i
    edges = sorted(tuple(sorted((label[a], label[b]))) for a, b in g.edges)
    return CanonicalCertificate(bytes([g.n]) + bytes(x for e in edges for x in e))


def are_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.m != b.m or sorted(a.degrees()) != sorted(b.degrees()):
        if a.n > MAX_CANONICAL_N or b.n > MAX_CANONICAL_N:
            raise TooLarge(f"canonical labeling supports n <= {MAX_CANONICAL_N}")
        return False
    return canonical_certificate(a) == canonical_certificate(b)
