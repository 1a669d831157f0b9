"""Isomorphism-free generation of rooted trees, free trees and unicyclic graphs.

Rooted trees come from the Beyer-Hedetniemi successor rule on canonical
level sequences.  A connected unicyclic graph is a cycle whose vertices
are the roots of rooted trees; two such graphs are isomorphic exactly when
their sequences of rooted-tree classes agree up to rotation and
reflection of the cycle.  Each class is emitted once, as the sequence that
is lexicographically smallest among its dihedral images.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .graph import Graph

__all__ = [
    "RootedTreeCode",
    "TreeTable",
    "rooted_trees",
    "free_trees",
    "tree_table",
    "unicyclic_codes",
    "unicyclic_graphs",
    "unicyclic_shards",
    "code_to_graph",
    "is_canonical_bracelet",
]


@dataclass(frozen=True)
class RootedTreeCode:
    """Canonical level sequence: depth of each vertex in preorder, root first.

    Children are ordered so that the sequence is lexicographically largest,
    which makes the code a complete invariant of the rooted tree.
    """

    levels: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.levels)

    def parents(self) -> list[int]:
        """``parents[i]`` is the preorder index of vertex i's parent (-1 for the root)."""
        par = [-1] * len(self.levels)
        last_at: list[int] = []
        for i, lv in enumerate(self.levels):
            del last_at[lv:]
            if lv:
                par[i] = last_at[lv - 1]
            last_at.append(i)
        return par

    def child_counts(self) -> list[int]:
        counts = [0] * len(self.levels)
        for p in self.parents():
            if p >= 0:
                counts[p] += 1
        return counts

    def root_subtree_sizes(self) -> list[int]:
        starts = [i for i, lv in enumerate(self.levels) if lv == 1]
        ends = starts[1:] + [len(self.levels)]
        return [b - a for a, b in zip(starts, ends)]

    def to_graph(self) -> Graph:
        par = self.parents()
        return Graph(len(par), [(p, i) for i, p in enumerate(par) if p >= 0])


def rooted_trees(k: int) -> Iterator[RootedTreeCode]:
    """Every rooted tree on ``k`` vertices once, in decreasing code order."""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    levels = list(range(k))
    while True:
        yield RootedTreeCode(tuple(levels))
        p = k - 1
        while p > 0 and levels[p] <= 1:
            p -= 1
        if p == 0:
            return
        q = p - 1
        while levels[q] != levels[p] - 1:
            q -= 1
        shift = p - q
        for i in range(p, k):
            levels[i] = levels[i - shift]


def free_trees(n: int) -> Iterator[Graph]:
    """Every free tree on ``n`` vertices once, rooted at its centroid.

    A tree has a single centroid (all branches there have fewer than n/2
    vertices) or two adjacent centroids splitting it into halves of n/2.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    for t in rooted_trees(n):
        if all(2 * s < n for s in t.root_subtree_sizes()):
            yield t.to_graph()
    if n % 2 == 0:
        halves = list(rooted_trees(n // 2))
        h = n // 2
        for i, a in enumerate(halves):
            for b in halves[i:]:
                pa, pb = a.parents(), b.parents()
                edges = [(p, c) for c, p in enumerate(pa) if p >= 0]
                edges += [(p + h, c + h) for c, p in enumerate(pb) if p >= 0]
                edges.append((0, h))
                yield Graph(n, edges)


@dataclass
class TreeTable:
    """All rooted trees up to ``max_size`` with global ids ordered by (size, generation order).

    ``weight[i]`` is the RRR contribution of tree ``i``'s edges once its
    root sits on a cycle (root degree = children + 2); ``root_excess[i]``
    is that root degree minus one.
    """

    max_size: int
    codes: list[RootedTreeCode] = field(default_factory=list)
    sizes: list[int] = field(default_factory=list)
    start: list[int] = field(default_factory=list)
    weight: list[float] = field(default_factory=list)
    root_excess: list[int] = field(default_factory=list)

    def __post_init__(self):
        self.start = [0, 0]
        for s in range(1, self.max_size + 1):
            trees = list(rooted_trees(s))
            trees.reverse()  # ascending code order
            for t in trees:
                self._add(t)
            self.start.append(len(self.codes))

    def _add(self, t: RootedTreeCode) -> None:
        par = t.parents()
        kids = t.child_counts()
        deg = [c + 1 for c in kids]
        deg[0] = kids[0] + 2
        w = 0.0
        for v in range(1, len(par)):
            w += math.sqrt((deg[v] - 1) * (deg[par[v]] - 1))
        self.codes.append(t)
        self.sizes.append(t.size)
        self.weight.append(w)
        self.root_excess.append(deg[0] - 1)

    def ids_of_size(self, s: int) -> range:
        return range(self.start[s], self.start[s + 1])


_shared_table: TreeTable | None = None


def tree_table(max_size: int) -> TreeTable:
    """Shared table covering at least ``max_size``; ids never change as it grows."""
    global _shared_table
    if _shared_table is None or _shared_table.max_size < max_size:
        _shared_table = TreeTable(max(1, max_size))
    return _shared_table


def is_canonical_bracelet(t: Sequence[int]) -> bool:
    """True iff ``t`` is the lexicographically least of its rotations and reversals."""
    t = tuple(t)
    g = len(t)
    lo = min(t)
    if t[0] != lo:
        return False
    r = t[::-1]
    for i in range(g):
        if i and t[i] == lo and t[i:] + t[:i] < t:
            return False
        if r[i] == lo and r[i:] + r[:i] < t:
            return False
    return True


def _extend(prefix: list[int], g: int, remaining: int, table: TreeTable, out: list) -> None:
    pos = len(prefix)
    slots_after = g - pos - 1
    lo = prefix[0]
    if slots_after == 0:
        rng = table.ids_of_size(remaining)
        for tid in range(max(lo, rng.start), rng.stop):
            prefix.append(tid)
            if is_canonical_bracelet(prefix):
                out.append(tuple(prefix))
            prefix.pop()
        return
    for s in range(1, remaining - slots_after + 1):
        rng = table.ids_of_size(s)
        for tid in range(max(lo, rng.start), rng.stop):
            prefix.append(tid)
            _extend(prefix, g, remaining - s, table, out)
            prefix.pop()


def unicyclic_shards(n: int) -> list[tuple[int, int, int]]:
    """Disjoint prefixes ``(g, t0, t1)`` covering the whole code stream, in stream order."""
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    table = tree_table(n - 2)
    shards = []
    for g in range(3, n + 1):
        budget = n - (g - 2)  # the first two trees share at most this many vertices
        for s0 in range(1, budget):
            for t0 in table.ids_of_size(s0):
                for s1 in range(1, budget - s0 + 1):
                    rng = table.ids_of_size(s1)
                    for t1 in range(max(t0, rng.start), rng.stop):
                        shards.append((g, t0, t1))
    return shards


def unicyclic_codes(n: int, shard: tuple[int, int, int] | None = None) -> Iterator[tuple[int, ...]]:
    """Canonical attachment sequences of all unicyclic graphs on ``n`` vertices.

    Order: ascending cycle length, then lexicographic sequence of tree ids.
    Restricting to ``shard = (g, t0, t1)`` yields the matching sub-stream.
    """
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    table = tree_table(n - 2)
    out: list[tuple[int, ...]] = []
    if shard is not None:
        g, t0, t1 = shard
        remaining = n - table.sizes[t0] - table.sizes[t1]
        if g >= 3 and t1 >= t0 and remaining >= g - 2:
            _extend([t0, t1], g, remaining, table, out)
        yield from out
        return
    for g in range(3, n + 1):
        for s0 in range(1, n - g + 2):
            for t0 in table.ids_of_size(s0):
                out = []
                _extend([t0], g, n - s0, table, out)
                yield from out


def code_to_graph(code: Sequence[int]) -> Graph:
    """Materialize a unicyclic graph: cycle vertices ``0..g-1`` first, then tree vertices."""
    table = tree_table(1)
    while table.start[-1] <= max(code):
        table = tree_table(table.max_size + 1)
    g = len(code)
    edges = [(i, (i + 1) % g) for i in range(g)]
    nxt = g
    for i, tid in enumerate(code):
        par = table.codes[tid].parents()
        local = [i] + list(range(nxt, nxt + len(par) - 1))
        nxt += len(par) - 1
        edges.extend((local[p], local[c]) for c, p in enumerate(par) if p >= 0)
    return Graph(nxt, edges)


def unicyclic_graphs(n: int) -> Iterator[Graph]:
    """Every connected unicyclic graph on ``n`` vertices, once up to isomorphism."""
    for code in unicyclic_codes(n):
        yield code_to_graph(code)
