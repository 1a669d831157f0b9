"""Pendant-vertex selection and the three-way case split of unicyclic graphs.

For a pendant vertex ``u`` with neighbor ``v``, ``W(u)`` is the set of other
pendant neighbors of ``v``.  The chosen pendant ``u0`` maximizes ``|W(u0)|``
and, subject to that, minimizes ``deg(v0)``.  With ``x = deg(v0)`` and ``p``
the number of pendant neighbors of ``v0``:

* Case 1: ``p <= x - 2``, or ``p = x - 1`` and the remaining neighbor has degree >= 5
* Case 2: ``p = x - 1`` and the remaining neighbor has degree 3 or 4
* Case 3: ``p = x - 1`` and the remaining neighbor has degree 2

Several pendants can tie on ``(|W|, x)`` yet sit in different cases.  To keep
the class a function of the isomorphism type, ties are broken toward the
lowest-numbered case and only then by vertex index.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import NoPendant, NotUnicyclic
from .graph import Graph, is_unicyclic

__all__ = [
    "CaseClass",
    "PendantContext",
    "pendant_contexts",
    "choose_u0",
    "classify",
    "admissible_classes",
]


class CaseClass(str, enum.Enum):
    PURE_CYCLE = "cycle"
    CASE1 = "case1"
    CASE2 = "case2"
    CASE3 = "case3"

    def __str__(self) -> str:
        return _DISPLAY[self]


_DISPLAY = {
    CaseClass.PURE_CYCLE: "PureCycle",
    CaseClass.CASE1: "Case1",
    CaseClass.CASE2: "Case2",
    CaseClass.CASE3: "Case3",
}


@dataclass(frozen=True)
class PendantContext:
    u0: int
    v0: int
    x: int
    p: int
    w_size: int
    anchor: int | None  # the single non-pendant neighbor of v0 when p == x - 1
    anchor_degree: int | None

    def case(self) -> CaseClass:
        if self.p <= self.x - 2:
            return CaseClass.CASE1
        # p == x would make v0 and its leaves a whole component
        assert self.p == self.x - 1 and self.anchor_degree is not None, self
        if self.anchor_degree >= 5:
            return CaseClass.CASE1
        if self.anchor_degree >= 3:
            return CaseClass.CASE2
        assert self.anchor_degree == 2, self
        return CaseClass.CASE3


def pendant_contexts(g: Graph) -> list[PendantContext]:
    """One context per pendant vertex, in vertex order."""
    deg = g.degrees()
    out = []
    for u in range(g.n):
        if deg[u] != 1:
            continue
        (v,) = g.neighbors(u)
        nbrs = g.neighbors(v)
        p = sum(1 for w in nbrs if deg[w] == 1)
        x = deg[v]
        anchor = anchor_deg = None
        if p == x - 1:
            anchor = next(w for w in nbrs if deg[w] != 1)
            anchor_deg = deg[anchor]
        out.append(PendantContext(u, v, x, p, p - 1, anchor, anchor_deg))
    return out


def _optimal(g: Graph) -> list[PendantContext]:
    ctxs = pendant_contexts(g)
    if not ctxs:
        raise NoPendant("graph has no pendant vertex")
    best = min((-c.w_size, c.x) for c in ctxs)
    return [c for c in ctxs if (-c.w_size, c.x) == best]


def choose_u0(g: Graph) -> PendantContext:
    """The pendant selected by the maximal-|W|, minimal-degree rule."""
    return min(_optimal(g), key=lambda c: (c.case().value, c.u0))


def admissible_classes(g: Graph) -> frozenset[CaseClass]:
    """Every class reachable by some choice of ``u0`` allowed by the selection rule."""
    if not is_unicyclic(g):
        raise NotUnicyclic("classification requires a connected unicyclic graph")
    if not any(d == 1 for d in g.degrees()):
        return frozenset({CaseClass.PURE_CYCLE})
    return frozenset(c.case() for c in _optimal(g))


def classify(g: Graph) -> CaseClass:
    if not is_unicyclic(g):
        raise NotUnicyclic("classification requires a connected unicyclic graph")
    if not any(d == 1 for d in g.degrees()):
        return CaseClass.PURE_CYCLE
    return choose_u0(g).case()
