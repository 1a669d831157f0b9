"""Named graph families and their closed-form RRR values.

Vertex numbering: cycle vertices first, then the attachment path, then
leaves.

* ``H``:     triangle 0,1,2; path 0-3-4; vertex 4 carries n-5 leaves.
* ``HPLUS``: triangle 0,1,2; vertex 3 joined to 0 and carrying n-4 leaves.
"""

from __future__ import annotations

import enum

from .errors import NBelowMinimum
from .graph import Graph
from .radical import ONE, ZERO, RadicalSum, sqrt_int

__all__ = ["FamilyId", "build", "closed_form_rrr", "MIN_N"]


class FamilyId(str, enum.Enum):
    CYCLE = "cycle"
    STAR = "star"
    STARPLUS = "starplus"
    H = "h"
    HPLUS = "hplus"

    @property
    def min_n(self) -> int:
        return MIN_N[self]

    @property
    def label(self) -> str:
        return _LABELS[self]


MIN_N = {
    FamilyId.CYCLE: 3,
    FamilyId.STAR: 2,
    FamilyId.STARPLUS: 3,
    FamilyId.HPLUS: 5,
    FamilyId.H: 6,
}

_LABELS = {
    FamilyId.CYCLE: "C_n",
    FamilyId.STAR: "S_n",
    FamilyId.STARPLUS: "S_n+",
    FamilyId.H: "H_n",
    FamilyId.HPLUS: "H_n+",
}


def _check(f: FamilyId, n: int) -> FamilyId:
    f = FamilyId(f)
    if n < MIN_N[f]:
        raise NBelowMinimum(f"{f.label} needs n >= {MIN_N[f]}, got {n}")
    return f


def build(f: FamilyId | str, n: int) -> Graph:
    f = _check(f, n)
    if f is FamilyId.CYCLE:
        return Graph(n, [(i, (i + 1) % n) for i in range(n)])
    if f is FamilyId.STAR:
        return Graph(n, [(0, i) for i in range(1, n)])
    if f is FamilyId.STARPLUS:
        return Graph(n, [(0, i) for i in range(1, n)] + [(1, 2)])
    triangle = [(0, 1), (1, 2), (0, 2)]
    if f is FamilyId.HPLUS:
        return Graph(n, triangle + [(0, 3)] + [(3, i) for i in range(4, n)])
    return Graph(n, triangle + [(0, 3), (3, 4)] + [(4, i) for i in range(5, n)])


def closed_form_rrr(f: FamilyId | str, n: int) -> RadicalSum:
    f = _check(f, n)
    if f is FamilyId.CYCLE:
        return RadicalSum({1: n})
    if f is FamilyId.STAR:
        return ZERO
    if f is FamilyId.STARPLUS:
        return ONE + 2 * sqrt_int(n - 2)
    if f is FamilyId.HPLUS:
        return ONE + 2 * sqrt_int(2) + sqrt_int(2 * (n - 4))
    return ONE + 3 * sqrt_int(2) + sqrt_int(n - 5)
