"""Degree-based topological indices as exact edge sums."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .errors import UndefinedTerm
from .graph import Graph
from .radical import ZERO, RadicalSum, sqrt_int, sqrt_rational

__all__ = [
    "EdgeFunctional",
    "RRR",
    "RANDIC",
    "ABC",
    "AZI",
    "FUNCTIONALS",
    "index",
    "rrr",
    "randic",
    "abc",
    "azi",
    "rrr_float",
]


@dataclass(frozen=True)
class EdgeFunctional:
    """A symmetric function of the two endpoint degrees of an edge."""

    name: str
    eval: Callable[[int, int], RadicalSum]

    def __call__(self, du: int, dv: int) -> RadicalSum:
        if du > dv:
            du, dv = dv, du
        return self.eval(du, dv)


@lru_cache(maxsize=None)
def _rrr_term(du: int, dv: int) -> RadicalSum:
    return sqrt_int((du - 1) * (dv - 1))


@lru_cache(maxsize=None)
def _randic_term(du: int, dv: int) -> RadicalSum:
    return sqrt_rational(Fraction(1, du * dv))


@lru_cache(maxsize=None)
def _abc_term(du: int, dv: int) -> RadicalSum:
    return sqrt_rational(Fraction(du + dv - 2, du * dv))


@lru_cache(maxsize=None)
def _azi_term(du: int, dv: int) -> RadicalSum:
    den = du + dv - 2
    if den == 0:
        raise UndefinedTerm(f"AZI term undefined for degrees ({du}, {dv})")
    return RadicalSum({1: Fraction(du * dv, den) ** 3})


RRR = EdgeFunctional("rrr", _rrr_term)
RANDIC = EdgeFunctional("randic", _randic_term)
ABC = EdgeFunctional("abc", _abc_term)
AZI = EdgeFunctional("azi", _azi_term)

FUNCTIONALS: dict[str, EdgeFunctional] = {f.name: f for f in (RRR, RANDIC, ABC, AZI)}


def index(g: Graph, f: EdgeFunctional) -> RadicalSum:
    """Sum ``f(d_u, d_v)`` over the edges of ``g``.

    Terms are grouped by degree pair first so each distinct pair is
    evaluated once.
    """
    deg = g.degrees()
    pairs: dict[tuple[int, int], int] = {}
    for u, v in g.edges:
        a, b = deg[u], deg[v]
        key = (a, b) if a <= b else (b, a)
        pairs[key] = pairs.get(key, 0) + 1
    total = ZERO
    for (a, b), mult in sorted(pairs.items()):
        total = total + f(a, b) * mult
    return total


def rrr(g: Graph) -> RadicalSum:
    """Reduced reciprocal Randic index: sum of sqrt((d_u - 1)(d_v - 1))."""
    return index(g, RRR)


def randic(g: Graph) -> RadicalSum:
    return index(g, RANDIC)


def abc(g: Graph) -> RadicalSum:
    return index(g, ABC)


def azi(g: Graph) -> RadicalSum:
    """Augmented Zagreb index; raises :class:`UndefinedTerm` on a K2 component."""
    return index(g, AZI)


def rrr_float(g: Graph) -> float:
    """Double-precision RRR, for cross-checks only."""
    deg = g.degrees()
    return sum(((deg[u] - 1) * (deg[v] - 1)) ** 0.5 for u, v in g.edges)
