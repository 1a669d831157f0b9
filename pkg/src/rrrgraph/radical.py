"""Exact arithmetic on finite sums of rational multiples of square roots.

A :class:`RadicalSum` stores ``{r: c_r}`` with every ``r`` a squarefree
positive integer and every ``c_r`` a nonzero :class:`fractions.Fraction`.
Because square roots of distinct squarefree integers are linearly
independent over the rationals, two values are equal exactly when their
term maps are identical.  Order is decided by interval evaluation at
doubling binary precision once equality has been ruled out.
"""

from __future__ import annotations

import enum
import math
import os
import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Mapping, Union

from .errors import PrecisionExhausted

__all__ = [
    "Ordering",
    "RadicalSum",
    "ZERO",
    "ONE",
    "add",
    "compare",
    "max_precision",
    "parse",
    "scale",
    "sign",
    "sqrt_int",
    "sqrt_rational",
    "sub",
    "to_decimal",
]

RationalLike = Union[int, Fraction]

START_PRECISION = 64
DEFAULT_MAX_PRECISION = 16384


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    def __str__(self) -> str:
        return self.name.capitalize()


@lru_cache(maxsize=4096)
def split_square(m: int) -> tuple[int, int]:
    """Return ``(s, r)`` with ``m == s*s*r`` and ``r`` squarefree."""
    if m < 0:
        raise ValueError(f"cannot split negative integer {m}")
    if m == 0:
        return 0, 1
    s, r = 1, 1
    d = 2
    while d * d <= m:
        e = 0
        while m % d == 0:
            m //= d
            e += 1
        s *= d ** (e // 2)
        if e % 2:
            r *= d
        d += 1 if d == 2 else 2
    return s, r * m


def is_squarefree(r: int) -> bool:
    return r >= 1 and split_square(r)[0] == 1


def _as_fraction(q) -> Fraction:
    if isinstance(q, Fraction):
        return q
    if isinstance(q, (int, Rational)):
        return Fraction(q)
    raise TypeError(f"expected a rational number, got {type(q).__name__}")


class RadicalSum:
    """Immutable value ``sum(c * sqrt(r))`` in canonical form."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, RationalLike] | Iterable[tuple[int, RationalLike]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Fraction] = {}
        for r, c in items:
            r = int(r)
            if r < 0:
                raise ValueError("radicand must be nonnegative")
            s, core = split_square(r)
            if s == 0:
                continue
            acc[core] = acc.get(core, Fraction(0)) + _as_fraction(c) * s
        self._terms = tuple(sorted((r, c) for r, c in acc.items() if c))
        self._hash = None

    @classmethod
    def _from_canonical(cls, acc: dict[int, Fraction]) -> "RadicalSum":
        self = object.__new__(cls)
        self._terms = tuple(sorted((r, c) for r, c in acc.items() if c))
        self._hash = None
        return self

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def rational_part(self) -> Fraction:
        return self.terms.get(1, Fraction(0))

    def is_rational(self) -> bool:
        return all(r == 1 for r, _ in self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, RadicalSum):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == RadicalSum({1: other})._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __add__(self, other) -> "RadicalSum":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self._terms)
        for r, c in other._terms:
            acc[r] = acc.get(r, Fraction(0)) + c
        return RadicalSum._from_canonical(acc)

    __radd__ = __add__

    def __neg__(self) -> "RadicalSum":
        return RadicalSum._from_canonical({r: -c for r, c in self._terms})

    def __pos__(self) -> "RadicalSum":
        return self

    def __sub__(self, other) -> "RadicalSum":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RadicalSum":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "RadicalSum":
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return RadicalSum._from_canonical({r: c * q for r, c in self._terms})
        if not isinstance(other, RadicalSum):
            return NotImplemented
        acc: dict[int, Fraction] = {}
        for r1, c1 in self._terms:
            for r2, c2 in other._terms:
                g = math.gcd(r1, r2)
                # sqrt(r1*r2) = g * sqrt(r1*r2/g^2), and r1*r2/g^2 is squarefree
                core = (r1 // g) * (r2 // g)
                acc[core] = acc.get(core, Fraction(0)) + c1 * c2 * g
        return RadicalSum._from_canonical(acc)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RadicalSum":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of RadicalSum by zero")
            return self * (1 / Fraction(other))
        return NotImplemented

    def __lt__(self, other) -> bool:
        return compare(self, _require(other)) is Ordering.LESS

    def __le__(self, other) -> bool:
        return compare(self, _require(other)) is not Ordering.GREATER

    def __gt__(self, other) -> bool:
        return compare(self, _require(other)) is Ordering.GREATER

    def __ge__(self, other) -> bool:
        return compare(self, _require(other)) is not Ordering.LESS

    def __float__(self) -> float:
        return float(to_decimal(self, 20))

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"RadicalSum({render(self)!r})"


def _coerce(x) -> RadicalSum | None:
    if isinstance(x, RadicalSum):
        return x
    if isinstance(x, (int, Fraction)):
        return RadicalSum({1: x})
    return None


def _require(x) -> RadicalSum:
    out = _coerce(x)
    if out is None:
        raise TypeError(f"cannot compare RadicalSum with {type(x).__name__}")
    return out


ZERO = RadicalSum()
ONE = RadicalSum({1: 1})


def sqrt_int(m: int) -> RadicalSum:
    """``sqrt(m)`` in canonical form: ``m = s^2 r`` gives ``s*sqrt(r)``."""
    if m < 0:
        raise ValueError(f"sqrt_int requires m >= 0, got {m}")
    s, r = split_square(m)
    return RadicalSum._from_canonical({r: Fraction(s)}) if s else ZERO


def sqrt_rational(p: RationalLike) -> RadicalSum:
    """``sqrt(a/b) = sqrt(a*b) / b``."""
    p = _as_fraction(p)
    if p < 0:
        raise ValueError(f"sqrt_rational requires p >= 0, got {p}")
    a, b = p.numerator, p.denominator
    return sqrt_int(a * b) / b


def add(a: RadicalSum, b: RadicalSum) -> RadicalSum:
    return a + b


def sub(a: RadicalSum, b: RadicalSum) -> RadicalSum:
    return a - b


def scale(a: RadicalSum, q: RationalLike) -> RadicalSum:
    return a * _as_fraction(q)


def max_precision() -> int:
    """Precision cap in bits, overridable through ``RRR_MAX_PRECISION``."""
    raw = os.environ.get("RRR_MAX_PRECISION")
    if not raw:
        return DEFAULT_MAX_PRECISION
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"RRR_MAX_PRECISION must be an integer, got {raw!r}") from None
    if cap < START_PRECISION:
        raise ValueError(f"RRR_MAX_PRECISION must be at least {START_PRECISION}")
    return cap


def _scaled_bounds(a: RadicalSum, bits: int, factor: int = 1) -> tuple[int, int, int]:
    """Integers ``lo, hi, den`` with ``lo/den <= factor*a <= hi/den``."""
    den_q = 1
    for _, c in a._terms:
        den_q = den_q * c.denominator // math.gcd(den_q, c.denominator)
    lo = hi = 0
    one = 1 << bits
    for r, c in a._terms:
        k = c.numerator * (den_q // c.denominator) * factor
        if r == 1:
            lo += k * one
            hi += k * one
            continue
        s = math.isqrt(r << (2 * bits))
        if k > 0:
            lo += k * s
            hi += k * (s + 1)
        else:
            lo += k * (s + 1)
            hi += k * s
    return lo, hi, den_q << bits


def sign(a: RadicalSum) -> Ordering:
    """Sign of ``a`` as an :class:`Ordering` relative to zero."""
    if not a:
        return Ordering.EQUAL
    if a.is_rational():
        return Ordering.GREATER if a.rational_part() > 0 else Ordering.LESS
    cap = max_precision()
    bits = START_PRECISION
    while bits <= cap:
        lo, hi, _ = _scaled_bounds(a, bits)
        if lo > 0:
            return Ordering.GREATER
        if hi < 0:
            return Ordering.LESS
        bits *= 2
    raise PrecisionExhausted(f"sign of {render(a)} undecided at {cap} bits")


def compare(a: RadicalSum, b: RadicalSum) -> Ordering:
    """Exact three-way comparison."""
    if a._terms == b._terms:
        return Ordering.EQUAL
    return sign(a - b)


def _round_half_even(num: int, den: int) -> int:
    q, rem = divmod(num, den)
    twice = 2 * rem
    if twice > den or (twice == den and q % 2):
        q += 1
    return q


def to_decimal(a: RadicalSum, digits: int) -> str:
    """Correctly rounded decimal string with ``digits`` places after the point.

    Exact halves (only possible for rational values) round to even.
    """
    if digits < 0:
        raise ValueError("digits must be nonnegative")
    factor = 10**digits
    if a.is_rational():
        q = a.rational_part() * factor
        n = _round_half_even(q.numerator, q.denominator)
    else:
        bits = START_PRECISION
        cap = max(max_precision(), 4 * digits + START_PRECISION)
        while True:
            lo, hi, den = _scaled_bounds(a, bits, factor)
            # the scaled value is irrational, so it is never exactly a half-integer
            n_lo = (2 * lo + den) // (2 * den)
            n_hi = (2 * hi + den) // (2 * den)
            if n_lo == n_hi:
                n = n_lo
                break
            bits *= 2
            if bits > cap:
                raise PrecisionExhausted(f"cannot round {render(a)} at {cap} bits")
    neg = n < 0
    whole, frac = divmod(abs(n), factor)
    text = str(whole) if digits == 0 else f"{whole}.{frac:0{digits}d}"
    return "-" + text if neg and n else text


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render(a: RadicalSum) -> str:
    """Canonical text: ``"1 + 2*sqrt(5)"``, terms by ascending radicand."""
    if not a._terms:
        return "0"
    parts: list[str] = []
    for i, (r, c) in enumerate(a._terms):
        mag = abs(c)
        if r == 1:
            body = _fmt_coeff(mag)
        elif mag == 1:
            body = f"sqrt({r})"
        else:
            body = f"{_fmt_coeff(mag)}*sqrt({r})"
        if i == 0:
            parts.append("-" + body if c < 0 else body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\d+)(?:/(\d+))?\s*(\*\s*sqrt\(\s*(\d+)\s*\))?|sqrt\(\s*(\d+)\s*\))\s*"
)


def parse(text: str) -> RadicalSum:
    """Inverse of :func:`render` (also accepts non-canonical radicands)."""
    pos = 0
    text = text.strip()
    if not text:
        raise ValueError("empty radical expression")
    acc: list[tuple[int, Fraction]] = []
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or (not first and m.group(1) is None):
            raise ValueError(f"cannot parse radical expression {text!r} at offset {pos}")
        sgn = -1 if m.group(1) == "-" else 1
        if m.group(6) is not None:
            c, r = Fraction(1), int(m.group(6))
        else:
            c = Fraction(int(m.group(2)), int(m.group(3) or 1))
            r = int(m.group(5)) if m.group(4) else 1
        acc.append((r, sgn * c))
        pos = m.end()
        first = False
    return RadicalSum(acc)
