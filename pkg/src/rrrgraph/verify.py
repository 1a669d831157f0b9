"""Brute-force checks of the minimum-RRR theorem for unicyclic graphs.

Minimization runs over the attachment codes from
:mod:`rrrgraph.enumeration`.  A double-precision RRR is computed from
per-tree tables for every code.  Only codes within ``FLOAT_MARGIN`` of
the running float minimum are kept, and the survivors are materialized
and compared with exact radical arithmetic.  The margin is several
orders of magnitude above the worst-case rounding error of the float sum,
so no code that could be an exact minimizer is ever dropped.
"""

from __future__ import annotations

import csv
import io
import json
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .cases import CaseClass, admissible_classes, choose_u0, classify
from .enumeration import code_to_graph, free_trees, tree_table, unicyclic_codes, unicyclic_shards
from .errors import EmptyClass
from .families import FamilyId, build, closed_form_rrr
from .formats import render_graph6
from .graph import CanonicalCertificate, Graph, canonical_certificate, delete_vertex
from .indices import rrr
from .radical import Ordering, RadicalSum, compare, sqrt_int, to_decimal

__all__ = [
    "FLOAT_MARGIN",
    "BRANCH_SWITCH_N",
    "MinResult",
    "ReportRow",
    "VerificationReport",
    "brute_min",
    "class_minima",
    "check_deletion_recurrence",
    "crossover_table",
    "threshold_table",
    "verify_theorem",
    "tree_floor_check",
    "expected_minimizer",
    "random_unicyclic_graph",
]

# RRR values here stay below 1e4 and sums have < 100 terms, so float error is < 1e-10.
FLOAT_MARGIN = 1e-7
BRANCH_SWITCH_N = 17

CLASS_KEYS: tuple[CaseClass | None, ...] = (None, CaseClass.CASE1, CaseClass.CASE2, CaseClass.CASE3)
CLASS_MIN_N = {None: 4, CaseClass.CASE1: 4, CaseClass.CASE2: 5, CaseClass.CASE3: 6}


def _key_name(key: CaseClass | None) -> str:
    return "all" if key is None else key.value


@dataclass
class MinResult:
    n: int
    class_filter: CaseClass | None
    min_value: RadicalSum
    minimizers: list[tuple[CanonicalCertificate, Graph]]
    graph_count: int

    @property
    def unique(self) -> bool:
        return len(self.minimizers) == 1

    @property
    def filter_name(self) -> str:
        return _key_name(self.class_filter)


class _Best:
    """Running float minimum plus every code within the margin of it."""

    __slots__ = ("best", "cands", "count")

    def __init__(self):
        self.best = math.inf
        self.cands: list[tuple[float, tuple[int, ...]]] = []
        self.count = 0

    def offer(self, f: float, code: tuple[int, ...]) -> None:
        if f > self.best + FLOAT_MARGIN:
            return
        if f < self.best:
            self.best = f
            cut = f + FLOAT_MARGIN
            self.cands = [c for c in self.cands if c[0] <= cut]
        self.cands.append((f, code))

    def merge(self, other: "_Best") -> None:
        self.count += other.count
        for f, code in other.cands:
            self.offer(f, code)


def _code_float(code: Sequence[int], weight: Sequence[float], excess: Sequence[int]) -> float:
    g = len(code)
    total = 0.0
    prev = excess[code[-1]]
    for i in range(g):
        e = excess[code[i]]
        total += weight[code[i]] + math.sqrt(prev * e)
        prev = e
    return total


def _scan(n: int, shards: Sequence[tuple[int, int, int]] | None, keys: tuple) -> dict:
    table = tree_table(n - 2)
    weight, excess = table.weight, table.root_excess
    bests = {k: _Best() for k in keys}
    classified = any(k is not None for k in keys)
    streams: Iterable = [unicyclic_codes(n)] if shards is None else (unicyclic_codes(n, s) for s in shards)
    for stream in streams:
        for code in stream:
            f = _code_float(code, weight, excess)
            if not classified:
                b = bests[None]
                b.count += 1
                b.offer(f, code)
                continue
            g = code_to_graph(code)
            cls = classify(g)
            for k, b in bests.items():
                if k is None or k is cls:
                    b.count += 1
                    b.offer(f, code)
    return bests


def _scan_job(args):
    n, shards, keys = args
    return _scan(n, shards, keys)


def _scan_parallel(n: int, keys: tuple, jobs: int) -> dict:
    if jobs <= 1:
        return _scan(n, None, keys)
    shards = unicyclic_shards(n)
    chunks = [shards[i::jobs] for i in range(jobs)]
    merged = {k: _Best() for k in keys}
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_scan_job, [(n, c, keys) for c in chunks]):
            for k in keys:
                merged[k].merge(part[k])
    return merged


def _finalize(n: int, key: CaseClass | None, b: _Best) -> MinResult:
    if b.count == 0:
        raise EmptyClass(f"no unicyclic graph on {n} vertices in class {_key_name(key)}")
    # codes sort in stream order, so the result is independent of sharding
    exact = [(rrr(code_to_graph(c)), c) for _, c in sorted(b.cands, key=lambda t: (len(t[1]), t[1]))]
    low = exact[0][0]
    for v, _ in exact[1:]:
        if compare(v, low) is Ordering.LESS:
            low = v
    minimizers = []
    for v, c in exact:
        if v == low:
            g = code_to_graph(c)
            minimizers.append((canonical_certificate(g), g))
    return MinResult(n, key, low, minimizers, b.count)


def class_minima(n: int, keys: Sequence[CaseClass | None] = (None,), jobs: int = 1) -> dict:
    """One enumeration pass, returning a :class:`MinResult` per requested class key."""
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    keys = tuple(dict.fromkeys(keys))
    bests = _scan_parallel(n, keys, jobs)
    return {k: _finalize(n, k, bests[k]) for k in keys}


def brute_min(n: int, class_filter: CaseClass | str | None = None, jobs: int = 1) -> MinResult:
    """Exact minimum RRR over all unicyclic graphs on ``n`` vertices (optionally one case class)."""
    if class_filter in ("all", None):
        key = None
    else:
        key = CaseClass(class_filter)
    if key is CaseClass.PURE_CYCLE:
        raise ValueError("use families.build(CYCLE, n); the cycle class has one member")
    if n < CLASS_MIN_N[key]:
        raise EmptyClass(f"class {_key_name(key)} is empty for n = {n}")
    return class_minima(n, (key,), jobs)[key]


def expected_minimizer(n: int, key: CaseClass | None = None) -> FamilyId:
    """Family predicted to minimize RRR on ``n`` vertices, overall or within a class."""
    if key is None:
        return FamilyId.STARPLUS if n < BRANCH_SWITCH_N else FamilyId.H
    return {
        CaseClass.CASE1: FamilyId.STARPLUS,
        CaseClass.CASE2: FamilyId.HPLUS,
        CaseClass.CASE3: FamilyId.H,
    }[key]


def check_deletion_recurrence(g: Graph) -> bool:
    """Exact check of RRR(G) = RRR(G - u0) + sum over v0's other neighbors w of
    sqrt((x-1)(d_w-1)) - sqrt((x-2)(d_w-1))."""
    ctx = choose_u0(g)
    x = ctx.x
    correction = RadicalSum()
    for w in g.neighbors(ctx.v0):
        if w == ctx.u0:
            continue
        dw = g.degree(w)
        correction = correction + sqrt_int((x - 1) * (dw - 1)) - sqrt_int((x - 2) * (dw - 1))
    return rrr(g) == rrr(delete_vertex(g, ctx.u0)) + correction


def _sign_table(a: FamilyId, b: FamilyId, n_lo: int, n_hi: int, floor: int) -> list[tuple[int, Ordering]]:
    if not floor <= n_lo <= n_hi:
        raise ValueError(f"need {floor} <= n_lo <= n_hi, got {n_lo}, {n_hi}")
    return [(n, compare(closed_form_rrr(a, n), closed_form_rrr(b, n))) for n in range(n_lo, n_hi + 1)]


def crossover_table(n_lo: int, n_hi: int) -> list[tuple[int, Ordering]]:
    """Sign of RRR(S_n+) - RRR(H_n+)."""
    return _sign_table(FamilyId.STARPLUS, FamilyId.HPLUS, n_lo, n_hi, 5)


def threshold_table(n_lo: int, n_hi: int) -> list[tuple[int, Ordering]]:
    """Sign of RRR(S_n+) - RRR(H_n)."""
    return _sign_table(FamilyId.STARPLUS, FamilyId.H, n_lo, n_hi, 6)


def _is_star(t: Graph) -> bool:
    return t.n <= 2 or max(t.degrees()) == t.n - 1


def tree_floor_check(n_max: int) -> bool:
    """RRR(T) >= 0 for every tree on 2..n_max vertices, with equality exactly on stars."""
    if n_max < 2:
        raise ValueError(f"n_max must be at least 2, got {n_max}")
    for n in range(2, n_max + 1):
        for t in free_trees(n):
            v = rrr(t)
            s = compare(v, RadicalSum())
            if s is Ordering.LESS or (s is Ordering.EQUAL) != _is_star(t):
                return False
    return True


def random_unicyclic_graph(n: int, rng: random.Random) -> Graph:
    """A random labeled tree (Pruefer code) plus one random extra edge."""
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    seq = [rng.randrange(n) for _ in range(n - 2)]
    deg = [1] * n
    for v in seq:
        deg[v] += 1
    edges = []
    for v in seq:
        leaf = min(i for i in range(n) if deg[i] == 1)
        edges.append((leaf, v))
        deg[leaf] -= 1
        deg[v] -= 1
    u, w = [i for i in range(n) if deg[i] == 1]
    edges.append((u, w))
    present = {tuple(sorted(e)) for e in edges}
    while True:
        a, b = sorted(rng.sample(range(n), 2))
        if (a, b) not in present:
            edges.append((a, b))
            return Graph(n, edges)


@dataclass
class ReportRow:
    n: int
    cls: str
    count: int
    expected: RadicalSum
    observed: RadicalSum
    expected_family: FamilyId
    minimizers: list[Graph]
    matches_family: bool
    unique: bool
    ms: float

    @property
    def passed(self) -> bool:
        return self.observed == self.expected and self.unique and self.matches_family

    def as_record(self) -> dict:
        return {
            "n": self.n,
            "class": self.cls,
            "count": self.count,
            "expected_value_symbolic": str(self.expected),
            "observed_value_symbolic": str(self.observed),
            "observed_value_decimal12": to_decimal(self.observed, 12),
            "minimizer_graph6": ";".join(render_graph6(g) for g in self.minimizers),
            "unique": self.unique,
            "pass": self.passed,
            "ms": round(self.ms, 1),
        }


CSV_COLUMNS = [
    "n",
    "class",
    "count",
    "expected_value_symbolic",
    "observed_value_symbolic",
    "observed_value_decimal12",
    "minimizer_graph6",
    "unique",
    "pass",
    "ms",
]


@dataclass
class VerificationReport:
    rows: list[ReportRow] = field(default_factory=list)
    tree_floor: bool | None = None
    tree_floor_n_max: int | None = None

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows) and self.tree_floor is not False

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for r in self.rows:
            writer.writerow(r.as_record())
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {
            "rows": [r.as_record() for r in self.rows],
            "tree_floor": {"n_max": self.tree_floor_n_max, "pass": self.tree_floor},
            "pass": self.passed,
        }
        return json.dumps(doc, indent=2) + "\n"


def _row(n: int, key: CaseClass | None, res: MinResult, ms: float) -> ReportRow:
    fam = expected_minimizer(n, key)
    target = canonical_certificate(build(fam, n))
    return ReportRow(
        n=n,
        cls=_key_name(key),
        count=res.graph_count,
        expected=closed_form_rrr(fam, n),
        observed=res.min_value,
        expected_family=fam,
        minimizers=[g for _, g in res.minimizers],
        matches_family=[c for c, _ in res.minimizers] == [target],
        unique=res.unique,
        ms=ms,
    )


def verify_theorem(
    n_max: int,
    *,
    n_min: int = 4,
    class_max_n: int = 12,
    extra_n: Sequence[int] = (),
    jobs: int = 1,
    tree_max_n: int | None = 10,
    progress=None,
) -> VerificationReport:
    """Exhaustive minimum check for every n in ``n_min..n_max`` (plus ``extra_n``).

    Per-class rows are produced for ``n <= class_max_n``.
    """
    if n_max < 4 or n_min < 4:
        raise ValueError("the theorem starts at n = 4")
    report = VerificationReport()
    for n in sorted(set(range(n_min, n_max + 1)) | set(extra_n)):
        keys = [k for k in CLASS_KEYS if n >= CLASS_MIN_N[k] and (k is None or n <= class_max_n)]
        t0 = time.perf_counter()
        results = class_minima(n, keys, jobs)
        ms = (time.perf_counter() - t0) * 1000
        for k in keys:
            row = _row(n, k, results[k], ms)
            report.rows.append(row)
            if progress:
                progress(row)
    if tree_max_n is not None:
        report.tree_floor = tree_floor_check(tree_max_n)
        report.tree_floor_n_max = tree_max_n
    return report


def admissible_class_minima(n: int) -> dict[CaseClass, MinResult]:
    """Class minima where a graph counts toward every class some valid u0 choice gives it."""
    bests = {k: _Best() for k in CLASS_KEYS[1:]}
    table = tree_table(n - 2)
    for code in unicyclic_codes(n):
        g = code_to_graph(code)
        f = _code_float(code, table.weight, table.root_excess)
        for k in admissible_classes(g):
            if k in bests:
                bests[k].count += 1
                bests[k].offer(f, code)
    return {k: _finalize(n, k, b) for k, b in bests.items() if b.count}
