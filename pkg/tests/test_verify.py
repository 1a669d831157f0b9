import csv
import io
import json
import random

import pytest

from rrrgraph.cases import CaseClass
from rrrgraph.enumeration import unicyclic_graphs
from rrrgraph.errors import EmptyClass, NoPendant
from rrrgraph.families import FamilyId, build, closed_form_rrr
from rrrgraph.graph import are_isomorphic
from rrrgraph.indices import rrr
from rrrgraph.radical import ONE, Ordering, sqrt_int
from rrrgraph.verify import (
    CSV_COLUMNS,
    admissible_class_minima,
    brute_min,
    check_deletion_recurrence,
    class_minima,
    crossover_table,
    random_unicyclic_graph,
    threshold_table,
    tree_floor_check,
    verify_theorem,
)


class TestBruteMin:
    def test_n4(self):
        res = brute_min(4)
        assert res.min_value == ONE + 2 * sqrt_int(2)
        assert res.unique and are_isomorphic(res.minimizers[0][1], build("starplus", 4))
        assert res.graph_count == 2

    def test_case3_n6(self):
        res = brute_min(6, CaseClass.CASE3)
        assert res.graph_count == 1 and res.unique
        assert are_isomorphic(res.minimizers[0][1], build("h", 6))

    def test_matches_exhaustive_exact_scan(self):
        for n in range(4, 10):
            values = [rrr(g) for g in unicyclic_graphs(n)]
            low = min(values)
            res = brute_min(n)
            assert res.min_value == low
            assert len(res.minimizers) == sum(1 for v in values if v == low)

    def test_class_filter_by_name(self):
        assert brute_min(7, "case2").min_value == closed_form_rrr(FamilyId.HPLUS, 7)

    def test_empty_class(self):
        with pytest.raises(EmptyClass):
            brute_min(5, CaseClass.CASE3)

    def test_jobs_do_not_change_results(self):
        one = class_minima(10, (None, CaseClass.CASE1, CaseClass.CASE3), jobs=1)
        two = class_minima(10, (None, CaseClass.CASE1, CaseClass.CASE3), jobs=2)
        for key in one:
            assert one[key].min_value == two[key].min_value
            assert [c for c, _ in one[key].minimizers] == [c for c, _ in two[key].minimizers]
            assert one[key].graph_count == two[key].graph_count

    def test_admissible_minima(self):
        # every u0 choice allowed by the selection rule gives the same class minimizers
        expected = {CaseClass.CASE1: "starplus", CaseClass.CASE2: "hplus", CaseClass.CASE3: "h"}
        for n in range(8, 12):
            for key, res in admissible_class_minima(n).items():
                assert res.unique and are_isomorphic(res.minimizers[0][1], build(expected[key], n))


class TestRecurrence:
    def test_examples(self):
        assert check_deletion_recurrence(build("starplus", 7))
        assert check_deletion_recurrence(build("h", 9))
        with pytest.raises(NoPendant):
            check_deletion_recurrence(build("cycle", 5))

    def test_random_instances(self):
        rng = random.Random(1)
        for _ in range(100):
            g = random_unicyclic_graph(rng.randint(10, 30), rng)
            if min(g.degrees()) == 1:
                assert check_deletion_recurrence(g)

    def test_random_generator_is_unicyclic(self):
        from rrrgraph.graph import is_unicyclic

        rng = random.Random(2)
        assert all(is_unicyclic(random_unicyclic_graph(rng.randint(3, 20), rng)) for _ in range(200))


class TestTables:
    def test_crossover_examples(self):
        table = dict(crossover_table(5, 30))
        assert table[12] is Ordering.LESS
        assert table[20] is Ordering.EQUAL
        assert table[25] is Ordering.GREATER

    def test_threshold_examples(self):
        table = dict(threshold_table(6, 100))
        assert table[16] is Ordering.LESS
        assert table[17] is Ordering.GREATER
        assert table[100] is Ordering.GREATER

    def test_bounds(self):
        with pytest.raises(ValueError):
            crossover_table(4, 10)
        with pytest.raises(ValueError):
            threshold_table(5, 10)

    def test_cycle_never_minimal(self):
        for n in range(4, 201):
            cycle = closed_form_rrr(FamilyId.CYCLE, n)
            assert cycle > ONE + 2 * sqrt_int(n - 2)
            if n >= 7:
                assert cycle > ONE + 3 * sqrt_int(2) + sqrt_int(n - 5)


class TestTreeFloor:
    @pytest.mark.parametrize("n_max", [2, 4, 8])
    def test_holds(self, n_max):
        assert tree_floor_check(n_max)


@pytest.fixture(scope="module")
def report():
    return verify_theorem(8, tree_max_n=6)


class TestReport:
    def test_rows_pass(self, report):
        assert report.passed and report.tree_floor
        counts = [r.count for r in report.rows if r.cls == "all"]
        assert counts == [2, 5, 13, 33, 89]

    def test_csv(self, report):
        rows = list(csv.DictReader(io.StringIO(report.to_csv())))
        assert list(rows[0]) == CSV_COLUMNS
        first = rows[0]
        assert first["n"] == "4" and first["class"] == "all"
        assert first["observed_value_symbolic"] == "1 + 2*sqrt(2)"
        assert first["observed_value_decimal12"] == "3.828427124746"
        assert first["pass"] == "True" and first["unique"] == "True"

    def test_json(self, report):
        doc = json.loads(report.to_json())
        assert doc["pass"] is True
        assert doc["tree_floor"] == {"n_max": 6, "pass": True}
        assert {r["class"] for r in doc["rows"]} == {"all", "case1", "case2", "case3"}

    def test_failure_is_reported(self, report):
        row = report.rows[0]
        row_copy = type(row)(**{**row.__dict__, "observed": row.observed + 1})
        assert not row_copy.passed
