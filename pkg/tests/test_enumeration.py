import pytest

from ybekit.catalog import CatalogRecord
from ybekit.enumeration import (
    SearchStats,
    analyze,
    canonical_root_rows,
    classify_primitive,
    enumerate_canonical_tables,
    fast_enumerate,
    oracle_enumerate,
)
from ybekit.errors import BudgetExceededError
from ybekit.solutions import Solution, canonical_form, validate

# frozen regression counts, established by the exhaustive oracle (n <= 4)
# and by verified enumerator runs (n >= 5)
EXPECTED_CLASS_COUNTS = {1: 1, 2: 2, 3: 5, 4: 23, 5: 88, 6: 595}


def test_oracle_counts():
    assert len(oracle_enumerate(1)) == 1
    assert len(oracle_enumerate(2)) == 2
    assert len(oracle_enumerate(3)) == 5


def test_oracle_refuses_large_n():
    with pytest.raises(ValueError):
        oracle_enumerate(5)


def test_oracle_equivalence_small():
    for n in (1, 2, 3):
        fast = {r.sigma for r in fast_enumerate(n)}
        oracle = {r.sigma for r in oracle_enumerate(n)}
        assert fast == oracle


def test_fast_counts():
    for n, count in EXPECTED_CLASS_COUNTS.items():
        if n <= 5:
            assert len(fast_enumerate(n)) == count


def test_n1_is_the_point_solution():
    recs = fast_enumerate(1)
    assert len(recs) == 1
    assert recs[0].sigma == ((0,),)
    assert recs[0].primitive and recs[0].indecomposable
    assert recs[0].mpl == 0


def test_enumerate_guards():
    with pytest.raises(ValueError):
        enumerate_canonical_tables(0)
    with pytest.raises(BudgetExceededError):
        enumerate_canonical_tables(8)
    with pytest.raises(BudgetExceededError):
        enumerate_canonical_tables(9, allow_large=True)


def test_time_budget_is_explicit_error():
    with pytest.raises(BudgetExceededError):
        enumerate_canonical_tables(6, time_budget_secs=1e-9, use_cache=False)


def test_determinism_across_threads():
    one = enumerate_canonical_tables(4, threads=1, use_cache=False)
    two = enumerate_canonical_tables(4, threads=2, use_cache=False)
    three = enumerate_canonical_tables(4, threads=3, use_cache=False)
    assert one == two == three


def test_all_tables_are_canonical_and_valid():
    for n in (2, 3, 4, 5):
        for table in enumerate_canonical_tables(n):
            s = Solution(n, table)
            assert validate(s).passed
            assert canonical_form(s).sigma == table


def test_stats_reported():
    stats = SearchStats()
    enumerate_canonical_tables(4, use_cache=False, stats=stats)
    assert stats.accepted == 23
    assert stats.invalid_leaves == 0
    assert stats.nodes >= stats.leaves


def test_root_rows_are_pinned_minimal():
    roots = canonical_root_rows(4)
    assert 0 in roots  # the identity row
    assert len(roots) < 24


def test_record_flags_reproducible_by_analyze():
    for rec in fast_enumerate(4):
        again = analyze(Solution(rec.n, rec.sigma))
        assert again.sigma == rec.sigma
        assert again.indecomposable == rec.indecomposable
        assert again.irretractable == rec.irretractable
        assert again.primitive == rec.primitive
        assert again.mpl == rec.mpl
        assert again.group_order == rec.group_order
        assert again.brace_trivial == rec.brace_trivial
        assert again.invariants_ok is True


def test_analyze_examples():
    rec = analyze(Solution.permutation_solution((1, 2, 3, 4, 0)))
    assert rec.indecomposable and rec.primitive and rec.brace_trivial
    assert not rec.irretractable
    assert rec.mpl == 1 and rec.group_order == 5

    rec = analyze(Solution.trivial(3))
    assert rec.valid and not rec.indecomposable and not rec.primitive
    assert rec.mpl == 1 and rec.group_order == 1

    rec = analyze(Solution.trivial(1))
    assert rec.indecomposable and rec.primitive
    assert rec.mpl == 0 and rec.group_order == 1

    rec = analyze(Solution.from_rows([[0, 1], [1, 0]]))
    assert not rec.valid
    assert rec.indecomposable is None and rec.group_order is None


def test_classify_small():
    report = classify_primitive(5)
    assert report.counts == {2: 1, 3: 1, 4: 0, 5: 1}
    rows = report.csv_rows()
    assert rows[0] == ("n", "primitive_classes", "prime_size")
    assert (4, 0, False) in rows

    degenerate = classify_primitive(1)
    assert degenerate.counts == {}


def test_classify_representatives_are_cycle_solutions():
    report = classify_primitive(3)
    for n, recs in report.primitive_by_n.items():
        if recs:
            expected = canonical_form(
                Solution.permutation_solution(tuple(range(1, n)) + (0,))
            ).sigma
            assert recs[0].sigma == expected


def test_retract_closure_small():
    catalogs = {n: {r.sigma for r in fast_enumerate(n)} for n in (1, 2, 3, 4)}
    for n in (2, 3, 4):
        for rec in fast_enumerate(n):
            from ybekit.solutions import retract

            r = retract(Solution(rec.n, rec.sigma))
            assert canonical_form(r).sigma in catalogs[r.n]


def test_record_consistency_guard():
    with pytest.raises(AssertionError):
        CatalogRecord(
            n=2,
            sigma=((0, 1), (0, 1)),
            valid=True,
            indecomposable=False,
            primitive=True,
        )
