"""
普查与验收扫描测试
"""

import pytest

from groups.abelian import group
from sweep import (
    build_tasks,
    check_instance,
    count_involutions,
    factorizations,
    format_summary,
    iter_connection_sets,
    iter_group_specs,
    run_prop_sweep,
    run_sweep,
)
from sweep.harness import FAIL, PASS, SweepSummary


def test_factorizations():
    assert factorizations(12) == [(12,), (6, 2), (4, 3), (3, 2, 2)]
    assert factorizations(7) == [(7,)]
    assert factorizations(8) == [(8,), (4, 2), (2, 2, 2)]


def test_iter_group_specs():
    assert [str(G) for G in iter_group_specs(4)] == ["Z2", "Z3", "Z4", "Z2xZ2"]


def test_iter_connection_sets_single_involution():
    sets = list(iter_connection_sets(group(6), "1"))
    assert sets == [[(1,), (5,), (2,), (4,), (3,)]]


def test_iter_connection_sets_three_involutions():
    sets = list(iter_connection_sets(group(2, 2, 3), "3"))
    assert [(0, 0, 1), (0, 0, 2), (0, 1, 0), (1, 0, 0), (1, 1, 0)] in sets
    for S in sets:
        assert count_involutions(group(2, 2, 3), S) == 3


def test_iter_connection_sets_rejects_unknown_choice():
    with pytest.raises(ValueError):
        list(iter_connection_sets(group(6), "2"))


def test_build_tasks_numbering():
    group_count, tasks = build_tasks(8, "all")
    assert group_count == len(list(iter_group_specs(8)))
    assert [index for index, _, _ in tasks] == list(range(len(tasks)))


def test_check_instance(k6_instance, no_code_instance):
    G, S = k6_instance
    row = check_instance(G.factors, S)
    assert row["status"] == PASS
    assert row["admits"] is True
    assert row["case"] == "II"
    assert row["naive_checked"]

    G, S = no_code_instance
    row = check_instance(G.factors, S)
    assert row["status"] == PASS
    assert row["admits"] is False
    assert row["oracle_admits"] is False


def test_check_instance_inner_involution(lexicographic_instance, inner_involution_instance):
    for G, S in (lexicographic_instance, inner_involution_instance):
        row = check_instance(G.factors, S)
        assert row["status"] == PASS, row["detail"]
        assert row["admits"] is True
        assert row["oracle_admits"] is True
        assert row["enumeration_checked"]


def test_check_instance_reports_failures_as_rows():
    row = check_instance((6,), [(1,), (5,), (2,), (3,)])
    assert row["status"] == FAIL
    assert row["detail"].startswith("NotQuintic")


def test_prop_sweep_small_range():
    summary = SweepSummary(max_order=0, involutions="all")
    run_prop_sweep(summary, [6], 4)
    assert summary.passed, summary.counterexamples
    assert summary.prop_checks > 0
    assert summary.phi_checks > 0
    # Γ(6,2,0) 退化
    assert summary.phi_skipped > 0
    lines = format_summary(summary).splitlines()
    assert f"family codes skipped: {summary.prop_skipped}" in lines
    assert f"phi skipped: {summary.phi_skipped}" in lines


def test_small_sweep_passes():
    summary, rows = run_sweep(12, "all", workers=1, m_values=[6], max_l=2)
    assert summary.passed, summary.counterexamples
    assert summary.instance_count == len(rows)
    assert summary.admitting_count > 0
    assert summary.enumeration_checked > 0
    assert format_summary(summary).splitlines()[0] == "PASS"


def test_sweep_is_deterministic():
    first, rows_first = run_sweep(10, "1", workers=1, m_values=[6], max_l=1)
    second, rows_second = run_sweep(10, "1", workers=1, m_values=[6], max_l=1)
    assert format_summary(first) == format_summary(second)
    assert rows_first == rows_second


def test_thread_pool_matches_serial(monkeypatch):
    from config.settings import settings
    monkeypatch.setattr(settings, "SWEEP_EXECUTOR", "thread")
    monkeypatch.setattr(settings, "SWEEP_CHUNK_SIZE", 3)
    serial, rows_serial = run_sweep(12, "all", workers=1, m_values=[6], max_l=1)
    threaded, rows_threaded = run_sweep(12, "all", workers=3, m_values=[6], max_l=1)
    assert rows_serial == rows_threaded
    assert format_summary(serial) == format_summary(threaded)


@pytest.mark.slow
def test_full_acceptance_sweep():
    summary, _ = run_sweep(48)
    assert summary.passed, summary.counterexamples
