"""Verification scenarios: positive runs, negative controls, caps, reports."""

import pytest

from stackzeta import (
    DomainError,
    ResourceLimitError,
    verify_axioms,
    verify_distinct_sum,
    verify_grassmannian,
    verify_zeta_closed_form,
)

REPORT_KEYS = {"scenario", "params", "verdict", "witness", "ms"}


def test_distinct_sum_scenario():
    report = verify_distinct_sum(2, 6)
    assert report.passed
    assert report.witness is None
    assert report.verdict == "pass"
    assert set(report.to_json()) == REPORT_KEYS


def test_distinct_sum_negative_control():
    report = verify_distinct_sum(2, 4, perturb=True)
    assert not report.passed
    assert report.verdict == "fail"
    assert report.witness


def test_distinct_sum_guards():
    with pytest.raises(DomainError):
        verify_distinct_sum(0, 4)
    with pytest.raises(ResourceLimitError):
        verify_distinct_sum(4, 4)
    with pytest.raises(ResourceLimitError):
        verify_distinct_sum(2, 11)


def test_zeta_closed_form_scenario():
    for m, n in ((0, 1), (1, 1), (2, 3)):
        report = verify_zeta_closed_form(m, n, 4)
        assert report.passed, report.witness
        assert set(report.to_json()) == REPORT_KEYS


def test_zeta_closed_form_guards():
    with pytest.raises(DomainError):
        verify_zeta_closed_form(-1, 1, 4)
    with pytest.raises(DomainError):
        verify_zeta_closed_form(0, 0, 4)
    with pytest.raises(ResourceLimitError):
        verify_zeta_closed_form(0, 1, 9)


def test_grassmannian_scenario():
    report = verify_grassmannian(4, 4)
    assert report.passed, report.witness


def test_grassmannian_guards():
    with pytest.raises(DomainError):
        verify_grassmannian(-1, 3)
    with pytest.raises(ResourceLimitError):
        verify_grassmannian(9, 3)
    with pytest.raises(ResourceLimitError):
        verify_grassmannian(3, 7)


def test_axiom_scenario_is_deterministic():
    first = verify_axioms("motivic", 2, 4, 123)
    second = verify_axioms("motivic", 2, 4, 123)
    assert first.passed and second.passed
    assert first.params == second.params
    assert first.to_json()["verdict"] == second.to_json()["verdict"]


def test_axiom_scenario_hd_ring():
    report = verify_axioms("hd", 2, 4, 5)
    assert report.passed, report.witness


def test_axiom_negative_control():
    report = verify_axioms("motivic", 2, 3, 0, perturbed=True)
    assert not report.passed
    assert report.witness


def test_axiom_guards():
    with pytest.raises(DomainError):
        verify_axioms("other", 2, 4, 0)
    with pytest.raises(DomainError):
        verify_axioms("motivic", 1, 4, 0)
    with pytest.raises(ResourceLimitError):
        verify_axioms("motivic", 6, 4, 0)
    with pytest.raises(ResourceLimitError):
        verify_axioms("motivic", 2, 51, 0)


def test_report_rendering():
    report = verify_distinct_sum(1, 3)
    text = str(report)
    assert "distinct-sum" in text
    assert "pass" in text
    assert report.ms >= 0
