"""Acceptance suite: one test per release criterion, exact comparisons only.

Criterion 2 is expected to fail in its connected-extremal half: the stated
prediction floor((n-4)p/2) for the connected maximum is refuted by the
exhaustive search itself (twin dominating vertices over independent spokes
give connected hosts with 2p-3 edges and no two-pendant tree).  The criterion
is asserted as stated and reports the computed truth; see the failure detail.
"""

from __future__ import annotations

from trt.acceptance import (
    criterion_1_oracle_formula_equivalence,
    criterion_2_structural_sweeps,
    criterion_3_extremal_witnesses,
    criterion_4_ramsey_witnesses,
    criterion_5_upper_bound_pinch,
    criterion_6_spot_values,
    criterion_7_arrowing_sanity,
    criterion_8_frobenius,
    criterion_9_formula_consistency,
)


def _report(result):
    print(result.line())
    assert result.passed, result.line()


def test_criterion_1_oracle_formula_equivalence():
    _report(criterion_1_oracle_formula_equivalence())


def test_criterion_2_structural_sweeps():
    _report(criterion_2_structural_sweeps())


def test_criterion_3_extremal_witnesses():
    _report(criterion_3_extremal_witnesses())


def test_criterion_4_ramsey_witnesses():
    _report(criterion_4_ramsey_witnesses())


def test_criterion_5_upper_bound_pinch():
    _report(criterion_5_upper_bound_pinch())


def test_criterion_6_spot_values():
    _report(criterion_6_spot_values())


def test_criterion_7_arrowing_sanity():
    _report(criterion_7_arrowing_sanity())


def test_criterion_8_frobenius():
    _report(criterion_8_frobenius())


def test_criterion_9_formula_consistency():
    _report(criterion_9_formula_consistency())
