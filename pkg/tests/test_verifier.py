from fractions import Fraction as F

import pytest

from src.tetragap.errors import DegeneracyError, PreconditionError
from src.tetragap.fixtures import EXAMPLES, run_example
from src.tetragap.special import REGIME_REGULAR
from src.tetragap.verifier import (construct_report, equilateral_report, example_report,
                                   gap_report, pech_report, planar_report)


def test_construct_report(example1):
    report = construct_report(example1)
    assert report.ok
    assert report.values['w'].x3 == F(49280, 2309)
    assert report.values['r_crit^2'] == F(252444487680, 158802336)


def test_gap_report(example1):
    report = gap_report(example1)
    assert report.ok
    assert report.values['gap'] == F(198873308525, 145467)
    assert report.values['equality'] is False
    assert not report.notes


def test_gap_report_equality_case(example2):
    report = gap_report(example2)
    assert report.ok
    assert report.values['equality'] is True
    assert report.notes


@pytest.mark.parametrize("n", sorted(EXAMPLES))
def test_examples_match_published_values(n):
    result = run_example(n)
    assert result.ok, [row.name for row in result.mismatches]
    assert example_report(result).ok


def test_unknown_example():
    with pytest.raises(PreconditionError):
        run_example(4)


def test_planar_report():
    report = planar_report(F(2, 5))
    assert report.values['r_crit^2'] == F(6, 25)
    assert report.values['apex height at r = p(1-p)'] == F(12, 19)
    assert report.checks['tangent lines parallel at r_crit']
    assert report.ok


def test_equilateral_report():
    report = equilateral_report(F(24), F(1))
    assert report.ok
    assert report.values['regime'] == REGIME_REGULAR


def test_equilateral_report_supercritical():
    with pytest.raises(DegeneracyError):
        equilateral_report(F(4), F(3, 5))


def test_pech_report():
    report = pech_report(20, 42)
    assert report.ok
    assert report.values['random triangles'] == 20
    assert report.values['Heronian triangles'] == 24
    assert not report.notes


@pytest.mark.slow
def test_pech_report_acceptance():
    assert pech_report(100, 42).ok
