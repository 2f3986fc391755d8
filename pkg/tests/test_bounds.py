"""
tests/test_bounds.py - Test closed-form bounds, corollaries and reductions
"""

# stdlib
import math

# library
import numpy as np
import pytest

# module
from mfold_bounds import bounds
from mfold_bounds.exceptions import ParameterError
from mfold_bounds.structs import ClassParams
from mfold_bounds.suites import random_params


def test_phi():
    """Tests the Φ aggregates"""
    values = bounds.phi(0, 0, 4)
    assert (values.phi1, values.phi2) == (1, 1)
    values = bounds.phi(1, 0, 1)
    assert (values.phi1, values.phi2) == (3, 4)
    for lam in np.linspace(0, 3, 7):
        for gamma in np.linspace(0, 1, 5):
            s = lam + gamma + 5 * lam * gamma
            values = bounds.phi(lam, gamma, 1)
            assert values.phi1 == pytest.approx(1 + 2 * s)
            assert values.phi2 == pytest.approx((1 + s) ** 2)
            assert values.phi1 >= 1 and values.phi2 >= 1


def test_theorem1_examples():
    """Tests class Q bound evaluations"""
    report = bounds.theorem1_bounds(ClassParams.q(1.0, lam=1))
    assert report.bound_am1 == pytest.approx(math.sqrt(2 / 3), rel=1e-12)
    assert report.source == "theorem 1"
    # α = 1 collapses to the square-root form
    params = ClassParams.q(1.0, tau=0.5 + 2j, lam=0.3, gamma=0.4, delta=2, m=3)
    values = bounds.phi(0.3, 0.4, 3)
    expected = 2 * math.sqrt(2 * abs(params.tau) / (3 * 4 * 4 * values.phi1))
    assert bounds.theorem1_bounds(params).bound_am1 == pytest.approx(expected, rel=1e-12)
    with pytest.raises(ParameterError):
        bounds.theorem1_bounds(ClassParams.theta())


def test_theorem1_degenerate():
    """Tests that a vanishing complex denominator is reported as unbounded"""
    # τα(δ+2)(m+1)Φ₁ + 2(1-α)(δ+1)Φ₂ = -0.5·0.5·2·2 + 2·0.5 = 0
    params = ClassParams.q(0.5, tau=-0.5)
    report = bounds.theorem1_bounds(params)
    assert math.isinf(report.bound_am1)
    assert bounds.NOTES["degenerate"] in report.notes
    assert math.isfinite(report.bound_a2m1)


def test_theorem2_examples():
    """Tests class Θ bound evaluations and branch tags"""
    report = bounds.theorem2_bounds(ClassParams.theta(lam=1))
    assert report.bound_am1 == pytest.approx(math.sqrt(2 / 3), rel=1e-12)
    assert report.bound_a2m1 == pytest.approx(2 / 3, rel=1e-12)
    assert report.active_branch == bounds.SQRT
    assert report.alt_values["branch_linear"] == pytest.approx(1)
    assert bounds.NOTES["sqrt_branch"] in report.notes
    near_one = bounds.theorem2_bounds(ClassParams.theta(1 - 1e-9, lam=1))
    assert near_one.bound_am1 < 1e-8 and near_one.bound_a2m1 < 1e-8
    assert near_one.active_branch == bounds.LINEAR


def test_active_branch_tie():
    """Tests that equal branches are tagged as a tie"""
    assert bounds.active_branch(0.5, 0.5) == bounds.TIE
    assert bounds.active_branch(0.4, 0.5) == bounds.LINEAR
    assert bounds.active_branch(0.6, 0.5) == bounds.SQRT
    # Corollary 9 branches meet at 1 - β = 2/3
    report = bounds.corollary_bounds(9, ClassParams.theta(1 / 3, lam=1))
    assert report.active_branch == bounds.TIE


def test_bridge():
    """Tests that Q at α = 1 equals the Θ square-root branch at β = 0"""
    rng = np.random.default_rng(21)
    for _ in range(200):
        params = random_params(rng, "Q").replace(alpha=1.0)
        theta = params.replace(kind="Theta", alpha=None, beta=0.0)
        first = bounds.theorem1_bounds(params).bound_am1
        second = bounds.theorem2_bounds(theta).alt_values["branch_sqrt"]
        assert first == pytest.approx(second, rel=1e-12)


def test_monotonic():
    """Tests that Θ bounds fall with β and do not grow with δ"""
    rng = np.random.default_rng(22)
    for _ in range(30):
        params = random_params(rng)
        previous = None
        for beta in np.linspace(0, 0.95, 10):
            report = bounds.theorem2_bounds(params.replace(beta=float(beta)))
            assert report.bound_am1 > 0 and math.isfinite(report.bound_am1)
            if previous:
                assert report.bound_am1 < previous.bound_am1
                assert report.bound_a2m1 < previous.bound_a2m1
            previous = report
        values = [bounds.theorem2_bounds(params.replace(delta=d)).bound_am1 for d in range(5)]
        assert all(b <= a for a, b in zip(values, values[1:]))


def test_corollary_examples():
    """Tests corollary formulas at their stated substitutions"""
    for beta in (0, 0.3, 0.8):
        report = bounds.corollary_bounds(9, ClassParams.theta(beta, lam=1))
        assert report.bound_am1 == pytest.approx(min(1 - beta, math.sqrt(2 * (1 - beta) / 3)))
        assert report.bound_a2m1 == pytest.approx(2 * (1 - beta) / 3)
    report = bounds.corollary_bounds(4, ClassParams.theta(0.2, lam=1, m=3))
    linear, root = 2 * 0.8 / 4, 2 * math.sqrt(0.8 / (4 * 7))
    assert report.bound_am1 == pytest.approx(min(linear, root))
    report = bounds.corollary_bounds(8, ClassParams.theta(0.1, lam=2))
    assert report.bound_am1 == pytest.approx(min(2 * 0.9 / 3, math.sqrt(2 * 0.9 / 5)))
    for lam in (0, 0.5, 2):
        for m in (1, 4):
            params = ClassParams.theta(0.4, lam=lam, m=m)
            assert bounds.corollary_bounds(3, params).bound_am1 == bounds.corollary_bounds(2, params).bound_am1


def test_corollary_substitution_checked():
    """Tests that a corollary refuses parameters outside its substitution"""
    with pytest.raises(ParameterError):
        bounds.corollary_bounds(9, ClassParams.theta(0.2))
    with pytest.raises(ParameterError):
        bounds.corollary_bounds(5, ClassParams.theta())
    with pytest.raises(ParameterError):
        bounds.corollary_entry(10)


def test_corollary_entry():
    """Tests the published substitution of each corollary"""
    entry = bounds.corollary_entry(5)
    assert entry.kind == "Q" and entry.fixed == {"m": 1} and "alpha" in entry.free
    assert bounds.corollary_entry(9).free == ("beta",)
    assert {bounds.corollary_entry(i).parent for i in (2, 3, 4)} == {"corollary 1"}
    assert {bounds.corollary_entry(i).parent for i in (7, 8, 9)} == {"corollary 6"}


def test_reduction_matrix():
    """Tests that every corollary matches its theorem and parent"""
    rows = bounds.reduction_matrix(100, seed=5)
    assert [row.number for row in rows] == list(range(1, 10))
    for row in rows:
        assert row.theorem_deviation <= 1e-12
        assert row.parent_deviation <= 1e-12
        assert row.passed


def test_min_branch_report():
    """Tests active branch regions over a β grid"""
    rows = bounds.min_branch_report({"beta": [0.0, 0.999]}, lam=1.0)
    assert rows[0].active == bounds.SQRT
    assert rows[0].linear == pytest.approx(1) and rows[0].root == pytest.approx(math.sqrt(2 / 3))
    assert rows[1].active == bounds.LINEAR
    assert rows[1].ratio < 1
    assert rows[0].as_row()["active_branch"] == "sqrt"
