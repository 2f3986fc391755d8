"""
tests/test_exemplars.py - Test the example function catalog
"""

# library
import numpy as np
import pytest

# module
from mfold_bounds import exemplars, series
from mfold_bounds.exceptions import ParameterError


def test_one_fold_pairs():
    """Tests that each 1-fold exemplar composes with its inverse"""
    for name in ("koebe-like", "log", "atanh"):
        pair = exemplars.build_exemplar(name, 1, 4)
        assert pair.composition_residual <= 1e-12
        assert pair.pairing_verified
        assert pair.inversion_deviation <= 1e-10


def test_mfold_pairs():
    """Tests every catalog pair for m = 1, 2, 3 at order 4m+1"""
    for m in (1, 2, 3):
        pairs = exemplars.build_catalog(m, 4)
        assert [pair.name for pair in pairs] == ["koebe-like", "log", "atanh"]
        for pair in pairs:
            assert pair.forward.order == 4 * m + 1
            assert pair.composition_residual <= 1e-10
            assert series.off_support(pair.forward.embed(), m) == 0


def test_koebe_like_coefficients():
    """Tests the symmetrized z/(1-z) coefficients"""
    pair = exemplars.build_exemplar("koebe-like", 2, 3)
    assert np.allclose(pair.forward.coeffs, [1 / 2, 3 / 8, 5 / 16])
    # (w²/(1+w²))^{1/2} = w (1+w²)^{-1/2}
    assert np.allclose(pair.inverse.coeffs, [-1 / 2, 3 / 8, -5 / 16])


def test_build_exemplar_errors():
    """Tests name, symmetry and truncation checks"""
    for args in (("koebe", 1, 4), ("log", 0, 4), ("log", 1, 2)):
        with pytest.raises(ParameterError):
            exemplars.build_exemplar(*args)


def test_pairing_residual():
    """Tests the two-way composition residual"""
    identity = series.variable(6)
    assert exemplars.pairing_residual(identity, identity) == 0
    assert exemplars.pairing_residual(exemplars.koebe_like(6), exemplars.mobius_inverse(6)) < 1e-12
    assert exemplars.pairing_residual(exemplars.koebe_like(6), exemplars.exp_inverse(6)) > 0.1


def test_audit_1fold_pairings():
    """Tests that the audit finds the true inverse of each listed function"""
    rows = exemplars.audit_1fold_pairings()
    assert len(rows) == 9
    found = {(row.forward, row.inverse) for row in rows if row.inverts}
    assert found == {
        ("z/(1-z)", "w/(1+w)"),
        ("-log(1-z)", "(e^w-1)/e^w"),
        ("log((1+z)/(1-z))/2", "(e^2w-1)/(e^2w+1)"),
    }
    listed = {(row.forward, row.inverse): row for row in rows if row.listed}
    assert not listed[("z/(1-z)", "(e^w-1)/e^w")].inverts
    assert not listed[("-log(1-z)", "w/(1+w)")].inverts
    assert listed[("log((1+z)/(1-z))/2", "(e^2w-1)/(e^2w+1)")].inverts
    assert rows[0].as_dict()["listed"] is True
