"""
tests/test_operators.py - Test the Ruscheweyh derivative
"""

# library
import numpy as np
import pytest

# module
from mfold_bounds import operators, series
from mfold_bounds.exceptions import ParameterError
from mfold_bounds.series import MFoldFn, TruncatedSeries


def test_omega():
    """Tests the 1-fold binomial factors"""
    for k in range(1, 10):
        assert operators.omega(0, k).value == 1
        assert operators.omega(1, k).value == k
    assert operators.omega(2, 3).value == 6
    for delta, k in ((-1, 1), (0, 0), (1.5, 2)):
        with pytest.raises(ParameterError):
            operators.omega(delta, k)


def test_omega_mfold():
    """Tests the m-fold factors used in the D expansion"""
    for delta in range(6):
        assert operators.omega_mfold(delta, 0).value == 1
        assert operators.omega_mfold(delta, 1).value == delta + 1
        assert operators.omega_mfold(delta, 2).value == (delta + 1) * (delta + 2) // 2
    assert operators.omega_mfold(1, 2).mfold


def test_ruscheweyh():
    """Tests R^δ on full normalized series"""
    f = TruncatedSeries([0, 1, 0.5 - 1j, 2, 0.25j])
    assert operators.ruscheweyh(f, 0).deviation(f) == 0
    z_derivative = series.derivative(f).shift(1)
    assert operators.ruscheweyh(f, 1).deviation(z_derivative) < 1e-15
    assert np.allclose(operators.ruscheweyh(TruncatedSeries([0, 1, 1]), 2).coeffs, [0, 1, 3])


def test_ruscheweyh_linear():
    """Tests that R^δ acts termwise and keeps the normalization"""
    f = TruncatedSeries([0, 1, 1j, 2])
    g = TruncatedSeries([0, 1, -3, 0.5])
    for delta in range(4):
        total = operators.ruscheweyh(f, delta) + operators.ruscheweyh(g, delta)
        # f + g is not normalized, so compare on the higher coefficients
        direct = operators.omega(delta, 2).value * (f[2] + g[2])
        assert total[2] == direct
        result = operators.ruscheweyh(f, delta)
        assert result[0] == 0 and result[1] == 1


def test_ruscheweyh_mfold():
    """Tests the m-fold operator and its m = 1 agreement with the 1-fold one"""
    f = MFoldFn(2, [1 + 1j, -0.5, 0.25])
    assert operators.ruscheweyh_mfold(f, 0) == f
    scaled = operators.ruscheweyh_mfold(f, 3)
    assert scaled.coeffs == (4 * (1 + 1j), 10 * -0.5, 20 * 0.25)
    g = MFoldFn(1, [0.3, -1j, 2, 0.5])
    for delta in range(5):
        one_fold = operators.ruscheweyh(g.embed(), delta)
        assert one_fold.deviation(operators.ruscheweyh_mfold(g, delta).embed()) == 0


def test_inject_fault():
    """Tests that an injected offset applies only inside the context"""
    with operators.inject_fault(delta=0, k=1, offset=1):
        assert operators.omega_mfold(0, 1).value == 2
        assert operators.omega(0, 1).value == 1
    assert operators.omega_mfold(0, 1).value == 1
