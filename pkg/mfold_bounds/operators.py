"""
mfold_bounds.operators - Ruscheweyh derivative on normalized functions

R^δ scales a_k by Γ(δ+k)/(Γ(k)Γ(δ+1)) = C(δ+k-1, δ). On m-fold functions the
symmetric index k of a_{mk+1} gets C(δ+k, δ). Both are exact integers for
δ in N_0 and only become floats when applied.
"""

# stdlib
from contextlib import contextmanager
from dataclasses import dataclass

# library
import numpy as np
from scipy.special import comb

# module
from mfold_bounds.exceptions import ParameterError
from mfold_bounds.series import MFoldFn, TruncatedSeries, check_normalized


# (delta, k, mfold) -> integer offset. Only set through inject_fault
_FAULTS: dict[tuple[int, int, bool], int] = {}


@dataclass(frozen=True)
class RuscheweyhFactor:
    delta: int
    k: int
    value: int
    mfold: bool = False


def _check_args(delta: int, k: int, min_k: int):
    for name, val, low in (("delta", delta, 0), ("k", k, min_k)):
        if isinstance(val, bool) or int(val) != val or val < low:
            raise ParameterError(f"{name} must be an integer >= {low}, not {val}", name)


def omega(delta: int, k: int) -> RuscheweyhFactor:
    """1-fold factor C(δ+k-1, δ)"""
    _check_args(delta, k, 1)
    delta, k = int(delta), int(k)
    value = int(comb(delta + k - 1, delta, exact=True))
    value += _FAULTS.get((delta, k, False), 0)
    return RuscheweyhFactor(delta, k, value)


def omega_mfold(delta: int, k: int) -> RuscheweyhFactor:
    """m-fold factor C(δ+k, δ) for the symmetric index k"""
    _check_args(delta, k, 0)
    delta, k = int(delta), int(k)
    value = int(comb(delta + k, delta, exact=True))
    value += _FAULTS.get((delta, k, True), 0)
    return RuscheweyhFactor(delta, k, value, mfold=True)


def ruscheweyh(f: TruncatedSeries, delta: int) -> TruncatedSeries:
    """R^δ f for a normalized series f"""
    check_normalized(f)
    factors = [0] + [omega(delta, k).value for k in range(1, f.order + 1)]
    return TruncatedSeries(f.coeffs * np.array(factors, dtype=float))


def ruscheweyh_mfold(f: MFoldFn, delta: int) -> MFoldFn:
    """m-fold R^δ f, scaling a_{mk+1} by C(δ+k, δ)"""
    factors = [omega_mfold(delta, k).value for k in range(1, f.K + 1)]
    return MFoldFn(f.m, [a * factor for a, factor in zip(f.coeffs, factors)])


@contextmanager
def inject_fault(delta: int = 0, k: int = 1, offset: int = 1, mfold: bool = True):
    """Temporarily perturbs one factor so the verification suites can be shown to fail"""
    key = (delta, k, mfold)
    _FAULTS[key] = offset
    try:
        yield
    finally:
        _FAULTS.pop(key, None)
