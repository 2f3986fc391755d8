"""
mfold_bounds.functional - Class-defining functional D(z)

D(z) = 1 + (1/τ)[(1-λ)(1-γ) R/z + (λ(γ+1)+γ) R' + λγ(z R'' - 2) - 1] with
R = R^δ f. The inverse side evaluates the same expression on the m-fold
inverse g, divided by w rather than z.
"""

# pylint: disable=invalid-name

# stdlib
from dataclasses import dataclass, field
from typing import Iterable

# library
import numpy as np
from scipy.special import comb

# module
from mfold_bounds.app_config import ANGLES_PER_SECTOR, DEFAULT_RADII
from mfold_bounds.exceptions import DegenerateError, ParameterError, TruncationError
from mfold_bounds.inversion import inverse_mfold
from mfold_bounds.operators import ruscheweyh_mfold
from mfold_bounds.series import MFoldFn, TruncatedSeries, derivative
from mfold_bounds.structs import ClassParams
from mfold_bounds.workers import fan_out


SIDES = ("forward", "inverse")
# |D| below this is rejected instead of given an argument
VANISHING_TOL = 1e-12

INVERSE_NOTE = "inverse-side functional divides R^δ g(w) by w"


@dataclass(frozen=True)
class FunctionalSeries:
    series: TruncatedSeries
    side: str
    m: int
    notes: tuple[str, ...] = ()

    @property
    def constant(self) -> complex:
        return self.series[0]

    def coefficient(self, k: int) -> complex:
        """Coefficient of z^{mk}"""
        return self.series[self.m * k]


def _check(f: MFoldFn, params: ClassParams):
    if f.K < 2:
        raise TruncationError(f"Functional needs a_{{m+1}} and a_{{2m+1}}, got index {f.K}")
    if f.m != params.m:
        raise ParameterError(f"Function is {f.m}-fold but params have m={params.m}", "m")


def _functional(f: MFoldFn, params: ClassParams) -> TruncatedSeries:
    lam, gamma = params.lam, params.gamma
    R = ruscheweyh_mfold(f, params.delta).embed()
    first = derivative(R)
    second = derivative(first).shift(1)
    body = (
        (1 - lam) * (1 - gamma) * R.unshift(1)
        + (lam * (gamma + 1) + gamma) * first
        + lam * gamma * (second - 2)
        - 1
    )
    return 1 + body * (1 / params.tau)


def functional_series(f: MFoldFn, params: ClassParams, side: str = "forward") -> FunctionalSeries:
    """D(z) for f, or D(w) for its inverse, as a series of order mK"""
    if side not in SIDES:
        raise ParameterError(f"'{side}' is not a side in {SIDES}", "side")
    _check(f, params)
    if side == "forward":
        return FunctionalSeries(_functional(f, params), side, f.m)
    g = inverse_mfold(f)
    return FunctionalSeries(_functional(g, params), side, f.m, (INVERSE_NOTE,))


def coefficient_weight(params: ClassParams, k: int) -> complex:
    """Multiplier of a_{mk+1} in the z^{mk} coefficient of D"""
    if k < 1:
        raise ParameterError(f"k must be at least 1, not {k}", "k")
    lam, gamma, index = params.lam, params.gamma, params.m * k + 1
    bracket = (
        (1 - lam) * (1 - gamma)
        + (lam * (gamma + 1) + gamma) * index
        + lam * gamma * index * (index - 1)
    )
    return comb(params.delta + k, params.delta, exact=True) * bracket / params.tau


@dataclass(frozen=True)
class ClosedCoeffs:
    """z^m and z^{2m} coefficients of D on both sides"""

    forward: tuple[complex, complex]
    inverse: tuple[complex, complex]


def closed_coeffs(params: ClassParams, am1: complex, a2m1: complex) -> ClosedCoeffs:
    """Closed-form D coefficients from a_{m+1} and a_{2m+1}"""
    first, second = coefficient_weight(params, 1), coefficient_weight(params, 2)
    inverse_a2m1 = (params.m + 1) * am1**2 - a2m1
    return ClosedCoeffs(
        (first * am1, second * a2m1),
        (-first * am1, second * inverse_a2m1),
    )


# Membership


@dataclass
class MarginRow:
    radius: float
    forward: float
    inverse: float


@dataclass
class MarginReport:
    params: ClassParams
    rows: list[MarginRow]
    notes: list[str] = field(default_factory=list)

    @property
    def forward(self) -> float:
        return min(row.forward for row in self.rows)

    @property
    def inverse(self) -> float:
        return min(row.inverse for row in self.rows)


def sector_points(radius: float, m: int, angles: int) -> np.ndarray:
    """angles points on |z| = radius covering [0, 2π/m)"""
    theta = 2 * np.pi * np.arange(angles) / (m * angles)
    return radius * np.exp(1j * theta)


def _margin(values: np.ndarray, params: ClassParams) -> float:
    if np.any(np.abs(values) < VANISHING_TOL):
        raise DegenerateError("D vanishes at a sample point")
    if params.kind == "Q":
        return float(params.alpha * np.pi / 2 - np.max(np.abs(np.angle(values))))
    return float(np.min(values.real) - params.beta)


def membership_margin(
    f: MFoldFn,
    params: ClassParams,
    radii: Iterable[float] = DEFAULT_RADII,
    angles: int = ANGLES_PER_SECTOR,
) -> MarginReport:
    """Sampled class-condition margin of the truncated D on both sides

    Q: απ/2 - max|arg D|; Θ: min Re D - β. Negative means a sample violates
    the condition at this truncation
    """
    radii = [float(r) for r in radii]
    if not radii:
        raise ParameterError("Could not find any sample radii", "radius")
    for radius in radii:
        if not 0 < radius < 1:
            raise ParameterError(f"Radius {radius} is outside (0, 1)", "radius")
    if angles < 1:
        raise ParameterError("Need at least one angle per sector", "angles")
    forward = functional_series(f, params, "forward")
    inverse = functional_series(f, params, "inverse")

    def evaluate(radius: float) -> MarginRow:
        points = sector_points(radius, f.m, angles)
        return MarginRow(
            radius,
            _margin(forward.series(points), params),
            _margin(inverse.series(points), params),
        )

    return MarginReport(params, fan_out(evaluate, radii), list(inverse.notes))
