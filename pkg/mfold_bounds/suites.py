"""
mfold_bounds.suites - Identity suites run by the verify command

Every suite compares two independent routes to the same numbers and reports
the largest deviation seen.
"""

# pylint: disable=invalid-name

# stdlib
from dataclasses import dataclass
from typing import Callable

# library
import numpy as np
from scipy.special import gamma as gamma_fn

# module
from mfold_bounds.bounds import (
    REDUCTION_TOL,
    reduction_matrix,
    theorem1_bounds,
    theorem2_bounds,
)
from mfold_bounds.exemplars import build_catalog
from mfold_bounds.functional import closed_coeffs, coefficient_weight, functional_series
from mfold_bounds.inversion import (
    closed_inverse_1fold,
    closed_inverse_mfold,
    inverse_mfold,
)
from mfold_bounds.operators import omega, ruscheweyh, ruscheweyh_mfold
from mfold_bounds.sampling import lemma1_check, sample_herglotz
from mfold_bounds.series import MFoldFn
from mfold_bounds.structs import ClassParams

IDENTITY_TOL = 1e-10
BRIDGE_TOL = 1e-12
LEMMA_TOL = 1e-12


@dataclass
class SuiteResult:
    name: str
    count: int
    deviation: float
    tolerance: float

    def __post_init__(self):
        # numpy scalars do not serialize
        self.deviation = float(self.deviation)

    @property
    def passed(self) -> bool:
        return bool(self.deviation <= self.tolerance)

    def as_row(self) -> dict:
        return {
            "suite": self.name,
            "count": self.count,
            "max_deviation": self.deviation,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }


def _relative(first, second) -> float:
    return float(abs(first - second) / max(1.0, abs(second)))


def random_mfold(rng: np.random.Generator, m: int, K: int) -> MFoldFn:
    """m-fold function with coefficients uniform in the unit disk"""
    radius = np.sqrt(rng.uniform(0, 1, K))
    return MFoldFn(m, radius * np.exp(2j * np.pi * rng.uniform(0, 1, K)))


def random_params(rng: np.random.Generator, kind: str = "Theta") -> ClassParams:
    """Random valid parameters of either class"""
    tau = rng.uniform(0.2, 3) * np.exp(2j * np.pi * rng.uniform())
    values = {
        "tau": complex(tau),
        "lam": float(rng.uniform(0, 3)),
        "gamma": float(rng.uniform(0, 1)),
        "delta": int(rng.integers(0, 6)),
        "m": int(rng.choice((1, 2, 3, 5))),
    }
    if kind == "Q":
        return ClassParams.q(float(1 - rng.uniform(0, 1)), **values)
    return ClassParams.theta(float(rng.uniform(0, 0.99)), **values)


def inversion_suite(rng: np.random.Generator, count: int = 200) -> SuiteResult:
    """Closed-form inverse coefficients against generic series inversion"""
    deviation = 0.0
    for _ in range(count):
        m = int(rng.choice((1, 2, 3, 5)))
        f = random_mfold(rng, m, 3)
        closed = closed_inverse_mfold(m, *f.coeffs)
        generic = inverse_mfold(f)
        for closed_value, value in zip(closed.as_tuple(), generic.coeffs):
            deviation = max(deviation, _relative(closed_value, value))
        if m == 1:
            one_fold = closed_inverse_1fold(*f.coeffs)
            deviation = max(deviation, max(map(abs, np.subtract(closed.as_tuple(), one_fold.as_tuple()))))
    return SuiteResult("inversion", count, deviation, IDENTITY_TOL)


def functional_suite(rng: np.random.Generator, count: int = 500) -> SuiteResult:
    """Series-built D coefficients against the closed forms on both sides"""
    deviation = 0.0
    for _ in range(count):
        params = random_params(rng)
        f = random_mfold(rng, params.m, 2)
        closed = closed_coeffs(params, *f.coeffs)
        for side, expected in (("forward", closed.forward), ("inverse", closed.inverse)):
            series = functional_series(f, params, side)
            deviation = max(deviation, abs(series.constant - 1))
            for k, value in enumerate(expected, start=1):
                deviation = max(deviation, _relative(series.coefficient(k), value))
    return SuiteResult("functional", count, deviation, IDENTITY_TOL)


def weight_suite(rng: np.random.Generator, count: int = 200) -> SuiteResult:
    """z^{3m} coefficient of D against the general weight formula"""
    deviation = 0.0
    for _ in range(count):
        params = random_params(rng)
        f = random_mfold(rng, params.m, 3)
        series = functional_series(f, params)
        expected = coefficient_weight(params, 3) * f.coefficient(3)
        deviation = max(deviation, _relative(series.coefficient(3), expected))
    return SuiteResult("weight-k3", count, deviation, IDENTITY_TOL)


def operators_suite(rng: np.random.Generator, count: int = 100) -> SuiteResult:
    """Binomial factors against the gamma form, and the m = 1 operator agreement"""
    deviation = 0.0
    factors = [(delta, k) for delta in range(8) for k in range(1, 12)]
    for delta, k in factors:
        expected = gamma_fn(delta + k) / (gamma_fn(k) * gamma_fn(delta + 1))
        deviation = max(deviation, _relative(omega(delta, k).value, expected))
    for _ in range(count):
        f = random_mfold(rng, 1, 4)
        delta = int(rng.integers(0, 6))
        one_fold = ruscheweyh(f.embed(), delta)
        symmetric = ruscheweyh_mfold(f, delta).embed()
        deviation = max(deviation, one_fold.deviation(symmetric))
    return SuiteResult("operators", count + len(factors), deviation, IDENTITY_TOL)


def bridge_suite(rng: np.random.Generator, count: int = 200) -> SuiteResult:
    """Class Q bound at α = 1 against the Θ square-root branch at β = 0"""
    deviation = 0.0
    for _ in range(count):
        params = random_params(rng, "Q").replace(alpha=1.0)
        theta = params.replace(kind="Theta", alpha=None, beta=0.0)
        deviation = max(
            deviation,
            _relative(
                theorem1_bounds(params).bound_am1,
                theorem2_bounds(theta).alt_values["branch_sqrt"],
            ),
        )
    return SuiteResult("bridge", count, deviation, BRIDGE_TOL)


def monotonicity_suite(rng: np.random.Generator, count: int = 100) -> SuiteResult:
    """Θ bounds fall as β grows and never grow with δ"""
    worst = 0.0
    betas = np.linspace(0, 0.95, 12)
    for _ in range(count):
        params = random_params(rng)
        reports = [theorem2_bounds(params.replace(beta=float(b))) for b in betas]
        for first, second in zip(reports, reports[1:]):
            worst = max(worst, second.bound_am1 - first.bound_am1, second.bound_a2m1 - first.bound_a2m1)
            if second.bound_am1 == first.bound_am1:
                worst = max(worst, 1.0)
        deltas = [theorem2_bounds(params.replace(delta=d)) for d in range(6)]
        for first, second in zip(deltas, deltas[1:]):
            worst = max(worst, second.bound_am1 - first.bound_am1, second.bound_a2m1 - first.bound_a2m1)
    return SuiteResult("monotonicity", count, worst, 0.0)


def reduction_suite(rng: np.random.Generator, points: int = 100) -> SuiteResult:
    """Every corollary against its theorem and its stated parent"""
    rows = reduction_matrix(points, int(rng.integers(2**32)))
    return SuiteResult("reduction", len(rows) * points, max(row.deviation for row in rows), REDUCTION_TOL)


def exemplars_suite(_: np.random.Generator) -> SuiteResult:
    """Composition residual of every catalog pair for m = 1, 2, 3"""
    pairs = [pair for m in (1, 2, 3) for pair in build_catalog(m, 4)]
    deviation = max(max(pair.composition_residual, pair.inversion_deviation) for pair in pairs)
    return SuiteResult("exemplars", len(pairs), deviation, IDENTITY_TOL)


def lemma1_suite(rng: np.random.Generator, count: int = 10_000) -> SuiteResult:
    """Herglotz coefficients never exceed 2"""
    worst = 0.0
    base = int(rng.integers(2**32))
    for index in range(count):
        h = sample_herglotz([base, index], int(rng.integers(1, 9)), int(rng.integers(1, 4)))
        worst = max(worst, lemma1_check(h, 20) - 2)
    return SuiteResult("lemma1", count, worst, LEMMA_TOL)


SUITES: dict[str, Callable[[np.random.Generator], SuiteResult]] = {
    "inversion": inversion_suite,
    "functional": functional_suite,
    "weight-k3": weight_suite,
    "operators": operators_suite,
    "bridge": bridge_suite,
    "monotonicity": monotonicity_suite,
    "reduction": reduction_suite,
    "exemplars": exemplars_suite,
    "lemma1": lemma1_suite,
}


def run_suites(seed: int = 0) -> list[SuiteResult]:
    """Runs every suite in a fixed order, each on its own seeded stream"""
    streams = np.random.SeedSequence(seed).spawn(len(SUITES))
    return [suite(np.random.default_rng(stream)) for suite, stream in zip(SUITES.values(), streams)]
