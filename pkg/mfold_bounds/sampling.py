"""
mfold_bounds.sampling - Carathéodory samples and the bound certification harness

Coefficients of positive-real-part functions are drawn straight from the
constraint region |p_k| <= 2 with q_m = -p_m. Each draw is pushed through the
coefficient identities of the class proofs and the result is compared to the
closed-form bounds.
"""

# pylint: disable=invalid-name,too-many-locals

# stdlib
import cmath
import math
from dataclasses import dataclass, field
from typing import NamedTuple, Union

# library
import numpy as np

# module
from mfold_bounds.app_config import SAMPLE_BLOCK
from mfold_bounds.bounds import DEGENERATE_TOL, phi, theorem1_bounds, theorem2_bounds
from mfold_bounds.exceptions import DegenerateError, ParameterError
from mfold_bounds.series import TruncatedSeries
from mfold_bounds.structs import ClassParams
from mfold_bounds.validate import STRATEGIES
from mfold_bounds.workers import fan_out


LEMMA_TOL = 1e-12
# Relative slack allowed on every certified ratio
RATIO_TOL = 1e-9

Value = Union[complex, np.ndarray]


@dataclass(frozen=True)
class HerglotzFn:
    """Mixture sum c_j (1 + u_j z^m)/(1 - u_j z^m) of Möbius atoms"""

    weights: tuple[float, ...]
    atoms: tuple[complex, ...]
    m: int = 1

    def __post_init__(self):
        weights = np.asarray(self.weights, dtype=float)
        atoms = np.asarray(self.atoms, dtype=complex)
        if not len(weights) or weights.shape != atoms.shape:
            raise ParameterError("Need one weight per atom and at least one atom", "atoms")
        if np.any(weights < 0) or abs(weights.sum() - 1) > LEMMA_TOL:
            raise ParameterError("Weights must be non-negative and sum to 1", "weights")
        if np.any(np.abs(np.abs(atoms) - 1) > LEMMA_TOL):
            raise ParameterError("Atoms must lie on the unit circle", "atoms")
        object.__setattr__(self, "weights", tuple(weights.tolist()))
        object.__setattr__(self, "atoms", tuple(atoms.tolist()))

    @classmethod
    def single_atom(cls, atom: complex = 1, m: int = 1) -> "HerglotzFn":
        """(1 + u z^m)/(1 - u z^m), the extremal function for |u| = 1"""
        return cls((1.0,), (complex(atom),), m)

    def coefficients(self, K: int) -> np.ndarray:
        """p_1..p_K with p_k = 2 sum c_j u_j^k, the coefficient of z^{mk}"""
        powers = np.power.outer(np.asarray(self.atoms), np.arange(1, K + 1))
        return 2 * np.asarray(self.weights) @ powers

    def series(self, K: int) -> TruncatedSeries:
        """1 + p_1 z^m + ... + p_K z^{mK}"""
        coeffs = np.zeros(self.m * K + 1, dtype=complex)
        coeffs[0] = 1
        coeffs[self.m :: self.m] = self.coefficients(K)
        return TruncatedSeries(coeffs)

    def evaluate(self, z: Value) -> Value:
        zm = np.asarray(z, dtype=complex) ** self.m
        total = sum(
            c * (1 + u * zm) / (1 - u * zm) for c, u in zip(self.weights, self.atoms)
        )
        return total if np.ndim(z) else complex(total)


def sample_herglotz(seed: int, atoms: int, m: int = 1) -> HerglotzFn:
    """Random mixture of atoms with Dirichlet weights and uniform phases"""
    if atoms < 1:
        raise ParameterError("Need at least one atom", "atoms")
    rng = np.random.default_rng(seed)
    weights = rng.dirichlet(np.ones(atoms))
    weights /= weights.sum()
    phases = rng.uniform(0, 2 * np.pi, atoms)
    return HerglotzFn(tuple(weights), tuple(np.exp(1j * phases)), m)


def lemma1_check(h: HerglotzFn, K: int) -> float:
    """Largest |p_k| for k <= K. Never above 2 for a valid h"""
    if K < 1:
        raise ParameterError("K must be at least 1", "K")
    return float(np.max(np.abs(h.coefficients(K))))


# Constraint region


@dataclass(frozen=True)
class ConstraintSample:
    """p_m, p_{2m}, q_m, q_{2m}. Arrays hold one draw per entry"""

    p_m: Value
    p_2m: Value
    q_2m: Value
    q_m: Value = None

    def __post_init__(self):
        q_m = -np.asarray(self.p_m) if self.q_m is None else self.q_m
        if not np.allclose(q_m, -np.asarray(self.p_m), rtol=0, atol=LEMMA_TOL):
            raise ParameterError("Sample must satisfy q_m = -p_m", "q_m")
        for name in ("p_m", "p_2m", "q_2m"):
            if np.any(np.abs(getattr(self, name)) > 2 + LEMMA_TOL):
                raise ParameterError(f"|{name}| exceeds 2", name)
        if np.ndim(q_m) == 0:
            q_m = complex(q_m)
        object.__setattr__(self, "q_m", q_m)

    def __len__(self) -> int:
        return int(np.size(self.p_m))

    @classmethod
    def from_arrays(cls, p_m, p_2m, q_2m) -> "ConstraintSample":
        return cls(*(np.asarray(v, dtype=complex) for v in (p_m, p_2m, q_2m)))


class QValues(NamedTuple):
    am1_sq: Value
    a2m1: Value
    # Same elimination without the halving of the p_{2m} - q_{2m} term
    a2m1_direct: Value


class ThetaValues(NamedTuple):
    am1_sq_linear: Value
    am1_sq_root: Value
    a2m1_combined: Value
    a2m1: Value


def reconstruct_Q(s: ConstraintSample, params: ClassParams) -> QValues:
    """a_{m+1}² and a_{2m+1} for class Q from the constraint data"""
    tau, alpha, delta, m = params.tau, params.alpha, params.delta, params.m
    values = phi(params.lam, params.gamma, m)
    combination = (
        tau * alpha * (delta + 2) * (m + 1) * values.phi1
        + 2 * (1 - alpha) * (delta + 1) * values.phi2
    )
    if abs(combination) < DEGENERATE_TOL:
        raise DegenerateError("Class Q denominator vanishes for these parameters")
    p_m, p_2m, q_m, q_2m = s.p_m, s.p_2m, s.q_m, s.q_2m
    am1_sq = 2 * tau**2 * alpha**2 * (p_2m + q_2m) / ((delta + 1) * combination)
    square = tau**2 * alpha**2 * (m + 1) * (p_m**2 + q_m**2) / (4 * (delta + 1) ** 2 * values.phi2)
    half = tau * alpha * (p_2m - q_2m) / (2 * (delta + 1) * (delta + 2) * values.phi1)
    return QValues(am1_sq, half + square, 2 * half + square)


def reconstruct_Theta(s: ConstraintSample, params: ClassParams) -> ThetaValues:
    """Both a_{m+1}² routes and both a_{2m+1} routes for class Θ"""
    tau, size, delta, m = params.tau, 1 - params.beta, params.delta, params.m
    values = phi(params.lam, params.gamma, m)
    p_m, p_2m, q_m, q_2m = s.p_m, s.p_2m, s.q_m, s.q_2m
    linear = tau**2 * size**2 * (p_m**2 + q_m**2) / (2 * (delta + 1) ** 2 * values.phi2)
    root = (
        2 * tau * size * (p_2m + q_2m) / ((delta + 1) * (delta + 2) * (m + 1) * values.phi1)
    )
    combined = tau**2 * size**2 * (m + 1) * (p_m**2 + q_m**2) / (
        4 * (delta + 1) ** 2 * values.phi2
    ) + tau * size * (p_2m - q_2m) / ((delta + 1) * (delta + 2) * values.phi1)
    single = 2 * tau * size * p_2m / ((delta + 1) * (delta + 2) * values.phi1)
    return ThetaValues(linear, root, combined, single)


# Sample generation


def grid_axis(n: int, tau: complex) -> np.ndarray:
    """Boundary-biased lattice over |p| <= 2, zero first

    R moduli 2(1 - (j/R)²) crowd toward |p| = 2; phases are 4R even steps plus
    arg τ and arg τ + π. R is the largest with (1 + R(4R + 2))³ <= n
    """
    rings = 1
    while (1 + (rings + 1) * (4 * (rings + 1) + 2)) ** 3 <= n:
        rings += 1
    moduli = 2 * (1 - (np.arange(rings) / rings) ** 2)
    turn = cmath.phase(tau)
    phases = np.concatenate((2 * np.pi * np.arange(4 * rings) / (4 * rings), (turn, turn + np.pi)))
    ring = np.outer(moduli, np.exp(1j * phases)).ravel()
    return np.concatenate(([0j], ring))


def grid_sample(n: int, tau: complex) -> ConstraintSample:
    """First n points of the product lattice over (p_m, p_2m, q_2m)"""
    axis = grid_axis(n, tau)
    count = min(n, len(axis) ** 3)
    i, j, k = np.unravel_index(np.arange(count), (len(axis),) * 3)
    return ConstraintSample.from_arrays(axis[i], axis[j], axis[k])


def _disk(rng: np.random.Generator, size: int) -> np.ndarray:
    """Uniform draws from |p| <= 2"""
    radius = 2 * np.sqrt(rng.uniform(0, 1, size))
    return radius * np.exp(1j * rng.uniform(0, 2 * np.pi, size))


def random_block(seed: int, block: int, size: int) -> ConstraintSample:
    """One block of uniform draws. Each block has its own spawned stream"""
    rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(block,)))
    return ConstraintSample.from_arrays(_disk(rng, size), _disk(rng, size), _disk(rng, size))


# Certification


@dataclass
class CertificationReport:
    params: ClassParams
    strategy: str
    n: int
    seed: int
    ratios: dict[str, float]
    extras: dict[str, float] = field(default_factory=dict)
    evaluated: int = 0
    skipped: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ratio <= 1 + RATIO_TOL for ratio in self.ratios.values())

    def as_row(self) -> dict:
        return {
            **self.params.as_row(),
            "strategy": self.strategy,
            "n": self.n,
            "seed": self.seed,
            "evaluated": self.evaluated,
            "skipped": self.skipped,
            **{f"ratio_{key}": val for key, val in self.ratios.items()},
            **self.extras,
            "passed": self.passed,
        }


def _safe_ratio(values: np.ndarray, bound: float) -> float:
    if not len(values):
        return 0.0
    if bound == 0:
        return 0.0 if np.max(values) == 0 else math.inf
    return float(np.max(values) / bound)


def _q_ratios(s: ConstraintSample, params: ClassParams) -> tuple[dict, dict]:
    report = theorem1_bounds(params)
    values = reconstruct_Q(s, params)
    ratios = {
        "am1": _safe_ratio(np.sqrt(np.abs(values.am1_sq)), report.bound_am1),
        "a2m1": _safe_ratio(np.abs(values.a2m1), report.bound_a2m1),
    }
    extras = {"ratio_a2m1_direct": _safe_ratio(np.abs(values.a2m1_direct), report.bound_a2m1)}
    return ratios, extras


def _theta_ratios(s: ConstraintSample, params: ClassParams) -> tuple[dict, dict]:
    report = theorem2_bounds(params)
    values = reconstruct_Theta(s, params)
    alt = report.alt_values
    ratios = {
        "am1_linear": _safe_ratio(np.sqrt(np.abs(values.am1_sq_linear)), alt["branch_linear"]),
        "am1_sqrt": _safe_ratio(np.sqrt(np.abs(values.am1_sq_root)), alt["branch_sqrt"]),
        "a2m1": _safe_ratio(np.abs(values.a2m1), report.bound_a2m1),
        "a2m1_alt": _safe_ratio(np.abs(values.a2m1_combined), alt["a2m1_alt"]),
    }
    residual = np.abs(np.asarray(values.am1_sq_linear) - np.asarray(values.am1_sq_root))
    extras = {"am1_sq_residual": float(np.max(residual)) if residual.size else 0.0}
    return ratios, extras


def _merge(results: list[tuple[dict, dict]]) -> tuple[dict, dict]:
    ratios, extras = {}, {}
    for block_ratios, block_extras in results:
        for target, source in ((ratios, block_ratios), (extras, block_extras)):
            for key, val in source.items():
                target[key] = max(target.get(key, val), val)
    return ratios, extras


def probe_bounds(
    params: ClassParams, strategy: str = "random", n: int = 100_000, seed: int = 0
) -> CertificationReport:
    """Max value-to-bound ratios over n constraint samples"""
    if n < 1:
        raise ParameterError("Need at least one sample", "n")
    if strategy not in STRATEGIES:
        raise ParameterError(f"'{strategy}' is not a strategy in {STRATEGIES}", "strategy")
    evaluate = _q_ratios if params.kind == "Q" else _theta_ratios
    report = CertificationReport(params, strategy, n, seed, {})
    if strategy == "grid":
        lattice = grid_sample(n, params.tau)
        total = len(lattice)
        if total < n:
            report.notes.append(f"grid holds {total} points")
        blocks = [lattice]
    else:
        total = n
        sizes = [min(SAMPLE_BLOCK, n - start) for start in range(0, n, SAMPLE_BLOCK)]
        blocks = [random_block(seed, block, size) for block, size in enumerate(sizes)]
    try:
        report.ratios, report.extras = _merge(
            fan_out(lambda samples: evaluate(samples, params), blocks)
        )
    except DegenerateError as exc:
        report.skipped = total
        report.notes.append(str(exc))
        return report
    report.evaluated = total
    return report
