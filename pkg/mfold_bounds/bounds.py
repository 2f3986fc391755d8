"""
mfold_bounds.bounds - Closed-form coefficient bounds

Theorem evaluators for the Q and Θ classes, the corollary formulas written
out literally in their own free variables, and the tables comparing them.
"""

# pylint: disable=invalid-name,too-many-arguments

# stdlib
import itertools
import math
from dataclasses import dataclass
from typing import Callable

# library
import numpy as np

# module
from mfold_bounds.exceptions import ParameterError
from mfold_bounds.structs import BoundReport, ClassParams, PhiValues


# |combination| below this makes the Q-class |a_{m+1}| bound unbounded
DEGENERATE_TOL = 1e-14
TIE_TOL = 1e-12
REDUCTION_TOL = 1e-12

LINEAR, SQRT, TIE = "linear", "sqrt", "tie"

NOTES = {
    "sqrt_branch": (
        "square-root branch follows the stated bound 2*sqrt(2|tau|(1-beta)/"
        "((delta+1)(delta+2)(m+1)Phi1)); the proof line carries Phi1 squared"
    ),
    "alt_a2m1": (
        "a2m1_alt is the bound from the combined a_{2m+1} identity; "
        "it is reported only, the headline |a_{2m+1}| bound is the single-term one"
    ),
    "degenerate": "denominator modulus below tolerance, |a_{m+1}| unbounded",
}


def phi(lam: float, gamma: float, m: int) -> PhiValues:
    """Φ₁ = 1+2(λ+γ)m+λγ((2m+1)²+1) and Φ₂ = (1+(λ+γ)m+λγ((m+1)²+1))²"""
    phi1 = 1 + 2 * (lam + gamma) * m + lam * gamma * ((2 * m + 1) ** 2 + 1)
    psi = 1 + (lam + gamma) * m + lam * gamma * ((m + 1) ** 2 + 1)
    return PhiValues(phi1, psi**2)


def _require(params: ClassParams, kind: str):
    if params.kind != kind:
        raise ParameterError(f"Expected class {kind} parameters, got {params.kind}", "kind")


def theorem1_bounds(params: ClassParams) -> BoundReport:
    """|a_{m+1}| and |a_{2m+1}| bounds for class Q"""
    _require(params, "Q")
    tau, alpha, delta, m = params.tau, params.alpha, params.delta, params.m
    values = phi(params.lam, params.gamma, m)
    notes = []
    combination = abs(
        tau * alpha * (delta + 2) * (m + 1) * values.phi1
        + 2 * (1 - alpha) * (delta + 1) * values.phi2
    )
    if combination < DEGENERATE_TOL:
        am1 = math.inf
        notes.append(NOTES["degenerate"])
    else:
        am1 = 2 * math.sqrt(2) * abs(tau) * alpha / math.sqrt((delta + 1) * combination)
    a2m1 = 2 * abs(tau) * alpha / ((delta + 1) * (delta + 2) * values.phi1) + 2 * abs(
        tau
    ) ** 2 * alpha**2 * (m + 1) / ((delta + 1) ** 2 * values.phi2)
    return BoundReport(params, am1, a2m1, "theorem 1", notes=notes)


def theorem2_branches(params: ClassParams) -> tuple[float, float]:
    """The linear and square-root |a_{m+1}| bounds for class Θ"""
    _require(params, "Theta")
    size, delta, m = abs(params.tau) * (1 - params.beta), params.delta, params.m
    values = phi(params.lam, params.gamma, m)
    linear = 2 * size / ((delta + 1) * values.psi)
    root = 2 * math.sqrt(2 * size / ((delta + 1) * (delta + 2) * (m + 1) * values.phi1))
    return linear, root


def active_branch(linear: float, root: float) -> str:
    """Which branch attains the minimum"""
    if math.isclose(linear, root, rel_tol=TIE_TOL):
        return TIE
    return LINEAR if linear < root else SQRT


def theorem2_bounds(params: ClassParams) -> BoundReport:
    """|a_{m+1}| and |a_{2m+1}| bounds for class Θ"""
    linear, root = theorem2_branches(params)
    size, delta, m = abs(params.tau) * (1 - params.beta), params.delta, params.m
    values = phi(params.lam, params.gamma, m)
    a2m1 = 4 * size / ((delta + 1) * (delta + 2) * values.phi1)
    alt = 2 * size**2 * (m + 1) / ((delta + 1) ** 2 * values.phi2) + a2m1
    return BoundReport(
        params,
        min(linear, root),
        a2m1,
        "theorem 2",
        active_branch(linear, root),
        {"branch_linear": linear, "branch_sqrt": root, "a2m1_alt": alt},
        [NOTES["sqrt_branch"], NOTES["alt_a2m1"]],
    )


def theorem_bounds(params: ClassParams) -> BoundReport:
    """Theorem bounds matching the parameter kind"""
    if params.kind == "Q":
        return theorem1_bounds(params)
    return theorem2_bounds(params)


# Corollaries


def _min_pair(params: ClassParams, linear: float, root: float, a2m1: float, number: int):
    return BoundReport(
        params,
        min(linear, root),
        a2m1,
        f"corollary {number}",
        active_branch(linear, root),
        {"branch_linear": linear, "branch_sqrt": root},
    )


def _cor1(p: ClassParams) -> BoundReport:
    t, b, l, g, m = abs(p.tau), p.beta, p.lam, p.gamma, p.m
    w1 = 1 + m * (l + g) + l * g * ((m + 1) ** 2 + 1)
    w2 = 1 + 2 * m * (l + g) + l * g * ((2 * m + 1) ** 2 + 1)
    return _min_pair(
        p, 2 * t * (1 - b) / w1, 2 * math.sqrt(t * (1 - b) / ((m + 1) * w2)), 2 * t * (1 - b) / w2, 1
    )


def _cor2(p: ClassParams) -> BoundReport:
    t, b, l, m = abs(p.tau), p.beta, p.lam, p.m
    return _min_pair(
        p,
        2 * t * (1 - b) / (1 + m * l),
        2 * math.sqrt(t * (1 - b) / ((m + 1) * (1 + 2 * m * l))),
        2 * t * (1 - b) / (1 + 2 * m * l),
        2,
    )


def _cor3(p: ClassParams) -> BoundReport:
    b, l, m = p.beta, p.lam, p.m
    return _min_pair(
        p,
        2 * (1 - b) / (1 + m * l),
        2 * math.sqrt((1 - b) / ((m + 1) * (1 + 2 * m * l))),
        2 * (1 - b) / (1 + 2 * m * l),
        3,
    )


def _cor4(p: ClassParams) -> BoundReport:
    b, m = p.beta, p.m
    return _min_pair(
        p,
        2 * (1 - b) / (1 + m),
        2 * math.sqrt((1 - b) / ((m + 1) * (1 + 2 * m))),
        2 * (1 - b) / (1 + 2 * m),
        4,
    )


def _cor5(p: ClassParams) -> BoundReport:
    tau, a, l, g, d = p.tau, p.alpha, p.lam, p.gamma, p.delta
    s = l + g + 5 * l * g
    combination = abs(tau * a * (d + 2) * (1 + 2 * s) + (1 - a) * (d + 1) * (1 + s) ** 2)
    notes = []
    if combination < DEGENERATE_TOL:
        am1 = math.inf
        notes.append(NOTES["degenerate"])
    else:
        am1 = 2 * abs(tau) * a / math.sqrt((d + 1) * combination)
    a2m1 = 2 * abs(tau) * a / ((d + 1) * (d + 2) * (1 + 2 * s)) + 4 * abs(tau) ** 2 * a**2 / (
        (d + 1) ** 2 * (1 + s) ** 2
    )
    return BoundReport(p, am1, a2m1, "corollary 5", notes=notes)


def _cor6(p: ClassParams) -> BoundReport:
    t, b, d = abs(p.tau), p.beta, p.delta
    s = p.lam + p.gamma + 5 * p.lam * p.gamma
    return _min_pair(
        p,
        2 * t * (1 - b) / ((d + 1) * (1 + s)),
        2 * math.sqrt(t * (1 - b) / ((d + 1) * (d + 2) * (1 + 2 * s))),
        4 * t * (1 - b) / ((d + 1) * (d + 2) * (1 + 2 * s)),
        6,
    )


def _cor7(p: ClassParams) -> BoundReport:
    t, b = abs(p.tau), p.beta
    s = p.lam + p.gamma + 5 * p.lam * p.gamma
    return _min_pair(
        p,
        2 * t * (1 - b) / (1 + s),
        math.sqrt(2 * t * (1 - b) / (1 + 2 * s)),
        2 * t * (1 - b) / (1 + 2 * s),
        7,
    )


def _cor8(p: ClassParams) -> BoundReport:
    b, l = p.beta, p.lam
    return _min_pair(
        p,
        2 * (1 - b) / (1 + l),
        math.sqrt(2 * (1 - b) / (1 + 2 * l)),
        2 * (1 - b) / (1 + 2 * l),
        8,
    )


def _cor9(p: ClassParams) -> BoundReport:
    b = p.beta
    return _min_pair(p, 1 - b, math.sqrt(2 * (1 - b) / 3), 2 * (1 - b) / 3, 9)


@dataclass(frozen=True)
class Corollary:
    number: int
    kind: str
    # Parameters the corollary fixes
    fixed: dict
    # Parameters the corollary leaves free
    free: tuple[str, ...]
    # Theorem 1/2 or the corollary it is stated to follow from
    parent: str
    formula: Callable[[ClassParams], BoundReport]


COROLLARIES = {
    c.number: c
    for c in (
        Corollary(1, "Theta", {"delta": 0}, ("tau", "lam", "gamma", "m", "beta"), "theorem 2", _cor1),
        Corollary(2, "Theta", {"delta": 0, "gamma": 0}, ("tau", "lam", "m", "beta"), "corollary 1", _cor2),
        Corollary(3, "Theta", {"delta": 0, "gamma": 0, "tau": 1}, ("lam", "m", "beta"), "corollary 1", _cor3),
        Corollary(
            4, "Theta", {"delta": 0, "gamma": 0, "lam": 1, "tau": 1}, ("m", "beta"), "corollary 1", _cor4
        ),
        Corollary(5, "Q", {"m": 1}, ("tau", "lam", "gamma", "delta", "alpha"), "theorem 1", _cor5),
        Corollary(6, "Theta", {"m": 1}, ("tau", "lam", "gamma", "delta", "beta"), "theorem 2", _cor6),
        Corollary(7, "Theta", {"m": 1, "delta": 0}, ("tau", "lam", "gamma", "beta"), "corollary 6", _cor7),
        Corollary(
            8, "Theta", {"m": 1, "delta": 0, "gamma": 0, "tau": 1}, ("lam", "beta"), "corollary 6", _cor8
        ),
        Corollary(
            9,
            "Theta",
            {"m": 1, "delta": 0, "gamma": 0, "lam": 1, "tau": 1},
            ("beta",),
            "corollary 6",
            _cor9,
        ),
    )
}


def corollary_entry(number: int) -> Corollary:
    """Substitution, free variables and kind of a corollary"""
    try:
        return COROLLARIES[int(number)]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParameterError(f"There is no corollary {number}", "corollary") from exc


def corollary_bounds(number: int, params: ClassParams) -> BoundReport:
    """Evaluates a corollary's formulas. params must satisfy its substitution"""
    entry = corollary_entry(number)
    _require(params, entry.kind)
    for key, val in entry.fixed.items():
        if getattr(params, key) != val:
            raise ParameterError(
                f"Corollary {number} fixes {key}={val}, got {getattr(params, key)}", key
            )
    return entry.formula(params)


def parent_bounds(entry: Corollary, params: ClassParams) -> BoundReport:
    """Bounds of the result a corollary is stated to follow from"""
    if entry.parent.startswith("theorem"):
        return theorem_bounds(params)
    return corollary_bounds(int(entry.parent.split()[1]), params)


# Tables


@dataclass
class ReductionRow:
    number: int
    substitution: str
    theorem: str
    theorem_deviation: float
    parent: str
    parent_deviation: float
    points: int

    @property
    def deviation(self) -> float:
        return max(self.theorem_deviation, self.parent_deviation)

    @property
    def passed(self) -> bool:
        return self.deviation <= REDUCTION_TOL


def _deviation(first: BoundReport, second: BoundReport) -> float:
    return max(
        abs(first.bound_am1 - second.bound_am1),
        abs(first.bound_a2m1 - second.bound_a2m1),
    )


def _draw(rng: np.random.Generator, name: str):
    """Random valid value of one free parameter"""
    if name == "tau":
        return complex(rng.uniform(0.2, 3) * np.exp(1j * rng.uniform(0, 2 * np.pi)))
    if name == "lam":
        return float(rng.uniform(0, 3))
    if name in ("gamma", "alpha"):
        return float(1 - rng.uniform(0, 1))
    if name == "beta":
        return float(rng.uniform(0, 0.99))
    if name == "delta":
        return int(rng.integers(0, 6))
    return int(rng.integers(1, 7))


def corollary_points(entry: Corollary, count: int, rng: np.random.Generator) -> list[ClassParams]:
    """Random parameter sets satisfying a corollary's substitution"""
    points = []
    for _ in range(count):
        values = {"tau": 1 + 0j, "lam": 0.0, "gamma": 0.0, "delta": 0, "m": 1}
        values |= {key: _draw(rng, key) for key in entry.free}
        values |= entry.fixed
        level = "alpha" if entry.kind == "Q" else "beta"
        values.setdefault(level, _draw(rng, level))
        points.append(ClassParams(**values, kind=entry.kind))
    return points


def reduction_matrix(points: int = 100, seed: int = 0) -> list[ReductionRow]:
    """Deviation of every corollary from its specialized theorem and its stated parent"""
    rng = np.random.default_rng(seed)
    rows = []
    for number, entry in COROLLARIES.items():
        grid = corollary_points(entry, points, rng)
        theorem_dev = parent_dev = 0.0
        for params in grid:
            value = corollary_bounds(number, params)
            theorem_dev = max(theorem_dev, _deviation(value, theorem_bounds(params)))
            parent_dev = max(parent_dev, _deviation(value, parent_bounds(entry, params)))
        rows.append(
            ReductionRow(
                number,
                ", ".join(f"{key}={val}" for key, val in entry.fixed.items()),
                "theorem 1" if entry.kind == "Q" else "theorem 2",
                theorem_dev,
                entry.parent,
                parent_dev,
                points,
            )
        )
    return rows


@dataclass
class BranchRow:
    params: ClassParams
    linear: float
    root: float

    @property
    def active(self) -> str:
        return active_branch(self.linear, self.root)

    @property
    def ratio(self) -> float:
        """linear / sqrt; below 1 where the linear branch is the bound"""
        return self.linear / self.root

    def as_row(self) -> dict:
        return {
            **self.params.as_row(),
            "branch_linear": self.linear,
            "branch_sqrt": self.root,
            "active_branch": self.active,
            "ratio": self.ratio,
        }


def min_branch_report(grid: dict[str, list], **base) -> list[BranchRow]:
    """Active branch of the Θ-class |a_{m+1}| bound at every grid point

    grid maps parameter names to value lists; base fixes the others
    """
    values = {"tau": 1 + 0j, "lam": 0.0, "gamma": 0.0, "delta": 0, "m": 1, "beta": 0.0}
    values |= base
    names = [name for name in grid if name != "alpha"]
    rows = []
    for combo in itertools.product(*(grid[name] for name in names)):
        params = ClassParams(**(values | dict(zip(names, combo))), kind="Theta")
        rows.append(BranchRow(params, *theorem2_branches(params)))
    return rows
