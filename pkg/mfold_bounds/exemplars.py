"""
mfold_bounds.exemplars - Example bi-univalent functions and their inverses

Each entry is built as a 1-fold series pair and symmetrized to
[f(z^m)]^{1/m}, whose inverse is [g(w^m)]^{1/m}. Pairings are confirmed by
composing both ways.
"""

# stdlib
from dataclasses import dataclass
from typing import Callable

# module
from mfold_bounds.exceptions import ParameterError
from mfold_bounds.inversion import invert
from mfold_bounds.series import (
    MFoldFn,
    TruncatedSeries,
    compose,
    exp0,
    log1,
    reciprocal,
    symmetrize,
    variable,
)
from mfold_bounds.validate import EXEMPLARS

PAIRING_TOL = 1e-10

Builder = Callable[[int], TruncatedSeries]


def _line(slope: float, order: int) -> TruncatedSeries:
    """1 + slope z"""
    return TruncatedSeries([1, slope], order=order)


def koebe_like(order: int) -> TruncatedSeries:
    """z/(1-z)"""
    return reciprocal(_line(-1, order)).shift(1).truncate(order)


def negative_log(order: int) -> TruncatedSeries:
    """-log(1-z)"""
    return -log1(_line(-1, order))


def half_log_ratio(order: int) -> TruncatedSeries:
    """½ log((1+z)/(1-z))"""
    return (log1(_line(1, order)) - log1(_line(-1, order))) * 0.5


def mobius_inverse(order: int) -> TruncatedSeries:
    """w/(1+w)"""
    return reciprocal(_line(1, order)).shift(1).truncate(order)


def exp_inverse(order: int) -> TruncatedSeries:
    """(e^w-1)/e^w = 1 - e^{-w}"""
    return 1 - exp0(-variable(order))


def tanh_inverse(order: int) -> TruncatedSeries:
    """(e^{2w}-1)/(e^{2w}+1)"""
    power = exp0(variable(order) * 2)
    return (power - 1) * reciprocal(power + 1)


# name -> (forward label, forward, inverse label, inverse)
CATALOG: dict[str, tuple[str, Builder, str, Builder]] = {
    "koebe-like": ("z/(1-z)", koebe_like, "w/(1+w)", mobius_inverse),
    "log": ("-log(1-z)", negative_log, "(e^w-1)/e^w", exp_inverse),
    "atanh": ("log((1+z)/(1-z))/2", half_log_ratio, "(e^2w-1)/(e^2w+1)", tanh_inverse),
}

# 1-fold inverses in the order the example list gives them
LISTED_INVERSES = ("(e^w-1)/e^w", "w/(1+w)", "(e^2w-1)/(e^2w+1)")


def pairing_residual(f: TruncatedSeries, g: TruncatedSeries) -> float:
    """Largest coefficient of f(g(w)) - w and g(f(z)) - z"""
    order = min(f.order, g.order)
    identity = variable(order)
    return max(
        compose(f, g).deviation(identity),
        compose(g, f).deviation(identity),
    )


@dataclass(frozen=True)
class ExemplarPair:
    name: str
    forward: MFoldFn
    inverse: MFoldFn
    composition_residual: float
    inversion_deviation: float

    @property
    def m(self) -> int:
        return self.forward.m

    @property
    def pairing_verified(self) -> bool:
        return self.composition_residual <= PAIRING_TOL

    def as_dict(self) -> dict:
        forward, inverse = CATALOG[self.name][0], CATALOG[self.name][2]
        return {
            "name": self.name,
            "forward": forward,
            "inverse": inverse,
            "m": self.m,
            "order": self.forward.order,
            "forward_coefficients": list(self.forward.coeffs),
            "inverse_coefficients": list(self.inverse.coeffs),
            "composition_residual": self.composition_residual,
            "inversion_deviation": self.inversion_deviation,
            "pairing_verified": self.pairing_verified,
        }


def build_exemplar(name: str, m: int = 1, K: int = 4) -> ExemplarPair:
    """Truncated m-fold exemplar and its catalog inverse at index K"""
    if name not in CATALOG:
        raise ParameterError(f"'{name}' could not be found in {EXEMPLARS}", "name")
    if m < 1:
        raise ParameterError("m must be at least 1", "m")
    if K < 3:
        raise ParameterError("K must be at least 3", "order")
    _, forward, _, inverse = CATALOG[name]
    f = symmetrize(forward(K + 1), m, K)
    g = symmetrize(inverse(K + 1), m, K)
    f_series, g_series = f.embed(), g.embed()
    return ExemplarPair(
        name,
        f,
        g,
        pairing_residual(f_series, g_series),
        invert(f_series).deviation(g_series),
    )


def build_catalog(m: int = 1, K: int = 4) -> list[ExemplarPair]:
    return [build_exemplar(name, m, K) for name in EXEMPLARS]


@dataclass(frozen=True)
class AuditRow:
    forward: str
    inverse: str
    # Whether the example list places this inverse next to this forward
    listed: bool
    residual: float

    @property
    def inverts(self) -> bool:
        return self.residual <= PAIRING_TOL

    def as_dict(self) -> dict:
        return {
            "forward": self.forward,
            "inverse": self.inverse,
            "listed": self.listed,
            "residual": self.residual,
            "inverts": self.inverts,
        }


def audit_1fold_pairings(order: int = 5) -> list[AuditRow]:
    """Residual of every forward against every listed 1-fold inverse"""
    inverses = {label: builder for _, _, label, builder in CATALOG.values()}
    rows = []
    for position, name in enumerate(EXEMPLARS):
        label, forward = CATALOG[name][:2]
        f = forward(order)
        for index, inverse in enumerate(LISTED_INVERSES):
            rows.append(
                AuditRow(
                    label,
                    inverse,
                    index == position,
                    pairing_residual(f, inverses[inverse](order)),
                )
            )
    return rows
