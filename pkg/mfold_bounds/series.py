"""
mfold_bounds.series - Truncated complex power series

A series is stored as its coefficients a_0..a_N. Coefficients beyond the
order N are unknown rather than zero, so binary operations keep the smaller
of the two orders and never extrapolate.
"""

# pylint: disable=invalid-name

# stdlib
from dataclasses import dataclass
from typing import Iterable, Union

# library
import numpy as np
from numpy.polynomial import polynomial

# module
from mfold_bounds.exceptions import NormalizationError, SeriesError, TruncationError


# Constant terms closer than this to their required value are accepted
CONSTANT_TOL = 1e-12

Number = Union[int, float, complex]


class TruncatedSeries:
    """Power series a_0 + a_1 z + ... + a_N z^N known up to z^N"""

    __slots__ = ("coeffs",)
    # Makes numpy scalars defer to the reflected operators below
    __array_ufunc__ = None

    def __init__(self, coeffs: Iterable[Number], order: int = None):
        coeffs = np.array(coeffs, dtype=complex, ndmin=1)
        if coeffs.ndim != 1 or not len(coeffs):
            raise SeriesError("A series needs a flat, non-empty coefficient list")
        if order is not None:
            if order < 0:
                raise SeriesError(f"Order cannot be negative: {order}")
            padded = np.zeros(order + 1, dtype=complex)
            count = min(order + 1, len(coeffs))
            padded[:count] = coeffs[:count]
            coeffs = padded
        coeffs.flags.writeable = False
        self.coeffs = coeffs

    @property
    def order(self) -> int:
        """Highest retained power"""
        return len(self.coeffs) - 1

    def __getitem__(self, index):
        return self.coeffs[index]

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.coeffs.tolist()})"

    def __call__(self, z):
        """Evaluates the truncated polynomial at z (scalar or array)"""
        return polynomial.polyval(z, self.coeffs)

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            return add(self, other)
        coeffs = self.coeffs.copy()
        coeffs[0] += other
        return TruncatedSeries(coeffs)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        return TruncatedSeries(self.coeffs * other)

    __rmul__ = __mul__

    def truncate(self, order: int) -> "TruncatedSeries":
        """Drops every coefficient above order"""
        if order > self.order:
            raise TruncationError(f"Cannot raise order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1])

    def shift(self, power: int = 1) -> "TruncatedSeries":
        """Multiplies by z^power"""
        return TruncatedSeries(np.concatenate((np.zeros(power), self.coeffs)))

    def unshift(self, power: int = 1) -> "TruncatedSeries":
        """Divides by z^power. The dropped coefficients must vanish"""
        if self.order < power:
            raise TruncationError(f"Order {self.order} series cannot drop z^{power}")
        if np.any(np.abs(self.coeffs[:power]) > CONSTANT_TOL):
            raise SeriesError(f"Series is not divisible by z^{power}")
        return TruncatedSeries(self.coeffs[power:])

    def deviation(self, other: "TruncatedSeries") -> float:
        """Max coefficient modulus of self - other up to the common order"""
        return float(np.max(np.abs((self - other).coeffs)))


def constant(value: Number, order: int) -> TruncatedSeries:
    """Constant series value + 0z + ..."""
    return TruncatedSeries([value], order=order)


def variable(order: int) -> TruncatedSeries:
    """The identity series z"""
    return TruncatedSeries([0, 1], order=order)


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Coefficientwise sum truncated to the smaller order"""
    order = min(a.order, b.order)
    return TruncatedSeries(a.coeffs[: order + 1] + b.coeffs[: order + 1])


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to the smaller order"""
    order = min(a.order, b.order)
    coeffs = np.convolve(a.coeffs[: order + 1], b.coeffs[: order + 1])
    return TruncatedSeries(coeffs[: order + 1])


def derivative(a: TruncatedSeries) -> TruncatedSeries:
    """Termwise derivative, one order lower"""
    if a.order < 1:
        raise TruncationError("Cannot differentiate an order 0 series")
    return TruncatedSeries(a.coeffs[1:] * np.arange(1, a.order + 1))


def integral(a: TruncatedSeries) -> TruncatedSeries:
    """Termwise antiderivative with zero constant, one order higher"""
    return TruncatedSeries(
        np.concatenate(([0], a.coeffs / np.arange(1, a.order + 2)))
    )


def compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """outer(inner(z)) by Horner's rule. inner must have a zero constant term"""
    if abs(inner[0]) > CONSTANT_TOL:
        raise SeriesError(f"Inner series has a nonzero constant term {inner[0]}")
    order = min(outer.order, inner.order)
    inner_coeffs = inner.coeffs[: order + 1].copy()
    inner_coeffs[0] = 0
    result = np.zeros(order + 1, dtype=complex)
    result[0] = outer[order]
    for k in range(order - 1, -1, -1):
        result = np.convolve(result, inner_coeffs)[: order + 1]
        result[0] += outer[k]
    return TruncatedSeries(result)


def reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    """1/a. Requires a nonzero constant term"""
    if a[0] == 0:
        raise SeriesError("Cannot invert a series with zero constant term")
    result = np.zeros(a.order + 1, dtype=complex)
    result[0] = 1 / a[0]
    for n in range(1, a.order + 1):
        result[n] = -np.dot(a.coeffs[1 : n + 1], result[n - 1 :: -1]) / a[0]
    return TruncatedSeries(result)


def log1(a: TruncatedSeries) -> TruncatedSeries:
    """Formal logarithm of a series with constant term 1"""
    if abs(a[0] - 1) > CONSTANT_TOL:
        raise SeriesError(f"log1 needs constant term 1, not {a[0]}")
    if a.order == 0:
        return constant(0, 0)
    return integral(mul(derivative(a), reciprocal(a)))


def exp0(a: TruncatedSeries) -> TruncatedSeries:
    """Formal exponential of a series with constant term 0"""
    if abs(a[0]) > CONSTANT_TOL:
        raise SeriesError(f"exp0 needs constant term 0, not {a[0]}")
    weighted = a.coeffs * np.arange(a.order + 1)
    result = np.zeros(a.order + 1, dtype=complex)
    result[0] = 1
    # n e_n = sum_k k a_k e_{n-k}
    for n in range(1, a.order + 1):
        result[n] = np.dot(weighted[1 : n + 1], result[n - 1 :: -1]) / n
    return TruncatedSeries(result)


def pow_real(a: TruncatedSeries, exponent: float) -> TruncatedSeries:
    """Principal branch a^exponent for a series with constant term 1"""
    if abs(a[0] - 1) > CONSTANT_TOL:
        raise SeriesError(f"pow_real needs constant term 1, not {a[0]}")
    return exp0(log1(a) * float(exponent))


def check_normalized(f: TruncatedSeries):
    """Raises unless f = z + a_2 z^2 + ..."""
    if f.order < 1:
        raise TruncationError("A normalized series needs order 1 or more")
    if abs(f[0]) > CONSTANT_TOL or abs(f[1] - 1) > CONSTANT_TOL:
        raise NormalizationError(f"Series must start z + ..., not {f[0]} + {f[1]}z")


def off_support(a: TruncatedSeries, m: int, residue: int = 1) -> float:
    """Largest coefficient at an index not congruent to residue mod m"""
    mask = np.arange(a.order + 1) % m != residue % m
    if not mask.any():
        return 0.0
    return float(np.max(np.abs(a.coeffs[mask])))


@dataclass(frozen=True)
class MFoldFn:
    """m-fold symmetric function z + sum a_{mk+1} z^{mk+1}, k = 1..K"""

    m: int
    coeffs: tuple[complex, ...] = ()

    def __post_init__(self):
        if int(self.m) != self.m or self.m < 1:
            raise SeriesError(f"Symmetry order must be a positive integer: {self.m}")
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))

    @property
    def K(self) -> int:
        """Truncation index"""
        return len(self.coeffs)

    @property
    def order(self) -> int:
        """Order of the embedding"""
        return self.m * self.K + 1

    def coefficient(self, k: int) -> complex:
        """a_{mk+1}, with a_1 = 1"""
        if k == 0:
            return 1 + 0j
        return self.coeffs[k - 1]

    def embed(self) -> TruncatedSeries:
        """Full series of order mK+1 with zeros off the m-fold support"""
        coeffs = np.zeros(self.order + 1, dtype=complex)
        coeffs[1] = 1
        coeffs[self.m + 1 :: self.m] = self.coeffs
        return TruncatedSeries(coeffs)

    def padded(self, K: int) -> "MFoldFn":
        """Extends with zero coefficients up to index K"""
        if K <= self.K:
            return self
        return MFoldFn(self.m, self.coeffs + (0j,) * (K - self.K))

    @classmethod
    def from_series(cls, series: TruncatedSeries, m: int, K: int = None) -> "MFoldFn":
        """Reads a_{m+1}, ..., a_{mK+1} off a normalized series"""
        check_normalized(series)
        if K is None:
            K = (series.order - 1) // m
        if series.order < m * K + 1:
            raise TruncationError(f"Order {series.order} is short of {m * K + 1}")
        return cls(m, series.coeffs[m + 1 : m * K + 2 : m])


def symmetrize(f: TruncatedSeries, m: int, K: int) -> MFoldFn:
    """The m-fold function (f(z^m))^{1/m} up to index K

    Written as z (u(z^m))^{1/m} with u = f/z so the power acts on a series
    with constant term 1
    """
    check_normalized(f)
    if f.order < K + 1:
        raise TruncationError(f"Order {f.order} is short of {K + 1}")
    quotient = TruncatedSeries(f.coeffs[1 : K + 2])
    root = quotient if m == 1 else pow_real(quotient, 1 / m)
    return MFoldFn(m, root.coeffs[1 : K + 1])
