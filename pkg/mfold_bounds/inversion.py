"""
mfold_bounds.inversion - Compositional inverses of normalized series

The generic inverse is solved degree by degree from f(g(w)) = w. The closed
forms give the first three inverse coefficients of 1-fold and m-fold
functions and are checked against the generic inverse.
"""

# stdlib
from dataclasses import dataclass

# library
import numpy as np

# module
from mfold_bounds.series import (
    MFoldFn,
    TruncatedSeries,
    check_normalized,
    compose,
)


@dataclass(frozen=True)
class InverseCoeffs:
    """Inverse coefficients b_{m+1}, b_{2m+1}, b_{3m+1}"""

    m: int
    first: complex
    second: complex
    third: complex

    @property
    def indices(self) -> tuple[int, int, int]:
        return self.m + 1, 2 * self.m + 1, 3 * self.m + 1

    def as_tuple(self) -> tuple[complex, complex, complex]:
        return self.first, self.second, self.third


def invert(f: TruncatedSeries, order: int = None) -> TruncatedSeries:
    """Series g with f(g(w)) = w up to the given order

    f'(0) = 1 makes the w^n coefficient of f(g) equal to b_n plus terms in
    b_2..b_{n-1}, so each b_n is the negated coefficient with b_n unset
    """
    check_normalized(f)
    order = f.order if order is None else min(order, f.order)
    coeffs = np.zeros(order + 1, dtype=complex)
    coeffs[1] = 1
    for n in range(2, order + 1):
        partial = TruncatedSeries(coeffs[: n + 1])
        coeffs[n] = -compose(f.truncate(n), partial)[n]
    return TruncatedSeries(coeffs)


def inverse_mfold(f: MFoldFn) -> MFoldFn:
    """m-fold inverse of an m-fold function at the same truncation index"""
    return MFoldFn.from_series(invert(f.embed()), f.m, f.K)


def closed_inverse_1fold(a2: complex, a3: complex, a4: complex) -> InverseCoeffs:
    """b_2, b_3, b_4 of the inverse of z + a_2 z^2 + a_3 z^3 + a_4 z^4 + ..."""
    return InverseCoeffs(
        1,
        -a2,
        2 * a2**2 - a3,
        -(5 * a2**3 - 5 * a2 * a3 + a4),
    )


def closed_inverse_mfold(m: int, am1: complex, a2m1: complex, a3m1: complex) -> InverseCoeffs:
    """b_{m+1}, b_{2m+1}, b_{3m+1} of the inverse of an m-fold function"""
    return InverseCoeffs(
        m,
        -am1,
        (m + 1) * am1**2 - a2m1,
        -(
            0.5 * (m + 1) * (3 * m + 2) * am1**3
            - (3 * m + 2) * am1 * a2m1
            + a3m1
        ),
    )
