"""Exact low-degree polynomial arithmetic.

Two small polynomial families cover every phase and action in this package:
cubic polynomials of time (free phase policies, scalar Hamiltonian terms) and
bivariate polynomials of (x, t) with degree <= 1 in x and <= 3 in t (phase
functions, generating functions, principal functions).  All operations are
plain coefficient arithmetic with no truncation; any operation that would
push a coefficient outside the degree bounds raises instead of discarding it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

T_DEGREE = 3


class DegreeOverflowError(ValueError):
    """An exact polynomial operation left the supported degree range."""


def _pad(coefficients) -> tuple:
    coeffs = tuple(coefficients)
    if len(coeffs) > T_DEGREE + 1:
        raise DegreeOverflowError(
            f"at most {T_DEGREE + 1} time coefficients supported, got {len(coeffs)}"
        )
    return coeffs + (0.0,) * (T_DEGREE + 1 - len(coeffs))


@dataclass(frozen=True)
class TimePolynomial:
    """c0 + c1*t + c2*t**2 + c3*t**3.

    Coefficients are usually floats; array coefficients are accepted so the
    same formulas evaluate over whole parameter sweeps at once.
    """

    coefficients: tuple = (0.0, 0.0, 0.0, 0.0)

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _pad(self.coefficients))

    @classmethod
    def constant(cls, value) -> "TimePolynomial":
        return cls((value,))

    def __call__(self, t):
        c0, c1, c2, c3 = self.coefficients
        return c0 + t * (c1 + t * (c2 + t * c3))

    def derivative(self) -> "TimePolynomial":
        c0, c1, c2, c3 = self.coefficients
        return TimePolynomial((c1, 2.0 * c2, 3.0 * c3, 0.0))

    def antiderivative(self) -> "TimePolynomial":
        """Antiderivative vanishing at t = 0; defined only up to cubics."""
        c0, c1, c2, c3 = self.coefficients
        if not np.all(c3 == 0.0):
            raise DegreeOverflowError("cubic term would integrate to degree 4")
        return TimePolynomial((0.0, c0, c1 / 2.0, c2 / 3.0))

    def integral(self, t0: float, t1: float):
        """Definite integral over [t0, t1], exact in the coefficients."""
        return sum(
            c * (t1 ** (j + 1) - t0 ** (j + 1)) / (j + 1)
            for j, c in enumerate(self.coefficients)
        )

    def __add__(self, other: "TimePolynomial") -> "TimePolynomial":
        return TimePolynomial(
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients))
        )

    def __sub__(self, other: "TimePolynomial") -> "TimePolynomial":
        return TimePolynomial(
            tuple(a - b for a, b in zip(self.coefficients, other.coefficients))
        )

    def __neg__(self) -> "TimePolynomial":
        return TimePolynomial(tuple(-a for a in self.coefficients))

    def scaled(self, factor) -> "TimePolynomial":
        return TimePolynomial(tuple(factor * a for a in self.coefficients))

    def max_abs_coefficient(self) -> float:
        return float(np.max([np.max(np.abs(c)) for c in self.coefficients]))


def _multiply(a: tuple, b: tuple) -> tuple:
    """Full convolution of two coefficient tuples (no degree bound)."""
    out = [0.0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] = out[i + j] + ai * bj
    return tuple(out)


@dataclass(frozen=True)
class SpaceTimePolynomial:
    """offset(t) + x * slope(t), with both rows cubic in t.

    This is the family sum_{i<=1, j<=3} c[i][j] x**i t**j written with the
    x**0 and x**1 rows kept as time polynomials.  It is closed under
    evaluation, d/dx, d/dt, subtraction, and the affine substitutions
    x -> x - s(t) used here; a substitution that would need t**4 or higher
    raises DegreeOverflowError.
    """

    offset: TimePolynomial = TimePolynomial()
    slope: TimePolynomial = TimePolynomial()

    @classmethod
    def from_time(cls, poly: TimePolynomial) -> "SpaceTimePolynomial":
        return cls(offset=poly)

    @property
    def coefficients(self) -> tuple:
        """Rows (x**0, x**1) of t coefficients, matching c[i][j]."""
        return (self.offset.coefficients, self.slope.coefficients)

    def __call__(self, x, t):
        return self.offset(t) + x * self.slope(t)

    def partial_x(self) -> "SpaceTimePolynomial":
        return SpaceTimePolynomial(offset=self.slope)

    def partial_t(self) -> "SpaceTimePolynomial":
        return SpaceTimePolynomial(
            offset=self.offset.derivative(), slope=self.slope.derivative()
        )

    def substitute_position(self, shift: TimePolynomial) -> "SpaceTimePolynomial":
        """Exact substitution x -> x - shift(t)."""
        product = _multiply(shift.coefficients, self.slope.coefficients)
        for k in range(T_DEGREE + 1, len(product)):
            if np.any(product[k] != 0.0):
                raise DegreeOverflowError(
                    "substitution produces a t-degree above "
                    f"{T_DEGREE} (coefficient at t**{k} is {product[k]!r})"
                )
        correction = TimePolynomial(product[: T_DEGREE + 1])
        return SpaceTimePolynomial(offset=self.offset - correction, slope=self.slope)

    def __add__(self, other: "SpaceTimePolynomial") -> "SpaceTimePolynomial":
        return SpaceTimePolynomial(self.offset + other.offset, self.slope + other.slope)

    def __sub__(self, other: "SpaceTimePolynomial") -> "SpaceTimePolynomial":
        return SpaceTimePolynomial(self.offset - other.offset, self.slope - other.slope)

    def max_abs_coefficient_difference(self, other: "SpaceTimePolynomial") -> float:
        diff = self - other
        return max(
            diff.offset.max_abs_coefficient(), diff.slope.max_abs_coefficient()
        )
