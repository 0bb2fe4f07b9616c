"""The affine Hamiltonian family and how frame changes act on it.

    H(x, p, t) = (p - A)**2 / (2m) - F*x + e(t)

with constant momentum offset A, constant force F and a cubic scalar term
e(t).  The family is closed under all four frame transforms (for the
mass-carrying kinds the transform mass must match the Hamiltonian mass): the
transformed Hamiltonian

    K = U H U^-1 + i*hbar*(dU/dt)*U^-1

is computed here in closed form per kind, by substituting x -> X(x, t),
p -> P(p, t) into H and adding the kind-specific time-derivative correction:

    spatial/momentum translation:  + chi'(t)
    Galilean boost:                + p*V - m*V**2/2             + chi'(t)
    constant acceleration:         + a*t*p - m*a*x - m*a**2*t**2/2 + chi'(t)

Only scalar (x- and p-free) terms can be absorbed by the free phase chi, so
invariance K == H has a solution exactly when conjugation changes nothing but
the scalar term.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .polynomials import DegreeOverflowError, TimePolynomial
from .transforms import (
    ConstantAcceleration,
    FrameTransform,
    GalileanBoost,
    MomentumTranslation,
    SpatialTranslation,
)


@dataclass(frozen=True)
class AffineHamiltonian:
    """H = (p - momentum_offset)**2 / (2*mass) - force*x + scalar_term(t)."""

    mass: float
    momentum_offset: float = 0.0
    force: float = 0.0
    scalar_term: TimePolynomial = TimePolynomial()

    def __post_init__(self):
        if not np.all(np.asarray(self.mass) > 0.0):
            raise ValueError(f"mass must be positive, got {self.mass}")


def free_particle(mass: float = 1.0) -> AffineHamiltonian:
    return AffineHamiltonian(mass=mass)


def uniform_force(mass: float, force: float) -> AffineHamiltonian:
    return AffineHamiltonian(mass=mass, force=force)


def evaluate(hamiltonian: AffineHamiltonian, x, p, t):
    """Classical value H(x, p, t); broadcasts over array arguments."""
    h = hamiltonian
    return (
        (p - h.momentum_offset) ** 2 / (2.0 * h.mass)
        - h.force * x
        + h.scalar_term(t)
    )


def _require_matching_mass(transform, hamiltonian) -> None:
    if transform.mass != hamiltonian.mass:
        raise ValueError(
            "transform mass and Hamiltonian mass must agree for the affine "
            f"family to stay closed ({transform.mass} != {hamiltonian.mass})"
        )


def transformed_hamiltonian(
    transform: FrameTransform, hamiltonian: AffineHamiltonian
) -> AffineHamiltonian:
    """Closed-form K for the given transform, renormalized into the family.

    The mass never changes; the momentum offset changes only under momentum
    translation (A -> A + kick); the force gains m*a under constant
    acceleration; everything else lands in the scalar term, whose degree
    stays <= 3.
    """
    h = hamiltonian
    chi_dot = transform.time_phase.derivative()
    if isinstance(transform, SpatialTranslation):
        extra = TimePolynomial.constant(h.force * transform.shift)
        return dataclasses.replace(h, scalar_term=h.scalar_term + extra + chi_dot)
    if isinstance(transform, MomentumTranslation):
        return dataclasses.replace(
            h,
            momentum_offset=h.momentum_offset + transform.kick,
            scalar_term=h.scalar_term + chi_dot,
        )
    if isinstance(transform, GalileanBoost):
        _require_matching_mass(transform, h)
        v = transform.velocity
        extra = TimePolynomial((h.momentum_offset * v, h.force * v))
        return dataclasses.replace(h, scalar_term=h.scalar_term + extra + chi_dot)
    if isinstance(transform, ConstantAcceleration):
        _require_matching_mass(transform, h)
        a = transform.acceleration
        extra = TimePolynomial((0.0, h.momentum_offset * a, 0.5 * h.force * a))
        return dataclasses.replace(
            h,
            force=h.force + h.mass * a,
            scalar_term=h.scalar_term + extra + chi_dot,
        )
    raise TypeError(f"unknown transform {transform!r}")


def conjugation_correction(transform: FrameTransform, x, p, t):
    """The i*hbar*(dU/dt)*U^-1 term of K, evaluated classically at (x, p, t).

    Together with H(X(x,t), P(p,t), t) this reconstructs K value-by-value,
    which is how the closed forms above are cross-checked.
    """
    chi_dot = transform.time_phase.derivative()
    if isinstance(transform, (SpatialTranslation, MomentumTranslation)):
        return chi_dot(t) + 0.0 * x + 0.0 * p
    if isinstance(transform, GalileanBoost):
        v = transform.velocity
        return p * v - 0.5 * transform.mass * v**2 + chi_dot(t) + 0.0 * x
    if isinstance(transform, ConstantAcceleration):
        a = transform.acceleration
        m = transform.mass
        return a * t * p - m * a * x - 0.5 * m * a**2 * t**2 + chi_dot(t)
    raise TypeError(f"unknown transform {transform!r}")


def invariance_time_phase(
    transform: FrameTransform, hamiltonian: AffineHamiltonian
) -> Optional[TimePolynomial]:
    """The chi making K == H coefficient-wise, or None if impossible.

    Only scalar mismatches can be absorbed by a function of t; any residual
    x or p dependence (momentum translation with a kick, acceleration) means
    no cubic chi works.  The additive constant is fixed to chi(0) = 0.
    """
    base = transformed_hamiltonian(
        dataclasses.replace(transform, time_phase=TimePolynomial()), hamiltonian
    )
    if (
        base.mass != hamiltonian.mass
        or base.momentum_offset != hamiltonian.momentum_offset
        or base.force != hamiltonian.force
    ):
        return None
    mismatch = base.scalar_term - hamiltonian.scalar_term
    try:
        return -mismatch.antiderivative()
    except DegreeOverflowError:
        return None
