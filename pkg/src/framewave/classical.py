"""Canonical-transformation side of the frame changes.

Every frame transform here is a canonical transformation of extended phase
space, so it carries a generating function F1(x, t) defined (up to a
constant) by

    P dX - H dt - (p dx - K dt) = dF1.

Working that out per kind reproduces, term for term, the quantum phase
alpha(x, t) of :mod:`framewave.transforms` -- that coincidence is the bridge
between the two pictures and is checked coefficient-wise by
:func:`generating_function_deviation`.  The momentum phase beta satisfies the
rearranged identity beta = alpha + p*x - P*X (an exchange-type generating
combination; p and P are not independent here, so no generating-function
semantics are claimed for it).

Hamilton principal functions S(x, t) solve dS/dt + H(x, dS/dx, t) = 0 and
transport under a frame change as

    S'(x, t) = S(X(x, t), t) - F1(x, t),

after which S' solves the Hamilton-Jacobi equation for the transformed
Hamiltonian K.  The linear-in-x complete integrals below cover every
Hamiltonian in the affine family.
"""

from __future__ import annotations

import numpy as np

from .hamiltonians import AffineHamiltonian, evaluate
from .polynomials import SpaceTimePolynomial, TimePolynomial
from .transforms import (
    ConstantAcceleration,
    FrameTransform,
    GalileanBoost,
    MomentumTranslation,
    SpatialTranslation,
    position_phase_poly,
)


def generating_function(transform: FrameTransform) -> SpaceTimePolynomial:
    """F1 for the transform, derived from P dX - p dx = (H - K) dt + dF1.

    Per kind (chi is the transform's free time phase):

        spatial translation:    F1 = chi(t)
        momentum translation:   F1 = -kick*x + chi(t)
        Galilean boost:         F1 = m*V**2*t/2 - m*V*x + chi(t)
        constant acceleration:  F1 = -m*a*x*t + m*a**2*t**3/6 + chi(t)
    """
    chi = transform.time_phase
    if isinstance(transform, SpatialTranslation):
        return SpaceTimePolynomial(offset=chi)
    if isinstance(transform, MomentumTranslation):
        return SpaceTimePolynomial(
            offset=chi, slope=TimePolynomial.constant(-transform.kick)
        )
    if isinstance(transform, GalileanBoost):
        m, v = transform.mass, transform.velocity
        return SpaceTimePolynomial(
            offset=TimePolynomial((0.0, 0.5 * m * v**2)) + chi,
            slope=TimePolynomial.constant(-m * v),
        )
    if isinstance(transform, ConstantAcceleration):
        m, a = transform.mass, transform.acceleration
        return SpaceTimePolynomial(
            offset=TimePolynomial((0.0, 0.0, 0.0, m * a**2 / 6.0)) + chi,
            slope=TimePolynomial((0.0, -m * a)),
        )
    raise TypeError(f"unknown transform {transform!r}")


def generating_function_deviation(transform: FrameTransform) -> float:
    """Max coefficient gap between the quantum phase alpha and F1.

    Zero (to rounding) for all four kinds and any chi: the eigenstate phase
    of the unitary and the classical generating function are the same object.
    """
    return generating_function(transform).max_abs_coefficient_difference(
        position_phase_poly(transform)
    )


def momentum_generating_residual(transform: FrameTransform, x, p, t):
    """Residual of beta = alpha + p*x - P*X; identically zero up to rounding."""
    return transform.momentum_phase(p, t) - (
        transform.position_phase(x, t)
        + p * x
        - transform.momentum_map(p, t) * transform.coord_map(x, t)
    )


def free_principal_function(momentum: float, mass: float) -> SpaceTimePolynomial:
    """S = p0*x - p0**2*t/(2m), a complete integral for the free particle."""
    return SpaceTimePolynomial(
        offset=TimePolynomial((0.0, -(momentum**2) / (2.0 * mass))),
        slope=TimePolynomial.constant(momentum),
    )


def uniform_force_principal_function(
    momentum: float, mass: float, force: float
) -> SpaceTimePolynomial:
    """Complete integral for H = p**2/(2m) - F*x:

    S = (p0 + F*t)*x - [p0**2*t + p0*F*t**2 + F**2*t**3/3] / (2m).
    """
    return SpaceTimePolynomial(
        offset=TimePolynomial(
            (
                0.0,
                -(momentum**2) / (2.0 * mass),
                -momentum * force / (2.0 * mass),
                -(force**2) / (6.0 * mass),
            )
        ),
        slope=TimePolynomial((momentum, force)),
    )


def hamilton_jacobi_residual(
    principal: SpaceTimePolynomial, hamiltonian: AffineHamiltonian, x, t
) -> float:
    """max |dS/dt + H(x, dS/dx, t)| over the sample points (broadcast)."""
    x = np.asarray(x, dtype=float)
    t = np.asarray(t, dtype=float)
    s_t = principal.partial_t()(x, t)
    s_x = principal.partial_x()(x, t)
    return float(np.max(np.abs(s_t + evaluate(hamiltonian, x, s_x, t))))


def transform_principal_function(
    principal: SpaceTimePolynomial, transform: FrameTransform
) -> SpaceTimePolynomial:
    """S'(x, t) = S(X(x, t), t) - F1(x, t).

    The substitution uses the transform's coordinate map X = x - s(t); if S
    solves the Hamilton-Jacobi equation for H, the result solves it for the
    transformed Hamiltonian K built with the same chi.
    """
    zero = TimePolynomial()
    shift = {
        SpatialTranslation: lambda tr: TimePolynomial.constant(tr.shift),
        MomentumTranslation: lambda tr: zero,
        GalileanBoost: lambda tr: TimePolynomial((0.0, tr.velocity)),
        ConstantAcceleration: lambda tr: TimePolynomial(
            (0.0, 0.0, 0.5 * tr.acceleration)
        ),
    }[type(transform)](transform)
    return principal.substitute_position(shift) - generating_function(transform)
