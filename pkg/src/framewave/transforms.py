"""The four reference-frame changes and their action on wavefunctions.

Each transform is a unitary U fixed by its coordinate and momentum maps

    U x U^-1 = X(x, t),      U p U^-1 = P(p, t),

both affine, plus a free time-only phase policy chi(t) (a cubic polynomial).
Position and momentum eigenstates pick up real phases under U^-1:

    U^-1 |x0> = exp(+i*alpha/hbar) |X(x0, t)>,
    U^-1 |p0> = exp(+i*beta /hbar) |P(p0, t)>,

and consistency of <x0|p0> forces the single identity

    p*x = beta(p, t) - alpha(x, t) + P(p, t) * X(x, t)

from which each kind's alpha and beta below are extracted.  On wavefunctions
the transform acts as

    psi'(x) = exp(-i*alpha(x, t)/hbar) * psi(X(x, t)),
    phi'(p) = exp(-i*beta (p, t)/hbar) * phi(P(p, t)).

Transforms are active: a boost of velocity V adds +m*V to the momentum of the
state.  The coordinate map is realized by the exact band-limited shift; the
x-dependent phase is applied pointwise and is exact on the periodic grid only
when the momentum kick it carries is an integer multiple of dp (see
:func:`commensurability_report`).
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Union

import numpy as np

from .grids import (
    Grid1D,
    MomentumWaveFunction,
    WaveFunction,
    fourier_shift,
    momentum_shift,
)
from .polynomials import SpaceTimePolynomial, TimePolynomial

COMMENSURATE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class SpatialTranslation:
    """X = x - shift, P = p."""

    shift: float
    time_phase: TimePolynomial = TimePolynomial()

    kind = "spatial_translation"

    def coord_map(self, x, t):
        return x - self.shift

    def momentum_map(self, p, t):
        return p + 0.0 * t

    def coordinate_shift(self, t):
        return self.shift + 0.0 * t

    def momentum_kick(self, t):
        return 0.0 * t

    def position_phase(self, x, t):
        return self.time_phase(t) + 0.0 * x

    def momentum_phase(self, p, t):
        return p * self.shift + self.time_phase(t)

    def position_phase_poly(self) -> SpaceTimePolynomial:
        return SpaceTimePolynomial(offset=self.time_phase)


@dataclass(frozen=True)
class MomentumTranslation:
    """X = x, P = p - kick.  Not a change of frame, but unitary all the same."""

    kick: float
    time_phase: TimePolynomial = TimePolynomial()

    kind = "momentum_translation"

    def coord_map(self, x, t):
        return x + 0.0 * t

    def momentum_map(self, p, t):
        return p - self.kick + 0.0 * t

    def coordinate_shift(self, t):
        return 0.0 * t

    def momentum_kick(self, t):
        return self.kick + 0.0 * t

    def position_phase(self, x, t):
        return -self.kick * x + self.time_phase(t)

    def momentum_phase(self, p, t):
        return self.time_phase(t) + 0.0 * p

    def position_phase_poly(self) -> SpaceTimePolynomial:
        return SpaceTimePolynomial(
            offset=self.time_phase, slope=TimePolynomial.constant(-self.kick)
        )


@dataclass(frozen=True)
class GalileanBoost:
    """X = x - velocity*t, P = p - mass*velocity."""

    velocity: float
    mass: float
    time_phase: TimePolynomial = TimePolynomial()

    kind = "galilean_boost"

    def __post_init__(self):
        if not np.all(np.asarray(self.mass) > 0.0):
            raise ValueError(f"mass must be positive, got {self.mass}")

    def coord_map(self, x, t):
        return x - self.velocity * t

    def momentum_map(self, p, t):
        return p - self.mass * self.velocity + 0.0 * t

    def coordinate_shift(self, t):
        return self.velocity * t

    def momentum_kick(self, t):
        return self.mass * self.velocity + 0.0 * t

    def position_phase(self, x, t):
        return (
            -self.mass * self.velocity * x
            + 0.5 * self.mass * self.velocity**2 * t
            + self.time_phase(t)
        )

    def momentum_phase(self, p, t):
        return (
            p * self.velocity * t
            - 0.5 * self.mass * self.velocity**2 * t
            + self.time_phase(t)
        )

    def position_phase_poly(self) -> SpaceTimePolynomial:
        return SpaceTimePolynomial(
            offset=self.time_phase
            + TimePolynomial((0.0, 0.5 * self.mass * self.velocity**2)),
            slope=TimePolynomial.constant(-self.mass * self.velocity),
        )


@dataclass(frozen=True)
class ConstantAcceleration:
    """X = x - acceleration*t**2/2, P = p - mass*acceleration*t."""

    acceleration: float
    mass: float
    time_phase: TimePolynomial = TimePolynomial()

    kind = "constant_acceleration"

    def __post_init__(self):
        if not np.all(np.asarray(self.mass) > 0.0):
            raise ValueError(f"mass must be positive, got {self.mass}")

    def coord_map(self, x, t):
        return x - 0.5 * self.acceleration * t**2

    def momentum_map(self, p, t):
        return p - self.mass * self.acceleration * t

    def coordinate_shift(self, t):
        return 0.5 * self.acceleration * t**2

    def momentum_kick(self, t):
        return self.mass * self.acceleration * t

    def position_phase(self, x, t):
        return (
            -self.mass * self.acceleration * t * x
            + self.mass * self.acceleration**2 * t**3 / 6.0
            + self.time_phase(t)
        )

    def momentum_phase(self, p, t):
        return (
            0.5 * p * self.acceleration * t**2
            - self.mass * self.acceleration**2 * t**3 / 3.0
            + self.time_phase(t)
        )

    def position_phase_poly(self) -> SpaceTimePolynomial:
        return SpaceTimePolynomial(
            offset=self.time_phase
            + TimePolynomial((0.0, 0.0, 0.0, self.mass * self.acceleration**2 / 6.0)),
            slope=TimePolynomial((0.0, -self.mass * self.acceleration)),
        )


FrameTransform = Union[
    SpatialTranslation, MomentumTranslation, GalileanBoost, ConstantAcceleration
]

TRANSFORM_KINDS = (
    SpatialTranslation.kind,
    MomentumTranslation.kind,
    GalileanBoost.kind,
    ConstantAcceleration.kind,
)


def with_time_phase(transform: FrameTransform, time_phase: TimePolynomial) -> FrameTransform:
    return dataclasses.replace(transform, time_phase=time_phase)


def coord_map(transform: FrameTransform, x, t):
    """X(x, t)."""
    return transform.coord_map(x, t)


def momentum_map(transform: FrameTransform, p, t):
    """P(p, t)."""
    return transform.momentum_map(p, t)


def position_phase(transform: FrameTransform, x, t):
    """The real phase alpha(x, t) (action units) of the eigenstate map."""
    return transform.position_phase(x, t)


def momentum_phase(transform: FrameTransform, p, t):
    """The real phase beta(p, t) (action units) of the eigenstate map."""
    return transform.momentum_phase(p, t)


def position_phase_poly(transform: FrameTransform) -> SpaceTimePolynomial:
    """alpha as a polynomial in (x, t) for fixed transform parameters."""
    return transform.position_phase_poly()


def phase_identity_residual(transform: FrameTransform, x, p, t):
    """Residual of p*x = beta - alpha + P*X; identically zero up to rounding.

    This is the single constraint all the phase pairs are extracted from, so
    it doubles as the module's central self-check.
    """
    return p * x - (
        transform.momentum_phase(p, t)
        - transform.position_phase(x, t)
        + transform.momentum_map(p, t) * transform.coord_map(x, t)
    )


@dataclass(frozen=True)
class CommensurabilityReport:
    """How exactly a transform fits onto a given grid at a given time.

    The x-dependent phase of a transform carries a momentum kick; the grid
    can only absorb kicks that are integer multiples of dp without breaking
    periodicity.  Coordinate shifts are exact for any value (band-limited
    shift); their dx-alignment is still reported since index-aligned shifts
    are circular sample shifts.
    """

    time: float
    momentum_kick: float
    kick_in_dp: float
    kick_deviation: float
    kick_commensurate: bool
    coordinate_shift: float
    shift_in_dx: float
    shift_deviation: float
    shift_commensurate: bool

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)


def _alignment(value: float, unit: float) -> tuple:
    ratio = value / unit
    deviation = abs(value - round(ratio) * unit)
    return ratio, deviation, bool(abs(ratio - round(ratio)) <= COMMENSURATE_TOLERANCE)


def commensurability_report(
    transform: FrameTransform, grid: Grid1D, t: float
) -> CommensurabilityReport:
    kick = float(transform.momentum_kick(t))
    shift = float(transform.coordinate_shift(t))
    kick_ratio, kick_dev, kick_ok = _alignment(kick, grid.dp)
    shift_ratio, shift_dev, shift_ok = _alignment(shift, grid.dx)
    return CommensurabilityReport(
        time=float(t),
        momentum_kick=kick,
        kick_in_dp=kick_ratio,
        kick_deviation=kick_dev,
        kick_commensurate=kick_ok,
        coordinate_shift=shift,
        shift_in_dx=shift_ratio,
        shift_deviation=shift_dev,
        shift_commensurate=shift_ok,
    )


def _kick_warning(transform: FrameTransform, grid: Grid1D, t: float):
    report = commensurability_report(transform, grid, t)
    if report.kick_commensurate:
        return None
    return (
        f"non-commensurate momentum kick: {report.momentum_kick:.17g}"
        f" = {report.kick_in_dp:.17g} dp at t={t:.17g}"
    )


def apply_position(transform: FrameTransform, psi: WaveFunction) -> WaveFunction:
    """Transform a position-space wavefunction at its own timestamp.

    psi'(x) = exp(-i*alpha(x, t)/hbar) * psi(X(x, t)), with the argument
    shift realized by the band-limited Fourier shift and the phase applied
    pointwise.  A non-commensurate momentum kick is still applied but flags
    the result with a warning.
    """
    g = psi.grid
    t = psi.time
    shifted = fourier_shift(psi, -float(transform.coordinate_shift(t)))
    phase = np.exp(-1j * transform.position_phase(g.x, t) / g.hbar)
    out = WaveFunction(g, phase * shifted.samples, t, psi.warnings)
    warning = _kick_warning(transform, g, t)
    return out.with_warning(warning) if warning else out


def apply_momentum(
    transform: FrameTransform, phi: MomentumWaveFunction
) -> MomentumWaveFunction:
    """Momentum-space counterpart of :func:`apply_position`.

    phi'(p) = exp(-i*beta(p, t)/hbar) * phi(P(p, t)), with the momentum
    argument shift realized by the dual band-limited shift and the p-dependent
    phase applied pointwise.
    """
    g = phi.grid
    t = phi.time
    shifted = momentum_shift(phi, float(transform.momentum_kick(t)))
    phase = np.exp(-1j * transform.momentum_phase(g.p, t) / g.hbar)
    out = MomentumWaveFunction(g, phase * shifted.samples, t, phi.warnings)
    warning = _kick_warning(transform, g, t)
    return out.with_warning(warning) if warning else out
