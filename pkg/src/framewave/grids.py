"""Uniform periodic 1D grids and complex wavefunctions on them.

Conventions
-----------
Position grid: x_n = x_min + n*dx with dx = L/N and periodic boundary, so the
box is [x_min, x_min + L).  Momentum grid: the DFT frequency set scaled by
hbar, p_k = k*dp for the usual FFT integer frequencies k (0, 1, ..., -1) and
dp = 2*pi*hbar/L, covering [-pi*hbar/dx, pi*hbar/dx).  Momentum samples are
stored in FFT order, matching ``Grid1D.p``.

The position <-> momentum map follows the symmetric continuum convention

    phi(p) = (2*pi*hbar)**-0.5 * integral exp(-i*p*x/hbar) psi(x) dx

discretized with weight dx.  With the grid relations above this scaling makes
``to_momentum`` exactly unitary (sum |phi|^2 dp == sum |psi|^2 dx) and
``from_momentum`` its exact inverse up to FFT rounding.  ``fourier_shift``
evaluates the band-limited interpolant at shifted positions and is therefore
exact for any shift, commensurate with dx or not.

All operations are pure: they return new objects and never mutate samples in
place.  Sample arrays handed to constructors are adopted and must be treated
as read-only afterwards.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from functools import cached_property

import numpy as np

BOUNDARY_TAIL_LIMIT = 1e-10


@dataclass(frozen=True)
class Grid1D:
    """Uniform periodic grid with its dual momentum grid."""

    n_points: int
    length: float
    x_min: float
    hbar: float = 1.0

    @property
    def dx(self) -> float:
        return self.length / self.n_points

    @property
    def dp(self) -> float:
        return 2.0 * np.pi * self.hbar / self.length

    @cached_property
    def x(self) -> np.ndarray:
        values = self.x_min + self.dx * np.arange(self.n_points)
        values.setflags(write=False)
        return values

    @cached_property
    def p(self) -> np.ndarray:
        # fftfreq(N) * N is the exact integer frequency set 0..N/2-1, -N/2..-1
        values = self.dp * np.fft.fftfreq(self.n_points, d=1.0 / self.n_points)
        values.setflags(write=False)
        return values


def make_grid(n_points: int, length: float, x_min: float, hbar: float = 1.0) -> Grid1D:
    """Validated grid constructor: N must be a power of two >= 8.

    Power-of-two N keeps dx = L/N exact in binary floating point, so
    dx * N == L holds identically.
    """
    if n_points < 8 or (n_points & (n_points - 1)) != 0:
        raise ValueError(f"n_points must be a power of two >= 8, got {n_points}")
    if not length > 0.0:
        raise ValueError(f"length must be positive, got {length}")
    if not hbar > 0.0:
        raise ValueError(f"hbar must be positive, got {hbar}")
    return Grid1D(n_points=int(n_points), length=float(length),
                  x_min=float(x_min), hbar=float(hbar))


@dataclass(frozen=True, eq=False)
class _GridSamples:
    grid: Grid1D
    samples: np.ndarray
    time: float = 0.0
    warnings: tuple = ()

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=np.complex128)
        if samples.shape != (self.grid.n_points,):
            raise ValueError(
                f"expected {self.grid.n_points} samples, got shape {samples.shape}"
            )
        object.__setattr__(self, "samples", samples)

    @property
    def measure(self) -> float:
        raise NotImplementedError

    def norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.samples) ** 2) * self.measure))

    def normalized(self):
        return dataclasses.replace(self, samples=self.samples / self.norm())

    def with_warning(self, message: str):
        return dataclasses.replace(self, warnings=self.warnings + (message,))


class WaveFunction(_GridSamples):
    """Position-space samples psi(x_n) at a fixed time."""

    @property
    def measure(self) -> float:
        return self.grid.dx


class MomentumWaveFunction(_GridSamples):
    """Momentum-space samples phi(p_k) at a fixed time, in FFT order."""

    @property
    def measure(self) -> float:
        return self.grid.dp


@dataclass(frozen=True)
class GaussianSpec:
    """A Gaussian packet: exp(-(x-center)**2/(4 width**2)) * exp(i momentum x/hbar)."""

    center: float = 0.0
    momentum: float = 0.0
    width: float = 1.0

    def __post_init__(self):
        if not self.width > 0.0:
            raise ValueError(f"width must be positive, got {self.width}")


def gaussian_packet(grid: Grid1D, spec: GaussianSpec) -> WaveFunction:
    """Normalized Gaussian packet at time 0.

    If the packet amplitude at the box boundary exceeds 1e-10 the result
    carries a warning flag: periodic wrap-around will then pollute spectral
    operations.
    """
    x = grid.x
    envelope = np.exp(-((x - spec.center) ** 2) / (4.0 * spec.width**2))
    samples = envelope * np.exp(1j * spec.momentum * x / grid.hbar)
    psi = WaveFunction(grid, samples).normalized()
    tail = max(abs(psi.samples[0]), abs(psi.samples[-1]))
    if tail > BOUNDARY_TAIL_LIMIT:
        psi = psi.with_warning(
            f"boundary tail {tail:.3e} exceeds {BOUNDARY_TAIL_LIMIT:.0e}"
        )
    return psi


def plane_wave(grid: Grid1D, mode: int) -> WaveFunction:
    """Unit-norm plane wave exp(i*p*x/hbar)/sqrt(L) with p = mode*dp."""
    momentum = mode * grid.dp
    samples = np.exp(1j * momentum * grid.x / grid.hbar) / np.sqrt(grid.length)
    return WaveFunction(grid, samples)


def to_momentum(psi: WaveFunction) -> MomentumWaveFunction:
    """Unitary position -> momentum transform (see module docstring)."""
    g = psi.grid
    scale = g.dx / np.sqrt(2.0 * np.pi * g.hbar)
    samples = scale * np.exp(-1j * g.p * g.x_min / g.hbar) * np.fft.fft(psi.samples)
    return MomentumWaveFunction(g, samples, psi.time, psi.warnings)


def from_momentum(phi: MomentumWaveFunction) -> WaveFunction:
    """Exact inverse of :func:`to_momentum`."""
    g = phi.grid
    scale = np.sqrt(2.0 * np.pi * g.hbar) / g.dx
    samples = scale * np.fft.ifft(np.exp(1j * g.p * g.x_min / g.hbar) * phi.samples)
    return WaveFunction(g, samples, phi.time, phi.warnings)


def fourier_shift(psi: WaveFunction, shift: float) -> WaveFunction:
    """Return x -> psi(x + shift) via the band-limited interpolant.

    Exact for periodic band-limited signals; a shift equal to dx reduces to a
    circular index shift of the samples.
    """
    g = psi.grid
    spectrum = np.fft.fft(psi.samples) * np.exp(1j * g.p * shift / g.hbar)
    return WaveFunction(g, np.fft.ifft(spectrum), psi.time, psi.warnings)


def momentum_shift(phi: MomentumWaveFunction, kick: float) -> MomentumWaveFunction:
    """Return p -> phi(p - kick), the dual of :func:`fourier_shift`.

    Realized by evaluating the trigonometric interpolant of phi at shifted
    momenta, i.e. multiplying the position-space signal by exp(i*kick*x/hbar).
    For kick an integer multiple of dp (and x_min a multiple of dx) this is a
    circular index shift of the momentum samples.
    """
    g = phi.grid
    kicked = from_momentum(phi).samples * np.exp(1j * kick * g.x / g.hbar)
    return to_momentum(WaveFunction(g, kicked, phi.time, phi.warnings))


def _require_compatible(a: _GridSamples, b: _GridSamples) -> None:
    if type(a) is not type(b):
        raise ValueError(f"cannot mix {type(a).__name__} with {type(b).__name__}")
    if a.grid != b.grid:
        raise ValueError("wavefunctions live on different grids")


def inner(a: _GridSamples, b: _GridSamples) -> complex:
    """Discrete L2 inner product <a, b>, conjugate-linear in the first slot."""
    _require_compatible(a, b)
    return complex(np.sum(np.conj(a.samples) * b.samples) * a.measure)


def l2_distance(a: _GridSamples, b: _GridSamples) -> float:
    _require_compatible(a, b)
    return float(np.sqrt(np.sum(np.abs(a.samples - b.samples) ** 2) * a.measure))


def distance_up_to_phase(a: _GridSamples, b: _GridSamples) -> float:
    """min over theta of || a - exp(i*theta) b ||.

    Equals (||a||^2 + ||b||^2 - 2*|<a, b>|)**0.5; zero iff the states agree
    up to a global phase.
    """
    _require_compatible(a, b)
    gap = a.norm() ** 2 + b.norm() ** 2 - 2.0 * abs(inner(a, b))
    return float(np.sqrt(max(gap, 0.0)))


def mean_position(psi: WaveFunction) -> float:
    density = np.abs(psi.samples) ** 2
    return float(np.sum(psi.grid.x * density) / np.sum(density))


def position_variance(psi: WaveFunction) -> float:
    density = np.abs(psi.samples) ** 2
    total = np.sum(density)
    mean = np.sum(psi.grid.x * density) / total
    return float(np.sum((psi.grid.x - mean) ** 2 * density) / total)


def mean_momentum(phi: MomentumWaveFunction) -> float:
    density = np.abs(phi.samples) ** 2
    return float(np.sum(phi.grid.p * density) / np.sum(density))
