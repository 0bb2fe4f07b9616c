"""Split-step spectral propagation for affine Hamiltonians.

Second-order symmetric (Strang) splitting of exp(-i*H*dt/hbar):

    psi -> exp(-i*V*dt/(2*hbar)) psi        half step, position space
    psi -> FFT -> exp(-i*(p-A)**2*dt/(2*m*hbar)) -> IFFT
    psi -> exp(-i*V*dt/(2*hbar)) psi        half step, position space

with V(x, t) = -F*x + e(t).  The scalar term e(t) commutes with everything,
so its contribution is applied as the exact closed-form integral of e over
each half interval rather than a sampled value; evolution with e != 0 then
differs from the e == 0 evolution by exactly exp(-i*integral(e)/hbar), which
keeps absolute phases trustworthy at the 1e-12 level the frame-change checks
need.  For affine potentials the only nonvanishing splitting commutator is a
c-number, so the scheme is exact up to a global phase of size O(dt**2 * T).

All factors are unimodular: the discrete norm is conserved to rounding.
"""

from __future__ import annotations

import numpy as np

from .grids import Grid1D, GaussianSpec, WaveFunction, from_momentum, to_momentum
from .hamiltonians import AffineHamiltonian

STEP_COUNT_TOLERANCE = 1e-9


def _kinetic_factor(grid: Grid1D, h: AffineHamiltonian, dt: float) -> np.ndarray:
    return np.exp(
        -0.5j * dt * (grid.p - h.momentum_offset) ** 2 / (h.mass * grid.hbar)
    )


def _force_half_factor(grid: Grid1D, h: AffineHamiltonian, dt: float) -> np.ndarray:
    return np.exp(0.5j * h.force * grid.x * dt / grid.hbar)


def _scalar_phase(h: AffineHamiltonian, t0: float, t1: float, hbar: float) -> complex:
    return np.exp(-1j * h.scalar_term.integral(t0, t1) / hbar)


def step(psi: WaveFunction, hamiltonian: AffineHamiltonian, dt: float) -> WaveFunction:
    """One symmetric split step from psi.time to psi.time + dt.

    dt may be negative: the step with -dt from the advanced time is the exact
    inverse (same midpoint, conjugate factors), which is what time-reversal
    tests compose.
    """
    g = psi.grid
    t0 = psi.time
    mid = t0 + 0.5 * dt
    half = _force_half_factor(g, hamiltonian, dt)
    samples = psi.samples * half * _scalar_phase(hamiltonian, t0, mid, g.hbar)
    samples = np.fft.ifft(np.fft.fft(samples) * _kinetic_factor(g, hamiltonian, dt))
    samples = samples * half * _scalar_phase(hamiltonian, mid, t0 + dt, g.hbar)
    return WaveFunction(g, samples, t0 + dt, psi.warnings)


def propagate(
    psi: WaveFunction, hamiltonian: AffineHamiltonian, t_end: float, dt: float
) -> WaveFunction:
    """Propagate psi forward to t_end in exact steps of dt.

    Requires dt > 0 and (t_end - psi.time)/dt a positive integer.
    """
    if not dt > 0.0:
        raise ValueError(f"dt must be positive, got {dt}")
    ratio = (t_end - psi.time) / dt
    n_steps = round(ratio)
    if n_steps < 1 or abs(ratio - n_steps) > STEP_COUNT_TOLERANCE * max(1.0, ratio):
        raise ValueError(
            f"(t_end - time)/dt = {ratio!r} is not a positive integer step count"
        )
    g = psi.grid
    t0 = psi.time
    half = _force_half_factor(g, hamiltonian, dt)
    kinetic = _kinetic_factor(g, hamiltonian, dt)
    samples = psi.samples
    for k in range(n_steps):
        ta = t0 + k * dt
        mid = ta + 0.5 * dt
        tb = t0 + (k + 1) * dt
        samples = samples * half * _scalar_phase(hamiltonian, ta, mid, g.hbar)
        samples = np.fft.ifft(np.fft.fft(samples) * kinetic)
        samples = samples * half * _scalar_phase(hamiltonian, mid, tb, g.hbar)
    return WaveFunction(g, samples, t_end, psi.warnings)


def analytic_free_gaussian(
    spec: GaussianSpec, mass: float, grid: Grid1D, t: float
) -> WaveFunction:
    """Closed-form freely evolving Gaussian packet at time t.

    The complex squared width s(t) = sigma**2 + i*hbar*t/(2m) gives

        psi(x, t) = (2*pi)**-0.25 * sqrt(sigma)/sqrt(s(t))
                    * exp(i*p0*x/hbar - i*p0**2*t/(2*m*hbar)
                          - (x - x0 - p0*t/m)**2 / (4*s(t)))

    matching gaussian_packet at t = 0.  Serves as the solver-independent
    reference for spreading and frame-change checks.
    """
    hbar = grid.hbar
    s_t = spec.width**2 + 0.5j * hbar * t / mass
    center = spec.center + spec.momentum * t / mass
    x = grid.x
    prefactor = (2.0 * np.pi) ** -0.25 * np.sqrt(spec.width) / np.sqrt(s_t)
    phase = spec.momentum * x / hbar - spec.momentum**2 * t / (2.0 * mass * hbar)
    samples = prefactor * np.exp(1j * phase - (x - center) ** 2 / (4.0 * s_t))
    return WaveFunction(grid, samples, t)


def analytic_uniform_force_gaussian(
    spec: GaussianSpec, mass: float, force: float, grid: Grid1D, t: float
) -> WaveFunction:
    """Closed-form Gaussian evolving under H = p**2/(2m) - F*x.

    The solution is the free one carried along the accelerated trajectory:

        psi(x, t) = exp(i*(F*t*x - F**2*t**3/(6m))/hbar)
                    * psi_free(x - F*t**2/(2m), t).

    Independent oracle for the genuinely non-commuting splitting case (the
    free evolution above has no potential factor at all).
    """
    hbar = grid.hbar
    drop = 0.5 * force * t**2 / mass
    s_t = spec.width**2 + 0.5j * hbar * t / mass
    x_shifted = grid.x - drop
    center = spec.center + spec.momentum * t / mass
    prefactor = (2.0 * np.pi) ** -0.25 * np.sqrt(spec.width) / np.sqrt(s_t)
    free_phase = (
        spec.momentum * x_shifted / hbar
        - spec.momentum**2 * t / (2.0 * mass * hbar)
    )
    free_samples = prefactor * np.exp(
        1j * free_phase - (x_shifted - center) ** 2 / (4.0 * s_t)
    )
    carry = np.exp(
        1j * (force * t * grid.x - force**2 * t**3 / (6.0 * mass)) / hbar
    )
    return WaveFunction(grid, carry * free_samples, t)


def apply_hamiltonian(hamiltonian: AffineHamiltonian, psi: WaveFunction) -> WaveFunction:
    """H psi: kinetic part spectrally, potential part pointwise."""
    g = psi.grid
    h = hamiltonian
    phi = to_momentum(psi)
    kinetic = from_momentum(
        type(phi)(g, (g.p - h.momentum_offset) ** 2 / (2.0 * h.mass) * phi.samples,
                  phi.time, phi.warnings)
    ).samples
    potential = (-h.force * g.x + h.scalar_term(psi.time)) * psi.samples
    return WaveFunction(g, kinetic + potential, psi.time, psi.warnings)


def schrodinger_residual(
    before: WaveFunction,
    at: WaveFunction,
    after: WaveFunction,
    hamiltonian: AffineHamiltonian,
) -> float:
    """|| i*hbar*(psi(t+d) - psi(t-d))/(2d) - H psi(t) || for a state triple.

    O(d**2) plus solver error for genuine solutions of the Schrodinger
    equation; order-one for states that merely look plausible.
    """
    if before.grid != at.grid or after.grid != at.grid:
        raise ValueError("states live on different grids")
    d1 = at.time - before.time
    d2 = after.time - at.time
    if not (d1 > 0.0 and abs(d1 - d2) <= 1e-12 * max(abs(d1), abs(d2))):
        raise ValueError(f"states must be equally spaced in time, got {d1} and {d2}")
    hbar = at.grid.hbar
    derivative = (after.samples - before.samples) / (d1 + d2)
    residual = 1j * hbar * derivative - apply_hamiltonian(hamiltonian, at).samples
    return float(np.sqrt(np.sum(np.abs(residual) ** 2) * at.grid.dx))
