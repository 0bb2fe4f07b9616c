"""Scenario orchestration: covariance experiments, identity sweeps, suites.

The central experiment is the covariance check.  For a transform U with
phase policy chi and a Hamiltonian H, build K from the closed form and
compare two routes to the same state:

    path A: propagate psi0 under H to each checkpoint, then apply U there;
    path B: apply U to psi0 at t = 0, then propagate under K.

The comparison uses the plain (phase-sensitive) L2 distance: all the phase
bookkeeping of the transforms lives in absolute phases, and quotienting by a
global phase would hide exactly the errors the check exists to catch.  The
gauge check, by contrast, deliberately runs a transform whose phase policy
does not match the Hamiltonian pair and verifies that the two paths then
disagree by precisely a global phase.

Identity sweeps draw random arguments and parameters in bulk (the phase
formulas broadcast over array-valued parameters) and report worst-case
residuals of the eigenphase identities.
"""

from __future__ import annotations

import dataclasses
import platform
import time

import numpy as np

from . import __version__
from .classical import (
    free_principal_function,
    generating_function_deviation,
    hamilton_jacobi_residual,
    momentum_generating_residual,
    transform_principal_function,
    uniform_force_principal_function,
)
from .config import (
    CHECK_NAMES,
    ConfigError,
    GaussianSpec,
    PlaneWaveSpec,
    Scenario,
    scenario_from_dict,
)
from .grids import (
    WaveFunction,
    distance_up_to_phase,
    gaussian_packet,
    l2_distance,
    plane_wave,
    to_momentum,
)
from .hamiltonians import (
    AffineHamiltonian,
    invariance_time_phase,
    transformed_hamiltonian,
    uniform_force,
    free_particle,
)
from .polynomials import TimePolynomial
from .propagator import propagate
from .reporting import FAIL, INFO, PASS, CheckResult, Report
from .transforms import (
    ConstantAcceleration,
    FrameTransform,
    GalileanBoost,
    MomentumTranslation,
    SpatialTranslation,
    TRANSFORM_KINDS,
    apply_momentum,
    apply_position,
    commensurability_report,
    phase_identity_residual,
    with_time_phase,
)

PHASE_IDENTITY_DETAIL = "eigenphase identity p*x = beta - alpha + P*X"
EXCHANGE_IDENTITY_DETAIL = "exchange identity beta = alpha + p*x - P*X"
COVARIANCE_DETAIL = (
    "covariance: transform-then-propagate(K) vs propagate(H)-then-transform"
)
MOMENTUM_DUALITY_DETAIL = (
    "duality: to_momentum(apply_position(psi)) vs apply_momentum(to_momentum(psi))"
)
GAUGE_DETAIL = (
    "gauge: with a mismatched time phase the two covariance paths differ by a "
    "global phase only"
)
ORDER_DETAIL = "dt-halving of the covariance mismatch (second-order splitting)"

GAUGE_PLAIN_FLOOR = 1e-2
GAUGE_FLAG_RADIANS = 0.1
ORDER_RATIO_BAND = (3.2, 4.8)


def _versions() -> dict:
    return {
        "framewave": __version__,
        "numpy": np.__version__,
        "python": platform.python_version(),
    }


def _grid_dict(grid) -> dict:
    return {
        "n_points": grid.n_points,
        "length": grid.length,
        "x_min": grid.x_min,
        "hbar": grid.hbar,
    }


def _transform_dict(transform: FrameTransform) -> dict:
    data = dataclasses.asdict(transform)
    data["time_phase"] = list(transform.time_phase.coefficients)
    data["kind"] = transform.kind
    return data


def _hamiltonian_dict(h: AffineHamiltonian) -> dict:
    return {
        "mass": h.mass,
        "momentum_offset": h.momentum_offset,
        "force": h.force,
        "scalar_term": list(h.scalar_term.coefficients),
    }


def _state_dict(state) -> dict:
    if isinstance(state, GaussianSpec):
        return {
            "kind": "gaussian",
            "center": state.center,
            "momentum": state.momentum,
            "width": state.width,
        }
    return {"kind": "plane_wave", "mode": state.mode}


def initial_state(scenario: Scenario) -> WaveFunction:
    if isinstance(scenario.state, PlaneWaveSpec):
        return plane_wave(scenario.grid, scenario.state.mode)
    return gaussian_packet(scenario.grid, scenario.state)


def resolve_transform(scenario: Scenario) -> FrameTransform:
    """Apply the auto-invariance flag, if set, to the scenario transform."""
    if not scenario.auto_invariance:
        return scenario.transform
    chi = invariance_time_phase(scenario.transform, scenario.hamiltonian)
    if chi is None:
        raise ConfigError(
            f"scenario {scenario.name!r}: no time phase makes this transform "
            "leave the Hamiltonian invariant"
        )
    return with_time_phase(scenario.transform, chi)


def _checkpoint_times(scenario: Scenario, checkpoints=None) -> list:
    count = checkpoints if checkpoints is not None else scenario.checkpoints
    return [scenario.t_end * k / count for k in range(1, count + 1)]


def _covariance_paths(scenario, transform, k_hamiltonian, dt=None, checkpoints=None):
    """Run both covariance routes; distances at every checkpoint."""
    dt = dt if dt is not None else scenario.dt
    psi0 = initial_state(scenario)
    state_a = psi0
    state_b = apply_position(transform, psi0)
    times, plain, quotient = [], [], []
    transformed_a = state_b
    for tau in _checkpoint_times(scenario, checkpoints):
        state_a = propagate(state_a, scenario.hamiltonian, tau, dt)
        state_b = propagate(state_b, k_hamiltonian, tau, dt)
        transformed_a = apply_position(transform, state_a)
        times.append(tau)
        plain.append(l2_distance(transformed_a, state_b))
        quotient.append(distance_up_to_phase(transformed_a, state_b))
    return times, plain, quotient, transformed_a, state_b


def _scenario_metadata(scenario, transform, k_hamiltonian, warnings=()) -> dict:
    grid = scenario.grid
    return {
        "grid": _grid_dict(grid),
        "state": _state_dict(scenario.state),
        "hamiltonian": _hamiltonian_dict(scenario.hamiltonian),
        "transform": _transform_dict(transform),
        "transformed_hamiltonian": _hamiltonian_dict(k_hamiltonian),
        "t_end": scenario.t_end,
        "dt": scenario.dt,
        "checkpoints": scenario.checkpoints,
        "seed": scenario.seed,
        "commensurability": {
            "t_start": commensurability_report(transform, grid, 0.0).to_dict(),
            "t_end": commensurability_report(transform, grid, scenario.t_end).to_dict(),
        },
        "versions": _versions(),
        "warnings": sorted(set(warnings)),
    }


def run_covariance(scenario: Scenario) -> Report:
    """Plain-distance agreement of the two covariance routes."""
    started = time.perf_counter()
    transform = resolve_transform(scenario)
    k_hamiltonian = transformed_hamiltonian(transform, scenario.hamiltonian)
    tolerance = scenario.tolerance("covariance")
    times, plain, quotient, final_a, final_b = _covariance_paths(
        scenario, transform, k_hamiltonian
    )
    checks = [
        CheckResult.compare(
            f"covariance[t={tau:.6f}]", "l2_distance", value, tolerance,
            COVARIANCE_DETAIL,
        )
        for tau, value in zip(times, plain)
    ]
    checks.append(
        CheckResult.compare(
            "covariance_max", "l2_distance", max(plain), tolerance, COVARIANCE_DETAIL
        )
    )
    report = Report(
        name=f"{scenario.name}/covariance",
        checks=checks,
        metadata=_scenario_metadata(
            scenario, transform, k_hamiltonian,
            warnings=final_a.warnings + final_b.warnings,
        ),
        timing={"seconds": time.perf_counter() - started},
    )
    report.curves = {
        "checkpoint_times": np.asarray(times),
        "plain_distance": np.asarray(plain),
        "quotient_distance": np.asarray(quotient),
        "x": np.asarray(scenario.grid.x),
        "density_a": np.abs(final_a.samples) ** 2,
        "density_b": np.abs(final_b.samples) ** 2,
    }
    return report


def run_momentum_consistency(scenario: Scenario) -> Report:
    """Position-route vs momentum-route application of the transform.

    Checked on the initial state and on the state propagated to t_end.  A
    non-commensurate momentum kick downgrades the row to informational, since
    the grid cannot represent the transform exactly there.
    """
    started = time.perf_counter()
    transform = resolve_transform(scenario)
    k_hamiltonian = transformed_hamiltonian(transform, scenario.hamiltonian)
    tolerance = scenario.tolerance("momentum")
    psi0 = initial_state(scenario)
    psi_end = propagate(psi0, scenario.hamiltonian, scenario.t_end, scenario.dt)
    checks = []
    warnings = []
    for label, psi in (("t_start", psi0), ("t_end", psi_end)):
        route_position = to_momentum(apply_position(transform, psi))
        route_momentum = apply_momentum(transform, to_momentum(psi))
        deviation = l2_distance(route_position, route_momentum)
        commensurate = commensurability_report(
            transform, scenario.grid, psi.time
        ).kick_commensurate
        if commensurate:
            checks.append(
                CheckResult.compare(
                    f"momentum_duality[{label}]", "l2_distance", deviation,
                    tolerance, MOMENTUM_DUALITY_DETAIL,
                )
            )
        else:
            checks.append(
                CheckResult(
                    f"momentum_duality[{label}]", INFO, "l2_distance",
                    deviation, None,
                    MOMENTUM_DUALITY_DETAIL + " (non-commensurate kick: no gate)",
                )
            )
        warnings.extend(route_position.warnings)
    return Report(
        name=f"{scenario.name}/momentum",
        checks=checks,
        metadata=_scenario_metadata(scenario, transform, k_hamiltonian, warnings),
        timing={"seconds": time.perf_counter() - started},
    )


def run_gauge_comparison(scenario: Scenario) -> Report:
    """What goes wrong (and what survives) with a mismatched time phase.

    The scenario transform carries the "wrong" phase policy (typically zero).
    Both covariance paths are run against the invariance Hamiltonian K = H:
    with the invariance phase the paths agree outright; with the wrong phase
    they differ by exactly the predictable global phase, so the quotient
    distance stays small while the plain distance is large wherever that
    phase is away from a multiple of 2*pi.
    """
    started = time.perf_counter()
    wrong = scenario.transform
    chi_star = invariance_time_phase(wrong, scenario.hamiltonian)
    if chi_star is None:
        raise ConfigError(
            f"scenario {scenario.name!r}: gauge check needs an invariance-"
            "compatible transform/Hamiltonian pair"
        )
    reference = with_time_phase(wrong, chi_star)
    tolerance = scenario.tolerance("gauge")
    hbar = scenario.grid.hbar

    times, ref_plain, _, _, _ = _covariance_paths(
        scenario, reference, scenario.hamiltonian
    )
    _, wrong_plain, wrong_quotient, final_a, final_b = _covariance_paths(
        scenario, wrong, scenario.hamiltonian
    )

    def phase_gap(tau: float) -> float:
        gap = (chi_star(tau) - wrong.time_phase(tau)) / hbar
        gap -= (chi_star(0.0) - wrong.time_phase(0.0)) / hbar
        gap = abs(gap) % (2.0 * np.pi)
        return min(gap, 2.0 * np.pi - gap)

    checks = [
        CheckResult.compare(
            f"gauge_reference[t={tau:.6f}]", "l2_distance", value, tolerance,
            GAUGE_DETAIL + "; matched phase: paths agree outright",
        )
        for tau, value in zip(times, ref_plain)
    ]
    flagged = 0
    prediction_error = 0.0
    for tau, plain_value, quotient_value in zip(times, wrong_plain, wrong_quotient):
        gap = phase_gap(tau)
        checks.append(
            CheckResult.compare(
                f"gauge_quotient[t={tau:.6f}]", "distance_up_to_phase",
                quotient_value, tolerance, GAUGE_DETAIL,
            )
        )
        prediction_error = max(
            prediction_error, abs(plain_value - 2.0 * abs(np.sin(gap / 2.0)))
        )
        if gap > GAUGE_FLAG_RADIANS:
            flagged += 1
            checks.append(
                CheckResult.compare(
                    f"gauge_plain[t={tau:.6f}]", "l2_distance", plain_value,
                    GAUGE_PLAIN_FLOOR,
                    GAUGE_DETAIL + "; mismatched phase must show up plainly",
                    larger_is_better=True,
                )
            )
    checks.append(
        CheckResult(
            "gauge_flagged_checkpoints", PASS if flagged else FAIL,
            "count", float(flagged), None,
            "at least one checkpoint must sit away from a 2*pi phase wrap",
        )
    )
    checks.append(
        CheckResult.compare(
            "gauge_phase_prediction", "max_abs_error", prediction_error, tolerance,
            "plain distance equals 2*|sin(phase gap / 2)|",
        )
    )
    report = Report(
        name=f"{scenario.name}/gauge",
        checks=checks,
        metadata=_scenario_metadata(
            scenario, wrong, scenario.hamiltonian,
            warnings=final_a.warnings + final_b.warnings,
        ),
        timing={"seconds": time.perf_counter() - started},
    )
    report.curves = {
        "checkpoint_times": np.asarray(times),
        "plain_distance": np.asarray(wrong_plain),
        "quotient_distance": np.asarray(wrong_quotient),
        "reference_distance": np.asarray(ref_plain),
    }
    return report


def run_convergence(scenario: Scenario, halvings: int = 3) -> Report:
    """Covariance mismatch under dt-halving.

    For a second-order splitting the mismatch drops fourfold per halving
    until it reaches the rounding floor (the `order` tolerance); once both
    sides of a ratio sit at the floor the ratio is no longer informative and
    the level passes by the floor clause.
    """
    started = time.perf_counter()
    transform = resolve_transform(scenario)
    k_hamiltonian = transformed_hamiltonian(transform, scenario.hamiltonian)
    floor = scenario.tolerance("order")
    mismatches = []
    checks = []
    for level in range(halvings + 1):
        dt = scenario.dt / 2**level
        _, plain, _, _, _ = _covariance_paths(
            scenario, transform, k_hamiltonian, dt=dt, checkpoints=1
        )
        mismatches.append(plain[-1])
        checks.append(
            CheckResult(
                f"order_mismatch[dt={dt:.9f}]", INFO, "l2_distance",
                plain[-1], None, ORDER_DETAIL,
            )
        )
    for level in range(1, halvings + 1):
        previous, current = mismatches[level - 1], mismatches[level]
        at_floor = current <= floor
        ratio = previous / current if current > 0.0 else float("inf")
        ok = at_floor or ORDER_RATIO_BAND[0] <= ratio <= ORDER_RATIO_BAND[1]
        checks.append(
            CheckResult(
                f"order_ratio[halving={level}]", PASS if ok else FAIL,
                "mismatch_ratio", ratio if np.isfinite(ratio) else 0.0, 4.0,
                ORDER_DETAIL + (" (at floor)" if at_floor else ""),
            )
        )
    report = Report(
        name=f"{scenario.name}/order",
        checks=checks,
        metadata=_scenario_metadata(scenario, transform, k_hamiltonian),
        timing={"seconds": time.perf_counter() - started},
    )
    report.curves = {
        "dt": np.asarray([scenario.dt / 2**k for k in range(halvings + 1)]),
        "mismatch": np.asarray(mismatches),
    }
    return report


def _sweep_transform(kind: str, rng, n_samples: int, scale: float):
    chi = TimePolynomial(tuple(rng.uniform(-1.0, 1.0, n_samples) for _ in range(4)))
    parameter = rng.uniform(-2.0, 2.0, n_samples) * scale
    parameter[0] = 0.0  # always include the identity transform
    mass = rng.uniform(0.5, 2.0, n_samples)
    if kind == "spatial_translation":
        return SpatialTranslation(shift=parameter, time_phase=chi)
    if kind == "momentum_translation":
        return MomentumTranslation(kick=parameter, time_phase=chi)
    if kind == "galilean_boost":
        return GalileanBoost(velocity=parameter, mass=mass, time_phase=chi)
    if kind == "constant_acceleration":
        return ConstantAcceleration(acceleration=parameter, mass=mass, time_phase=chi)
    raise ValueError(f"unknown transform kind {kind!r}")


def run_bas_sweep(
    kind: str,
    n_samples: int = 10_000,
    seed: int = 0,
    scale: float = 1.0,
    tolerance: float = 1e-12,
) -> Report:
    """Worst-case eigenphase-identity residuals over random draws.

    Arguments x, p stay of order one; `scale` stretches the time and
    transform-parameter draws for conditioning studies (the identity is exact,
    so the residual only measures rounding of the largest term).
    """
    started = time.perf_counter()
    rng = np.random.default_rng(seed)
    x = rng.uniform(-2.0, 2.0, n_samples)
    p = rng.uniform(-2.0, 2.0, n_samples)
    t = rng.uniform(-2.0, 2.0, n_samples) * scale
    transform = _sweep_transform(kind, rng, n_samples, scale)
    identity = np.max(np.abs(phase_identity_residual(transform, x, p, t)))
    exchange = np.max(np.abs(momentum_generating_residual(transform, x, p, t)))
    checks = [
        CheckResult.compare(
            f"phase_identity[{kind}]", "max_abs_residual", identity, tolerance,
            PHASE_IDENTITY_DETAIL,
        ),
        CheckResult.compare(
            f"exchange_identity[{kind}]", "max_abs_residual", exchange, tolerance,
            EXCHANGE_IDENTITY_DETAIL,
        ),
    ]
    return Report(
        name=f"identities/{kind}",
        checks=checks,
        metadata={
            "kind": kind,
            "n_samples": n_samples,
            "seed": seed,
            "scale": scale,
            "versions": _versions(),
        },
        timing={"seconds": time.perf_counter() - started},
    )


def _classical_grid():
    from .grids import make_grid

    return make_grid(1024, 40.0, -20.0, 1.0)


def run_classical_suite(seed: int = 0) -> Report:
    """Generating-function checks: alpha == F1, transport, and the bridge."""
    started = time.perf_counter()
    rng = np.random.default_rng(seed)
    checks = []

    # alpha == F1, coefficient-wise, over random parameterizations per kind.
    n_draws = 1000
    for kind in TRANSFORM_KINDS:
        transform = _sweep_transform(kind, rng, n_draws, scale=1.0)
        checks.append(
            CheckResult.compare(
                f"generating_function[{kind}]", "max_abs_coefficient_gap",
                generating_function_deviation(transform), 1e-13,
                "the quantum position phase coincides with the generating function",
            )
        )

    # Hamilton-Jacobi transport: S' = S(X) - F1 solves the K equation.
    mass = rng.uniform(0.5, 2.0)
    momentum = rng.uniform(-2.0, 2.0)
    force = rng.uniform(0.5, 2.0)
    shift = rng.uniform(-2.0, 2.0)
    velocity = rng.uniform(-2.0, 2.0)
    acceleration = rng.uniform(0.5, 2.0)
    kick = rng.uniform(-2.0, 2.0)
    xs = np.linspace(-3.0, 3.0, 13)[:, None]
    ts = np.linspace(0.0, 2.0, 9)[None, :]

    translation = SpatialTranslation(shift=shift)
    translation = with_time_phase(
        translation, invariance_time_phase(translation, uniform_force(mass, force))
    )
    rows = [
        ("spatial_translation", translation, uniform_force(mass, force),
         uniform_force_principal_function(momentum, mass, force)),
        ("galilean_boost", GalileanBoost(velocity=velocity, mass=mass),
         free_particle(mass), free_principal_function(momentum, mass)),
        ("constant_acceleration",
         ConstantAcceleration(acceleration=acceleration, mass=mass),
         free_particle(mass), free_principal_function(momentum, mass)),
        ("momentum_translation", MomentumTranslation(kick=kick),
         free_particle(mass), free_principal_function(momentum, mass)),
    ]
    for kind, transform, hamiltonian, principal in rows:
        seed_residual = hamilton_jacobi_residual(principal, hamiltonian, xs, ts)
        k_hamiltonian = transformed_hamiltonian(transform, hamiltonian)
        transported = transform_principal_function(principal, transform)
        checks.append(
            CheckResult.compare(
                f"hj_seed[{kind}]", "max_abs_residual", seed_residual, 1e-12,
                "the seed principal function solves its own Hamilton-Jacobi equation",
            )
        )
        checks.append(
            CheckResult.compare(
                f"hj_transport[{kind}]", "max_abs_residual",
                hamilton_jacobi_residual(transported, k_hamiltonian, xs, ts), 1e-12,
                "S' = S(X) - F1 solves the Hamilton-Jacobi equation for K",
            )
        )

    # Semiclassical bridge: exp(i*S/hbar) plane waves map to exp(i*S'/hbar).
    grid = _classical_grid()
    bridge_time = 0.75
    mode = 4
    momentum0 = mode * grid.dp
    bridge_mass = 1.0
    principal = free_principal_function(momentum0, bridge_mass)
    bridge_pairs = [
        ("galilean_boost",
         GalileanBoost(velocity=8.0 * grid.dp / bridge_mass, mass=bridge_mass)),
        ("constant_acceleration",
         ConstantAcceleration(
             acceleration=8.0 * grid.dp / (bridge_mass * bridge_time),
             mass=bridge_mass,
         )),
    ]
    for kind, transform in bridge_pairs:
        psi = WaveFunction(
            grid,
            np.exp(1j * principal(grid.x, bridge_time) / grid.hbar)
            / np.sqrt(grid.length),
            time=bridge_time,
        )
        transported = transform_principal_function(principal, transform)
        expected = np.exp(1j * transported(grid.x, bridge_time) / grid.hbar) / np.sqrt(
            grid.length
        )
        deviation = np.max(np.abs(apply_position(transform, psi).samples - expected))
        checks.append(
            CheckResult.compare(
                f"semiclassical_bridge[{kind}]", "max_abs_pointwise", deviation,
                1e-10,
                "apply_position maps exp(i*S/hbar) to exp(i*S'/hbar) pointwise",
            )
        )

    return Report(
        name="classical",
        checks=checks,
        metadata={"seed": seed, "versions": _versions()},
        timing={"seconds": time.perf_counter() - started},
    )


_DEFAULT_GRID = {"n_points": 1024, "length": 40.0, "x_min": -20.0, "hbar": 1.0}
_DEFAULT_STATE = {"kind": "gaussian", "center": 0.0, "momentum": "4*dp", "width": 1.0}

DEFAULT_SCENARIO_DICTS = [
    {
        "name": "boost-free",
        "grid": _DEFAULT_GRID,
        "state": _DEFAULT_STATE,
        "hamiltonian": {"mass": 1.0},
        "transform": {"kind": "galilean_boost", "velocity": "8*dp/m", "mass": "m"},
        "t_end": 1.0,
        "dt": 1.0e-3,
        "checks": ["covariance", "momentum"],
    },
    {
        "name": "acceleration-free",
        "grid": _DEFAULT_GRID,
        "state": _DEFAULT_STATE,
        "hamiltonian": {"mass": 1.0},
        "transform": {
            "kind": "constant_acceleration",
            "acceleration": "8*dp/m",
            "mass": "m",
        },
        "t_end": 1.0,
        "dt": 1.0e-3,
        "checks": ["covariance"],
    },
    {
        "name": "translation-uniform-force",
        "grid": _DEFAULT_GRID,
        "state": _DEFAULT_STATE,
        "hamiltonian": {"mass": 1.0, "force": 2.0},
        "transform": {
            "kind": "spatial_translation",
            "shift": 1.0,
            "auto_invariance": True,
        },
        "t_end": 1.0,
        "dt": 1.0e-3,
        "checks": ["covariance"],
    },
    {
        "name": "translation-gauge",
        "grid": _DEFAULT_GRID,
        "state": _DEFAULT_STATE,
        "hamiltonian": {"mass": 1.0, "force": 2.0},
        "transform": {"kind": "spatial_translation", "shift": 1.0},
        "t_end": 1.0,
        "dt": 1.0e-3,
        "checks": ["gauge"],
    },
]


def default_scenarios() -> list:
    return [scenario_from_dict(dict(entry)) for entry in DEFAULT_SCENARIO_DICTS]


_CHECK_RUNNERS = {
    "covariance": run_covariance,
    "momentum": run_momentum_consistency,
    "gauge": run_gauge_comparison,
    "order": run_convergence,
}

assert set(_CHECK_RUNNERS) == set(CHECK_NAMES)


def run_scenario(scenario: Scenario) -> Report:
    """Run every check the scenario asks for, merged into one report."""
    merged = Report(name=scenario.name)
    total = 0.0
    for check in scenario.checks:
        part = _CHECK_RUNNERS[check](scenario)
        merged.checks.extend(part.checks)
        merged.metadata.update(part.metadata)
        merged.curves.update(part.curves)
        total += part.timing.get("seconds", 0.0)
    merged.timing = {"seconds": total}
    return merged


def run_full_suite(seed: int = 0, scenarios=None) -> list:
    """Identity sweeps, the classical suite, then every scenario."""
    reports = [
        run_bas_sweep(kind, seed=seed + index)
        for index, kind in enumerate(TRANSFORM_KINDS)
    ]
    reports.append(run_classical_suite(seed))
    for scenario in scenarios if scenarios is not None else default_scenarios():
        reports.append(run_scenario(scenario))
    return reports
