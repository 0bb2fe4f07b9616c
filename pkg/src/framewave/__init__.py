"""Unitary reference-frame changes for 1D wavefunctions on periodic grids.

A numerical laboratory for how wavefunctions, Hamiltonians, and Hamilton
principal functions change under spatial translations, momentum translations,
Galilean boosts, and constant accelerations: the eigenstate phases of the
frame unitary, its action on grid wavefunctions, the transformed Hamiltonian,
split-step propagation, and the matching canonical-transformation picture.
"""

__version__ = "0.1.0"

from .classical import (
    free_principal_function,
    generating_function,
    generating_function_deviation,
    hamilton_jacobi_residual,
    momentum_generating_residual,
    transform_principal_function,
    uniform_force_principal_function,
)
from .config import ConfigError, PlaneWaveSpec, Scenario, load_scenarios
from .grids import (
    GaussianSpec,
    Grid1D,
    MomentumWaveFunction,
    WaveFunction,
    distance_up_to_phase,
    fourier_shift,
    from_momentum,
    gaussian_packet,
    inner,
    l2_distance,
    make_grid,
    mean_momentum,
    mean_position,
    momentum_shift,
    plane_wave,
    position_variance,
    to_momentum,
)
from .hamiltonians import (
    AffineHamiltonian,
    evaluate,
    free_particle,
    invariance_time_phase,
    transformed_hamiltonian,
    uniform_force,
)
from .harness import (
    default_scenarios,
    run_bas_sweep,
    run_classical_suite,
    run_covariance,
    run_full_suite,
    run_gauge_comparison,
    run_momentum_consistency,
    run_convergence,
    run_scenario,
)
from .polynomials import DegreeOverflowError, SpaceTimePolynomial, TimePolynomial
from .propagator import (
    analytic_free_gaussian,
    analytic_uniform_force_gaussian,
    apply_hamiltonian,
    propagate,
    schrodinger_residual,
    step,
)
from .reporting import CheckResult, Report
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
    coord_map,
    momentum_map,
    momentum_phase,
    phase_identity_residual,
    position_phase,
    position_phase_poly,
    with_time_phase,
)
