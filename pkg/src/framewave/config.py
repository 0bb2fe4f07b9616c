"""Scenario configuration: schema, validation, and parameter expressions.

Scenario files are YAML mappings (a single scenario or ``scenarios: [...]``).
Unknown keys are errors.  Numeric leaf fields accept small arithmetic
expressions so grid-commensurate parameters stay readable and exact, e.g.
``velocity: 8*dp/m``.  Available names: pi, N, L, dx, dp, hbar, and m (the
Hamiltonian mass; not available inside the grid or hamiltonian sections).
"""

from __future__ import annotations

import ast
import operator
from dataclasses import dataclass, field
from pathlib import Path

import yaml

from .grids import GaussianSpec, Grid1D, make_grid
from .hamiltonians import AffineHamiltonian
from .polynomials import TimePolynomial
from .transforms import (
    ConstantAcceleration,
    FrameTransform,
    GalileanBoost,
    MomentumTranslation,
    SpatialTranslation,
)

CHECK_NAMES = ("covariance", "momentum", "gauge", "order")

DEFAULT_TOLERANCES = {
    "covariance": 1e-6,
    "momentum": 1e-10,
    "gauge": 1e-6,
    "order": 1e-10,
}


class ConfigError(Exception):
    """A scenario file does not satisfy the schema."""


@dataclass(frozen=True)
class PlaneWaveSpec:
    """Initial plane-wave state exp(i*mode*dp*x/hbar)/sqrt(L)."""

    mode: int


@dataclass
class Scenario:
    """A fully resolved experiment: state, dynamics, transform, checks."""

    name: str
    grid: Grid1D
    state: GaussianSpec | PlaneWaveSpec
    hamiltonian: AffineHamiltonian
    transform: FrameTransform
    auto_invariance: bool
    t_end: float
    dt: float
    checkpoints: int = 10
    checks: tuple = ("covariance",)
    seed: int = 0
    tolerances: dict = field(default_factory=dict)

    def tolerance(self, check: str) -> float:
        return self.tolerances.get(check, DEFAULT_TOLERANCES[check])


_BINARY_OPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.Pow: operator.pow,
}
_UNARY_OPS = {ast.UAdd: operator.pos, ast.USub: operator.neg}


def _eval_node(node: ast.expr, names: dict) -> float:
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
        return float(node.value)
    if isinstance(node, ast.Name):
        try:
            return names[node.id]
        except KeyError:
            raise ConfigError(
                f"unknown name {node.id!r} in expression; available: "
                + ", ".join(sorted(names))
            ) from None
    if isinstance(node, ast.BinOp) and type(node.op) in _BINARY_OPS:
        return _BINARY_OPS[type(node.op)](
            _eval_node(node.left, names), _eval_node(node.right, names)
        )
    if isinstance(node, ast.UnaryOp) and type(node.op) in _UNARY_OPS:
        return _UNARY_OPS[type(node.op)](_eval_node(node.operand, names))
    raise ConfigError(f"unsupported expression element {ast.dump(node)}")


def eval_number(value, names: dict, where: str) -> float:
    """A number, or a restricted arithmetic expression over grid names."""
    if isinstance(value, bool):
        raise ConfigError(f"{where}: expected a number, got {value!r}")
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, str):
        try:
            tree = ast.parse(value, mode="eval")
        except SyntaxError as err:
            raise ConfigError(f"{where}: bad expression {value!r}: {err}") from None
        return float(_eval_node(tree.body, names))
    raise ConfigError(f"{where}: expected a number or expression, got {value!r}")


def _require_mapping(data, where: str) -> dict:
    if not isinstance(data, dict):
        raise ConfigError(f"{where} must be a mapping, got {type(data).__name__}")
    return data


def _check_keys(data: dict, allowed: set, required: set, where: str) -> None:
    unknown = set(data) - allowed
    if unknown:
        raise ConfigError(f"{where}: unknown keys {sorted(unknown)}")
    missing = required - set(data)
    if missing:
        raise ConfigError(f"{where}: missing keys {sorted(missing)}")


def _time_phase(value, names: dict, where: str) -> TimePolynomial:
    if not isinstance(value, (list, tuple)) or len(value) > 4:
        raise ConfigError(f"{where}: time_phase must be a list of <= 4 coefficients")
    return TimePolynomial(tuple(eval_number(c, names, where) for c in value))


def _parse_grid(data, where: str) -> Grid1D:
    data = _require_mapping(data, where)
    _check_keys(data, {"n_points", "length", "x_min", "hbar"},
                {"n_points", "length", "x_min"}, where)
    base = {"pi": 3.141592653589793}
    try:
        return make_grid(
            n_points=int(data["n_points"]),
            length=eval_number(data["length"], base, f"{where}.length"),
            x_min=eval_number(data["x_min"], base, f"{where}.x_min"),
            hbar=eval_number(data.get("hbar", 1.0), base, f"{where}.hbar"),
        )
    except ValueError as err:
        raise ConfigError(f"{where}: {err}") from None


def _parse_hamiltonian(data, names: dict, where: str) -> AffineHamiltonian:
    data = _require_mapping(data, where)
    _check_keys(data, {"mass", "momentum_offset", "force", "scalar_term"},
                {"mass"}, where)
    scalar = data.get("scalar_term", [])
    try:
        return AffineHamiltonian(
            mass=eval_number(data["mass"], names, f"{where}.mass"),
            momentum_offset=eval_number(
                data.get("momentum_offset", 0.0), names, f"{where}.momentum_offset"
            ),
            force=eval_number(data.get("force", 0.0), names, f"{where}.force"),
            scalar_term=_time_phase(scalar, names, f"{where}.scalar_term"),
        )
    except ValueError as err:
        raise ConfigError(f"{where}: {err}") from None


_TRANSFORM_PARAMS = {
    "spatial_translation": (SpatialTranslation, ("shift",)),
    "momentum_translation": (MomentumTranslation, ("kick",)),
    "galilean_boost": (GalileanBoost, ("velocity", "mass")),
    "constant_acceleration": (ConstantAcceleration, ("acceleration", "mass")),
}


def _parse_transform(data, names: dict, where: str):
    data = _require_mapping(data, where)
    kind = data.get("kind")
    if kind not in _TRANSFORM_PARAMS:
        raise ConfigError(
            f"{where}.kind must be one of {sorted(_TRANSFORM_PARAMS)}, got {kind!r}"
        )
    cls, params = _TRANSFORM_PARAMS[kind]
    _check_keys(data, {"kind", "time_phase", "auto_invariance", *params},
                {"kind", *params}, where)
    auto = data.get("auto_invariance", False)
    if not isinstance(auto, bool):
        raise ConfigError(f"{where}.auto_invariance must be a boolean")
    if auto and "time_phase" in data:
        raise ConfigError(f"{where}: give either time_phase or auto_invariance")
    kwargs = {
        name: eval_number(data[name], names, f"{where}.{name}") for name in params
    }
    try:
        transform = cls(
            **kwargs, time_phase=_time_phase(data.get("time_phase", []), names, where)
        )
    except ValueError as err:
        raise ConfigError(f"{where}: {err}") from None
    return transform, auto


def _parse_state(data, names: dict, where: str):
    data = _require_mapping(data, where)
    kind = data.get("kind")
    if kind == "gaussian":
        _check_keys(data, {"kind", "center", "momentum", "width"}, {"kind"}, where)
        try:
            return GaussianSpec(
                center=eval_number(data.get("center", 0.0), names, f"{where}.center"),
                momentum=eval_number(
                    data.get("momentum", 0.0), names, f"{where}.momentum"
                ),
                width=eval_number(data.get("width", 1.0), names, f"{where}.width"),
            )
        except ValueError as err:
            raise ConfigError(f"{where}: {err}") from None
    if kind == "plane_wave":
        _check_keys(data, {"kind", "mode"}, {"kind", "mode"}, where)
        if not isinstance(data["mode"], int):
            raise ConfigError(f"{where}.mode must be an integer")
        return PlaneWaveSpec(mode=data["mode"])
    raise ConfigError(f"{where}.kind must be 'gaussian' or 'plane_wave', got {kind!r}")


def scenario_from_dict(data, default_name: str = "scenario") -> Scenario:
    """Validate one scenario mapping and resolve it into live objects."""
    data = _require_mapping(data, "scenario")
    allowed = {"name", "grid", "state", "hamiltonian", "transform", "t_end", "dt",
               "checkpoints", "checks", "seed", "tolerances"}
    required = {"grid", "state", "hamiltonian", "transform", "t_end", "dt"}
    _check_keys(data, allowed, required, "scenario")

    grid = _parse_grid(data["grid"], "grid")
    names = {
        "pi": 3.141592653589793,
        "N": float(grid.n_points),
        "L": grid.length,
        "dx": grid.dx,
        "dp": grid.dp,
        "hbar": grid.hbar,
    }
    hamiltonian = _parse_hamiltonian(data["hamiltonian"], names, "hamiltonian")
    names["m"] = hamiltonian.mass
    transform, auto = _parse_transform(data["transform"], names, "transform")
    state = _parse_state(data["state"], names, "state")

    checks = data.get("checks", ["covariance"])
    if not isinstance(checks, list) or not checks:
        raise ConfigError("checks must be a non-empty list")
    for check in checks:
        if check not in CHECK_NAMES:
            raise ConfigError(
                f"unknown check {check!r}; available: {', '.join(CHECK_NAMES)}"
            )

    tolerances = _require_mapping(data.get("tolerances", {}), "tolerances")
    _check_keys(tolerances, set(CHECK_NAMES), set(), "tolerances")
    tolerances = {
        key: eval_number(value, names, f"tolerances.{key}")
        for key, value in tolerances.items()
    }

    checkpoints = data.get("checkpoints", 10)
    if not isinstance(checkpoints, int) or checkpoints < 1:
        raise ConfigError(f"checkpoints must be a positive integer, got {checkpoints}")
    seed = data.get("seed", 0)
    if not isinstance(seed, int):
        raise ConfigError(f"seed must be an integer, got {seed!r}")
    name = data.get("name", default_name)
    if not isinstance(name, str) or not name:
        raise ConfigError("name must be a non-empty string")

    t_end = eval_number(data["t_end"], names, "t_end")
    dt = eval_number(data["dt"], names, "dt")
    if not dt > 0.0:
        raise ConfigError(f"dt must be positive, got {dt}")
    if not t_end > 0.0:
        raise ConfigError(f"t_end must be positive, got {t_end}")
    steps = t_end / dt
    if abs(steps - round(steps)) > 1e-9 * max(1.0, steps) or round(steps) < checkpoints:
        raise ConfigError(
            f"t_end/dt = {steps!r} must be an integer >= checkpoints ({checkpoints})"
        )
    if round(steps) % checkpoints != 0:
        raise ConfigError(
            f"step count {round(steps)} is not divisible into {checkpoints} checkpoints"
        )

    return Scenario(
        name=name,
        grid=grid,
        state=state,
        hamiltonian=hamiltonian,
        transform=transform,
        auto_invariance=auto,
        t_end=t_end,
        dt=dt,
        checkpoints=checkpoints,
        checks=tuple(checks),
        seed=seed,
        tolerances=tolerances,
    )


def load_scenarios(path) -> list:
    """Read scenarios from a YAML file (single mapping or scenarios: [...])."""
    text = Path(path).read_text()
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as err:
        raise ConfigError(f"{path}: {err}") from None
    data = _require_mapping(data, str(path))
    if "scenarios" in data:
        if set(data) != {"scenarios"}:
            raise ConfigError(f"{path}: 'scenarios' cannot be mixed with other keys")
        entries = data["scenarios"]
        if not isinstance(entries, list) or not entries:
            raise ConfigError(f"{path}: scenarios must be a non-empty list")
        return [
            scenario_from_dict(entry, default_name=f"scenario-{i:02d}")
            for i, entry in enumerate(entries, start=1)
        ]
    return [scenario_from_dict(data, default_name=Path(path).stem)]
