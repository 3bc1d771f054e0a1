"""Margin losses, their derivatives, and executable axiom predicates.

Five classic potentials ship with the package (exponential, mixed
linear/exponential, logistic, hinge, unhinged).  Each is packaged as an
immutable :class:`PotentialFunction` carrying vectorized ``eval``/``deriv``
callables and a declared axiom class.  The predicates :func:`check_def1`
and :func:`check_def3` test the two axiom systems on a finite grid and
report a witness for every failing clause.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable

import numpy as np

# Axiom classes a loss can declare.
CONVEX_POTENTIAL = "convex_potential"   # convex, nonincreasing, C1, phi'(0)<0, vanishing tail
RELAXED_ONLY = "relaxed_only"           # as above minus the vanishing-tail clause
NEITHER = "neither"

_AXIOM_CLASSES = (CONVEX_POTENTIAL, RELAXED_ONLY, NEITHER)

LOSS_NAMES = ("exponential", "mixed_linear_exponential", "logistic", "hinge", "unhinged")

# Slack tolerances for the grid predicates.
_CONVEXITY_SLACK = 1e-12
_MONOTONE_SLACK = 1e-12
_TAIL_THRESHOLD = 1e-6
_NONNEG_SLACK = 1e-12
_C1_STEP = 1e-6
_C1_REL_MISMATCH = 1e-3


class LossOverflowError(ArithmeticError):
    """A loss or derivative evaluation left the float64 range.

    Carries the offending margin ``z`` and, when raised from an
    expectation over a distribution, the offending atom as well.
    """

    def __init__(self, loss: str, z: float, atom_index: int | None = None, atom=None):
        self.loss = loss
        self.z = float(z)
        self.atom_index = atom_index
        self.atom = atom
        msg = f"{loss} loss overflows float64 at margin z={z!r}"
        if atom_index is not None:
            msg += f" (atom {atom_index}: {atom!r})"
        super().__init__(msg)


def _elementwise(core: Callable[[np.ndarray], np.ndarray]):
    """Lift an array-only kernel to accept scalars and arrays alike."""

    def wrapped(z):
        arr = np.asarray(z, dtype=float)
        out = core(np.atleast_1d(arr))
        return float(out[0]) if arr.ndim == 0 else out.reshape(arr.shape)

    return wrapped


@dataclass(frozen=True)
class PotentialFunction:
    """A scalar margin loss phi together with its derivative.

    ``eval`` and ``deriv`` map a margin (scalar or ndarray) to the loss
    value / slope at that margin.  Instances are immutable and safe to
    share across threads.
    """

    name: str
    eval: Callable
    deriv: Callable
    axiom_class: str

    def __post_init__(self):
        if self.axiom_class not in _AXIOM_CLASSES:
            raise ValueError(
                f"axiom_class must be one of {_AXIOM_CLASSES}, got {self.axiom_class!r}"
            )

    def __call__(self, z):
        return self.eval(z)


def _exp_eval(z: np.ndarray) -> np.ndarray:
    with np.errstate(over="ignore"):
        out = np.exp(-z)
    if not np.all(np.isfinite(out)):
        bad = z[~np.isfinite(out)]
        raise LossOverflowError("exponential", float(bad.flat[0]))
    return out


def _exp_deriv(z: np.ndarray) -> np.ndarray:
    return -_exp_eval(z)


def _mixed_eval(z: np.ndarray) -> np.ndarray:
    # exp branch only sees z > 0, so it cannot overflow
    out = np.empty_like(z)
    neg = z <= 0.0
    out[neg] = 1.0 - z[neg]
    out[~neg] = np.exp(-z[~neg])
    return out


def _mixed_deriv(z: np.ndarray) -> np.ndarray:
    out = np.full_like(z, -1.0)
    pos = z > 0.0
    out[pos] = -np.exp(-z[pos])
    return out


def _logistic_eval(z: np.ndarray) -> np.ndarray:
    # log(1 + exp(-2z)) evaluated stably for large |z|
    return np.logaddexp(0.0, -2.0 * z)


def _logistic_deriv(z: np.ndarray) -> np.ndarray:
    with np.errstate(over="ignore"):
        return -2.0 / (1.0 + np.exp(2.0 * z))


def _hinge_eval(z: np.ndarray) -> np.ndarray:
    return np.maximum(0.0, 1.0 - z)


def _hinge_deriv(z: np.ndarray) -> np.ndarray:
    # left derivative at the kink: deriv(1) = -1
    return np.where(z <= 1.0, -1.0, 0.0)


def _unhinged_eval(z: np.ndarray) -> np.ndarray:
    return 1.0 - z


def _unhinged_deriv(z: np.ndarray) -> np.ndarray:
    return np.full_like(z, -1.0)


_REGISTRY = {
    "exponential": (_exp_eval, _exp_deriv, CONVEX_POTENTIAL),
    "mixed_linear_exponential": (_mixed_eval, _mixed_deriv, CONVEX_POTENTIAL),
    "logistic": (_logistic_eval, _logistic_deriv, CONVEX_POTENTIAL),
    "hinge": (_hinge_eval, _hinge_deriv, NEITHER),
    "unhinged": (_unhinged_eval, _unhinged_deriv, RELAXED_ONLY),
}


def make_loss(name: str) -> PotentialFunction:
    """Return one of the shipped losses by name.

    Raises ValueError for unknown names, listing the valid ones.
    """
    try:
        ev, de, cls = _REGISTRY[name]
    except KeyError:
        raise ValueError(
            f"unknown loss {name!r}; valid names: {', '.join(LOSS_NAMES)}"
        ) from None
    return PotentialFunction(name, _elementwise(ev), _elementwise(de), cls)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one predicate clause, with a witness when it fails."""

    name: str
    passed: bool
    witness_z: float | None = None
    witness_value: float | None = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "pass": self.passed,
            "witness_z": self.witness_z,
            "witness_value": self.witness_value,
        }


@dataclass(frozen=True)
class PredicateReport:
    loss: str
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {"loss": self.loss, "checks": [c.to_dict() for c in self.checks]}

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def default_grid(count: int = 401, span: float = 50.0) -> np.ndarray:
    """Evenly spaced predicate grid on [-span, span].

    With the defaults the grid lands exactly on 0 and 1, which the C1
    scan needs to expose the hinge kink.
    """
    return np.linspace(-span, span, count)


def _validate_grid(grid) -> np.ndarray:
    g = np.asarray(grid, dtype=float)
    if g.ndim != 1 or g.size < 3:
        raise ValueError("grid must be a 1-d array with at least 3 points")
    if not np.all(np.isfinite(g)):
        raise ValueError("grid must be finite")
    if not np.all(np.diff(g) > 0):
        raise ValueError("grid must be strictly increasing")
    if g[0] > -50.0 or g[-1] < 50.0:
        raise ValueError("grid must span at least [-50, 50]")
    if not np.any(g == 0.0):
        raise ValueError("grid must contain 0")
    return g


def _convexity_check(phi: PotentialFunction, grid: np.ndarray) -> CheckResult:
    # midpoint test over all grid pairs
    vals = np.asarray(phi.eval(grid))
    mids = 0.5 * (grid[:, None] + grid[None, :])
    excess = np.asarray(phi.eval(mids)) - 0.5 * (vals[:, None] + vals[None, :])
    worst = np.unravel_index(np.argmax(excess), excess.shape)
    worst_excess = float(excess[worst])
    if worst_excess <= _CONVEXITY_SLACK:
        return CheckResult("midpoint_convexity", True)
    return CheckResult(
        "midpoint_convexity", False,
        witness_z=float(mids[worst]), witness_value=worst_excess,
    )


def _monotone_check(phi: PotentialFunction, grid: np.ndarray) -> CheckResult:
    vals = np.asarray(phi.eval(grid))
    rises = np.diff(vals)
    i = int(np.argmax(rises))
    if rises[i] <= _MONOTONE_SLACK:
        return CheckResult("nonincreasing", True)
    return CheckResult(
        "nonincreasing", False,
        witness_z=float(grid[i + 1]), witness_value=float(rises[i]),
    )


def _slope_check(phi: PotentialFunction, grid: np.ndarray) -> CheckResult:
    """C1 smoothness across the grid plus a strictly negative slope at 0.

    Non-smoothness is witnessed by a mismatch between forward and
    backward difference quotients, relative to their own magnitude so
    steep-but-smooth regions do not false-alarm.
    """
    h = _C1_STEP
    vals = np.asarray(phi.eval(grid))
    fwd = (np.asarray(phi.eval(grid + h)) - vals) / h
    bwd = (vals - np.asarray(phi.eval(grid - h))) / h
    gap = np.abs(fwd - bwd) - _C1_REL_MISMATCH * (1.0 + np.abs(fwd) + np.abs(bwd))
    i = int(np.argmax(gap))
    if gap[i] > 0:
        return CheckResult(
            "c1_negative_slope_at_zero", False,
            witness_z=float(grid[i]), witness_value=float(fwd[i] - bwd[i]),
        )
    d0 = float(phi.deriv(0.0))
    if not d0 < 0.0:
        return CheckResult(
            "c1_negative_slope_at_zero", False, witness_z=0.0, witness_value=d0
        )
    return CheckResult("c1_negative_slope_at_zero", True)


def _tail_check(phi: PotentialFunction, grid: np.ndarray) -> CheckResult:
    vals = np.asarray(phi.eval(grid))
    tail = float(vals[-1])
    if tail >= _TAIL_THRESHOLD:
        return CheckResult(
            "vanishing_nonnegative_tail", False,
            witness_z=float(grid[-1]), witness_value=tail,
        )
    i = int(np.argmin(vals))
    if vals[i] < -_NONNEG_SLACK:
        return CheckResult(
            "vanishing_nonnegative_tail", False,
            witness_z=float(grid[i]), witness_value=float(vals[i]),
        )
    return CheckResult("vanishing_nonnegative_tail", True)


def check_def1(phi: PotentialFunction, grid=None) -> PredicateReport:
    """Test the full convex-potential axioms on a grid.

    Clauses: (a) midpoint convexity on all grid pairs, (b) nonincreasing
    along the grid, (c) C1 smoothness with phi'(0) < 0, (d) a vanishing,
    nonnegative tail.  Clause (d) is a finite proxy for the limit
    condition: it requires phi(z_max) < 1e-6 and phi >= -1e-12 on the
    grid, which classifies all shipped losses correctly.
    """
    g = _validate_grid(grid if grid is not None else default_grid())
    checks = (
        _convexity_check(phi, g),
        _monotone_check(phi, g),
        _slope_check(phi, g),
        _tail_check(phi, g),
    )
    return PredicateReport(phi.name, checks)


def check_def3(phi: PotentialFunction, grid=None) -> PredicateReport:
    """Test the relaxed axioms: convexity, monotonicity, and slope only."""
    g = _validate_grid(grid if grid is not None else default_grid())
    checks = (
        _convexity_check(phi, g),
        _monotone_check(phi, g),
        _slope_check(phi, g),
    )
    return PredicateReport(phi.name, checks)
