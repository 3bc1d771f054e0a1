"""Evaluation and verification layer: expectations, error rates, and probes.

Everything here is an exact weighted sum over distribution atoms; there
is no sampling noise anywhere.  The module hosts the noise-robustness
checker (fit on clean and corrupted data, compare clean-data errors),
the affine identity tying clean and corrupted unhinged objectives, and a
ray probe certifying the coercivity bound that guarantees corrupted
objectives attain their minimum.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field

import numpy as np

from .distributions import DiscreteDistribution, corrupt_rcn, random_distribution
from .loss_zoo import LossOverflowError, PotentialFunction, check_def1, make_loss
from .minimizers import FitResult, PGDConfig, WeightVector, pgd_minimizer, unhinged_minimizer

_ERROR_EQUALITY_TOL = 1e-12
_BOUND_SLACK = 1e-9
_UNIT_NORM_TOL = 1e-12

MINIMIZER_ROUTES = ("closed-form", "pgd")

DEFAULT_RAY_GRID = (0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0,
                    128.0, 256.0, 512.0, 1024.0)

_UNHINGED = make_loss("unhinged")


def expected_loss(dist: DiscreteDistribution, phi: PotentialFunction, v) -> float:
    """Exact weighted expectation of phi(y (v . x)) over the atoms."""
    margins = dist.margins(v)
    try:
        vals = phi.eval(margins)
    except LossOverflowError as err:
        idx = int(np.nonzero(margins == err.z)[0][0])
        raise LossOverflowError(
            err.loss, err.z, atom_index=idx,
            atom=(dist.xs[idx].tolist(), int(dist.ys[idx])),
        ) from None
    return float(dist.weights @ vals)


def misclassification_error(dist: DiscreteDistribution, v) -> float:
    """Probability mass of atoms with y (v . x) <= 0.

    A zero inner product counts as an error for either label, so the
    zero vector scores a full error of 1.
    """
    margins = dist.margins(v)
    return float(dist.weights[margins <= 0.0].sum())


@dataclass(frozen=True, eq=False)
class RobustnessReport:
    """Clean-data error comparison of clean-fit and noisy-fit minimizers.

    Both error rates are measured on the clean distribution; ``robust``
    is derived from their equality within 1e-12 and cannot be set
    independently.
    """

    eta: float
    clean_fit_error: float
    noisy_fit_error: float
    minimizer_clean: WeightVector
    minimizer_noisy: WeightVector
    degenerate: bool
    robust: bool = field(init=False)

    def __post_init__(self):
        for name in ("clean_fit_error", "noisy_fit_error"):
            e = getattr(self, name)
            if not 0.0 <= e <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {e!r}")
        object.__setattr__(
            self, "robust",
            abs(self.clean_fit_error - self.noisy_fit_error) <= _ERROR_EQUALITY_TOL,
        )

    def to_dict(self) -> dict:
        return {
            "eta": self.eta,
            "clean_fit_error": self.clean_fit_error,
            "noisy_fit_error": self.noisy_fit_error,
            "robust": self.robust,
            "degenerate": self.degenerate,
            "minimizer_clean": [float(c) for c in self.minimizer_clean.v],
            "minimizer_noisy": [float(c) for c in self.minimizer_noisy.v],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def _fit(dist: DiscreteDistribution, phi: PotentialFunction, r: float,
         route: str) -> FitResult:
    if route == "closed-form":
        if phi.name != "unhinged":
            raise ValueError(
                "the closed-form route applies to the unhinged loss only; "
                f"use route='pgd' for {phi.name!r}"
            )
        return unhinged_minimizer(dist, r)
    return pgd_minimizer(dist, phi, r, PGDConfig())


def check_rcn_robustness(dist: DiscreteDistribution, phi: PotentialFunction,
                         r: float, eta: float,
                         minimizer: str = "closed-form") -> RobustnessReport:
    """Fit on clean and corrupted data; compare both errors on clean data.

    The check uses the one deterministic minimizer the library computes
    for each side (closed form for the unhinged loss, best PGD iterate
    otherwise); it is a witness pair, not a quantification over all
    minimizers of either objective.
    """
    if minimizer not in MINIMIZER_ROUTES:
        raise ValueError(f"minimizer must be one of {MINIMIZER_ROUTES}, got {minimizer!r}")
    eta = float(eta)
    if not 0.0 < eta < 0.5:
        raise ValueError(f"noise rate must satisfy 0 < eta < 1/2, got {eta!r}")
    fit_clean = _fit(dist, phi, r, minimizer)
    fit_noisy = _fit(corrupt_rcn(dist, eta), phi, r, minimizer)
    return RobustnessReport(
        eta=eta,
        clean_fit_error=misclassification_error(dist, fit_clean.weights.v),
        noisy_fit_error=misclassification_error(dist, fit_noisy.weights.v),
        minimizer_clean=fit_clean.weights,
        minimizer_noisy=fit_noisy.weights,
        degenerate=fit_clean.degenerate_centroid or fit_noisy.degenerate_centroid,
    )


def slope_identity_residual(dist: DiscreteDistribution, eta: float, w) -> float:
    """Residual of the affine tie between corrupted and clean unhinged losses.

    Corrupting labels at rate eta rescales the unhinged objective by
    (1 - 2 eta) and shifts it by 2 eta; this returns
    |P_noisy(w) - ((1 - 2 eta) P_clean(w) + 2 eta)|, which should sit at
    floating-point rounding for every w.
    """
    eta = float(eta)
    if not 0.0 < eta < 0.5:
        raise ValueError(f"noise rate must satisfy 0 < eta < 1/2, got {eta!r}")
    p_clean = expected_loss(dist, _UNHINGED, w)
    p_noisy = expected_loss(corrupt_rcn(dist, eta), _UNHINGED, w)
    return abs(p_noisy - ((1.0 - 2.0 * eta) * p_clean + 2.0 * eta))


def slope_identity_fuzz(trials: int, seed: int, out_csv=None,
                        max_dim: int = 5, max_atoms: int = 10) -> list[dict]:
    """Seeded fuzz campaign over (distribution, w, eta) triples.

    Returns one row per trial (trial, dimension, n_atoms, eta, residual)
    and optionally writes them as CSV.  The campaign is deterministic in
    the seed.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = np.random.default_rng(seed)
    rows = []
    for trial in range(trials):
        dist = random_distribution(rng, max_dim=max_dim, max_atoms=max_atoms)
        w = rng.normal(size=dist.dimension)
        eta = float(rng.uniform(0.01, 0.49))
        rows.append({
            "trial": trial,
            "dimension": dist.dimension,
            "n_atoms": dist.n_atoms,
            "eta": eta,
            "residual": slope_identity_residual(dist, eta, w),
        })
    if out_csv is not None:
        with open(out_csv, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(list(rows[0]))
            for row in rows:
                writer.writerow([repr(v) if isinstance(v, float) else str(v)
                                 for v in row.values()])
    return rows


@dataclass(frozen=True, eq=False)
class RayProbe:
    """Corrupted objective along a ray versus its analytic lower bound.

    The bound is eta * (phi(0) - phi'(0) lambda E|u.x| + phi'(0) E|x0.x|),
    linear and increasing in lambda; the objective must stay above it
    (slack >= -1e-9) and, the bound being coercive, must eventually rise.
    """

    base_point: np.ndarray
    direction: np.ndarray
    lambdas: np.ndarray
    values: np.ndarray
    lower_bounds: np.ndarray
    min_slack: float
    bound_holds: bool
    eventually_increasing: bool

    def to_dict(self) -> dict:
        return {
            "base_point": [float(c) for c in self.base_point],
            "direction": [float(c) for c in self.direction],
            "lambdas": [float(c) for c in self.lambdas],
            "values": [float(c) for c in self.values],
            "lower_bounds": [float(c) for c in self.lower_bounds],
            "min_slack": self.min_slack,
            "bound_holds": self.bound_holds,
            "eventually_increasing": self.eventually_increasing,
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def recession_probe(dist: DiscreteDistribution, phi: PotentialFunction,
                    eta: float, x0, u, lambdas=None) -> RayProbe:
    """Evaluate the corrupted objective along x0 + lambda u against its bound.

    Requires phi to pass the full convex-potential axioms and the ray
    direction to have positive width E|u . x| > 0 under the clean
    distribution; a zero-width direction is rejected because the
    objective simply does not vary along it (project it out instead).
    """
    eta = float(eta)
    if not 0.0 < eta < 0.5:
        raise ValueError(f"noise rate must satisfy 0 < eta < 1/2, got {eta!r}")
    report = check_def1(phi)
    if not report.passed:
        failing = [c.name for c in report.checks if not c.passed]
        raise ValueError(
            f"{phi.name!r} is not a convex potential (fails: {', '.join(failing)}); "
            "the recession bound does not apply"
        )
    x0 = np.asarray(x0, dtype=float)
    u = np.asarray(u, dtype=float)
    if x0.shape != (dist.dimension,) or u.shape != (dist.dimension,):
        raise ValueError(f"x0 and u must have shape ({dist.dimension},)")
    if abs(float(np.linalg.norm(u)) - 1.0) > _UNIT_NORM_TOL:
        raise ValueError(f"u must be a unit vector, got ||u|| = {np.linalg.norm(u)!r}")
    lam = np.asarray(DEFAULT_RAY_GRID if lambdas is None else lambdas, dtype=float)
    if lam.ndim != 1 or lam.size < 2:
        raise ValueError("lambdas must be a 1-d grid with at least 2 points")
    if lam[0] < 0 or not np.all(np.diff(lam) > 0):
        raise ValueError("lambdas must be nonnegative and strictly increasing")

    width = float(dist.weights @ np.abs(dist.xs @ u))
    if width <= 0.0:
        raise ValueError(
            "E|u.x| = 0: the objective is unaffected along u (it varies only "
            "on the subspace orthogonal to u); probe a direction of positive width"
        )
    base_overlap = float(dist.weights @ np.abs(dist.xs @ x0))
    phi0 = float(phi.eval(0.0))
    dphi0 = float(phi.deriv(0.0))

    noisy = corrupt_rcn(dist, eta)
    values = np.array([expected_loss(noisy, phi, x0 + l * u) for l in lam])
    bounds = eta * (phi0 - dphi0 * lam * width + dphi0 * base_overlap)
    slack = values - bounds
    tail = values[-3:] if values.size >= 3 else values
    return RayProbe(
        base_point=x0,
        direction=u,
        lambdas=lam,
        values=values,
        lower_bounds=bounds,
        min_slack=float(slack.min()),
        bound_holds=bool(slack.min() >= -_BOUND_SLACK),
        eventually_increasing=bool(np.all(np.diff(tail) > 0)),
    )
