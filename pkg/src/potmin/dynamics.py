"""Unconstrained descent dynamics for the unhinged loss on a sample.

The gradient of the total unhinged loss over a sample is the constant
-sum_i y_i x_i, which makes the iterate paths of gradient descent and
coordinate descent fully predictable: gradient descent moves along the
label-sum direction, coordinate descent keeps hammering the same
steepest coordinate.  These runs exist to certify exactly that.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from .distributions import LabeledPoint

TIE_RULES = ("lowest-index", "report-all")


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Iterates of a descent run plus per-iterate diagnostics.

    ``loss_values`` holds the total (sample-summed) unhinged loss.
    ``angles_to_target`` holds the angle in [0, pi] between each iterate
    and the label-sum vector; entries at a zero iterate (or zero target)
    are NaN, a deliberate undefined marker rather than a fake 0.
    For coordinate descent, ``chosen_coords`` logs the coordinates
    reported each round and ``step_signs`` the signed direction taken.
    """

    iterates: np.ndarray          # (T+1, d)
    step_size: float
    loss_values: np.ndarray       # (T+1,)
    angles_to_target: np.ndarray  # (T+1,), NaN marks undefined
    target: np.ndarray            # (d,) sum_i y_i x_i
    stationary: bool
    chosen_coords: tuple[tuple[int, ...], ...] | None = None
    step_signs: tuple[int, ...] | None = None
    argmax_coords: tuple[int, ...] | None = None

    @property
    def n_steps(self) -> int:
        return self.iterates.shape[0] - 1

    @property
    def dimension(self) -> int:
        return self.iterates.shape[1]

    def to_csv(self, path) -> None:
        """Write rows t, v_1..v_d, loss, angle_rad, chosen_coord.

        Undefined angles and absent coordinate choices are left empty;
        multi-coordinate logs are ';'-joined.
        """
        d = self.dimension
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["t"] + [f"v_{j + 1}" for j in range(d)]
                            + ["loss", "angle_rad", "chosen_coord"])
            for t in range(self.iterates.shape[0]):
                angle = self.angles_to_target[t]
                chosen = ""
                if self.chosen_coords is not None and t >= 1:
                    chosen = ";".join(str(j) for j in self.chosen_coords[t - 1])
                writer.writerow(
                    [str(t)]
                    + [repr(float(c)) for c in self.iterates[t]]
                    + [repr(float(self.loss_values[t])),
                       "" if np.isnan(angle) else repr(float(angle)),
                       chosen]
                )


def _sample_arrays(sample) -> tuple[np.ndarray, np.ndarray]:
    points = list(sample)
    if not points:
        raise ValueError("sample must be nonempty")
    dims = {p.dimension for p in points}
    if len(dims) != 1:
        raise ValueError(f"sample points must share one dimension, got {sorted(dims)}")
    xs = np.stack([p.x for p in points])
    ys = np.array([p.y for p in points], dtype=float)
    return xs, ys


def label_sum(sample) -> np.ndarray:
    """sum_i y_i x_i over the sample: the negated gradient of the total loss."""
    xs, ys = _sample_arrays(sample)
    return (ys[:, None] * xs).sum(axis=0)


def _total_losses(iterates: np.ndarray, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    margins = iterates @ (ys[:, None] * xs).T  # (T+1, n)
    return np.sum(1.0 - margins, axis=1)


def _angles(iterates: np.ndarray, g: np.ndarray) -> np.ndarray:
    # atan2 of the orthogonal split; unlike arccos it stays accurate for
    # near-collinear vectors, where arccos inflates rounding to ~sqrt(eps)
    norms = np.linalg.norm(iterates, axis=1)
    ng = float(np.linalg.norm(g))
    angles = np.full(iterates.shape[0], np.nan)
    if ng == 0.0:
        return angles
    ghat = g / ng
    defined = norms > 0.0
    along = iterates[defined] @ ghat
    perp = iterates[defined] - along[:, None] * ghat[None, :]
    angles[defined] = np.arctan2(np.linalg.norm(perp, axis=1), along)
    return angles


def gd_unhinged(sample, v0, step: float, T: int) -> Trajectory:
    """Run T gradient-descent updates of the total unhinged loss from v0.

    The gradient is constant, so iterate t must equal
    v0 + step * t * sum_i y_i x_i; the loop computes iterates
    incrementally anyway so that identity can be checked against it.
    A zero label sum leaves every iterate at v0 (stationary flag set).
    """
    if T < 1:
        raise ValueError("T must be at least 1")
    step = float(step)
    if not step > 0:
        raise ValueError(f"step must be positive, got {step!r}")
    xs, ys = _sample_arrays(sample)
    v0 = np.asarray(v0, dtype=float)
    if v0.shape != (xs.shape[1],):
        raise ValueError(f"v0 must have shape ({xs.shape[1]},), got {v0.shape}")
    g = (ys[:, None] * xs).sum(axis=0)
    stationary = not np.any(g != 0.0)

    iterates = np.empty((T + 1, xs.shape[1]))
    iterates[0] = v0
    v = v0.copy()
    increment = step * g
    for t in range(1, T + 1):
        v = v + increment
        iterates[t] = v
    return Trajectory(
        iterates=iterates,
        step_size=step,
        loss_values=_total_losses(iterates, xs, ys),
        angles_to_target=_angles(iterates, g),
        target=g,
        stationary=stationary,
    )


def cd_unhinged(sample, T: int, tie_rule: str = "lowest-index",
                step_size: float = 1.0) -> Trajectory:
    """Run T rounds of steepest coordinate descent from the zero vector.

    Each round picks j* maximizing |sum_i y_i x_ij| and moves that single
    coordinate by step_size in the descending direction.  The gradient is
    constant, so the same coordinate (and sign) wins every round; the
    per-round log records the winner, or the whole argmax set under the
    "report-all" tie rule.  The update itself always takes the lowest
    argmax index, keeping runs reproducible under ties.
    """
    if T < 1:
        raise ValueError("T must be at least 1")
    if tie_rule not in TIE_RULES:
        raise ValueError(f"tie_rule must be one of {TIE_RULES}, got {tie_rule!r}")
    step_size = float(step_size)
    if not step_size > 0:
        raise ValueError(f"step_size must be positive, got {step_size!r}")
    xs, ys = _sample_arrays(sample)
    d = xs.shape[1]
    g = (ys[:, None] * xs).sum(axis=0)

    iterates = np.zeros((T + 1, d))
    if not np.any(g != 0.0):
        return Trajectory(
            iterates=iterates,
            step_size=step_size,
            loss_values=_total_losses(iterates, xs, ys),
            angles_to_target=_angles(iterates, g),
            target=g,
            stationary=True,
            chosen_coords=((),) * T,
            step_signs=(0,) * T,
            argmax_coords=(),
        )

    magnitudes = np.abs(g)
    best = float(magnitudes.max())
    argmax_set = tuple(int(j) for j in np.nonzero(magnitudes == best)[0])
    j_star = argmax_set[0]
    sign = 1 if g[j_star] > 0 else -1
    logged = argmax_set if tie_rule == "report-all" else (j_star,)

    v = np.zeros(d)
    for t in range(1, T + 1):
        v = v.copy()
        v[j_star] += sign * step_size
        iterates[t] = v
    return Trajectory(
        iterates=iterates,
        step_size=step_size,
        loss_values=_total_losses(iterates, xs, ys),
        angles_to_target=_angles(iterates, g),
        target=g,
        stationary=False,
        chosen_coords=(logged,) * T,
        step_signs=(sign,) * T,
        argmax_coords=argmax_set,
    )


def make_sample(xs, ys) -> list[LabeledPoint]:
    """Convenience builder: rows of xs with labels ys as LabeledPoints."""
    xs = np.asarray(xs, dtype=float)
    if xs.ndim != 2:
        raise ValueError("xs must be a 2-d array of sample rows")
    ys = np.asarray(ys).reshape(-1)
    if xs.shape[0] != ys.shape[0]:
        raise ValueError("xs and ys must agree in length")
    return [LabeledPoint(xs[i], int(ys[i])) for i in range(xs.shape[0])]
