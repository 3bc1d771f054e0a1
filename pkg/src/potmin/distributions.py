"""Finite discrete distributions over labeled points, with exact label noise.

Label-flip corruption is applied analytically by weight splitting, never
by sampling, so every downstream identity (centroid scaling, error
equalities) holds to floating-point rounding.  Distributions are
immutable values: the backing arrays are copied on construction and
marked read-only.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

_WEIGHT_SUM_TOL = 1e-12


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class LabeledPoint:
    """A feature vector in R^d with a binary label in {-1, +1}."""

    x: np.ndarray
    y: int

    def __post_init__(self):
        x = np.array(self.x, dtype=float)
        if x.ndim != 1 or x.size < 1:
            raise ValueError("x must be a 1-d vector with at least one coordinate")
        if not np.all(np.isfinite(x)):
            raise ValueError("x must be finite")
        y = int(self.y)
        if y * y != 1:
            raise ValueError(f"label must be -1 or +1, got {self.y!r}")
        object.__setattr__(self, "x", _readonly(x))
        object.__setattr__(self, "y", y)

    @property
    def dimension(self) -> int:
        return self.x.size


def _merge_duplicates(xs, ys, weights):
    """Sum weights of atoms with identical (x, y), keeping first-seen order."""
    index_of: dict = {}
    order: list[int] = []
    merged = np.array(weights)
    keep = np.ones(len(ys), dtype=bool)
    for i in range(len(ys)):
        key = (int(ys[i]), (xs[i] + 0.0).tobytes())  # +0.0 folds -0.0 into 0.0
        j = index_of.get(key)
        if j is None:
            index_of[key] = i
            order.append(i)
        else:
            merged[j] += merged[i]
            keep[i] = False
    if keep.all():
        return xs, ys, weights
    idx = np.array(order)
    return xs[idx], ys[idx], merged[idx]


@dataclass(frozen=True, eq=False)
class DiscreteDistribution:
    """Finite weighted set of labeled points; weights sum to 1.

    Duplicate (x, y) atoms are merged by summing their weights.  All
    atoms share one dimension and all weights are strictly positive.
    """

    xs: np.ndarray       # (n, d) feature rows
    ys: np.ndarray       # (n,) labels in {-1, +1}
    weights: np.ndarray  # (n,) probability masses

    def __post_init__(self):
        xs = np.array(self.xs, dtype=float, ndmin=2)
        ys = np.array(self.ys, dtype=int).reshape(-1)
        weights = np.array(self.weights, dtype=float).reshape(-1)
        n = len(ys)
        if n == 0:
            raise ValueError("distribution needs at least one atom")
        if xs.ndim != 2:
            raise ValueError(f"xs must be a 2-d array of atom rows, got ndim={xs.ndim}")
        if xs.shape[0] != n or weights.shape[0] != n:
            raise ValueError("xs, ys, weights must agree in length")
        if xs.shape[1] < 1:
            raise ValueError("dimension must be at least 1")
        if not np.all(np.isfinite(xs)):
            raise ValueError("feature coordinates must be finite")
        if not np.all(ys * ys == 1):
            raise ValueError("labels must be -1 or +1")
        if not np.all(np.isfinite(weights)) or not np.all(weights > 0):
            raise ValueError("weights must be finite and strictly positive")
        xs, ys, weights = _merge_duplicates(xs, ys, weights)
        total = float(weights.sum())
        if abs(total - 1.0) > _WEIGHT_SUM_TOL:
            raise ValueError(f"weights must sum to 1 within {_WEIGHT_SUM_TOL}, got {total!r}")
        object.__setattr__(self, "xs", _readonly(xs))
        object.__setattr__(self, "ys", _readonly(ys))
        object.__setattr__(self, "weights", _readonly(weights))

    @classmethod
    def from_atoms(cls, atoms) -> "DiscreteDistribution":
        """Build from an iterable of (LabeledPoint, weight) pairs."""
        pts, ws = [], []
        for point, w in atoms:
            pts.append(point)
            ws.append(w)
        if not pts:
            raise ValueError("distribution needs at least one atom")
        dims = {p.dimension for p in pts}
        if len(dims) != 1:
            raise ValueError(f"atoms must share one dimension, got {sorted(dims)}")
        return cls(np.stack([p.x for p in pts]), [p.y for p in pts], ws)

    @property
    def dimension(self) -> int:
        return self.xs.shape[1]

    @property
    def n_atoms(self) -> int:
        return self.xs.shape[0]

    @property
    def atoms(self) -> list[tuple[LabeledPoint, float]]:
        return [
            (LabeledPoint(self.xs[i], int(self.ys[i])), float(self.weights[i]))
            for i in range(self.n_atoms)
        ]

    def margins(self, v) -> np.ndarray:
        """Per-atom classification margins y * (v . x)."""
        v = np.asarray(v, dtype=float)
        if v.shape != (self.dimension,):
            raise ValueError(f"v must have shape ({self.dimension},), got {v.shape}")
        return self.ys * (self.xs @ v)

    def to_csv(self, path) -> None:
        """Write as CSV with header x1,...,xd,y,weight (round-trip exact)."""
        d = self.dimension
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow([f"x{j + 1}" for j in range(d)] + ["y", "weight"])
            for i in range(self.n_atoms):
                writer.writerow(
                    [repr(float(c)) for c in self.xs[i]]
                    + [str(int(self.ys[i])), repr(float(self.weights[i]))]
                )

    @classmethod
    def from_csv(cls, path) -> "DiscreteDistribution":
        """Load a distribution written by :meth:`to_csv`; weights are validated."""
        path = Path(path)
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
        if not rows:
            raise ValueError(f"{path}: empty file")
        header = [c.strip() for c in rows[0]]
        if len(header) < 3 or header[-2:] != ["y", "weight"]:
            raise ValueError(f"{path}: header must be x1,...,xd,y,weight")
        d = len(header) - 2
        if header[:d] != [f"x{j + 1}" for j in range(d)]:
            raise ValueError(f"{path}: header must be x1,...,xd,y,weight")
        xs, ys, ws = [], [], []
        for lineno, row in enumerate(rows[1:], start=2):
            if not row:
                continue
            if len(row) != d + 2:
                raise ValueError(f"{path}:{lineno}: expected {d + 2} fields, got {len(row)}")
            xs.append([float(c) for c in row[:d]])
            y = float(row[d])
            if y not in (-1.0, 1.0):
                raise ValueError(f"{path}:{lineno}: label must be -1 or 1, got {row[d]}")
            ys.append(int(y))
            ws.append(float(row[d + 1]))
        return cls(np.array(xs), ys, ws)


@dataclass(frozen=True, eq=False)
class MarginCertificate:
    """A separator together with the L1-normalized margin it achieves."""

    separator: np.ndarray
    margin: float

    def __post_init__(self):
        w = np.array(self.separator, dtype=float)
        if not np.any(w != 0):
            raise ValueError("separator must be nonzero")
        if not self.margin >= 0.0:
            raise ValueError(f"certificate requires margin >= 0, got {self.margin!r}")
        object.__setattr__(self, "separator", _readonly(w))
        object.__setattr__(self, "margin", float(self.margin))


def corrupt_rcn(clean: DiscreteDistribution, eta: float) -> DiscreteDistribution:
    """Exact label-flip corruption at rate eta in (0, 1/2).

    Each atom ((x, y), p) splits into ((x, y), (1-eta) p) and
    ((x, -y), eta p); colliding atoms merge.  Total mass and the feature
    support set are preserved exactly.  No sampling is performed.
    """
    eta = float(eta)
    if not 0.0 < eta < 0.5:
        raise ValueError(f"noise rate must satisfy 0 < eta < 1/2, got {eta!r}")
    xs = np.repeat(clean.xs, 2, axis=0)
    ys = np.empty(2 * clean.n_atoms, dtype=int)
    ys[0::2] = clean.ys
    ys[1::2] = -clean.ys
    weights = np.empty(2 * clean.n_atoms)
    weights[0::2] = (1.0 - eta) * clean.weights
    weights[1::2] = eta * clean.weights
    return DiscreteDistribution(xs, ys, weights)


def l1_margin(dist: DiscreteDistribution, w) -> float:
    """Smallest per-atom margin y (w . x) / ||w||_1 over the distribution.

    This is the largest gamma for which no atom falls below gamma;
    negative when w misclassifies some atom.
    """
    w = np.asarray(w, dtype=float)
    l1 = float(np.abs(w).sum())
    if l1 == 0.0:
        raise ValueError("w must be nonzero")
    return float(np.min(dist.margins(w)) / l1)


def certify_margin(dist: DiscreteDistribution, w) -> MarginCertificate:
    """Package w as a separation certificate; rejects non-separating w."""
    return MarginCertificate(np.asarray(w, dtype=float), l1_margin(dist, w))


def make_counterexample(gamma: float) -> DiscreteDistribution:
    """Three-point planar distribution, all labels +1, parametrized by gamma.

    Masses 1/4, 1/4, 1/2 on (1, 0), (gamma, sqrt(1-gamma^2)) and
    (gamma, -2 gamma).  Separable with L1 margin exactly gamma by the
    first coordinate axis; below a critical gamma the mean-label
    direction misclassifies the heavy third point.
    """
    gamma = float(gamma)
    if not 0.0 < gamma < 1.0:
        raise ValueError(f"gamma must lie in (0, 1), got {gamma!r}")
    xs = np.array([
        [1.0, 0.0],
        [gamma, np.sqrt(1.0 - gamma * gamma)],
        [gamma, -2.0 * gamma],
    ])
    return DiscreteDistribution(xs, [1, 1, 1], [0.25, 0.25, 0.5])


def mean_label_feature(dist: DiscreteDistribution) -> np.ndarray:
    """Weighted mean of y * x over the distribution (the label centroid)."""
    return (dist.weights * dist.ys) @ dist.xs


def random_distribution(rng: np.random.Generator, max_dim: int = 5,
                        max_atoms: int = 10, coord_scale: float = 1.0,
                        min_weight: float = 0.05,
                        min_centroid_norm: float = 0.0) -> DiscreteDistribution:
    """Small random distribution for fuzz campaigns.

    Resamples until the label centroid clears ``min_centroid_norm``, so
    callers can keep clear of the degenerate-centroid regime (which has
    its own dedicated handling).
    """
    while True:
        d = int(rng.integers(1, max_dim + 1))
        n = int(rng.integers(1, max_atoms + 1))
        xs = rng.uniform(-coord_scale, coord_scale, (n, d))
        ys = rng.choice([-1, 1], n)
        w = rng.uniform(min_weight, 1.0, n)
        dist = DiscreteDistribution(xs, ys, w / w.sum())
        if float(np.linalg.norm(mean_label_feature(dist))) >= min_centroid_norm:
            return dist
