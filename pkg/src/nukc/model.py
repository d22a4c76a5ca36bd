"""Core data model: metric spaces, instances, solutions, coverage vectors, cuts.

Everything downstream (partitioning, reductions, the round-or-cut solvers and the
brute-force oracles) works in terms of the types defined here.  Points are integer
indices into a fixed finite metric; coverage vectors live in [0,1]^{2n} with the
first block for the large radius and the second block for the small one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

# Tolerance for metric axioms (symmetry, triangle inequality) and for hull-side
# cut validation.  Kept small; oracle firing thresholds are handled separately.
METRIC_EPS = 1e-9


class MetricError(ValueError):
    """Raised when a distance matrix fails the metric axioms."""


class SizeGuardError(RuntimeError):
    """Raised when an exact enumeration would exceed its size guard."""


class TheoryViolationError(RuntimeError):
    """Raised when an invariant the correctness proof guarantees fails at runtime.

    Carries a diagnostic payload in ``dump`` so the offending state can be frozen
    into a regression test instead of being silently papered over.
    """

    def __init__(self, message: str, dump: dict | None = None):
        super().__init__(message)
        self.dump = dump or {}


@dataclass(frozen=True)
class MetricSpace:
    """A finite metric given by an explicit distance matrix.

    ``coords`` is kept when the metric came from points in the plane so that
    instances can be serialized compactly and plotted; it never participates in
    distance computations.
    """

    dist: np.ndarray
    coords: np.ndarray | None = None

    def __post_init__(self):
        d = np.asarray(self.dist, dtype=float)
        if d.ndim != 2 or d.shape[0] != d.shape[1]:
            raise MetricError(f"distance matrix must be square, got shape {d.shape}")
        if not np.all(np.isfinite(d)):
            raise MetricError("distance matrix contains non-finite entries")
        if np.any(d < 0):
            raise MetricError("distances must be nonnegative")
        if np.any(np.abs(np.diag(d)) > 0):
            raise MetricError("self-distances must be zero")
        if np.any(np.abs(d - d.T) > METRIC_EPS):
            raise MetricError(f"distance matrix not symmetric within {METRIC_EPS}")
        n = d.shape[0]
        if n:
            # d[i,k] <= d[i,j] + d[j,k] + eps for all j; vectorized over (i,k).
            slack = (d[:, :, None] + d[None, :, :]).min(axis=1) - d
            if slack.min() < -METRIC_EPS:
                worst = np.unravel_index(np.argmin(slack), slack.shape)
                raise MetricError(
                    f"triangle inequality violated at pair {worst} by {-slack.min():.3g}"
                )
        d = d.copy()
        d.setflags(write=False)
        object.__setattr__(self, "dist", d)
        if self.coords is not None:
            c = np.asarray(self.coords, dtype=float).copy()
            c.setflags(write=False)
            object.__setattr__(self, "coords", c)

    @property
    def n(self) -> int:
        return self.dist.shape[0]

    @staticmethod
    def from_points(points: Sequence[Sequence[float]]) -> MetricSpace:
        """Euclidean metric on explicit planar (or any-dimensional) points."""
        pts = np.asarray(points, dtype=float)
        if pts.ndim != 2:
            raise MetricError(f"points must be a 2-d array, got shape {pts.shape}")
        diff = pts[:, None, :] - pts[None, :, :]
        dist = np.sqrt((diff * diff).sum(axis=2))
        dist = np.maximum(dist, dist.T)  # exact symmetry despite rounding
        np.fill_diagonal(dist, 0.0)
        return MetricSpace(dist=dist, coords=pts)

    @staticmethod
    def from_matrix(dist: Sequence[Sequence[float]]) -> MetricSpace:
        return MetricSpace(dist=np.asarray(dist, dtype=float))

    def restrict(self, points: Sequence[int]) -> MetricSpace:
        """Sub-metric on the given original indices, in the given order."""
        idx = np.asarray(list(points), dtype=int)
        sub = self.dist[np.ix_(idx, idx)]
        coords = self.coords[idx] if self.coords is not None else None
        return MetricSpace(dist=sub, coords=coords)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MetricSpace):
            return NotImplemented
        if not np.array_equal(self.dist, other.dist):
            return False
        if (self.coords is None) != (other.coords is None):
            return False
        return self.coords is None or np.array_equal(self.coords, other.coords)


@dataclass(frozen=True, eq=False)
class NUkCInstance:
    """A robust two-radius cover instance.

    Cover at least ``m`` of the points with at most ``k1`` balls of radius
    ``r1`` and at most ``k2`` balls of radius ``r2``; the rest are outliers.
    Duplicated locations are legitimate distinct points and each counts toward
    ``m`` separately.
    """

    metric: MetricSpace
    r1: float
    r2: float
    k1: int
    k2: int
    m: int

    def __post_init__(self):
        if not (self.r1 > self.r2 >= 0):
            raise ValueError(f"need r1 > r2 >= 0, got r1={self.r1}, r2={self.r2}")
        if self.k1 < 0 or self.k2 < 0:
            raise ValueError("budgets must be nonnegative")
        if self.m < 0:
            raise ValueError("coverage target must be nonnegative")

    @property
    def n(self) -> int:
        return self.metric.n

    def scaled(self, rho: float) -> NUkCInstance:
        """The same instance with both radii multiplied by ``rho`` (> 0)."""
        if rho <= 0:
            raise ValueError("scale must be positive")
        return NUkCInstance(self.metric, self.r1 * rho, self.r2 * rho, self.k1, self.k2, self.m)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NUkCInstance):
            return NotImplemented
        return (
            self.metric == other.metric
            and (self.r1, self.r2, self.k1, self.k2, self.m)
            == (other.r1, other.r2, other.k1, other.k2, other.m)
        )


@dataclass(frozen=True, eq=False)
class WellSepNUkCInstance:
    """An instance plus a set Y with pairwise distances strictly above 4*r1.

    Large-radius centers of exact solutions are restricted to Y.  The strict
    separation makes the r1-balls around Y points pairwise disjoint with room
    to spare, which is what the inner oracle's cut-validity argument uses.
    """

    base: NUkCInstance
    y: tuple[int, ...]

    def __post_init__(self):
        n = self.base.n
        ys = tuple(int(v) for v in self.y)
        if len(set(ys)) != len(ys):
            raise ValueError("Y contains repeated indices")
        for v in ys:
            if not (0 <= v < n):
                raise ValueError(f"Y index {v} out of range")
        d = self.base.metric.dist
        thresh = 4.0 * self.base.r1
        for i, u in enumerate(ys):
            for v in ys[i + 1 :]:
                if not d[u, v] > thresh:
                    raise ValueError(
                        f"Y not well separated: d({u},{v})={d[u, v]} <= 4*r1={thresh}"
                    )
        object.__setattr__(self, "y", ys)

    @property
    def n(self) -> int:
        return self.base.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, WellSepNUkCInstance):
            return NotImplemented
        return self.base == other.base and self.y == other.y


@dataclass(frozen=True)
class NUkCSolution:
    """Centers for both radius classes plus the dilation they are valid at.

    ``dilation`` is the factor rho such that the solution's balls are
    B(c, rho*r1) and B(c, rho*r2).  Solver outputs carry rho in {1, 4, 8, 10};
    the scale-optimization path may report 0 for the all-duplicates corner.
    """

    centers1: tuple[int, ...]
    centers2: tuple[int, ...]
    dilation: float

    def __post_init__(self):
        object.__setattr__(self, "centers1", tuple(int(c) for c in self.centers1))
        object.__setattr__(self, "centers2", tuple(int(c) for c in self.centers2))
        if self.dilation < 0:
            raise ValueError("dilation must be nonnegative")

    @staticmethod
    def empty(dilation: float = 1.0) -> NUkCSolution:
        return NUkCSolution((), (), dilation)


@dataclass(frozen=True)
class CoverageVector:
    """Fractional per-point coverage by each radius class.

    The round-or-cut engine works on the flat vector (cov1 ++ cov2); oracles
    reshape it through :meth:`from_vector`.
    """

    cov1: np.ndarray
    cov2: np.ndarray

    def __post_init__(self):
        c1 = np.asarray(self.cov1, dtype=float)
        c2 = np.asarray(self.cov2, dtype=float)
        if c1.shape != c2.shape or c1.ndim != 1:
            raise ValueError("cov1 and cov2 must be 1-d arrays of equal length")
        object.__setattr__(self, "cov1", c1)
        object.__setattr__(self, "cov2", c2)

    @property
    def n(self) -> int:
        return self.cov1.shape[0]

    def cov(self) -> np.ndarray:
        """Total coverage cov1 + cov2 per point."""
        return self.cov1 + self.cov2

    @staticmethod
    def from_vector(x: np.ndarray) -> CoverageVector:
        x = np.asarray(x, dtype=float)
        if x.ndim != 1 or x.shape[0] % 2:
            raise ValueError(f"coverage vector must have even length, got {x.shape}")
        n = x.shape[0] // 2
        return CoverageVector(x[:n], x[n:])

    def to_vector(self) -> np.ndarray:
        return np.concatenate([self.cov1, self.cov2])


@dataclass(frozen=True)
class Cut:
    """A valid inequality a1·cov1 + a2·cov2 <= b for the coverage hull.

    ``kind`` labels which oracle check produced it (certificate traces key off
    it); coefficients of every emitted cut are integers with |a| <= n.
    """

    a1: np.ndarray
    a2: np.ndarray
    b: float
    kind: str = ""
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        a1 = np.asarray(self.a1, dtype=float)
        a2 = np.asarray(self.a2, dtype=float)
        if a1.shape != a2.shape or a1.ndim != 1:
            raise ValueError("cut coefficient blocks must be 1-d arrays of equal length")
        object.__setattr__(self, "a1", a1)
        object.__setattr__(self, "a2", a2)

    @property
    def n(self) -> int:
        return self.a1.shape[0]

    def as_vector(self) -> np.ndarray:
        return np.concatenate([self.a1, self.a2])

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "a1": self.a1.tolist(),
            "a2": self.a2.tolist(),
            "b": self.b,
            "meta": self.meta,
        }


def eval_cut(cut: Cut, cov: CoverageVector) -> float:
    """Slack b - (a1·cov1 + a2·cov2); negative means the cut is violated."""
    if cut.n != cov.n:
        raise ValueError(f"cut over {cut.n} points evaluated on {cov.n}-point coverage")
    return float(cut.b - cut.a1 @ cov.cov1 - cut.a2 @ cov.cov2)


def ball(metric: MetricSpace, center: int, radius: float) -> np.ndarray:
    """Indices within ``radius`` of ``center`` (closed ball, ascending order)."""
    return np.flatnonzero(metric.dist[center] <= radius)


def covered_points(instance: NUkCInstance, solution: NUkCSolution, rho: float) -> np.ndarray:
    """Indices covered by the solution's balls dilated by ``rho``."""
    d = instance.metric.dist
    mask = np.zeros(instance.n, dtype=bool)
    for c in solution.centers1:
        mask |= d[c] <= rho * instance.r1
    for c in solution.centers2:
        mask |= d[c] <= rho * instance.r2
    return np.flatnonzero(mask)


def verify_solution(
    instance: NUkCInstance, solution: NUkCSolution, rho: float
) -> tuple[bool, int]:
    """Check budgets, index validity and coverage >= m at dilation ``rho``.

    Returns (ok, covered_count); the count is reported even when ok is False.
    """
    n = instance.n
    for c in solution.centers1 + solution.centers2:
        if not (0 <= c < n):
            return False, 0
    covered = covered_points(instance, solution, rho)
    count = int(covered.size)
    ok = (
        len(solution.centers1) <= instance.k1
        and len(solution.centers2) <= instance.k2
        and count >= instance.m
    )
    return ok, count


def coverage_of_solution(
    instance: NUkCInstance, centers1: Iterable[int], centers2: Iterable[int]
) -> CoverageVector:
    """0/1 coverage of an integral solution at dilation 1.

    A point claimed by the large-radius class is not counted again for the
    small one, so cov1 + cov2 is the indicator of the covered set.
    """
    d = instance.metric.dist
    c1 = np.zeros(instance.n, dtype=float)
    c2 = np.zeros(instance.n, dtype=float)
    for c in centers1:
        c1[d[c] <= instance.r1] = 1.0
    for c in centers2:
        c2[d[c] <= instance.r2] = 1.0
    c2[c1 > 0] = 0.0
    return CoverageVector(c1, c2)
