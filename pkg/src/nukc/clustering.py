"""Greedy bottleneck partition (Hochbaum-Shmoys style).

Repeatedly picks the unassigned point with the largest coverage value as a
representative and assigns everything within the radius to it.  The output is
the backbone of the coverage-to-firefighter reduction: representatives are
pairwise more than the radius apart, children sit within the radius of their
representative, and a representative's coverage dominates its children's.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .model import MetricSpace


@dataclass(frozen=True)
class HSResult:
    """Representatives in selection order and the cluster each one absorbed."""

    reps: tuple[int, ...]
    child: dict[int, tuple[int, ...]]

    def parent_of(self) -> dict[int, int]:
        return {v: u for u, members in self.child.items() for v in members}


def hs_partition(
    metric: MetricSpace,
    points: Sequence[int],
    radius: float,
    cov: np.ndarray,
    priority: np.ndarray | None = None,
) -> HSResult:
    """Partition ``points`` into clusters of radius ``radius`` greedily by ``cov``.

    Selection order is deterministic: coverage descending, then priority=True
    before False, then lowest index.  ``cov`` (and ``priority`` when given) are
    indexed by original point id, so the same arrays work for nested calls on
    representative subsets.

    Every representative u satisfies:
      (a) d(u, v) <= radius for each child v,
      (b) d(u, u') > radius for any other representative u',
      (c) the child sets partition ``points``,
      (d) cov[u] >= cov[v] for each child v.
    """
    pts = [int(v) for v in points]
    if len(set(pts)) != len(pts):
        raise ValueError("points contains repeated indices")
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    cov = np.asarray(cov, dtype=float)

    def key(v: int):
        pri = 0 if (priority is not None and bool(priority[v])) else 1
        return (-cov[v], pri, v)

    order = sorted(pts, key=key)
    d = metric.dist
    unassigned = dict.fromkeys(order)  # insertion-ordered set
    reps: list[int] = []
    child: dict[int, tuple[int, ...]] = {}
    while unassigned:
        u = next(iter(unassigned))
        members = tuple(sorted(v for v in unassigned if d[u, v] <= radius))
        for v in members:
            del unassigned[v]
        reps.append(u)
        child[u] = members
    return HSResult(reps=tuple(reps), child=child)
