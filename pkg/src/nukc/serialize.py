"""JSON encoding of instances and solutions.

Instance objects carry either "points" (rows of coordinates, Euclidean metric)
or an explicit "distance_matrix", never both, plus r1, r2, k1, k2, m.  Unknown
keys are ignored on input so files can carry provenance such as generator
metadata.  Solution objects always carry "status"; a solution additionally has
"dilation", "centers1", "centers2", and "covered_count".
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import numpy as np

from .model import MetricSpace, NUkCInstance, NUkCSolution

INSTANCE_KEYS = ("r1", "r2", "k1", "k2", "m")


def instance_to_json(instance: NUkCInstance) -> dict[str, Any]:
    data: dict[str, Any] = {}
    if instance.metric.coords is not None:
        data["points"] = [[float(x) for x in row] for row in instance.metric.coords]
    else:
        data["distance_matrix"] = [
            [float(x) for x in row] for row in instance.metric.dist
        ]
    data["r1"] = float(instance.r1)
    data["r2"] = float(instance.r2)
    data["k1"] = int(instance.k1)
    data["k2"] = int(instance.k2)
    data["m"] = int(instance.m)
    return data


def instance_from_json(data: dict[str, Any]) -> NUkCInstance:
    if not isinstance(data, dict):
        raise ValueError("instance JSON must be an object")
    has_points = "points" in data
    has_matrix = "distance_matrix" in data
    if has_points == has_matrix:
        raise ValueError("instance needs exactly one of 'points' or 'distance_matrix'")
    missing = [key for key in INSTANCE_KEYS if key not in data]
    if missing:
        raise ValueError(f"instance JSON missing keys: {', '.join(missing)}")
    if has_points:
        points = np.asarray(data["points"], dtype=float)
        if points.ndim != 2:
            raise ValueError("'points' must be a list of coordinate rows")
        metric = MetricSpace.from_points(points)
    else:
        metric = MetricSpace.from_matrix(np.asarray(data["distance_matrix"], dtype=float))
    return NUkCInstance(
        metric=metric,
        r1=float(data["r1"]),
        r2=float(data["r2"]),
        k1=int(data["k1"]),
        k2=int(data["k2"]),
        m=int(data["m"]),
    )


@dataclass(frozen=True)
class SolutionRecord:
    """Parsed solution file: either infeasible or a solution with its count."""

    status: str
    solution: NUkCSolution | None = None
    covered_count: int | None = None


def solution_to_json(record: SolutionRecord) -> dict[str, Any]:
    if record.status == "infeasible":
        return {"status": "infeasible"}
    if record.status != "solution" or record.solution is None:
        raise ValueError(f"cannot encode status {record.status!r}")
    sol = record.solution
    return {
        "status": "solution",
        "dilation": float(sol.dilation),
        "centers1": [int(v) for v in sol.centers1],
        "centers2": [int(v) for v in sol.centers2],
        "covered_count": int(record.covered_count or 0),
    }


def solution_from_json(data: dict[str, Any]) -> SolutionRecord:
    if not isinstance(data, dict) or "status" not in data:
        raise ValueError("solution JSON must be an object with a 'status'")
    status = data["status"]
    if status == "infeasible":
        return SolutionRecord(status="infeasible")
    if status != "solution":
        raise ValueError(f"unknown status {status!r}")
    solution = NUkCSolution(
        centers1=tuple(int(v) for v in data["centers1"]),
        centers2=tuple(int(v) for v in data["centers2"]),
        dilation=float(data["dilation"]),
    )
    return SolutionRecord(
        status="solution",
        solution=solution,
        covered_count=int(data["covered_count"]),
    )


def load_json(path: str | Path) -> Any:
    with open(path) as handle:
        return json.load(handle)


def dump_json(data: Any, path: str | Path | None) -> None:
    """Write to the path, or stdout when the path is None or '-'."""
    text = json.dumps(data, indent=2)
    if path is None or path == "-":
        print(text)
    else:
        Path(path).write_text(text + "\n")
