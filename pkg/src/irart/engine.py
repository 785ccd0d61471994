"""Iterative refinement engine.

Drives repeated full passes of Fuzzy ART and, between passes, runs the
three refinement phases:

  stability detection -- clusters whose sample count shrank since the
      previous pass are flagged unstable
  unstable deletion   -- flagged clusters are removed; their samples
      become unassigned until the next pass
  vigilance expansion -- every surviving cluster's vigilance is scaled
      by (1 - tau), widening its catchment slightly

A plain multi-pass Fuzzy ART baseline (same termination rule, no
refinement phases) is provided for comparison.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .core import UNASSIGNED, ClusterModel, HyperParams, single_pass

MAX_ITER = "MAX_ITER"
CONVERGED = "CONVERGED"


@dataclass(frozen=True)
class StabilityVerdict:
    unstable_ids: frozenset
    stable_ids: frozenset


@dataclass
class IterationRecord:
    t: int
    clusters_before_delete: int
    clusters_after_delete: int
    cluster_sizes: dict          # id -> sample count at end of the pass
    vigilance: dict              # id -> vigilance after this iteration's phases
    changed: int                 # samples whose assignment differs from previous pass

    def to_json(self) -> str:
        return json.dumps(
            {
                "t": self.t,
                "clusters_before_delete": self.clusters_before_delete,
                "clusters_after_delete": self.clusters_after_delete,
                "cluster_sizes": {str(k): v for k, v in self.cluster_sizes.items()},
                "vigilance": {str(k): v for k, v in self.vigilance.items()},
                "changed": self.changed,
            },
            sort_keys=True,
        )


@dataclass
class RunTrace:
    records: list = field(default_factory=list)
    termination: str = ""

    @property
    def iterations(self) -> int:
        return len(self.records)

    def to_jsonl(self) -> str:
        lines = [r.to_json() for r in self.records]
        lines.append(json.dumps({"termination": self.termination}))
        return "\n".join(lines) + "\n"


def _counts(assignment: np.ndarray) -> dict:
    ids, counts = np.unique(assignment[assignment != UNASSIGNED], return_counts=True)
    return {int(i): int(c) for i, c in zip(ids, counts)}


def detect_unstable(
    current: np.ndarray, previous: np.ndarray, model: ClusterModel
) -> StabilityVerdict:
    """Flag clusters whose sample count strictly decreased since the
    previous pass.  Clusters new in the current pass are stable; so are
    clusters with equal or increased counts.
    """
    current = np.asarray(current)
    previous = np.asarray(previous)
    if current.shape != previous.shape:
        raise ValueError(
            f"assignment length mismatch: {current.shape} vs {previous.shape}"
        )
    cur = _counts(current)
    prev = _counts(previous)
    unstable, stable = set(), set()
    for cid in model.ids:
        cid = int(cid)
        if cid in prev and cur.get(cid, 0) < prev[cid]:
            unstable.add(cid)
        else:
            stable.add(cid)
    if len(model) > 0 and not stable:
        # Sample count is conserved across passes, so some cluster must
        # have grown or been created whenever another shrank.
        raise AssertionError("stability detection produced an empty stable set")
    return StabilityVerdict(frozenset(unstable), frozenset(stable))


def delete_unstable(
    model: ClusterModel, verdict: StabilityVerdict, assignment: np.ndarray
) -> np.ndarray:
    """Remove unstable clusters from the model and return the assignment
    with their entries replaced by UNASSIGNED.  Mutates the model."""
    assignment = np.asarray(assignment).copy()
    if verdict.unstable_ids:
        model.drop_clusters(verdict.unstable_ids)
        mask = np.isin(assignment, list(verdict.unstable_ids))
        assignment[mask] = UNASSIGNED
    return assignment


def expand_vigilance(model: ClusterModel, tau: float) -> None:
    """Scale every surviving cluster's vigilance by (1 - tau)."""
    np.multiply(model.vigilance, 1.0 - tau, out=model.vigilance)


def _record(t, before, model, assignment, previous) -> IterationRecord:
    changed = 0 if previous is None else int(np.count_nonzero(assignment != previous))
    return IterationRecord(
        t=t,
        clusters_before_delete=before,
        clusters_after_delete=len(model),
        cluster_sizes=_counts(assignment),
        vigilance={int(i): float(v) for i, v in zip(model.ids, model.vigilance)},
        changed=changed,
    )


def _run(data: np.ndarray, params: HyperParams, refine: bool):
    data = np.asarray(data, dtype=np.float64)
    if data.ndim != 2 or data.shape[0] == 0:
        raise ValueError("dataset must be a non-empty 2-D array")
    if data.shape[1] % 2 != 0:
        raise ValueError("inputs must be complement-coded (even width)")

    model = ClusterModel(data.shape[1] // 2)
    trace = RunTrace()

    t = 1
    assignment = single_pass(model, data, params)
    trace.records.append(_record(t, len(model), model, assignment, None))
    if params.t_max == 1:
        trace.termination = MAX_ITER
        return model, assignment, trace

    while True:
        t += 1
        previous = assignment
        assignment = single_pass(model, data, params)
        before = len(model)

        if np.array_equal(assignment, previous):
            trace.records.append(_record(t, before, model, assignment, previous))
            trace.termination = CONVERGED
            return model, assignment, trace
        if t == params.t_max:
            trace.records.append(_record(t, before, model, assignment, previous))
            trace.termination = MAX_ITER
            return model, assignment, trace

        if refine:
            verdict = detect_unstable(assignment, previous, model)
            assignment = delete_unstable(model, verdict, assignment)
            expand_vigilance(model, params.tau)
        trace.records.append(_record(t, before, model, assignment, previous))


def run_ir_art(data: np.ndarray, params: HyperParams):
    """Full iterative-refinement run.

    Returns (model, assignment, trace); the assignment comes from the
    terminating pass and has no UNASSIGNED entries.
    """
    return _run(data, params, refine=True)


def run_fuzzy_art(data: np.ndarray, params: HyperParams):
    """Multi-pass Fuzzy ART baseline: same termination rule, vigilance
    fixed at rho0, no cluster deletion."""
    return _run(data, params, refine=False)
