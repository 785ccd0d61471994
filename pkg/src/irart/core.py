"""Fuzzy ART primitives: choice/match functions, prototype learning, and
single presentation passes over complement-coded data.

All vectors are complement-coded: a normalized m-dimensional sample x is
represented as I = (x, 1-x), so |I| (L1) is always m and every cluster
weight lives in [0,1]^(2m).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

#: Sentinel for samples that currently belong to no cluster.
UNASSIGNED = -1


class DimensionMismatchError(ValueError):
    """Input and weight vectors disagree in length."""


@dataclass(frozen=True)
class HyperParams:
    """Run parameters shared by the plain and iterative-refinement engines.

    alpha  -- choice parameter, > 0
    beta   -- learning rate in [0, 1]
    rho0   -- initial vigilance in [0, 1]
    tau    -- vigilance expansion rate in [0, 1)
    t_max  -- maximum number of full passes, >= 1
    """

    alpha: float = 0.001
    beta: float = 0.5
    rho0: float = 0.5
    tau: float = 0.01
    t_max: int = 50

    def __post_init__(self):
        if not self.alpha > 0:
            raise ValueError(f"alpha must be > 0, got {self.alpha}")
        if not 0.0 <= self.beta <= 1.0:
            raise ValueError(f"beta must be in [0, 1], got {self.beta}")
        if not 0.0 <= self.rho0 <= 1.0:
            raise ValueError(f"rho0 must be in [0, 1], got {self.rho0}")
        if not 0.0 <= self.tau < 1.0:
            raise ValueError(f"tau must be in [0, 1), got {self.tau}")
        if not (isinstance(self.t_max, (int, np.integer)) and self.t_max >= 1):
            raise ValueError(f"t_max must be a positive integer, got {self.t_max}")


class ClusterModel:
    """Ordered collection of clusters with per-cluster vigilance.

    Cluster ids come from a monotonically increasing counter and are never
    reused, so an id deleted in one iteration cannot collide with a cluster
    created later.  Storage grows amortized (capacity doubling) because a
    presentation pass may create hundreds of clusters at high vigilance.
    """

    def __init__(self, dimension: int, capacity: int = 8):
        self.dimension = int(dimension)
        self._w = np.zeros((capacity, 2 * self.dimension), dtype=np.float64)
        self._wsum = np.zeros(capacity, dtype=np.float64)
        self._rho = np.zeros(capacity, dtype=np.float64)
        self._ids = np.zeros(capacity, dtype=np.int64)
        self._count = 0
        self._next_id = 0

    def __len__(self):
        return self._count

    @property
    def weights(self) -> np.ndarray:
        """View of the active (J, 2m) weight matrix."""
        return self._w[: self._count]

    @property
    def weight_sums(self) -> np.ndarray:
        """View of the cached L1 norms of the active weights."""
        return self._wsum[: self._count]

    @property
    def vigilance(self) -> np.ndarray:
        return self._rho[: self._count]

    @property
    def ids(self) -> np.ndarray:
        return self._ids[: self._count]

    def copy(self) -> "ClusterModel":
        out = ClusterModel(self.dimension, capacity=max(8, self._count))
        out._w[: self._count] = self.weights
        out._wsum[: self._count] = self.weight_sums
        out._rho[: self._count] = self.vigilance
        out._ids[: self._count] = self.ids
        out._count = self._count
        out._next_id = self._next_id
        return out

    def _grow(self):
        cap = max(8, 2 * self._w.shape[0])
        for name in ("_w", "_wsum", "_rho", "_ids"):
            old = getattr(self, name)
            shape = (cap,) + old.shape[1:]
            new = np.zeros(shape, dtype=old.dtype)
            new[: self._count] = old[: self._count]
            setattr(self, name, new)

    def add_cluster(self, weight: np.ndarray, vigilance: float) -> int:
        weight = np.asarray(weight, dtype=np.float64)
        if weight.shape != (2 * self.dimension,):
            raise DimensionMismatchError(
                f"weight has shape {weight.shape}, expected {(2 * self.dimension,)}"
            )
        if self._count == self._w.shape[0]:
            self._grow()
        j = self._count
        self._w[j] = weight
        self._wsum[j] = weight.sum()
        self._rho[j] = float(vigilance)
        cid = self._next_id
        self._ids[j] = cid
        self._next_id += 1
        self._count += 1
        return cid

    def set_weight(self, index: int, weight: np.ndarray) -> None:
        self._w[index] = weight
        self._wsum[index] = self._w[index].sum()

    def drop_clusters(self, ids_to_drop) -> None:
        """Remove the given cluster ids; weights and vigilances are dropped."""
        drop = set(int(i) for i in ids_to_drop)
        keep = np.array([int(i) not in drop for i in self.ids], dtype=bool)
        kept = int(keep.sum())
        self._w[:kept] = self.weights[keep]
        self._wsum[:kept] = self.weight_sums[keep]
        self._rho[:kept] = self.vigilance[keep]
        self._ids[:kept] = self.ids[keep]
        self._count = kept

    def index_of(self, cluster_id: int) -> int:
        pos = np.nonzero(self.ids == cluster_id)[0]
        if pos.size == 0:
            raise KeyError(f"no cluster with id {cluster_id}")
        return int(pos[0])


def _check_lengths(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise DimensionMismatchError(f"length mismatch: {a.shape} vs {b.shape}")


def choice_function(input_vec, weight, alpha: float) -> float:
    """Competition score |I ^ w| / (alpha + |w|), ^ = elementwise min."""
    input_vec = np.asarray(input_vec, dtype=np.float64)
    weight = np.asarray(weight, dtype=np.float64)
    _check_lengths(input_vec, weight)
    return float(np.minimum(input_vec, weight).sum() / (alpha + weight.sum()))


def match_function(input_vec, weight) -> float:
    """Normalized overlap |I ^ w| / |I|, compared against vigilance."""
    input_vec = np.asarray(input_vec, dtype=np.float64)
    weight = np.asarray(weight, dtype=np.float64)
    _check_lengths(input_vec, weight)
    norm = input_vec.sum()
    if norm <= 0.0:
        raise ValueError("input vector has zero L1 norm")
    return float(np.minimum(input_vec, weight).sum() / norm)


def prototype_learning(input_vec, weight, beta: float) -> np.ndarray:
    """Resonance update beta*(I ^ w) + (1 - beta)*w.

    Componentwise the result never exceeds the old weight.
    """
    input_vec = np.asarray(input_vec, dtype=np.float64)
    weight = np.asarray(weight, dtype=np.float64)
    _check_lengths(input_vec, weight)
    return beta * np.minimum(input_vec, weight) + (1.0 - beta) * weight


@njit(cache=True)
def _pass_kernel(data, weights, wsums, rho, ids, count, next_id, alpha, beta, rho0, assignment):
    """Present every row of `data` once against the model buffers.

    Walking clusters in descending choice order and stopping at the first
    that passes its match test selects the max-choice cluster among those
    that pass, ties toward the lowest storage index; the single scan below
    with a strict `>` comparison realizes exactly that.

    The caller guarantees the buffers have room for `count + len(data)`
    clusters.  Returns the updated (count, next_id).
    """
    n_samples, dim = data.shape
    for n in range(n_samples):
        x = data[n]
        x_norm = 0.0
        for d in range(dim):
            x_norm += x[d]
        best = -1
        best_choice = -1.0
        for j in range(count):
            overlap = 0.0
            for d in range(dim):
                w = weights[j, d]
                overlap += w if w < x[d] else x[d]
            if overlap / x_norm >= rho[j]:
                choice = overlap / (alpha + wsums[j])
                if choice > best_choice:
                    best_choice = choice
                    best = j
        if best >= 0:
            new_sum = 0.0
            for d in range(dim):
                w = weights[best, d]
                low = w if w < x[d] else x[d]
                w_new = beta * low + (1.0 - beta) * w
                weights[best, d] = w_new
                new_sum += w_new
            wsums[best] = new_sum
            assignment[n] = ids[best]
        else:
            w_sum = 0.0
            for d in range(dim):
                weights[count, d] = x[d]
                w_sum += x[d]
            wsums[count] = w_sum
            rho[count] = rho0
            ids[count] = next_id
            assignment[n] = next_id
            next_id += 1
            count += 1
    return count, next_id


def _run_kernel(model: ClusterModel, data: np.ndarray, params: HyperParams) -> np.ndarray:
    while model._w.shape[0] < model._count + data.shape[0]:
        model._grow()
    assignment = np.empty(data.shape[0], dtype=np.int64)
    model._count, model._next_id = _pass_kernel(
        data,
        model._w,
        model._wsum,
        model._rho,
        model._ids,
        model._count,
        model._next_id,
        params.alpha,
        params.beta,
        params.rho0,
        assignment,
    )
    return assignment


def present_sample(model: ClusterModel, input_vec, params: HyperParams) -> int:
    """Present one sample: category choice, match test, resonance or creation.

    Clusters are searched in descending choice-function order (ties broken
    toward the earliest-created cluster); the first whose match value meets
    its own vigilance resonates and learns. If none qualifies, a new cluster
    is created with weight = input and vigilance = rho0.

    Mutates `model` in place and returns the winning (or created) cluster id.
    """
    input_vec = np.asarray(input_vec, dtype=np.float64)
    if input_vec.shape != (2 * model.dimension,):
        raise DimensionMismatchError(
            f"input has shape {input_vec.shape}, expected {(2 * model.dimension,)}"
        )
    return int(_run_kernel(model, input_vec[None, :].copy(), params)[0])


def single_pass(model: ClusterModel, data: np.ndarray, params: HyperParams) -> np.ndarray:
    """Present every row of `data` once, in order.

    Returns the assignment (array of cluster ids, no UNASSIGNED entries).
    The model is mutated in place.
    """
    data = np.ascontiguousarray(data, dtype=np.float64)
    if data.ndim != 2 or data.shape[1] != 2 * model.dimension:
        raise DimensionMismatchError(
            f"data has shape {data.shape}, expected (N, {2 * model.dimension})"
        )
    return _run_kernel(model, data, params)
