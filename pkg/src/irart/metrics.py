"""External cluster-validity indices: adjusted Rand index and normalized
mutual information, both computed from a contingency table."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import UNASSIGNED


@dataclass(frozen=True)
class ContingencyTable:
    """Cross-tabulation of true classes (rows) against predicted clusters
    (columns)."""

    counts: np.ndarray

    @property
    def row_sums(self) -> np.ndarray:
        return self.counts.sum(axis=1)

    @property
    def col_sums(self) -> np.ndarray:
        return self.counts.sum(axis=0)

    @property
    def total(self) -> int:
        return int(self.counts.sum())


def build_contingency(truth, predicted) -> ContingencyTable:
    truth = np.asarray(truth)
    predicted = np.asarray(predicted)
    if truth.shape != predicted.shape:
        raise ValueError(f"length mismatch: {truth.shape} vs {predicted.shape}")
    if predicted.dtype.kind in "iu" and np.any(predicted == UNASSIGNED):
        raise ValueError("predicted assignment contains unassigned entries")
    _, ti = np.unique(truth, return_inverse=True)
    _, pi = np.unique(predicted, return_inverse=True)
    counts = np.zeros((ti.max() + 1, pi.max() + 1), dtype=np.int64)
    np.add.at(counts, (ti, pi), 1)
    return ContingencyTable(counts)


def _comb2(x) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    return x * (x - 1.0) / 2.0


def adjusted_rand_index(table: ContingencyTable) -> float:
    """Hubert-Arabie adjusted Rand index; 1 iff the partitions agree up to
    relabeling, ~0 in expectation for independent partitions."""
    n = table.total
    if n < 2:
        raise ValueError("adjusted Rand index needs at least 2 samples")
    sum_ij = _comb2(table.counts).sum()
    sum_a = _comb2(table.row_sums).sum()
    sum_b = _comb2(table.col_sums).sum()
    # Scale through by comb2(n): every term is then an exact integer (for
    # n within float precision), so ties like the crossed 2x2 case come
    # out exact instead of off by one ulp.
    total_pairs = _comb2(n)
    numerator = sum_ij * total_pairs - sum_a * sum_b
    denominator = 0.5 * (sum_a + sum_b) * total_pairs - sum_a * sum_b
    if denominator == 0.0:
        # Both partitions are single-cluster (or all-singletons on both
        # sides): they agree trivially.
        return 1.0
    return float(numerator / denominator)


def normalized_mutual_info(table: ContingencyTable) -> float:
    """Mutual information normalized by the arithmetic mean of the two
    partition entropies (natural log; the ratio is base-invariant)."""
    n = table.total
    if n < 1:
        raise ValueError("empty contingency table")
    def entropy(counts):
        p = counts[counts > 0] / n
        return float(-(p * np.log(p)).sum())

    h_u = entropy(table.row_sums)
    h_v = entropy(table.col_sums)
    if h_u == 0.0 and h_v == 0.0:
        return 1.0
    if h_u == 0.0 or h_v == 0.0:
        return 0.0

    # MI = H(U) + H(V) - H(U,V); this form is exact (bit-for-bit) when the
    # two partitions coincide, where the ratio must be exactly 1.
    h_uv = entropy(table.counts.ravel())
    mi = h_u + h_v - h_uv
    return float(min(1.0, max(0.0, mi / (0.5 * (h_u + h_v)))))


def scores(truth, predicted):
    """Convenience: (NMI, ARI) for one labeling pair."""
    table = build_contingency(truth, predicted)
    return normalized_mutual_info(table), adjusted_rand_index(table)
