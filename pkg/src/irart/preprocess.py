"""Dataset ingestion: CSV loading, min-max normalization, complement coding."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np


class DataFormatError(ValueError):
    """Raised for malformed input data (with a row/column diagnostic)."""


@dataclass
class RawDataset:
    """N x m feature matrix plus optional ground-truth labels."""

    data: np.ndarray
    labels: Optional[np.ndarray] = None
    feature_names: Optional[Sequence[str]] = None

    def __post_init__(self):
        self.data = np.asarray(self.data, dtype=np.float64)
        if self.data.ndim != 2 or self.data.size == 0:
            raise DataFormatError("dataset must be a non-empty N x m matrix")
        if not np.isfinite(self.data).all():
            bad = np.argwhere(~np.isfinite(self.data))[0]
            raise DataFormatError(
                f"non-finite value at row {bad[0]}, column {bad[1]}"
            )
        if self.labels is not None:
            self.labels = np.asarray(self.labels)
            if self.labels.shape[0] != self.data.shape[0]:
                raise DataFormatError(
                    f"{self.labels.shape[0]} labels for {self.data.shape[0]} rows"
                )

    @property
    def n_samples(self) -> int:
        return self.data.shape[0]

    @property
    def n_features(self) -> int:
        return self.data.shape[1]


def minmax_normalize(raw: RawDataset) -> RawDataset:
    """Map each column affinely onto [0, 1].

    Statistics are taken over the full dataset before any clustering.
    Constant columns map to all zeros so complements stay well defined.
    """
    data = raw.data
    lo = data.min(axis=0)
    hi = data.max(axis=0)
    span = hi - lo
    out = np.zeros_like(data)
    nz = span > 0
    out[:, nz] = (data[:, nz] - lo[nz]) / span[nz]
    return RawDataset(out, raw.labels, raw.feature_names)


def complement_code(x: np.ndarray) -> np.ndarray:
    """Concatenate a normalized vector (or matrix of rows) with 1 - itself.

    The result has constant L1 norm m per row.
    """
    x = np.asarray(x, dtype=np.float64)
    if x.size and (x.min() < 0.0 or x.max() > 1.0):
        raise DataFormatError("values must lie in [0, 1] before complement coding")
    return np.concatenate([x, 1.0 - x], axis=-1)


def _parse_cell(text: str, row: int, col: int) -> float:
    text = text.strip()
    if text == "":
        raise DataFormatError(f"missing value at row {row}, column {col}")
    try:
        value = float(text)
    except ValueError:
        raise DataFormatError(
            f"non-numeric value {text!r} at row {row}, column {col}"
        ) from None
    if not np.isfinite(value):
        raise DataFormatError(f"non-finite value at row {row}, column {col}")
    return value


def load_csv(
    path,
    labeled: bool = False,
    label_col=None,
) -> RawDataset:
    """Read a UTF-8 comma-separated file into a RawDataset.

    The first line may be a header (detected by failing to parse as
    numbers).  When `labeled` is true the label column is selected by
    `label_col` (name or index), defaulting to the last column.  Labels
    may be arbitrary strings; features must be numeric.
    """
    with open(path, newline="", encoding="utf-8") as fh:
        rows = [r for r in csv.reader(fh) if r and any(c.strip() for c in r)]
    if not rows:
        raise DataFormatError(f"{path}: empty file")

    first = rows[0]
    first_width = len(first)

    # Resolve a positional label column up front so the header sniff can
    # ignore the label cell (string labels must not look like a header).
    label_idx = None
    by_name = None
    if labeled or label_col is not None:
        if label_col is None:
            label_idx = first_width - 1
        elif isinstance(label_col, int) or (
            isinstance(label_col, str) and label_col.lstrip("-").isdigit()
        ):
            label_idx = int(label_col) % first_width
        else:
            by_name = label_col

    header = None
    try:
        [float(c) for j, c in enumerate(first) if j != label_idx]
    except ValueError:
        header = [c.strip() for c in first]
        rows = rows[1:]
    if not rows:
        raise DataFormatError(f"{path}: no data rows")

    width = len(rows[0])
    for i, r in enumerate(rows):
        if len(r) != width:
            raise DataFormatError(
                f"{path}: row {i} has {len(r)} columns, expected {width}"
            )

    if by_name is not None:
        if header is None or by_name not in header:
            raise DataFormatError(
                f"{path}: label column {by_name!r} not found in header"
            )
        label_idx = header.index(by_name)

    labels = None
    if label_idx is not None:
        labels = np.array([r[label_idx].strip() for r in rows])
        rows = [[c for j, c in enumerate(r) if j != label_idx] for r in rows]
        if header is not None:
            header = [h for j, h in enumerate(header) if j != label_idx]
        if len(rows[0]) == 0:
            raise DataFormatError(f"{path}: no feature columns left after labels")

    data = np.array(
        [[_parse_cell(c, i, j) for j, c in enumerate(r)] for i, r in enumerate(rows)]
    )
    return RawDataset(data, labels, header)


def prepare_inputs(raw: RawDataset) -> np.ndarray:
    """Normalize and complement-code a raw dataset into engine inputs."""
    return complement_code(minmax_normalize(raw).data)
