"""Loaders for the small bundled benchmark datasets.

Three labeled CSV files ship with the package: `iris` (the classic 150x4
measurements), and two deterministic 2-D benchmarks, `flag` (640 samples,
3 clusters) and `aggregation` (788 samples, 7 clusters).  Larger corpora
are expected to be supplied by the user as CSV files.
"""

from __future__ import annotations

from importlib import resources

from .preprocess import RawDataset, load_csv

BUNDLED = ("flag", "iris", "aggregation")


def load_bundled(name: str) -> RawDataset:
    if name not in BUNDLED:
        raise ValueError(f"unknown bundled dataset {name!r}; available: {BUNDLED}")
    ref = resources.files("irart.data").joinpath(f"{name}.csv")
    with resources.as_file(ref) as path:
        return load_csv(path, labeled=True)


def load_flag() -> RawDataset:
    return load_bundled("flag")


def load_iris() -> RawDataset:
    return load_bundled("iris")


def load_aggregation() -> RawDataset:
    return load_bundled("aggregation")
