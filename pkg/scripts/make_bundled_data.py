"""Regenerate the bundled benchmark CSVs under src/irart/data/.

The two 2-D benchmarks are deterministic synthetic datasets:

* flag -- 640 samples, 3 clusters.  Two large clusters mix a gaussian
  core with a clipped uniform halo; the third is a small tight gaussian.
  The geometry is calibrated so that IR-ART recovers the exact partition
  over a wide initial-vigilance band while plain vigilance scans show
  the usual merge/fragment regimes at the extremes.
* aggregation -- 788 samples, 7 gaussian blobs of uneven sizes.

iris is the classic 150x4 measurement table, exported from
sklearn.datasets (only needed when regenerating; the package itself
never imports sklearn).

Run from the repository root:

    python3 scripts/make_bundled_data.py
"""

import csv
import pathlib

import numpy as np

OUT_DIR = pathlib.Path(__file__).resolve().parents[1] / "src" / "irart" / "data"


def make_flag(seed=104, total=640):
    """Three clusters: two broad core+halo squares and one tight blob."""
    blobs = [
        {"c": (0.05, 0.05), "cs": 0.11, "cf": 0.5, "hw": 0.40, "f": 0.45},
        {"c": (0.95, 0.25), "cs": 0.11, "cf": 0.5, "hw": 0.40, "f": 0.45},
        {"c": (0.35, 0.95), "cs": 0.06, "cf": 1.0, "hw": 0.0, "f": 0.10},
    ]
    rng = np.random.default_rng(seed)
    counts = [int(round(total * s["f"])) for s in blobs]
    counts[-1] += total - sum(counts)
    points, labels = [], []
    for lab, (s, n) in enumerate(zip(blobs, counts)):
        n_core = int(round(n * s["cf"]))
        n_halo = n - n_core
        core = rng.normal(0.0, s["cs"], (n_core, 2)) + s["c"]
        if n_halo:
            halo = rng.uniform(-s["hw"], s["hw"], (n_halo, 2)) + s["c"]
            core = np.vstack([core, halo])
        points.append(core)
        labels.extend([lab] * n)
    return np.clip(np.vstack(points), 0.0, 1.0), np.array(labels)


def make_aggregation(seed=20240202):
    """Seven gaussian blobs of uneven sizes, 788 points."""
    rng = np.random.default_rng(seed)
    centers = np.array([
        [0.15, 0.80], [0.45, 0.85], [0.80, 0.85],
        [0.15, 0.35], [0.50, 0.45], [0.85, 0.45],
        [0.60, 0.10],
    ])
    sizes = [45, 170, 102, 273, 34, 130, 34]
    sigma = 0.08
    points, labels = [], []
    for lab, (c, sz) in enumerate(zip(centers, sizes)):
        points.append(rng.normal(c, sigma, size=(sz, 2)))
        labels.extend([lab] * sz)
    return np.clip(np.vstack(points), 0.0, 1.0), np.array(labels)


def write_csv(path, header, data, labels):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row, lab in zip(data, labels):
            writer.writerow([f"{v:.9f}" for v in row] + [int(lab)])


def main():
    OUT_DIR.mkdir(parents=True, exist_ok=True)

    data, labels = make_flag()
    write_csv(OUT_DIR / "flag.csv", ["x", "y", "label"], data, labels)
    print(f"flag.csv: {len(labels)} rows, {labels.max() + 1} clusters")

    data, labels = make_aggregation()
    write_csv(OUT_DIR / "aggregation.csv", ["x", "y", "label"], data, labels)
    print(f"aggregation.csv: {len(labels)} rows, {labels.max() + 1} clusters")

    from sklearn.datasets import load_iris

    iris = load_iris()
    header = ["sepal_length", "sepal_width", "petal_length", "petal_width", "label"]
    write_csv(OUT_DIR / "iris.csv", header, iris.data, iris.target)
    print(f"iris.csv: {len(iris.target)} rows, {iris.target.max() + 1} clusters")


if __name__ == "__main__":
    main()
