"""Fuzzy ART clustering with iterative refinement and a vigilance-scan
benchmark harness."""

from .core import (
    UNASSIGNED,
    ClusterModel,
    HyperParams,
    choice_function,
    match_function,
    present_sample,
    prototype_learning,
    single_pass,
)
from .engine import (
    CONVERGED,
    MAX_ITER,
    RunTrace,
    StabilityVerdict,
    delete_unstable,
    detect_unstable,
    expand_vigilance,
    run_fuzzy_art,
    run_ir_art,
)
from .metrics import (
    ContingencyTable,
    adjusted_rand_index,
    build_contingency,
    normalized_mutual_info,
    scores,
)
from .preprocess import RawDataset, complement_code, load_csv, minmax_normalize, prepare_inputs
from .bench import (
    FUZZY_ART,
    IR_ART,
    ScanConfig,
    ScanReport,
    emit_report,
    generate_synthetic,
    permute,
    run_scan,
)
from .datasets import load_aggregation, load_bundled, load_flag, load_iris

__version__ = "0.1.0"
