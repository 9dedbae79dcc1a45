"""Wrapper feature selection with binary sine cosine optimizers and a k-NN objective."""

from .binarize import TransferKind, s_transfer, v_transfer
from .dataset import (
    Dataset,
    DatasetError,
    DataView,
    ManifestEntry,
    SplitIndices,
    load_dataset,
    load_manifest,
    minmax_normalize,
    resolve_manifest_path,
    stratified_split,
)
from .experiment import (
    Direction,
    ExperimentConfig,
    RankTable,
    SummaryRow,
    friedman_mean_ranks,
    prepare_problem,
    run_batch,
    summarize,
)
from .knn import MaskedKnnScorer, error_rate, knn_classify, masked_distance
from .objective import Evaluation, FitnessParams, evaluate, fitness, make_knn_objective
from .optimizer import Destination, RunRecord, optimize
from .sca import ScaConfig, StepRandoms, draw_step_randoms, r1_schedule, sca_update

__version__ = "0.1.0"

__all__ = [
    "Dataset",
    "DatasetError",
    "DataView",
    "Destination",
    "Direction",
    "Evaluation",
    "ExperimentConfig",
    "FitnessParams",
    "ManifestEntry",
    "MaskedKnnScorer",
    "RankTable",
    "RunRecord",
    "ScaConfig",
    "SplitIndices",
    "StepRandoms",
    "SummaryRow",
    "TransferKind",
    "draw_step_randoms",
    "error_rate",
    "evaluate",
    "fitness",
    "friedman_mean_ranks",
    "knn_classify",
    "load_dataset",
    "load_manifest",
    "make_knn_objective",
    "masked_distance",
    "minmax_normalize",
    "optimize",
    "prepare_problem",
    "r1_schedule",
    "resolve_manifest_path",
    "run_batch",
    "s_transfer",
    "sca_update",
    "stratified_split",
    "summarize",
    "v_transfer",
    "__version__",
]
