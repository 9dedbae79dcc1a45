"""Seeded multi-run experiments, result summaries, and rank comparisons."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Sequence

import numpy as np
from scipy.stats import chi2, rankdata

from .binarize import TransferKind
from .dataset import (
    DatasetError,
    DataView,
    Dataset,
    SplitIndices,
    load_dataset,
    load_manifest,
    minmax_normalize,
    resolve_manifest_path,
    split_views,
    stratified_split,
)
from .objective import FitnessParams, make_knn_objective
from .optimizer import RunRecord, optimize
from .sca import ScaConfig

TEST_FRACTION = 0.2

VARIANT_LABELS = {TransferKind.S_SHAPED: "SBSCA", TransferKind.V_SHAPED: "VBSCA"}


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything one reproducible experiment needs."""

    dataset: str
    variant: TransferKind
    runs: int = 30
    population_size: int = 20
    iterations: int = 300
    k: int = 5
    alpha: float = 0.99
    a: float = 2.0
    base_seed: int = 1234
    split_seed: int = 42

    def __post_init__(self) -> None:
        if self.runs < 1:
            raise ValueError(f"runs must be at least 1, got {self.runs}")
        if self.k < 1:
            raise ValueError(f"k must be at least 1, got {self.k}")

    @property
    def algorithm(self) -> str:
        return VARIANT_LABELS[self.variant]

    def sca_config(self) -> ScaConfig:
        return ScaConfig(
            a=self.a,
            max_iterations=self.iterations,
            population_size=self.population_size,
        )


@dataclass(frozen=True)
class PreparedProblem:
    """A dataset loaded, split, and normalized, ready for repeated runs."""

    dataset: Dataset
    split: SplitIndices
    train: DataView
    test: DataView


@dataclass(frozen=True)
class SummaryRow:
    """Per-(dataset, algorithm) aggregate over runs."""

    dataset: str
    algorithm: str
    mean_accuracy: float
    std_accuracy: float
    mean_features: float
    std_features: float
    runs: int


class Direction(Enum):
    """Whether larger or smaller scores should earn better (lower) ranks."""

    HIGHER_BETTER = "higher"
    LOWER_BETTER = "lower"


@dataclass(frozen=True)
class RankTable:
    """Friedman mean ranks across datasets, plus the test statistic."""

    algorithms: tuple[str, ...]
    mean_ranks: np.ndarray
    datasets_used: int
    chi_square: float
    p_value: float


class TableFormat(Enum):
    TEXT = "text"
    CSV = "csv"


def prepare_problem(
    name: str, split_seed: int, manifest_path: str | Path | None = None
) -> PreparedProblem:
    """Load a manifest dataset and build its fixed normalized train/test split."""
    manifest = load_manifest(resolve_manifest_path(manifest_path))
    if name not in manifest:
        known = ", ".join(sorted(manifest))
        raise DatasetError(f"unknown dataset {name!r}; manifest lists: {known}")
    dataset = load_dataset(manifest[name])
    split = stratified_split(dataset, TEST_FRACTION, split_seed)
    normalized = minmax_normalize(dataset, split)
    train, test = split_views(normalized, split)
    return PreparedProblem(dataset=normalized, split=split, train=train, test=test)


def _run_one(payload) -> RunRecord:
    """Worker for one seeded run; module-level so process pools can pickle it."""
    (train_x, train_y, test_x, test_y, k, alpha, a, iterations, population, kind_value,
     run_seed) = payload
    train = DataView(x=train_x, y=train_y)
    test = DataView(x=test_x, y=test_y)
    objective = make_knn_objective(train, test, k, FitnessParams(alpha=alpha))
    config = ScaConfig(a=a, max_iterations=iterations, population_size=population)
    return optimize(
        dim=train_x.shape[1],
        config=config,
        kind=TransferKind(kind_value),
        objective=objective,
        run_seed=run_seed,
    )


def run_batch(
    config: ExperimentConfig,
    manifest_path: str | Path | None = None,
    n_jobs: int = 1,
) -> list[RunRecord]:
    """Run the configured experiment; run i uses seed base_seed + i.

    Results are identical for any n_jobs because every run owns a private
    generator seeded from its index alone.
    """
    problem = prepare_problem(config.dataset, config.split_seed, manifest_path)
    payloads = [
        (
            problem.train.x,
            problem.train.y,
            problem.test.x,
            problem.test.y,
            config.k,
            config.alpha,
            config.a,
            config.iterations,
            config.population_size,
            config.variant.value,
            config.base_seed + i,
        )
        for i in range(config.runs)
    ]
    if n_jobs == 1:
        objective = make_knn_objective(
            problem.train, problem.test, config.k, FitnessParams(alpha=config.alpha)
        )
        sca = config.sca_config()
        return [
            optimize(
                dim=problem.train.x.shape[1],
                config=sca,
                kind=config.variant,
                objective=objective,
                run_seed=config.base_seed + i,
            )
            for i in range(config.runs)
        ]
    with ProcessPoolExecutor(max_workers=n_jobs) as pool:
        return list(pool.map(_run_one, payloads))


def summarize(
    records: Sequence[RunRecord], dataset: str = "", algorithm: str = ""
) -> SummaryRow:
    """Mean and sample standard deviation (ddof=1; 0.0 for a single run)."""
    if not records:
        raise ValueError("cannot summarize zero runs")
    accuracies = np.array([r.best_accuracy for r in records], dtype=np.float64)
    features = np.array([r.n_selected for r in records], dtype=np.float64)
    many = len(records) > 1
    return SummaryRow(
        dataset=dataset,
        algorithm=algorithm,
        mean_accuracy=float(accuracies.mean()),
        std_accuracy=float(accuracies.std(ddof=1)) if many else 0.0,
        mean_features=float(features.mean()),
        std_features=float(features.std(ddof=1)) if many else 0.0,
        runs=len(records),
    )


def friedman_mean_ranks(
    scores: np.ndarray,
    direction: Direction,
    algorithms: Sequence[str] | None = None,
) -> RankTable:
    """Rank algorithms within each dataset (ties averaged) and average the ranks.

    Also reports the Friedman chi-square statistic over n datasets and
    m algorithms with its m-1 degree-of-freedom p-value.
    """
    scores = np.asarray(scores, dtype=np.float64)
    if scores.ndim != 2:
        raise ValueError(f"scores must be 2-d (datasets x algorithms), got {scores.ndim}-d")
    n_datasets, m = scores.shape
    if n_datasets < 1 or m < 2:
        raise ValueError(f"need at least 1 dataset and 2 algorithms, got {scores.shape}")
    if not np.all(np.isfinite(scores)):
        raise ValueError("scores must be finite")
    if algorithms is None:
        algorithms = tuple(f"algo_{j}" for j in range(m))
    elif len(algorithms) != m:
        raise ValueError(f"{len(algorithms)} algorithm names for {m} score columns")
    keyed = -scores if direction is Direction.HIGHER_BETTER else scores
    ranks = np.vstack([rankdata(row, method="average") for row in keyed])
    mean_ranks = ranks.mean(axis=0)
    stat = (12.0 * n_datasets / (m * (m + 1))) * (
        float(np.sum(mean_ranks**2)) - m * (m + 1) ** 2 / 4.0
    )
    return RankTable(
        algorithms=tuple(algorithms),
        mean_ranks=mean_ranks,
        datasets_used=n_datasets,
        chi_square=stat,
        p_value=float(chi2.sf(stat, m - 1)),
    )


CSV_HEADER = "dataset,algorithm,mean_accuracy,std_accuracy,mean_features,std_features"


def render_table(
    rows: Sequence[SummaryRow],
    ranks: RankTable | None = None,
    fmt: TableFormat = TableFormat.TEXT,
) -> str:
    """Render summary rows as an aligned text table or as CSV.

    CSV uses the fixed six-column schema with accuracies to 4 decimal places
    and feature counts to 2. The text form marks each dataset's best mean
    accuracy with '*' and appends mean ranks when given.
    """
    if fmt is TableFormat.CSV:
        lines = [CSV_HEADER]
        lines += [
            f"{r.dataset},{r.algorithm},{r.mean_accuracy:.4f},{r.std_accuracy:.4f},"
            f"{r.mean_features:.2f},{r.std_features:.2f}"
            for r in rows
        ]
        return "\n".join(lines) + "\n"
    best: dict[str, float] = {}
    for r in rows:
        best[r.dataset] = max(best.get(r.dataset, -np.inf), r.mean_accuracy)
    name_w = max([len("dataset")] + [len(r.dataset) for r in rows])
    algo_w = max([len("algorithm")] + [len(r.algorithm) for r in rows])
    lines = [
        f"{'dataset':<{name_w}}  {'algorithm':<{algo_w}}  "
        f"{'accuracy':<19}  {'features':<15}  runs"
    ]
    for r in rows:
        mark = "*" if r.mean_accuracy == best[r.dataset] else " "
        acc = f"{mark}{r.mean_accuracy:.4f} +/- {r.std_accuracy:.4f}"
        feats = f"{r.mean_features:5.2f} +/- {r.std_features:5.2f}"
        lines.append(
            f"{r.dataset:<{name_w}}  {r.algorithm:<{algo_w}}  {acc:<19}  {feats:<15}  {r.runs}"
        )
    if ranks is not None:
        pairs = ", ".join(
            f"{a}={v:.2f}" for a, v in zip(ranks.algorithms, ranks.mean_ranks)
        )
        lines.append(
            f"Friedman mean ranks over {ranks.datasets_used} dataset(s): {pairs}"
        )
        lines.append(
            f"chi-square = {ranks.chi_square:.4f}, p = {ranks.p_value:.4f}"
        )
    return "\n".join(lines) + "\n"


def render_comparison(
    rows: Sequence[SummaryRow],
    datasets: Sequence[str],
    algorithms: Sequence[str],
    metric: str,
    ranks: RankTable | None = None,
) -> str:
    """Render a datasets-by-algorithms pivot with AVE and STD lines per dataset.

    ``metric`` is 'accuracy' (4 decimals, higher marked best) or 'features'
    (2 decimals, lower marked best).
    """
    if metric == "accuracy":
        pick = lambda r: (r.mean_accuracy, r.std_accuracy)
        fmt_v, better = "{:.4f}", max
        title = "Test accuracy"
    elif metric == "features":
        pick = lambda r: (r.mean_features, r.std_features)
        fmt_v, better = "{:.2f}", min
        title = "Selected features"
    else:
        raise ValueError(f"unknown metric {metric!r}")
    cells = {(r.dataset, r.algorithm): pick(r) for r in rows}
    for d in datasets:
        for a in algorithms:
            if (d, a) not in cells:
                raise ValueError(f"missing summary for dataset {d!r}, algorithm {a!r}")
    col_w = max(9, max(len(a) for a in algorithms) + 2)
    name_w = max([len("dataset")] + [len(d) for d in datasets])
    header = f"{'dataset':<{name_w}}      " + "".join(f"{a:>{col_w}}" for a in algorithms)
    lines = [
        f"{title} (mean over runs, deviation beneath; * marks the per-dataset best)",
        header,
    ]
    for d in datasets:
        means = [cells[(d, a)][0] for a in algorithms]
        stds = [cells[(d, a)][1] for a in algorithms]
        top = better(means)
        ave_cells = "".join(
            f"{fmt_v.format(v) + ('*' if v == top else ' '):>{col_w}}" for v in means
        )
        std_cells = "".join(f"{fmt_v.format(v) + ' ':>{col_w}}" for v in stds)
        lines.append(f"{d:<{name_w}}  AVE {ave_cells}")
        lines.append(f"{'':<{name_w}}  STD {std_cells}")
    if ranks is not None:
        rank_cells = "".join(f"{v:.2f} ".rjust(col_w) for v in ranks.mean_ranks)
        lines.append(f"{'mean rank':<{name_w}}      " + rank_cells)
        lines.append(
            f"Friedman chi-square = {ranks.chi_square:.4f}, p = {ranks.p_value:.4f}"
        )
    return "\n".join(lines) + "\n"
