"""Command line interface: single experiments, benchmark tables, rank computation."""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from pathlib import Path

import numpy as np

from . import reference
from .binarize import TransferKind
from .dataset import DatasetError, resolve_manifest_path
from .experiment import (
    Direction,
    ExperimentConfig,
    RankTable,
    SummaryRow,
    TableFormat,
    friedman_mean_ranks,
    render_comparison,
    render_table,
    run_batch,
    summarize,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RUNTIME = 2


class _Parser(argparse.ArgumentParser):
    """Argument parser whose usage failures exit with code 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _add_common_run_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--runs", type=int, default=30, help="independent seeded runs")
    parser.add_argument("--pop", type=int, default=20, help="population size")
    parser.add_argument("--iters", type=int, default=300, help="iterations per run")
    parser.add_argument("--k", type=int, default=5, help="neighbors for the k-NN model")
    parser.add_argument("--alpha", type=float, default=0.99, help="error weight in the fitness")
    parser.add_argument("--seed", type=int, default=1234, help="base seed; run i uses seed+i")
    parser.add_argument("--split-seed", type=int, default=42, help="train/test split seed")
    parser.add_argument(
        "--manifest", default=None, help="dataset manifest path (default: bundled, or $BINSELECT_MANIFEST)"
    )
    parser.add_argument(
        "--jobs", type=int, default=0, help="parallel runs (0 = all available cores)"
    )


def build_parser() -> _Parser:
    parser = _Parser(prog="binselect", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run one optimizer variant on one dataset")
    run.add_argument("--dataset", required=True, help="dataset name from the manifest")
    run.add_argument(
        "--variant", required=True, choices=["s", "v"], help="transfer kind: s or v"
    )
    _add_common_run_flags(run)
    run.add_argument("--out", default=None, help="write the summary as CSV to this path")
    run.add_argument(
        "--traces", default=None, help="write per-run convergence CSVs into this directory"
    )
    run.set_defaults(handler=_cmd_run)

    bench = sub.add_parser(
        "bench", help="run both variants on the benchmark datasets and rank all algorithms"
    )
    bench.add_argument(
        "--datasets",
        nargs="+",
        choices=list(reference.DATASET_ORDER),
        default=list(reference.DATASET_ORDER),
        help="datasets to benchmark (default: all five)",
    )
    _add_common_run_flags(bench)
    bench.add_argument("--out-dir", default=None, help="write results.csv and ranks.csv here")
    bench.add_argument(
        "--rank-only",
        action="store_true",
        help="skip optimization; rank the stored published results",
    )
    bench.set_defaults(handler=_cmd_bench)

    rank = sub.add_parser("rank", help="compute Friedman mean ranks from a scores CSV")
    rank.add_argument("--input", required=True, help="CSV: header row, then dataset,score...")
    rank.add_argument(
        "--direction",
        required=True,
        choices=["higher", "lower"],
        help="whether higher or lower scores are better",
    )
    rank.set_defaults(handler=_cmd_rank)
    return parser


def _resolve_jobs(jobs: int) -> int:
    if jobs < 0:
        raise ValueError(f"--jobs must be non-negative, got {jobs}")
    return jobs if jobs > 0 else (os.cpu_count() or 1)


def _experiment_config(args, dataset: str, variant: TransferKind) -> ExperimentConfig:
    return ExperimentConfig(
        dataset=dataset,
        variant=variant,
        runs=args.runs,
        population_size=args.pop,
        iterations=args.iters,
        k=args.k,
        alpha=args.alpha,
        base_seed=args.seed,
        split_seed=args.split_seed,
    )


def _write_traces(records, directory: Path, prefix: str) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    for i, record in enumerate(records):
        lines = ["iteration,fitness"]
        lines += [
            f"{t},{float(v)!r}" for t, v in enumerate(record.convergence, start=1)
        ]
        (directory / f"{prefix}_run{i:02d}.csv").write_text("\n".join(lines) + "\n")


def _cmd_run(args) -> int:
    variant = TransferKind.from_label(args.variant)
    config = _experiment_config(args, args.dataset, variant)
    records = run_batch(config, manifest_path=args.manifest, n_jobs=_resolve_jobs(args.jobs))
    display = reference.DISPLAY_NAMES.get(args.dataset, args.dataset)
    row = summarize(records, dataset=display, algorithm=config.algorithm)
    print(render_table([row]), end="")
    if args.out:
        Path(args.out).write_text(render_table([row], fmt=TableFormat.CSV))
    if args.traces:
        _write_traces(records, Path(args.traces), f"{args.dataset}_{config.algorithm}")
    return EXIT_OK


def _reference_rows(datasets, algorithms) -> list[SummaryRow]:
    rows = []
    for name in datasets:
        display = reference.DISPLAY_NAMES[name]
        for algo in algorithms:
            acc_mean, acc_std, feat_mean, feat_std = reference.summary_values(name, algo)
            rows.append(
                SummaryRow(
                    dataset=display,
                    algorithm=algo,
                    mean_accuracy=acc_mean,
                    std_accuracy=acc_std,
                    mean_features=feat_mean,
                    std_features=feat_std,
                    runs=30,
                )
            )
    return rows


def _rank_pair(
    rows: list[SummaryRow], datasets, algorithms
) -> tuple[RankTable, RankTable]:
    cells = {(r.dataset, r.algorithm): r for r in rows}
    displays = [reference.DISPLAY_NAMES[d] for d in datasets]
    acc = np.array(
        [[cells[(d, a)].mean_accuracy for a in algorithms] for d in displays]
    )
    feats = np.array(
        [[cells[(d, a)].mean_features for a in algorithms] for d in displays]
    )
    return (
        friedman_mean_ranks(acc, Direction.HIGHER_BETTER, algorithms),
        friedman_mean_ranks(feats, Direction.LOWER_BETTER, algorithms),
    )


def _cmd_bench(args) -> int:
    datasets = list(dict.fromkeys(args.datasets))
    algorithms = list(reference.ALGORITHMS)
    if args.rank_only:
        rows = _reference_rows(datasets, algorithms)
    else:
        rows = _reference_rows(datasets, [a for a in algorithms if a not in ("SBSCA", "VBSCA")])
        jobs = _resolve_jobs(args.jobs)
        for name in datasets:
            display = reference.DISPLAY_NAMES[name]
            for variant in (TransferKind.S_SHAPED, TransferKind.V_SHAPED):
                config = _experiment_config(args, name, variant)
                records = run_batch(config, manifest_path=args.manifest, n_jobs=jobs)
                rows.append(summarize(records, dataset=display, algorithm=config.algorithm))
    acc_ranks, feat_ranks = _rank_pair(rows, datasets, algorithms)
    displays = [reference.DISPLAY_NAMES[d] for d in datasets]
    print(render_comparison(rows, displays, algorithms, "accuracy", acc_ranks), end="")
    print()
    print(render_comparison(rows, displays, algorithms, "features", feat_ranks), end="")
    if args.out_dir:
        out_dir = Path(args.out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        ordered = sorted(rows, key=lambda r: (displays.index(r.dataset), algorithms.index(r.algorithm)))
        (out_dir / "results.csv").write_text(render_table(ordered, fmt=TableFormat.CSV))
        rank_lines = ["metric,algorithm,mean_rank"]
        for metric, table in (("accuracy", acc_ranks), ("features", feat_ranks)):
            rank_lines += [
                f"{metric},{a},{v:.2f}" for a, v in zip(table.algorithms, table.mean_ranks)
            ]
        (out_dir / "ranks.csv").write_text("\n".join(rank_lines) + "\n")
    return EXIT_OK


def _read_scores_csv(path: str) -> tuple[list[str], np.ndarray]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DatasetError(f"cannot read scores file {path}: {exc}") from exc
    rows = [row for row in csv.reader(io.StringIO(text)) if any(c.strip() for c in row)]
    if len(rows) < 2:
        raise DatasetError(f"scores file {path} needs a header and at least one data row")
    header = [c.strip() for c in rows[0]]
    if len(header) < 3:
        raise DatasetError(
            f"scores file {path} needs a dataset column plus at least two algorithm columns"
        )
    algorithms = header[1:]
    scores = []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise DatasetError(
                f"scores file {path} line {lineno}: {len(row)} cells, expected {len(header)}"
            )
        try:
            scores.append([float(c) for c in row[1:]])
        except ValueError:
            raise DatasetError(
                f"scores file {path} line {lineno}: non-numeric score cell"
            ) from None
    return algorithms, np.array(scores, dtype=np.float64)


def _cmd_rank(args) -> int:
    algorithms, scores = _read_scores_csv(args.input)
    direction = Direction.HIGHER_BETTER if args.direction == "higher" else Direction.LOWER_BETTER
    table = friedman_mean_ranks(scores, direction, algorithms)
    for algo, value in zip(table.algorithms, table.mean_ranks):
        print(f"{algo} {value:.2f}")
    print(f"chi-square = {table.chi_square:.4f}, p = {table.p_value:.4f}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.handler(args)
    except DatasetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    raise SystemExit(main())
