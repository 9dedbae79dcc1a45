"""Tabular dataset loading, cleaning, encoding, splitting, and normalization."""

from __future__ import annotations

import csv
import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np

MANIFEST_ENV_VAR = "BINSELECT_MANIFEST"


class DatasetError(Exception):
    """A dataset file or its contents cannot be used."""


@dataclass(frozen=True)
class RawDataset:
    """String rows straight from disk, before any cleaning or encoding."""

    rows: tuple[tuple[str, ...], ...]
    column_count: int
    label_column: int

    @property
    def n_rows(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class Dataset:
    """Numeric feature matrix with integer class labels."""

    features: np.ndarray
    labels: np.ndarray
    name: str = ""

    def __post_init__(self) -> None:
        if self.features.ndim != 2:
            raise ValueError("features must be a 2-d array")
        if self.labels.shape != (self.features.shape[0],):
            raise ValueError("labels must have one entry per feature row")

    @property
    def n_rows(self) -> int:
        return self.features.shape[0]

    @property
    def n_features(self) -> int:
        return self.features.shape[1]

    @property
    def n_classes(self) -> int:
        return int(self.labels.max()) + 1 if self.labels.size else 0


@dataclass(frozen=True)
class SplitIndices:
    """Row indices of one train/test partition."""

    train: np.ndarray
    test: np.ndarray
    seed: int


@dataclass(frozen=True)
class DataView:
    """Feature and label arrays for one side of a split."""

    x: np.ndarray
    y: np.ndarray

    @property
    def n_rows(self) -> int:
        return self.x.shape[0]


@dataclass(frozen=True)
class ManifestEntry:
    """One dataset registration: where the file lives and how to read it."""

    name: str
    path: Path
    label_column: int
    missing_marker: str


def _is_number(cell: str) -> bool:
    try:
        float(cell)
    except ValueError:
        return False
    return True


def load_csv(path: str | Path, label_column: int, missing_marker: str = "?") -> RawDataset:
    """Read a CSV file into string rows, auto-detecting a single header line.

    The first line is treated as a header and dropped when its label cell
    does not parse as a number. Missing-value markers are kept verbatim for
    ``drop_missing`` to handle.
    """
    path = Path(path)
    try:
        with open(path, newline="") as fh:
            rows = [tuple(cell.strip() for cell in row) for row in csv.reader(fh)]
    except OSError as exc:
        raise DatasetError(f"cannot read dataset file {path}: {exc}") from exc
    rows = [row for row in rows if any(cell for cell in row)]
    if not rows:
        raise DatasetError(f"dataset file {path} has no data rows")
    width = len(rows[0])
    if not 0 <= label_column < width:
        raise ValueError(f"label column {label_column} out of range for {width} columns")
    for i, row in enumerate(rows):
        if len(row) != width:
            raise DatasetError(
                f"dataset file {path} is ragged: row {i} has {len(row)} cells, expected {width}"
            )
    if not _is_number(rows[0][label_column]):
        rows = rows[1:]
        if not rows:
            raise DatasetError(f"dataset file {path} has a header but no data rows")
    return RawDataset(rows=tuple(rows), column_count=width, label_column=label_column)


def drop_missing(raw: RawDataset, missing_marker: str = "?") -> RawDataset:
    """Remove every row containing the missing-value marker, preserving order."""
    kept = tuple(row for row in raw.rows if missing_marker not in row)
    if not kept:
        raise DatasetError("all rows contain missing values")
    return RawDataset(rows=kept, column_count=raw.column_count, label_column=raw.label_column)


def encode(raw: RawDataset, name: str = "") -> Dataset:
    """Parse feature cells as floats and map labels to 0..k-1 by first appearance."""
    feature_cols = [c for c in range(raw.column_count) if c != raw.label_column]
    features = np.empty((raw.n_rows, len(feature_cols)), dtype=np.float64)
    for i, row in enumerate(raw.rows):
        for j, c in enumerate(feature_cols):
            try:
                features[i, j] = float(row[c])
            except ValueError:
                raise DatasetError(
                    f"non-numeric feature value {row[c]!r} at row {i}, column {c}"
                ) from None
    codes: dict[str, int] = {}
    labels = np.empty(raw.n_rows, dtype=np.int64)
    for i, row in enumerate(raw.rows):
        cell = row[raw.label_column]
        if cell not in codes:
            codes[cell] = len(codes)
        labels[i] = codes[cell]
    if len(codes) < 2:
        raise DatasetError(f"need at least 2 distinct labels, found {len(codes)}")
    return Dataset(features=features, labels=labels, name=name)


def stratified_split(dataset: Dataset, test_fraction: float, seed: int) -> SplitIndices:
    """Partition rows into train/test, shuffling within each class.

    Per-class test counts start at round(test_fraction * class_size)
    (ties to even) and are then nudged so the total equals
    round(test_fraction * n_rows), adjusting classes in remainder order.
    Every class keeps at least one training row.
    """
    if not 0.0 < test_fraction < 1.0:
        raise ValueError(f"test fraction must lie in (0, 1), got {test_fraction}")
    rng = np.random.default_rng(seed)
    n_classes = dataset.n_classes
    class_indices = []
    for k in range(n_classes):
        idx = np.flatnonzero(dataset.labels == k)
        if idx.size < 2:
            raise DatasetError(
                f"cannot stratify: class {k} has {idx.size} row(s), need at least 2"
            )
        class_indices.append(rng.permutation(idx))
    sizes = np.array([idx.size for idx in class_indices])
    counts = np.array([round(test_fraction * s) for s in sizes])
    # every class keeps at least one training row; the test side may miss a class
    counts = np.clip(counts, 0, sizes - 1)
    target = round(test_fraction * dataset.n_rows)
    target = min(max(target, 0), int(np.sum(sizes - 1)))
    remainders = test_fraction * sizes - counts
    while counts.sum() < target:
        eligible = np.flatnonzero(counts < sizes - 1)
        pick = eligible[np.argmax(remainders[eligible])]
        counts[pick] += 1
        remainders[pick] -= 1.0
    while counts.sum() > target:
        eligible = np.flatnonzero(counts > 0)
        pick = eligible[np.argmin(remainders[eligible])]
        counts[pick] -= 1
        remainders[pick] += 1.0
    test = np.sort(np.concatenate([idx[:c] for idx, c in zip(class_indices, counts)]))
    train = np.sort(np.concatenate([idx[c:] for idx, c in zip(class_indices, counts)]))
    return SplitIndices(train=train, test=test, seed=seed)


def minmax_normalize(dataset: Dataset, split: SplitIndices) -> Dataset:
    """Rescale every feature by the training rows' min and max.

    Constant training columns map to 0 everywhere; test values outside the
    training range are not clamped.
    """
    train = dataset.features[split.train]
    mins = train.min(axis=0)
    spans = train.max(axis=0) - mins
    safe = np.where(spans > 0.0, spans, 1.0)
    scaled = np.where(spans > 0.0, (dataset.features - mins) / safe, 0.0)
    return Dataset(features=scaled, labels=dataset.labels, name=dataset.name)


def split_views(dataset: Dataset, split: SplitIndices) -> tuple[DataView, DataView]:
    """Materialize (train, test) views of a dataset."""
    train = DataView(x=dataset.features[split.train], y=dataset.labels[split.train])
    test = DataView(x=dataset.features[split.test], y=dataset.labels[split.test])
    return train, test


def default_manifest_path() -> Path:
    return Path(__file__).parent / "data" / "manifest.txt"


def resolve_manifest_path(explicit: str | Path | None = None) -> Path:
    """Pick the manifest: explicit flag, then environment variable, then bundled."""
    if explicit is not None:
        return Path(explicit)
    env = os.environ.get(MANIFEST_ENV_VAR)
    if env:
        return Path(env)
    return default_manifest_path()


def load_manifest(path: str | Path) -> dict[str, ManifestEntry]:
    """Parse a manifest of ``name,file,label_column,missing_marker`` lines.

    Relative file paths resolve against the manifest's own directory.
    """
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise DatasetError(f"cannot read manifest {path}: {exc}") from exc
    entries: dict[str, ManifestEntry] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 4:
            raise DatasetError(
                f"manifest {path} line {lineno}: expected 4 comma-separated fields, got {len(parts)}"
            )
        name, file_part, label_part, marker = parts
        try:
            label_column = int(label_part)
        except ValueError:
            raise DatasetError(
                f"manifest {path} line {lineno}: label column {label_part!r} is not an integer"
            ) from None
        file_path = Path(file_part)
        if not file_path.is_absolute():
            file_path = path.parent / file_path
        entries[name] = ManifestEntry(
            name=name, path=file_path, label_column=label_column, missing_marker=marker
        )
    if not entries:
        raise DatasetError(f"manifest {path} lists no datasets")
    return entries


def load_dataset(entry: ManifestEntry) -> Dataset:
    """Load, clean, and encode one manifest entry."""
    if not entry.path.exists():
        raise DatasetError(
            f"dataset file {entry.path} for {entry.name!r} does not exist; "
            f"run scripts/fetch_datasets.py to download it"
        )
    raw = load_csv(entry.path, entry.label_column, entry.missing_marker)
    raw = drop_missing(raw, entry.missing_marker)
    return encode(raw, name=entry.name)
