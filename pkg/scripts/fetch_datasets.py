"""Download the four benchmark datasets that are not bundled with the package.

Each dataset is pulled from the UCI archive (with mirror fallbacks),
normalized to plain CSV, shape-checked, and written next to the bundled
manifest so the names pima, breast_cancer, heart, and lymphography resolve.

Normalizations applied:
  - pima: used as-is (8 feature columns, outcome last).
  - breast_cancer: the sample ID column is dropped; '?' markers are kept
    for the loader to filter (16 affected rows).
  - heart: whitespace-separated values are rewritten as commas.
  - lymphography: used as-is (class in the first column).
"""

from __future__ import annotations

import argparse
import sys
import urllib.error
import urllib.request
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

PACKAGE_DATA = Path(__file__).resolve().parents[1] / "src" / "binselect" / "data"

UCI = "https://archive.ics.uci.edu/ml/machine-learning-databases"


def _csv_passthrough(text: str) -> list[list[str]]:
    return [line.split(",") for line in text.strip().splitlines() if line.strip()]


def _drop_first_column(text: str) -> list[list[str]]:
    return [row[1:] for row in _csv_passthrough(text)]


def _whitespace_to_csv(text: str) -> list[list[str]]:
    return [line.split() for line in text.strip().splitlines() if line.strip()]


@dataclass(frozen=True)
class Source:
    name: str
    filename: str
    urls: tuple[str, ...]
    transform: Callable[[str], list[list[str]]]
    rows: int
    columns: int


SOURCES = (
    Source(
        name="pima",
        filename="pima.csv",
        urls=(
            f"{UCI}/pima-indians-diabetes/pima-indians-diabetes.data",
            "https://raw.githubusercontent.com/jbrownlee/Datasets/master/pima-indians-diabetes.csv",
        ),
        transform=_csv_passthrough,
        rows=768,
        columns=9,
    ),
    Source(
        name="breast_cancer",
        filename="breast_cancer.csv",
        urls=(f"{UCI}/breast-cancer-wisconsin/breast-cancer-wisconsin.data",),
        transform=_drop_first_column,
        rows=699,
        columns=10,
    ),
    Source(
        name="heart",
        filename="heart.csv",
        urls=(f"{UCI}/statlog/heart/heart.dat",),
        transform=_whitespace_to_csv,
        rows=270,
        columns=14,
    ),
    Source(
        name="lymphography",
        filename="lymphography.csv",
        urls=(f"{UCI}/lymphography/lymphography.data",),
        transform=_csv_passthrough,
        rows=148,
        columns=19,
    ),
)


def fetch(source: Source, dest_dir: Path, timeout: float) -> Path:
    last_error: Exception | None = None
    for url in source.urls:
        try:
            with urllib.request.urlopen(url, timeout=timeout) as response:
                text = response.read().decode("utf-8")
            break
        except (urllib.error.URLError, OSError, UnicodeDecodeError) as exc:
            last_error = exc
    else:
        raise RuntimeError(f"{source.name}: every source failed, last error: {last_error}")
    rows = source.transform(text)
    if len(rows) != source.rows:
        raise RuntimeError(f"{source.name}: expected {source.rows} rows, got {len(rows)}")
    bad = [i for i, row in enumerate(rows) if len(row) != source.columns]
    if bad:
        raise RuntimeError(
            f"{source.name}: rows {bad[:5]} have unexpected widths, expected {source.columns}"
        )
    out = dest_dir / source.filename
    out.write_text("\n".join(",".join(cell.strip() for cell in row) for row in rows) + "\n")
    return out


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dest", type=Path, default=PACKAGE_DATA, help="output directory")
    parser.add_argument("--timeout", type=float, default=30.0)
    parser.add_argument("--only", nargs="*", default=None, help="subset of dataset names")
    args = parser.parse_args()

    args.dest.mkdir(parents=True, exist_ok=True)
    wanted = set(args.only) if args.only else {s.name for s in SOURCES}
    unknown = wanted - {s.name for s in SOURCES}
    if unknown:
        parser.error(f"unknown dataset name(s): {sorted(unknown)}")
    failures = 0
    for source in SOURCES:
        if source.name not in wanted:
            continue
        try:
            out = fetch(source, args.dest, args.timeout)
        except RuntimeError as exc:
            print(f"FAILED  {exc}", file=sys.stderr)
            failures += 1
            continue
        print(f"ok      {source.name}: {source.rows} rows -> {out}")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
