"""Regenerate the bundled diagnostic breast cancer CSV from scikit-learn.

scikit-learn redistributes the original 569-instance, 30-feature dataset
verbatim, so exporting it locally yields the same numbers as the upstream
archive. Values are written with full repr precision to round-trip exactly.
Requires scikit-learn, which is only needed to regenerate the file.
"""

from __future__ import annotations

import argparse
import csv
from pathlib import Path

from sklearn.datasets import load_breast_cancer

DEFAULT_OUT = Path(__file__).resolve().parents[1] / "src" / "binselect" / "data" / "breast_wdbc.csv"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=DEFAULT_OUT)
    args = parser.parse_args()

    bundle = load_breast_cancer()
    features = bundle["data"]
    labels = bundle["target"]
    names = [n.replace(" ", "_") for n in bundle["feature_names"]]
    assert features.shape == (569, 30), features.shape

    args.out.parent.mkdir(parents=True, exist_ok=True)
    with open(args.out, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(names + ["diagnosis"])
        for row, label in zip(features, labels):
            writer.writerow([repr(float(v)) for v in row] + [int(label)])
    print(f"wrote {features.shape[0]} rows to {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
