#!/usr/bin/env python3
"""Write the Wisconsin Diagnostic Breast Cancer data in the UCI ``wdbc.data``
layout (id, diagnosis M/B, 30 features) from the copy bundled with
scikit-learn.

scikit-learn's copy keeps the UCI row and column order but drops the patient
ids and encodes the diagnosis as 0 = malignant, 1 = benign. The ids written
here are 1-based row numbers.
"""
import argparse
import csv
import pathlib

from sklearn.datasets import load_breast_cancer


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("out", type=pathlib.Path, nargs="?",
                        default=pathlib.Path(__file__).resolve().parent.parent / "data" / "wdbc.data")
    args = parser.parse_args()

    ds = load_breast_cancer()
    args.out.parent.mkdir(parents=True, exist_ok=True)
    with args.out.open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        for row_id, (features, target) in enumerate(zip(ds.data, ds.target), start=1):
            diagnosis = "M" if target == 0 else "B"
            writer.writerow([row_id, diagnosis, *[repr(float(v)) for v in features]])
    print(f"wrote {len(ds.target)} rows to {args.out}")


if __name__ == "__main__":
    main()
