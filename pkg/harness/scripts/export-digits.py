#!/usr/bin/env python3
"""Regenerate data/digits.csv from the bundled scikit-learn copy of the
small handwritten-digits dataset (64 features in 0..16 plus a label per
row)."""

from pathlib import Path

from sklearn.datasets import load_digits

digits = load_digits()
rows = [
    ",".join(map(str, list(x.astype(int)) + [int(y)]))
    for x, y in zip(digits.data, digits.target)
]
out = Path(__file__).resolve().parent.parent / "data" / "digits.csv"
out.write_text("\n".join(rows) + "\n")
print(f"wrote {out} ({len(rows)} samples)")
