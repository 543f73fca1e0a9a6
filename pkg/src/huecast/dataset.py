"""Color-chart ingestion and reproducible train/test splitting.

The canonical format is a UTF-8 CSV with header ``name,r,g,b`` where
each data row pairs a free-text color description with its 8-bit RGB
recipe. A ~300-row chart assembled from public color-name tables ships
with the package (see :func:`default_chart_path`).
"""
from __future__ import annotations

import csv
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import List

import numpy as np

from .color import Rgb

HEADER = ("name", "r", "g", "b")


class DatasetError(ValueError):
    """Raised for missing files and malformed chart rows."""


@dataclass(frozen=True)
class ColorSample:
    description: str
    recipe: Rgb


@dataclass(frozen=True)
class SplitDataset:
    train: List[ColorSample]
    test: List[ColorSample]
    seed: int
    ratio: float


def default_chart_path() -> Path:
    """Path of the bundled color chart CSV."""
    return Path(resources.files("huecast") / "data" / "color_chart.csv")


def load_csv(path) -> List[ColorSample]:
    """Load color samples from a ``name,r,g,b`` CSV.

    Errors name the offending 1-based line number (the header is line 1).
    """
    path = Path(path)
    if not path.exists():
        raise DatasetError(f"no such file: {path}")

    samples: List[ColorSample] = []
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise DatasetError(f"{path}: empty file, expected header {','.join(HEADER)}")
        if tuple(h.strip() for h in header) != HEADER:
            raise DatasetError(
                f"{path}: line 1: expected header {','.join(HEADER)}, got {','.join(header)}"
            )
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue  # ignore trailing blank lines
            samples.append(_parse_row(path, lineno, row))
    return samples


def _parse_row(path: Path, lineno: int, row: List[str]) -> ColorSample:
    if len(row) != 4:
        raise DatasetError(
            f"{path}: line {lineno}: expected 4 columns, got {len(row)}"
        )
    name = row[0].strip()
    if not name:
        raise DatasetError(f"{path}: line {lineno}: empty color name")
    channels = []
    for col, text in zip("rgb", row[1:]):
        try:
            v = int(text.strip())
        except ValueError:
            raise DatasetError(
                f"{path}: line {lineno}: channel {col} is not an integer: {text!r}"
            ) from None
        if not 0 <= v <= 255:
            raise DatasetError(
                f"{path}: line {lineno}: channel {col} out of range [0, 255]: {v}"
            )
        channels.append(v)
    return ColorSample(name, Rgb(*channels))


def load_default_chart() -> List[ColorSample]:
    return load_csv(default_chart_path())


def split(data: List[ColorSample], ratio: float, seed: int) -> SplitDataset:
    """Seeded shuffle followed by a ratio partition.

    The same (data, ratio, seed) always produces the identical split;
    ``len(train) == round(ratio * len(data))``.
    """
    if not 0.0 < ratio < 1.0:
        raise ValueError(f"ratio must be in (0, 1), got {ratio}")
    if len(data) < 2:
        raise ValueError(f"need at least 2 samples to split, got {len(data)}")

    order = np.random.default_rng(seed).permutation(len(data))
    n_train = round(ratio * len(data))
    train = [data[i] for i in order[:n_train]]
    test = [data[i] for i in order[n_train:]]
    return SplitDataset(train=train, test=test, seed=seed, ratio=ratio)
