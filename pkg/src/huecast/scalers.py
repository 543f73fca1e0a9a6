"""Per-feature normalization: min-max, max-abs, robust, standard.

Statistics are fitted column-wise on the training encodings and applied
to any vector of the same width. A feature whose denominator is
degenerate (constant column, zero spread) transforms to 0; constant
features carry no signal and this keeps all-pad columns finite.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Sequence

import numpy as np

METHODS = ("minmax", "maxabs", "robust", "standard")


@dataclass(frozen=True)
class ScalerParams:
    method: str
    n_features: int
    # center/scale pin the shared affine form (x - center) / scale
    center: np.ndarray = field(repr=False)
    scale: np.ndarray = field(repr=False)
    stats: Dict[str, list] = field(default_factory=dict, repr=False)


def fit(method: str, train_vectors: Sequence[Sequence[float]]) -> ScalerParams:
    """Compute column statistics for one normalization method."""
    if method not in METHODS:
        raise ValueError(f"unknown scaler {method!r}; expected one of {METHODS}")
    x = np.asarray(train_vectors, dtype=float)
    if x.size == 0:
        raise ValueError("empty training vectors")
    if x.ndim != 2:
        raise ValueError(f"expected a 2-D sample matrix, got shape {x.shape}")

    if method == "minmax":
        lo = x.min(axis=0)
        hi = x.max(axis=0)
        center, scale = lo, hi - lo
        stats = {"min": lo.tolist(), "max": hi.tolist()}
    elif method == "maxabs":
        m = np.abs(x).max(axis=0)
        center, scale = np.zeros_like(m), m
        stats = {"max_abs": m.tolist()}
    elif method == "robust":
        med = np.median(x, axis=0)
        q1, q3 = np.percentile(x, [25.0, 75.0], axis=0)  # linear interpolation
        center, scale = med, q3 - q1
        stats = {"median": med.tolist(), "iqr": (q3 - q1).tolist()}
    else:  # standard
        mean = x.mean(axis=0)
        std = x.std(axis=0)  # population std
        center, scale = mean, std
        stats = {"mean": mean.tolist(), "std": std.tolist()}

    return ScalerParams(
        method=method,
        n_features=x.shape[1],
        center=np.asarray(center, dtype=float),
        scale=np.asarray(scale, dtype=float),
        stats=stats,
    )


def transform(params: ScalerParams, v) -> np.ndarray:
    """Apply the fitted affine map to one vector or a sample matrix."""
    x = np.asarray(v, dtype=float)
    if x.shape[-1] != params.n_features:
        raise ValueError(
            f"expected {params.n_features} features, got {x.shape[-1]}"
        )
    degenerate = params.scale == 0.0
    safe = np.where(degenerate, 1.0, params.scale)
    out = (x - params.center) / safe
    return np.where(degenerate, 0.0, out)


def to_json_dict(params: ScalerParams) -> dict:
    return {
        "method": params.method,
        "n_features": params.n_features,
        "stats": params.stats,
    }


def from_json_dict(d: dict) -> ScalerParams:
    method = d["method"]
    stats = {k: np.asarray(v, dtype=float) for k, v in d["stats"].items()}
    n = int(d["n_features"])
    if method == "minmax":
        center, scale = stats["min"], stats["max"] - stats["min"]
    elif method == "maxabs":
        center, scale = np.zeros(n), stats["max_abs"]
    elif method == "robust":
        center, scale = stats["median"], stats["iqr"]
    elif method == "standard":
        center, scale = stats["mean"], stats["std"]
    else:
        raise ValueError(f"unknown scaler {method!r} in checkpoint")
    return ScalerParams(
        method=method,
        n_features=n,
        center=np.asarray(center, dtype=float),
        scale=np.asarray(scale, dtype=float),
        stats={k: list(v) for k, v in d["stats"].items()},
    )
