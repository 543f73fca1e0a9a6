"""Scaler comparison and held-out color-difference evaluation.

Accuracy here is nearest-neighbor retrieval accuracy: a prediction
counts as correct when its nearest color in the full chart (by
CIEDE2000) is the true labeled color. A thresholded score (fraction of
predictions within delta-E 20 of the truth) is reported alongside for
context.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .color import Lab, delta_e, rgb_to_lab
from .dataset import ColorSample, split
from .pipeline import Pipeline, train_pipeline

ACCURACY_DEFINITION = "nearest-neighbor-retrieval"
DELTA_E_TOLERANCE = 20.0

# reference accuracies by normalization method, printed next to measured
# values for side-by-side comparison
REFERENCE_ACCURACY = {
    "minmax": 0.79,
    "maxabs": 0.68,
    "robust": 0.42,
    "standard": 0.73,
}

DISPLAY_NAMES = {
    "minmax": "MinMaxScaler",
    "maxabs": "MaxAbsScaler",
    "robust": "RobustScaler",
    "standard": "StandardScaler",
}


@dataclass
class EvalReport:
    metric: str
    sample_count: int
    accuracy_definition: str = ACCURACY_DEFINITION
    accuracy_by_method: Dict[str, float] = field(default_factory=dict)
    tolerance_accuracy_by_method: Dict[str, float] = field(default_factory=dict)
    reference_accuracy: Dict[str, float] = field(default_factory=dict)
    delta_e_values: List[float] = field(default_factory=list)
    mean_delta_e: Optional[float] = None
    split_seed: Optional[int] = None
    split_ratio: Optional[float] = None
    layer_dims: Optional[List[int]] = None

    def to_json_dict(self) -> dict:
        doc = {
            "metric": self.metric,
            "sample_count": self.sample_count,
            "accuracy_definition": self.accuracy_definition,
        }
        if self.accuracy_by_method:
            doc["accuracy_by_method"] = self.accuracy_by_method
            doc["tolerance_accuracy_by_method"] = self.tolerance_accuracy_by_method
            doc["reference_accuracy"] = self.reference_accuracy
            doc["layer_dims"] = self.layer_dims
        if self.mean_delta_e is not None:
            doc["delta_e_values"] = self.delta_e_values
            doc["mean_delta_e"] = self.mean_delta_e
        if self.split_seed is not None:
            doc["split_seed"] = self.split_seed
            doc["split_ratio"] = self.split_ratio
        return doc

    def format_table(self) -> str:
        """Aligned two-column comparison table plus context columns."""
        lines = [
            f"{'Methods':<16} {'Accuracy':>8} {'dE<=20':>8} {'Reference':>10}",
            "-" * 46,
        ]
        for method in self.accuracy_by_method:
            lines.append(
                f"{DISPLAY_NAMES.get(method, method):<16} "
                f"{self.accuracy_by_method[method]:>8.2f} "
                f"{self.tolerance_accuracy_by_method.get(method, float('nan')):>8.2f} "
                f"{self.reference_accuracy.get(method, float('nan')):>10.2f}"
            )
        return "\n".join(lines)


def nearest_colors(
    rgb: Sequence[int],
    samples: Sequence[ColorSample],
    k: int = 3,
    metric: str = "ciede2000",
) -> List[Tuple[ColorSample, float]]:
    """The k chart colors closest to rgb, ascending by color difference."""
    if not samples:
        raise ValueError("empty chart")
    target = rgb_to_lab(rgb)
    scored = [
        (s, delta_e(target, rgb_to_lab(s.recipe), metric)) for s in samples
    ]
    scored.sort(key=lambda pair: pair[1])
    return scored[:k]


def _predictions(
    pipeline: Pipeline, samples: Sequence[ColorSample]
) -> List[Tuple[ColorSample, Tuple[int, int, int]]]:
    return [(s, pipeline.predict(s.description)) for s in samples]


def accuracy(
    pipeline: Pipeline,
    test_samples: Sequence[ColorSample],
    chart: Sequence[ColorSample],
    metric: str = "ciede2000",
) -> float:
    """Nearest-neighbor retrieval accuracy over the test samples."""
    if not test_samples:
        raise ValueError("empty test set")
    chart_labs: List[Tuple[ColorSample, Lab]] = [
        (s, rgb_to_lab(s.recipe)) for s in chart
    ]
    hits = 0
    for sample, predicted in _predictions(pipeline, test_samples):
        pred_lab = rgb_to_lab(predicted)
        best = min(chart_labs, key=lambda cl: delta_e(pred_lab, cl[1], metric))
        if tuple(best[0].recipe) == tuple(sample.recipe):
            hits += 1
    return hits / len(test_samples)


def accuracy_within(
    pipeline: Pipeline,
    test_samples: Sequence[ColorSample],
    tolerance: float = DELTA_E_TOLERANCE,
    metric: str = "ciede2000",
) -> float:
    """Fraction of predictions within `tolerance` delta-E of the truth."""
    if not test_samples:
        raise ValueError("empty test set")
    hits = 0
    for sample, predicted in _predictions(pipeline, test_samples):
        d = delta_e(rgb_to_lab(predicted), rgb_to_lab(sample.recipe), metric)
        if d <= tolerance:
            hits += 1
    return hits / len(test_samples)


def evaluate_delta_e(
    pipeline: Pipeline,
    samples: Sequence[ColorSample],
    metric: str = "ciede2000",
    n: int = 30,
) -> EvalReport:
    """Per-sample color difference for the first n held-out samples."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > len(samples):
        raise ValueError(f"n={n} exceeds the {len(samples)} available samples")
    subset = samples[:n]
    values = [
        float(delta_e(rgb_to_lab(pred), rgb_to_lab(s.recipe), metric))
        for s, pred in _predictions(pipeline, subset)
    ]
    return EvalReport(
        metric=metric,
        sample_count=n,
        delta_e_values=values,
        mean_delta_e=sum(values) / n,
    )


def compare_scalers(
    data: List[ColorSample],
    *,
    seed: int = 42,
    ratio: float = 0.8,
    max_len: int = 6,
    hidden_dims=None,
    learning_rate: float = 0.05,
    epochs: int = 1200,
    batch_size: int = 16,
    metric: str = "ciede2000",
) -> EvalReport:
    """Train one model per normalization method on an identical split.

    Everything except the scaler (and its all-linear activation rule for
    max-abs) is held fixed: same seed, same split, same layer dims.
    """
    from .scalers import METHODS

    parts = split(data, ratio=ratio, seed=seed)
    report = EvalReport(
        metric=metric,
        sample_count=len(parts.test),
        split_seed=seed,
        split_ratio=ratio,
    )
    for method in METHODS:
        try:
            pipe, _, _ = train_pipeline(
                data,
                scaler_method=method,
                ratio=ratio,
                seed=seed,
                max_len=max_len,
                hidden_dims=hidden_dims,
                learning_rate=learning_rate,
                epochs=epochs,
                batch_size=batch_size,
            )
        except Exception as exc:
            raise RuntimeError(f"{DISPLAY_NAMES[method]}: {exc}") from exc
        report.accuracy_by_method[method] = accuracy(
            pipe, parts.test, data, metric
        )
        report.tolerance_accuracy_by_method[method] = accuracy_within(
            pipe, parts.test, metric=metric
        )
        report.reference_accuracy[method] = REFERENCE_ACCURACY[method]
        report.layer_dims = list(pipe.model.config.layer_dims)
    return report
