"""End-to-end glue: dataset -> vocabulary -> scaler -> network.

A trained pipeline bundles everything inference needs and round-trips
through a single JSON checkpoint with full float precision, so two runs
with the same inputs write byte-identical files.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Tuple

import numpy as np

from . import network, scalers
from .color import Rgb
from .dataset import ColorSample, SplitDataset, split
from .network import NetworkConfig, NetworkModel, TrainReport
from .scalers import ScalerParams
from .vocab import Vocabulary, encode_batch, fit_vocabulary

CHECKPOINT_VERSION = 1


@dataclass
class Pipeline:
    vocab: Vocabulary
    scaler: ScalerParams
    model: NetworkModel

    def encode(self, description: str) -> List[int]:
        return self.vocab.encode(description)

    def scaled_input(self, description: str) -> np.ndarray:
        return scalers.transform(self.scaler, self.vocab.encode(description))

    def predict(self, description: str) -> Rgb:
        return network.predict_rgb(self.model, self.scaled_input(description))


def hidden_activation_for(scaler_method: str) -> str:
    # max-abs scaling admits negative inputs; those runs use all-linear
    # activations, every other method trains with relu hidden layers
    return "linear" if scaler_method == "maxabs" else "relu"


def train_pipeline(
    data: List[ColorSample],
    *,
    scaler_method: str = "minmax",
    ratio: float = 0.8,
    seed: int = 42,
    max_len: int = 6,
    hidden_dims: Optional[Tuple[int, ...]] = None,
    learning_rate: float = 0.05,
    epochs: int = 1200,
    batch_size: int = 16,
) -> Tuple[Pipeline, TrainReport, SplitDataset]:
    """Split, fit vocabulary and scaler on the training side, train."""
    parts = split(data, ratio=ratio, seed=seed)
    vocab = fit_vocabulary(parts.train, max_len=max_len)

    train_pairs = encode_batch(vocab, parts.train)
    test_pairs = encode_batch(vocab, parts.test)

    train_ids = [ids for ids, _ in train_pairs]
    scaler = scalers.fit(scaler_method, train_ids)

    train_x = scalers.transform(scaler, np.asarray(train_ids, dtype=float))
    train_y = network.targets_from_recipes([rgb for _, rgb in train_pairs])

    test_x = test_y = None
    if test_pairs:
        test_x = scalers.transform(
            scaler, np.asarray([ids for ids, _ in test_pairs], dtype=float)
        )
        test_y = network.targets_from_recipes([rgb for _, rgb in test_pairs])

    act = hidden_activation_for(scaler_method)
    if hidden_dims is None:
        config = network.default_config(
            input_dim=max_len,
            hidden_activation=act,
            learning_rate=learning_rate,
            epochs=epochs,
            batch_size=batch_size,
            seed=seed,
        )
    else:
        dims = (max_len,) + tuple(hidden_dims) + (3,)
        acts = (act,) * (len(dims) - 2) + ("linear",)
        config = NetworkConfig(
            layer_dims=dims,
            activations=acts,
            learning_rate=learning_rate,
            epochs=epochs,
            batch_size=batch_size,
            seed=seed,
        )

    model, report = network.train(config, train_x, train_y, test_x, test_y)
    return Pipeline(vocab=vocab, scaler=scaler, model=model), report, parts


def checkpoint_dict(pipeline: Pipeline) -> dict:
    cfg = pipeline.model.config
    return {
        "config": {
            "layer_dims": list(cfg.layer_dims),
            "activations": list(cfg.activations),
            "learning_rate": cfg.learning_rate,
            "epochs": cfg.epochs,
            "batch_size": cfg.batch_size,
            "seed": cfg.seed,
            "loss": cfg.loss,
        },
        "vocabulary": pipeline.vocab.to_json_dict(),
        "scaler_params": scalers.to_json_dict(pipeline.scaler),
        "weights": [w.tolist() for w in pipeline.model.weights],
        "biases": [b.tolist() for b in pipeline.model.biases],
        "metadata": {
            "version": CHECKPOINT_VERSION,
            "seed": cfg.seed,
            "param_count": cfg.parameter_count,
        },
    }


def save_checkpoint(pipeline: Pipeline, path) -> None:
    doc = json.dumps(checkpoint_dict(pipeline), indent=2)
    Path(path).write_text(doc + "\n", encoding="utf-8")


def pipeline_from_dict(doc: dict) -> Pipeline:
    try:
        cfg = doc["config"]
        config = NetworkConfig(
            layer_dims=tuple(cfg["layer_dims"]),
            activations=tuple(cfg["activations"]),
            learning_rate=float(cfg["learning_rate"]),
            epochs=int(cfg["epochs"]),
            batch_size=int(cfg["batch_size"]),
            seed=int(cfg["seed"]),
            loss=cfg.get("loss", "mse"),
        )
        vocab = Vocabulary.from_json_dict(doc["vocabulary"])
        scaler = scalers.from_json_dict(doc["scaler_params"])
        weights = [np.asarray(w, dtype=float) for w in doc["weights"]]
        biases = [np.asarray(b, dtype=float) for b in doc["biases"]]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"corrupt checkpoint: missing or bad field {exc}") from None

    dims = config.layer_dims
    for i, (w, b) in enumerate(zip(weights, biases)):
        if w.shape != (dims[i], dims[i + 1]) or b.shape != (dims[i + 1],):
            raise ValueError(
                f"corrupt checkpoint: layer {i} shape {w.shape} does not match dims {dims}"
            )
    if len(weights) != len(dims) - 1:
        raise ValueError("corrupt checkpoint: wrong number of weight layers")
    model = NetworkModel(config=config, weights=weights, biases=biases)
    return Pipeline(vocab=vocab, scaler=scaler, model=model)


def load_checkpoint(path) -> Pipeline:
    path = Path(path)
    if not path.exists():
        raise ValueError(f"no such checkpoint: {path}")
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ValueError(f"corrupt checkpoint {path}: {exc}") from None
    return pipeline_from_dict(doc)
