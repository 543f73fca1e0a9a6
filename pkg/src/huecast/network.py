"""Feed-forward regression network, implemented from scratch.

Hand-written forward pass, analytic backpropagation and seeded
mini-batch gradient descent on top of numpy matrix ops. Targets are RGB
recipes scaled to [0, 1]; the output layer is always linear.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .color import Rgb

ACTIVATIONS = ("relu", "linear")

# (input, hidden..., 3); with the tokenize+scale preprocessing stage in
# front this stacks up to the 12-stage default architecture
DEFAULT_HIDDEN = (64, 64, 64, 64, 64, 64, 64, 64, 32)


@dataclass(frozen=True)
class NetworkConfig:
    layer_dims: Tuple[int, ...]
    activations: Tuple[str, ...]
    learning_rate: float = 0.05
    epochs: int = 1200
    batch_size: int = 16
    seed: int = 42
    loss: str = "mse"

    def __post_init__(self):
        dims = tuple(int(d) for d in self.layer_dims)
        object.__setattr__(self, "layer_dims", dims)
        object.__setattr__(self, "activations", tuple(self.activations))
        if len(dims) < 2:
            raise ValueError("need at least input and output dims")
        if any(d < 1 for d in dims):
            raise ValueError(f"layer dims must be positive: {dims}")
        if dims[-1] != 3:
            raise ValueError(f"output dim must be 3, got {dims[-1]}")
        if len(self.activations) != len(dims) - 1:
            raise ValueError(
                f"expected {len(dims) - 1} activations, got {len(self.activations)}"
            )
        for act in self.activations:
            if act not in ACTIVATIONS:
                raise ValueError(f"unknown activation {act!r}")
        if self.activations[-1] != "linear":
            raise ValueError("output layer activation must be linear")
        if self.learning_rate <= 0:
            raise ValueError("learning_rate must be > 0")
        if self.epochs < 1 or self.batch_size < 1:
            raise ValueError("epochs and batch_size must be >= 1")
        if self.loss != "mse":
            raise ValueError(f"unsupported loss {self.loss!r}")

    @property
    def parameter_count(self) -> int:
        dims = self.layer_dims
        return sum(dims[i] * dims[i + 1] + dims[i + 1] for i in range(len(dims) - 1))


def default_config(
    input_dim: int = 6,
    hidden_activation: str = "relu",
    **overrides,
) -> NetworkConfig:
    """Default architecture; hidden activation is relu or all-linear."""
    dims = (input_dim,) + DEFAULT_HIDDEN + (3,)
    acts = (hidden_activation,) * (len(dims) - 2) + ("linear",)
    return NetworkConfig(layer_dims=dims, activations=acts, **overrides)


@dataclass
class NetworkModel:
    config: NetworkConfig
    weights: List[np.ndarray] = field(repr=False)
    biases: List[np.ndarray] = field(repr=False)

    @property
    def parameter_count(self) -> int:
        return self.config.parameter_count


@dataclass
class TrainReport:
    epoch_losses: List[float]
    final_train_loss: float
    final_test_loss: Optional[float]
    wall_time_s: float
    parameter_count: int

    def to_json_dict(self) -> dict:
        # wall_time_s deliberately excluded: serialized reports must be
        # byte-identical across reruns with the same flags
        return {
            "epoch_losses": self.epoch_losses,
            "final_train_loss": self.final_train_loss,
            "final_test_loss": self.final_test_loss,
            "parameter_count": self.parameter_count,
        }


def init(config: NetworkConfig) -> NetworkModel:
    """Seeded uniform weights with a He-style fan-in-scaled range; zero biases.

    The range gain follows each layer's activation: sqrt(6/fan_in) for ReLU
    layers, sqrt(3/fan_in) for linear ones. A linear layer re-emits its input
    variance unchanged, so the ReLU gain would double it per layer and a deep
    all-linear stack would amplify any signal until training overflows.
    """
    rng = np.random.default_rng(config.seed)
    weights, biases = [], []
    dims = config.layer_dims
    for fan_in, fan_out, act in zip(dims[:-1], dims[1:], config.activations):
        gain = 6.0 if act == "relu" else 3.0
        limit = np.sqrt(gain / fan_in)
        weights.append(rng.uniform(-limit, limit, size=(fan_in, fan_out)))
        biases.append(np.zeros(fan_out))
    return NetworkModel(config=config, weights=weights, biases=biases)


def _apply(act: str, z: np.ndarray) -> np.ndarray:
    return np.maximum(z, 0.0) if act == "relu" else z


def _derivative(act: str, z: np.ndarray) -> np.ndarray:
    # relu subgradient at exactly 0 is 0
    return (z > 0.0).astype(float) if act == "relu" else np.ones_like(z)


def forward(model: NetworkModel, x) -> np.ndarray:
    """Network output for one vector (d,) or a batch (n, d)."""
    a = np.asarray(x, dtype=float)
    expected = model.config.layer_dims[0]
    if a.shape[-1] != expected:
        raise ValueError(f"expected input dim {expected}, got {a.shape[-1]}")
    for w, b, act in zip(model.weights, model.biases, model.config.activations):
        a = _apply(act, a @ w + b)
    return a


def loss_mse(pred, target) -> float:
    """Mean squared error over all output elements."""
    p = np.asarray(pred, dtype=float)
    t = np.asarray(target, dtype=float)
    if p.shape != t.shape:
        raise ValueError(f"shape mismatch: {p.shape} vs {t.shape}")
    return float(np.mean((p - t) ** 2))


def backward(
    model: NetworkModel, x, target
) -> Tuple[List[np.ndarray], List[np.ndarray]]:
    """Analytic gradients of the mean squared error for a (mini-)batch."""
    a = np.atleast_2d(np.asarray(x, dtype=float))
    t = np.atleast_2d(np.asarray(target, dtype=float))
    if a.shape[0] != t.shape[0]:
        raise ValueError(f"batch mismatch: {a.shape[0]} inputs, {t.shape[0]} targets")

    pre: List[np.ndarray] = []
    post: List[np.ndarray] = [a]
    for w, b, act in zip(model.weights, model.biases, model.config.activations):
        z = post[-1] @ w + b
        pre.append(z)
        post.append(_apply(act, z))

    n, out_dim = t.shape
    delta = 2.0 * (post[-1] - t) / (n * out_dim)
    grads_w: List[np.ndarray] = [None] * len(model.weights)
    grads_b: List[np.ndarray] = [None] * len(model.biases)
    for i in range(len(model.weights) - 1, -1, -1):
        delta = delta * _derivative(model.config.activations[i], pre[i])
        grads_w[i] = post[i].T @ delta
        grads_b[i] = delta.sum(axis=0)
        if i > 0:
            delta = delta @ model.weights[i].T
    return grads_w, grads_b


def targets_from_recipes(recipes: Sequence[Rgb]) -> np.ndarray:
    """RGB recipes scaled to [0, 1] training targets."""
    return np.asarray(recipes, dtype=float) / 255.0


def train(
    config: NetworkConfig,
    train_x,
    train_y,
    test_x=None,
    test_y=None,
) -> Tuple[NetworkModel, TrainReport]:
    """Seeded mini-batch gradient descent for config.epochs epochs.

    train_y/test_y are targets already scaled to [0, 1]. The result is a
    pure function of (config, data).
    """
    x = np.asarray(train_x, dtype=float)
    y = np.asarray(train_y, dtype=float)
    if x.ndim != 2 or y.ndim != 2 or x.shape[0] != y.shape[0]:
        raise ValueError(f"bad training shapes: {x.shape} vs {y.shape}")
    if x.shape[0] == 0:
        raise ValueError("empty training data")

    started = time.perf_counter()
    model = init(config)
    shuffle_rng = np.random.default_rng([config.seed, 1])
    n = x.shape[0]
    lr = config.learning_rate

    epoch_losses: List[float] = []
    for _ in range(config.epochs):
        order = shuffle_rng.permutation(n)
        for start in range(0, n, config.batch_size):
            idx = order[start : start + config.batch_size]
            grads_w, grads_b = backward(model, x[idx], y[idx])
            for w, b, gw, gb in zip(model.weights, model.biases, grads_w, grads_b):
                w -= lr * gw
                b -= lr * gb
        epoch_losses.append(loss_mse(forward(model, x), y))

    final_test = None
    if test_x is not None and test_y is not None and len(test_x) > 0:
        final_test = loss_mse(forward(model, test_x), test_y)

    report = TrainReport(
        epoch_losses=epoch_losses,
        final_train_loss=epoch_losses[-1],
        final_test_loss=final_test,
        wall_time_s=time.perf_counter() - started,
        parameter_count=config.parameter_count,
    )
    return model, report


def predict_rgb(model: NetworkModel, scaled_input) -> Rgb:
    """Forward output scaled by 255, clamped to [0, 255], rounded half-up."""
    out = forward(model, np.asarray(scaled_input, dtype=float))
    clamped = np.clip(out * 255.0, 0.0, 255.0)
    r, g, b = (int(np.floor(v + 0.5)) for v in clamped)
    return Rgb(r, g, b)
