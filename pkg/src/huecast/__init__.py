"""huecast: RGB color recipes from free-text color descriptions.

A word-level tokenizing encoder feeds a small from-scratch feed-forward
network that regresses 8-bit RGB recipes; predictions are judged in
CIELAB with CIE76 or CIEDE2000.
"""

from .color import (
    Lab,
    Rgb,
    delta_e,
    delta_e_76,
    delta_e_2000,
    mean_delta_e,
    rgb_to_hex,
    rgb_to_lab,
)
from .dataset import ColorSample, SplitDataset, load_csv, load_default_chart, split
from .experiment import (
    EvalReport,
    accuracy,
    compare_scalers,
    evaluate_delta_e,
    nearest_colors,
)
from .network import NetworkConfig, NetworkModel, TrainReport, default_config
from .pipeline import Pipeline, load_checkpoint, save_checkpoint, train_pipeline
from .scalers import ScalerParams
from .vocab import Vocabulary, encode_batch, fit_vocabulary

__version__ = "0.1.0"

__all__ = [
    "Lab",
    "Rgb",
    "ColorSample",
    "SplitDataset",
    "Vocabulary",
    "ScalerParams",
    "NetworkConfig",
    "NetworkModel",
    "TrainReport",
    "EvalReport",
    "Pipeline",
    "delta_e",
    "delta_e_76",
    "delta_e_2000",
    "mean_delta_e",
    "rgb_to_hex",
    "rgb_to_lab",
    "load_csv",
    "load_default_chart",
    "split",
    "fit_vocabulary",
    "encode_batch",
    "default_config",
    "train_pipeline",
    "save_checkpoint",
    "load_checkpoint",
    "accuracy",
    "compare_scalers",
    "evaluate_delta_e",
    "nearest_colors",
    "__version__",
]
