"""Command-line interface for training, inference, evaluation, and serving.

Every subcommand accepts long-form kebab-case flags. With
``--format json`` a command writes exactly one JSON document to stdout;
errors always go to stderr with exit code 1. Terminal swatch previews
use 24-bit background escapes and are suppressed for JSON output, when
NO_COLOR is set, or when stdout is not a terminal.
"""
from __future__ import annotations

import functools
import json
import os
import sys
from pathlib import Path
from typing import Optional, Tuple

import click

from . import __version__
from .dataset import DatasetError, load_csv, load_default_chart, split
from .experiment import compare_scalers as run_compare_scalers
from .experiment import evaluate_delta_e, nearest_colors
from .pipeline import load_checkpoint, save_checkpoint, train_pipeline
from .scalers import METHODS

DEFAULT_CHECKPOINT = Path("model.json")

# parameter count of the originally described 12-layer configuration,
# printed beside the measured count for orientation
REFERENCE_PARAM_COUNT = 38731

_FORMAT = click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "json"]),
    default="text",
    show_default=True,
    help="Output format; json emits a single document on stdout.",
)
_DATA = click.option(
    "--data",
    type=click.Path(path_type=Path),
    default=None,
    help="Color chart CSV (name,r,g,b). Defaults to the bundled chart.",
)


def _fail(message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(1)


def _guarded(fn):
    """Turn module errors into a stderr message and exit code 1."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (DatasetError, ValueError, RuntimeError, OSError) as exc:
            _fail(str(exc))

    return wrapper


def _load_data(path: Optional[Path]):
    if path is None:
        return load_default_chart()
    if not path.exists():
        raise ValueError(f"no such file: {path}")
    return load_csv(path)


def _load_model(path: Path):
    if not path.exists():
        raise ValueError(f"no such checkpoint: {path}")
    return load_checkpoint(path)


def _parse_hidden_dims(text: Optional[str]) -> Optional[Tuple[int, ...]]:
    if text is None:
        return None
    try:
        dims = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise ValueError(f"invalid hidden dims: {text!r}") from None
    if not dims:
        raise ValueError(f"invalid hidden dims: {text!r}")
    return dims


def _swatches_enabled(fmt: str) -> bool:
    if fmt == "json" or os.environ.get("NO_COLOR"):
        return False
    return sys.stdout.isatty()


def _swatch(rgb, enabled: bool) -> str:
    if not enabled:
        return ""
    r, g, b = rgb
    return f"\x1b[48;2;{r};{g};{b}m    \x1b[0m "


def _emit_json(doc: dict) -> None:
    click.echo(json.dumps(doc, indent=2))


def _hex(rgb) -> str:
    from .color import rgb_to_hex

    return rgb_to_hex(rgb)


@click.group()
@click.version_option(version=__version__, prog_name="huecast")
def main() -> None:
    """Predict RGB color recipes from free-text color descriptions."""


@main.command()
@_DATA
@click.option("--out", type=click.Path(path_type=Path), default=DEFAULT_CHECKPOINT,
              show_default=True, help="Checkpoint file to write.")
@click.option("--scaler", type=click.Choice(list(METHODS)), default="minmax",
              show_default=True, help="Feature scaling method.")
@click.option("--seed", type=int, default=42, show_default=True)
@click.option("--ratio", type=float, default=0.8, show_default=True,
              help="Train fraction of the split.")
@click.option("--max-len", type=int, default=6, show_default=True,
              help="Encoded tokens per description.")
@click.option("--hidden-dims", type=str, default=None,
              help="Comma-separated hidden layer sizes, e.g. 64,64,32.")
@click.option("--learning-rate", type=float, default=0.05, show_default=True)
@click.option("--epochs", type=int, default=1200, show_default=True)
@click.option("--batch-size", type=int, default=16, show_default=True)
@click.option("--report", type=click.Path(path_type=Path), default=None,
              help="Also write the training report as JSON to this path.")
@_FORMAT
@_guarded
def train(data, out, scaler, seed, ratio, max_len, hidden_dims,
          learning_rate, epochs, batch_size, report, fmt) -> None:
    """Train a pipeline and write its checkpoint."""
    samples = _load_data(data)
    pipe, train_report, parts = train_pipeline(
        samples,
        scaler_method=scaler,
        ratio=ratio,
        seed=seed,
        max_len=max_len,
        hidden_dims=_parse_hidden_dims(hidden_dims),
        learning_rate=learning_rate,
        epochs=epochs,
        batch_size=batch_size,
    )
    save_checkpoint(pipe, out)
    if report is not None:
        doc = json.dumps(train_report.to_json_dict(), indent=2)
        report.write_text(doc + "\n", encoding="utf-8")

    if fmt == "json":
        _emit_json({"checkpoint": str(out), "train_report": train_report.to_json_dict()})
        return
    click.echo(
        f"trained {scaler} pipeline on {len(samples)} samples "
        f"({len(parts.train)} train / {len(parts.test)} test)"
    )
    click.echo(f"final train loss {train_report.final_train_loss:.6f}")
    if train_report.final_test_loss is not None:
        click.echo(f"final test loss  {train_report.final_test_loss:.6f}")
    click.echo(f"parameters       {train_report.parameter_count:,}")
    click.echo(f"wall time        {train_report.wall_time_s:.1f}s")
    click.echo(f"checkpoint written to {out}")


@main.command()
@click.argument("description")
@click.option("--model", "-m", type=click.Path(path_type=Path),
              default=DEFAULT_CHECKPOINT, show_default=True,
              help="Checkpoint to load.")
@_DATA
@_FORMAT
@_guarded
def infer(description, model, data, fmt) -> None:
    """Predict a recipe for DESCRIPTION and show the nearest chart color."""
    pipe = _load_model(model)
    samples = _load_data(data)
    rgb = pipe.predict(description)
    name_match, dist = nearest_colors(rgb, samples, k=1)[0]

    if fmt == "json":
        _emit_json({
            "rgb": list(rgb),
            "hex": _hex(rgb),
            "tokens": pipe.encode(description),
            "nearest": {
                "name": name_match.description,
                "rgb": list(name_match.recipe),
                "hex": _hex(name_match.recipe),
                "delta_e": round(dist, 4),
            },
        })
        return
    on = _swatches_enabled(fmt)
    r, g, b = rgb
    click.echo(f"{_swatch(rgb, on)}{r},{g},{b}  {_hex(rgb)}")
    click.echo(
        f"{_swatch(name_match.recipe, on)}nearest: {name_match.description} "
        f"(delta E 2000 = {dist:.2f})"
    )


@main.command()
@click.option("--model", "-m", type=click.Path(path_type=Path),
              default=DEFAULT_CHECKPOINT, show_default=True)
@_DATA
@click.option("--n", type=int, default=30, show_default=True,
              help="Held-out samples to evaluate.")
@click.option("--metric", type=click.Choice(["ciede2000", "cie76"]),
              default="ciede2000", show_default=True)
@click.option("--seed", type=int, default=None,
              help="Split seed; defaults to the checkpoint's training seed.")
@click.option("--ratio", type=float, default=0.8, show_default=True)
@click.option("--out-json", type=click.Path(path_type=Path), default=None,
              help="Write the JSON report here.")
@click.option("--out-text", type=click.Path(path_type=Path), default=None,
              help="Write the plain-text report here.")
@_FORMAT
@_guarded
def evaluate(model, data, n, metric, seed, ratio, out_json, out_text, fmt) -> None:
    """Mean color difference over held-out samples."""
    pipe = _load_model(model)
    samples = _load_data(data)
    if seed is None:
        seed = pipe.model.config.seed
    parts = split(samples, ratio=ratio, seed=seed)
    report = evaluate_delta_e(pipe, parts.test, metric=metric, n=n)
    report.split_seed = seed
    report.split_ratio = ratio

    mean_line = (
        f"mean {metric} over {report.sample_count} held-out samples: "
        f"{report.mean_delta_e:.2f}"
    )
    if out_json is not None:
        out_json.write_text(
            json.dumps(report.to_json_dict(), indent=2) + "\n", encoding="utf-8"
        )
    if out_text is not None:
        values = "\n".join(f"{v:.4f}" for v in report.delta_e_values)
        out_text.write_text(mean_line + "\n" + values + "\n", encoding="utf-8")

    if fmt == "json":
        _emit_json(report.to_json_dict())
    else:
        click.echo(mean_line)


@main.command("compare-scalers")
@_DATA
@click.option("--seed", type=int, default=42, show_default=True)
@click.option("--ratio", type=float, default=0.8, show_default=True)
@click.option("--max-len", type=int, default=6, show_default=True)
@click.option("--hidden-dims", type=str, default=None,
              help="Comma-separated hidden layer sizes.")
@click.option("--learning-rate", type=float, default=0.05, show_default=True)
@click.option("--epochs", type=int, default=1200, show_default=True)
@click.option("--batch-size", type=int, default=16, show_default=True)
@click.option("--metric", type=click.Choice(["ciede2000", "cie76"]),
              default="ciede2000", show_default=True)
@click.option("--out-json", type=click.Path(path_type=Path), default=None)
@click.option("--out-text", type=click.Path(path_type=Path), default=None)
@_FORMAT
@_guarded
def compare_scalers(data, seed, ratio, max_len, hidden_dims, learning_rate,
                    epochs, batch_size, metric, out_json, out_text, fmt) -> None:
    """Train all four scaling methods on one split and tabulate accuracy."""
    samples = _load_data(data)
    report = run_compare_scalers(
        samples,
        seed=seed,
        ratio=ratio,
        max_len=max_len,
        hidden_dims=_parse_hidden_dims(hidden_dims),
        learning_rate=learning_rate,
        epochs=epochs,
        batch_size=batch_size,
        metric=metric,
    )
    table = report.format_table()
    if out_json is not None:
        out_json.write_text(
            json.dumps(report.to_json_dict(), indent=2) + "\n", encoding="utf-8"
        )
    if out_text is not None:
        out_text.write_text(table + "\n", encoding="utf-8")

    if fmt == "json":
        _emit_json(report.to_json_dict())
    else:
        click.echo(table)


@main.command("model-info")
@click.option("--model", "-m", type=click.Path(path_type=Path),
              default=DEFAULT_CHECKPOINT, show_default=True)
@_FORMAT
@_guarded
def model_info(model, fmt) -> None:
    """Describe a checkpoint: dimensions, parameters, scaler, vocabulary."""
    pipe = _load_model(model)
    raw = json.loads(Path(model).read_text(encoding="utf-8"))
    cfg = pipe.model.config
    info = {
        "param_count": cfg.parameter_count,
        "reference_param_count": REFERENCE_PARAM_COUNT,
        "layer_dims": list(cfg.layer_dims),
        "activations": list(cfg.activations),
        "scaler_method": pipe.scaler.method,
        "vocab_size": len(pipe.vocab),
        "max_len": pipe.vocab.max_len,
        "seed": cfg.seed,
        "checkpoint_version": raw.get("metadata", {}).get("version"),
    }
    if fmt == "json":
        _emit_json(info)
        return
    dims = " -> ".join(str(d) for d in cfg.layer_dims)
    click.echo(f"layer dims          {dims}")
    click.echo(f"activations         {', '.join(cfg.activations)}")
    click.echo(
        f"parameters          {cfg.parameter_count:,} "
        f"(reference configuration: {REFERENCE_PARAM_COUNT:,})"
    )
    click.echo(f"scaler              {pipe.scaler.method}")
    click.echo(f"vocab size          {len(pipe.vocab)}")
    click.echo(f"max len             {pipe.vocab.max_len}")
    click.echo(f"seed                {cfg.seed}")
    click.echo(f"checkpoint version  {info['checkpoint_version']}")


@main.command()
@click.option("--model", "-m", type=click.Path(path_type=Path),
              default=DEFAULT_CHECKPOINT, show_default=True)
@_DATA
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8080, show_default=True)
@click.option("--static", type=click.Path(path_type=Path), default=None,
              help="Directory of built UI assets to serve at /. "
                   "Defaults to frontend/dist when present.")
@_guarded
def serve(model, data, host, port, static) -> None:
    """Serve the inference API (and the UI, when built) over HTTP."""
    import uvicorn

    from .service import create_app

    pipe = _load_model(model)
    samples = _load_data(data)
    if static is None:
        candidate = Path("frontend") / "dist"
        static = candidate if candidate.is_dir() else None
    elif not Path(static).is_dir():
        raise ValueError(f"no such directory: {static}")
    app = create_app(pipe, samples, static_dir=static)
    uvicorn.run(app, host=host, port=port, log_level="info")


if __name__ == "__main__":
    main()
