"""HTTP inference service around a loaded checkpoint.

JSON over HTTP, no authentication, intended for localhost use. The
checkpoint is loaded once and never mutated, so every response is a pure
function of the request body. When a directory of built UI assets is
supplied it is mounted at / and one process serves the whole demo.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import List, Optional, Sequence

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import __version__
from .color import rgb_to_hex, rgb_to_lab
from .color import delta_e as delta_e_between
from .dataset import ColorSample
from .experiment import nearest_colors
from .pipeline import Pipeline

NEAREST_K = 3


def _bad_request(message: str) -> JSONResponse:
    return JSONResponse({"error": message}, status_code=400)


def _as_rgb(value) -> tuple:
    if (
        not isinstance(value, (list, tuple))
        or len(value) != 3
        or not all(isinstance(c, int) and 0 <= c <= 255 for c in value)
    ):
        raise ValueError(f"not an RGB triple: {value!r}")
    return tuple(value)


async def _json_body(request: Request) -> Optional[dict]:
    try:
        doc = json.loads(await request.body())
    except (json.JSONDecodeError, UnicodeDecodeError):
        return None
    return doc if isinstance(doc, dict) else None


def create_app(
    pipeline: Pipeline,
    chart: Sequence[ColorSample],
    static_dir: Optional[Path] = None,
    model_version: str = __version__,
) -> FastAPI:
    """Build the service around one pipeline and one chart."""
    app = FastAPI(title="huecast service", version=model_version)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.post("/api/infer")
    async def infer(request: Request):
        doc = await _json_body(request)
        if doc is None:
            return _bad_request("body must be a JSON object")
        description = doc.get("description")
        if not isinstance(description, str) or not description.strip():
            return _bad_request("empty description")

        rgb = pipeline.predict(description)
        nearest = [
            {
                "name": sample.description,
                "rgb": list(sample.recipe),
                "hex": rgb_to_hex(sample.recipe),
                "delta_e": round(dist, 4),
            }
            for sample, dist in nearest_colors(rgb, chart, k=NEAREST_K)
        ]
        return {
            "rgb": list(rgb),
            "hex": rgb_to_hex(rgb),
            "nearest": nearest,
            "tokens": pipeline.encode(description),
            "model_version": model_version,
        }

    @app.post("/api/delta-e")
    async def delta_e(request: Request):
        doc = await _json_body(request)
        if doc is None:
            return _bad_request("body must be a JSON object")
        metric = doc.get("metric", "ciede2000")
        if metric not in ("ciede2000", "cie76"):
            return _bad_request(f"unknown metric: {metric!r}")
        pairs = doc.get("pairs")
        if not isinstance(pairs, list) or not pairs:
            return _bad_request("pairs must be a non-empty list")
        values: List[float] = []
        for pair in pairs:
            if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                return _bad_request(f"not a color pair: {pair!r}")
            try:
                first, second = (_as_rgb(c) for c in pair)
            except ValueError as exc:
                return _bad_request(str(exc))
            values.append(
                round(
                    delta_e_between(
                        rgb_to_lab(first), rgb_to_lab(second), metric
                    ),
                    4,
                )
            )
        return {"metric": metric, "values": values}

    @app.get("/api/model")
    async def model():
        cfg = pipeline.model.config
        return {
            "param_count": cfg.parameter_count,
            "layer_dims": list(cfg.layer_dims),
            "scaler_method": pipeline.scaler.method,
            "vocab_size": len(pipeline.vocab),
            "max_len": pipeline.vocab.max_len,
            "dataset_size": len(chart),
        }

    @app.get("/api/health")
    async def health():
        return {"status": "ok"}

    if static_dir is not None:
        app.mount(
            "/", StaticFiles(directory=static_dir, html=True), name="ui"
        )
    return app
