"""
Checkpoints as a pure function of the training flags
====================================================

A checkpoint bundles vocabulary, scaler parameters, network config, and
weights: everything inference needs. Two runs with identical settings
write byte-identical files, and a reloaded pipeline answers exactly
like the one that was saved.
"""
import tempfile
from pathlib import Path

from huecast.dataset import load_default_chart
from huecast.pipeline import load_checkpoint, save_checkpoint, train_pipeline

data = load_default_chart()
workdir = Path(tempfile.mkdtemp(prefix="huecast-demo-"))

settings = dict(hidden_dims=(16, 16), epochs=100, seed=9)

first = workdir / "run-a.json"
second = workdir / "run-b.json"
for path in (first, second):
    pipe, _, _ = train_pipeline(data, **settings)
    save_checkpoint(pipe, path)

print(f"checkpoint size: {first.stat().st_size:,} bytes")
print(f"byte-identical across runs: {first.read_bytes() == second.read_bytes()}")

# reload and compare answers
restored = load_checkpoint(first)
for text in ("dark red", "pale yellow", "words the model never saw"):
    fresh = pipe.predict(text)
    loaded = restored.predict(text)
    print(f"  {text!r}: fresh={tuple(fresh)} reloaded={tuple(loaded)} "
          f"match={fresh == loaded}")

# the file is plain JSON, so its shape is easy to inspect
import json

doc = json.loads(first.read_text(encoding="utf-8"))
print(f"top-level keys: {sorted(doc)}")
print(f"metadata: {doc['metadata']}")
