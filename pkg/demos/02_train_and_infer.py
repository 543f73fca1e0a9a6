"""
Training a recipe predictor and asking it for colors
====================================================

The pipeline is: tokenize the description, encode tokens to padded
integer ids, scale them, and regress three channels with a small
feed-forward network. This demo trains a reduced configuration so it
finishes in a couple of seconds; drop the overrides to reproduce the
full default run.
"""
from huecast.color import rgb_to_hex
from huecast.dataset import load_default_chart
from huecast.experiment import nearest_colors
from huecast.pipeline import train_pipeline

data = load_default_chart()
print(f"bundled chart: {len(data)} named colors")

pipe, report, parts = train_pipeline(
    data,
    hidden_dims=(32, 32, 16),
    epochs=300,
)
print(f"split: {len(parts.train)} train / {len(parts.test)} test")
print(f"parameters: {report.parameter_count:,}")
print(f"final train loss: {report.final_train_loss:.5f}")
print(f"final test loss:  {report.final_test_loss:.5f}")

# the network has never seen these exact strings; nearby vocabulary
# tokens carry it
queries = [
    "dark red",
    "light blue",
    "very light grey",
    "deep green",
]

print("\npredictions:")
for text in queries:
    rgb = pipe.predict(text)
    (match, dist), = nearest_colors(rgb, data, k=1)
    print(
        f"  {text:<18} -> {rgb_to_hex(rgb)} {str(tuple(rgb)):<16} "
        f"nearest: {match.description} (dE2000 {dist:.1f})"
    )

# loss trajectory, first and last few epochs
losses = report.epoch_losses
head = ", ".join(f"{v:.4f}" for v in losses[:3])
tail = ", ".join(f"{v:.4f}" for v in losses[-3:])
print(f"\nepoch losses: {head} ... {tail}")
