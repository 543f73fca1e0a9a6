"""
Four normalization methods on one identical split
=================================================

Everything except the scaler is held fixed: same seed, same split, same
layer sizes. Max-abs scaling admits negative inputs, so that run uses
all-linear activations while the other three train with ReLU hidden
layers. The reference column carries previously reported values for
orientation; exact numbers depend on the dataset and epoch budget.
"""
from huecast.dataset import load_default_chart
from huecast.experiment import compare_scalers

data = load_default_chart()

# a reduced epoch budget keeps this demo near ten seconds; the package
# default is epochs=1200
report = compare_scalers(data, epochs=400)

print(report.format_table())
print()
print(f"metric: {report.metric}")
print(f"test samples per method: {report.sample_count}")
print(f"split: seed={report.split_seed}, ratio={report.split_ratio}")
print(f"layer dims: {report.layer_dims}")
