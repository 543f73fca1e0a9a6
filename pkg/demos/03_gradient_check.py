"""
Checking backpropagation against finite differences
===================================================

The network's gradients are derived by hand, so they deserve an
independent referee: perturb one parameter at a time by h, re-run the
forward pass, and compare the central difference quotient against the
analytic gradient. Agreement to several decimal places on random
configurations is strong evidence the chain rule came out right.
"""
import numpy as np

from huecast import network

rng = np.random.default_rng(7)

config = network.NetworkConfig(
    layer_dims=(4, 6, 5, 3),
    activations=("relu", "relu", "linear"),
    seed=11,
)
model = network.init(config)
print(f"architecture: {config.layer_dims}, {config.parameter_count} parameters")

x = rng.uniform(-1.0, 1.0, size=(8, 4))
y = rng.uniform(0.0, 1.0, size=(8, 3))

grad_w, grad_b = network.backward(model, x, y)

h = 1e-5
worst = 0.0
checked = 0
for params, grads in ((model.weights, grad_w), (model.biases, grad_b)):
    for arr, grad in zip(params, grads):
        it = np.nditer(arr, flags=["multi_index"])
        for _ in it:
            idx = it.multi_index
            keep = arr[idx]
            arr[idx] = keep + h
            up = network.loss_mse(network.forward(model, x), y)
            arr[idx] = keep - h
            down = network.loss_mse(network.forward(model, x), y)
            arr[idx] = keep
            numeric = (up - down) / (2 * h)
            denom = max(abs(grad[idx]), abs(numeric), 1e-4)
            worst = max(worst, abs(grad[idx] - numeric) / denom)
            checked += 1

print(f"checked {checked} parameters with h={h}")
print(f"worst relative error: {worst:.2e}")
print("agreement below 1e-5 means backprop and the loss surface concur")
