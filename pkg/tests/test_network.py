"""Network construction, forward pass, backprop, and training loop."""
import numpy as np
import pytest

from _gradients import draw_inputs_off_relu_kinks, max_relative_error, random_config
from huecast import network
from huecast.network import (
    DEFAULT_HIDDEN,
    NetworkConfig,
    default_config,
    forward,
    init,
    loss_mse,
    predict_rgb,
    targets_from_recipes,
    train,
)


def small_config(**overrides):
    base = dict(layer_dims=(4, 8, 3), activations=("relu", "linear"), seed=7)
    base.update(overrides)
    return NetworkConfig(**base)


class TestConfig:
    def test_parameter_count_formula(self):
        cfg = NetworkConfig(layer_dims=(6, 4, 3), activations=("relu", "linear"))
        assert cfg.parameter_count == 6 * 4 + 4 + 4 * 3 + 3

    def test_default_dims(self):
        cfg = default_config(input_dim=6)
        assert cfg.layer_dims == (6,) + DEFAULT_HIDDEN + (3,)
        assert cfg.parameter_count == 31747

    def test_default_activations_end_linear(self):
        cfg = default_config(input_dim=6)
        assert cfg.activations[-1] == "linear"
        assert set(cfg.activations[:-1]) == {"relu"}

    def test_output_dim_must_be_three(self):
        with pytest.raises(ValueError):
            NetworkConfig(layer_dims=(4, 8, 2), activations=("relu", "linear"))

    def test_last_activation_must_be_linear(self):
        with pytest.raises(ValueError):
            NetworkConfig(layer_dims=(4, 8, 3), activations=("relu", "relu"))

    def test_activation_count_must_match(self):
        with pytest.raises(ValueError):
            NetworkConfig(layer_dims=(4, 8, 3), activations=("linear",))

    def test_positive_hyperparameters(self):
        with pytest.raises(ValueError):
            small_config(learning_rate=0.0)
        with pytest.raises(ValueError):
            small_config(epochs=0)


class TestInit:
    def test_shapes(self):
        model = init(small_config())
        assert [w.shape for w in model.weights] == [(4, 8), (8, 3)]
        assert [b.shape for b in model.biases] == [(8,), (3,)]

    def test_biases_zero(self):
        model = init(small_config())
        assert all(not b.any() for b in model.biases)

    def test_same_seed_identical_weights(self):
        a, b = init(small_config()), init(small_config())
        for wa, wb in zip(a.weights, b.weights):
            np.testing.assert_array_equal(wa, wb)

    def test_different_seed_differs(self):
        a = init(small_config(seed=1))
        b = init(small_config(seed=2))
        assert any((wa != wb).any() for wa, wb in zip(a.weights, b.weights))

    def test_range_scales_with_fan_in_and_activation(self):
        cfg = NetworkConfig(
            layer_dims=(24, 24, 3), activations=("relu", "linear"), seed=0
        )
        model = init(cfg)
        relu_limit = np.sqrt(6.0 / 24)
        linear_limit = np.sqrt(3.0 / 24)
        assert np.abs(model.weights[0]).max() <= relu_limit
        assert np.abs(model.weights[1]).max() <= linear_limit
        # the wider relu range is actually used
        assert np.abs(model.weights[0]).max() > linear_limit


class TestForward:
    def test_zero_weights_give_zero_output(self):
        model = init(small_config())
        for w in model.weights:
            w[:] = 0.0
        out = forward(model, np.ones(4))
        np.testing.assert_array_equal(out, np.zeros(3))

    def test_identity_slice_through_linear_layer(self):
        cfg = NetworkConfig(layer_dims=(3, 3, 3), activations=("linear", "linear"))
        model = init(cfg)
        for w in model.weights:
            w[:] = np.eye(3)
        np.testing.assert_allclose(forward(model, [0.1, -0.5, 2.0]), [0.1, -0.5, 2.0])

    def test_relu_clamps_negative_preactivations(self):
        cfg = NetworkConfig(layer_dims=(1, 1, 3), activations=("relu", "linear"))
        model = init(cfg)
        model.weights[0][:] = 1.0
        model.weights[1][:] = 1.0
        assert forward(model, [-3.5]).tolist() == [0.0, 0.0, 0.0]

    def test_batch_matches_single(self):
        model = init(small_config())
        x = np.random.default_rng(0).uniform(-1, 1, size=(5, 4))
        batch = forward(model, x)
        singles = np.stack([forward(model, row) for row in x])
        np.testing.assert_allclose(batch, singles)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="input dim"):
            forward(init(small_config()), np.zeros(5))


class TestLoss:
    def test_zero_for_exact_prediction(self):
        assert loss_mse([0.1, 0.2, 0.3], [0.1, 0.2, 0.3]) == 0.0

    def test_mean_over_elements(self):
        assert loss_mse([1.0, 0.0, 0.0], [0.0, 0.0, 0.0]) == pytest.approx(1 / 3)

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            loss_mse([1.0, 2.0], [1.0, 2.0, 3.0])


class TestBackward:
    def test_matches_finite_differences_on_sample_configs(self):
        rng = np.random.default_rng(123)
        for _ in range(5):
            model = network.init(random_config(rng))
            x = draw_inputs_off_relu_kinks(model, rng, n_samples=3)
            y = rng.uniform(0, 1, size=(3, 3))
            assert max_relative_error(model, x, y) < 1e-5

    def test_batch_size_mismatch(self):
        model = init(small_config())
        with pytest.raises(ValueError, match="batch"):
            network.backward(model, np.zeros((2, 4)), np.zeros((3, 3)))


class TestTrain:
    def test_loss_decreases_on_learnable_data(self):
        rng = np.random.default_rng(1)
        x = rng.uniform(0, 1, size=(32, 4))
        y = x[:, :3] * 0.5
        cfg = small_config(epochs=60, learning_rate=0.1, batch_size=8)
        _, report = train(cfg, x, y)
        assert report.final_train_loss < report.epoch_losses[0] * 0.2

    def test_zero_epoch_budget_rejected(self):
        with pytest.raises(ValueError):
            small_config(epochs=0)

    def test_deterministic(self):
        rng = np.random.default_rng(2)
        x = rng.uniform(0, 1, size=(16, 4))
        y = rng.uniform(0, 1, size=(16, 3))
        cfg = small_config(epochs=10)
        m1, r1 = train(cfg, x, y)
        m2, r2 = train(cfg, x, y)
        for w1, w2 in zip(m1.weights, m2.weights):
            np.testing.assert_array_equal(w1, w2)
        assert r1.epoch_losses == r2.epoch_losses

    def test_report_tracks_test_loss(self):
        rng = np.random.default_rng(3)
        x = rng.uniform(0, 1, size=(16, 4))
        y = rng.uniform(0, 1, size=(16, 3))
        cfg = small_config(epochs=3)
        _, report = train(cfg, x, y, x[:4], y[:4])
        assert report.final_test_loss is not None
        assert len(report.epoch_losses) == 3

    def test_empty_training_data(self):
        with pytest.raises(ValueError, match="empty"):
            train(small_config(epochs=1), np.zeros((0, 4)), np.zeros((0, 3)))

    def test_report_json_is_deterministic(self):
        rng = np.random.default_rng(4)
        x = rng.uniform(0, 1, size=(8, 4))
        y = rng.uniform(0, 1, size=(8, 3))
        cfg = small_config(epochs=4)
        _, r1 = train(cfg, x, y)
        _, r2 = train(cfg, x, y)
        assert r1.to_json_dict() == r2.to_json_dict()
        assert "wall_time_s" not in r1.to_json_dict()


class TestTargetsAndPrediction:
    def test_targets_scaled(self):
        t = targets_from_recipes([(255, 0, 128)])
        np.testing.assert_allclose(t, [[1.0, 0.0, 128 / 255]])

    def test_rounding_is_half_up(self):
        cfg = NetworkConfig(layer_dims=(1, 3), activations=("linear",))
        model = init(cfg)
        model.weights[0][:] = np.array([[76.5 / 255, 76.4999 / 255, 77.5 / 255]])
        rgb = predict_rgb(model, [1.0])
        assert tuple(rgb) == (77, 76, 78)

    def test_clips_to_byte_range(self):
        cfg = NetworkConfig(layer_dims=(1, 3), activations=("linear",))
        model = init(cfg)
        model.weights[0][:] = np.array([[-0.5, 2.0, 0.5]])
        rgb = predict_rgb(model, [1.0])
        assert tuple(rgb) == (0, 255, 128)
