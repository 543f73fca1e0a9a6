"""Fitted normalization methods and their column invariants."""
import numpy as np
import pytest

from huecast import scalers
from huecast.scalers import METHODS, fit, from_json_dict, to_json_dict, transform


@pytest.fixture
def matrix():
    rng = np.random.default_rng(5)
    # mixed magnitudes, a negative column, and a constant column
    x = rng.uniform(-40, 80, size=(50, 5))
    x[:, 3] = 7.0
    return x


class TestFit:
    def test_unknown_method(self, matrix):
        with pytest.raises(ValueError, match="unknown scaler"):
            fit("zscore", matrix)

    def test_empty_input(self):
        with pytest.raises(ValueError, match="empty"):
            fit("minmax", np.empty((0, 4)))

    def test_requires_matrix(self):
        with pytest.raises(ValueError, match="2-D"):
            fit("minmax", np.arange(5.0))

    @pytest.mark.parametrize("method", METHODS)
    def test_records_shape(self, matrix, method):
        params = fit(method, matrix)
        assert params.method == method
        assert params.n_features == matrix.shape[1]


class TestColumnInvariants:
    def test_minmax_maps_to_unit_interval(self, matrix):
        out = transform(fit("minmax", matrix), matrix)
        assert out.min() >= -1e-12 and out.max() <= 1 + 1e-12
        # extremes are attained per non-degenerate column
        for j in (0, 1, 2, 4):
            assert out[:, j].min() == pytest.approx(0.0, abs=1e-12)
            assert out[:, j].max() == pytest.approx(1.0, abs=1e-12)

    def test_maxabs_maps_into_signed_unit_interval(self, matrix):
        out = transform(fit("maxabs", matrix), matrix)
        assert np.abs(out).max() <= 1 + 1e-12

    def test_standard_centers_and_scales(self, matrix):
        out = transform(fit("standard", matrix), matrix)
        for j in (0, 1, 2, 4):
            assert abs(out[:, j].mean()) < 1e-9
            assert abs(out[:, j].std() - 1.0) < 1e-9

    def test_robust_centers_on_median(self, matrix):
        out = transform(fit("robust", matrix), matrix)
        for j in (0, 1, 2, 4):
            assert abs(np.median(out[:, j])) < 1e-9

    def test_robust_uses_interquartile_range(self, matrix):
        params = fit("robust", matrix)
        q1, q3 = np.percentile(matrix, [25, 75], axis=0)
        np.testing.assert_allclose(params.scale, q3 - q1)

    @pytest.mark.parametrize("method", METHODS)
    def test_degenerate_column_transforms_to_zero(self, matrix, method):
        out = transform(fit(method, matrix), matrix)
        if method == "maxabs":
            # constant 7.0 scales to 1, not a degenerate denominator
            assert np.allclose(out[:, 3], 1.0)
        else:
            assert np.allclose(out[:, 3], 0.0)

    def test_all_zero_column_is_degenerate_everywhere(self):
        x = np.zeros((10, 2))
        x[:, 1] = np.arange(10.0)
        for method in METHODS:
            out = transform(fit(method, x), x)
            assert np.all(np.isfinite(out))
            assert np.allclose(out[:, 0], 0.0)


class TestTransformShapes:
    def test_single_vector(self, matrix):
        params = fit("minmax", matrix)
        row = transform(params, matrix[0])
        batch = transform(params, matrix)[0]
        np.testing.assert_allclose(row, batch)

    def test_width_mismatch(self, matrix):
        params = fit("minmax", matrix)
        with pytest.raises(ValueError, match="features"):
            transform(params, np.zeros(3))

    def test_unseen_values_may_leave_unit_interval(self, matrix):
        params = fit("minmax", matrix)
        out = transform(params, np.full(matrix.shape[1], 1e4))
        assert out.max() > 1.0  # only training data is bounded


class TestSerialization:
    @pytest.mark.parametrize("method", METHODS)
    def test_round_trip_reproduces_transform(self, matrix, method):
        params = fit(method, matrix)
        clone = from_json_dict(to_json_dict(params))
        np.testing.assert_allclose(
            transform(clone, matrix), transform(params, matrix)
        )

    def test_unknown_method_in_checkpoint(self):
        with pytest.raises(ValueError, match="unknown scaler"):
            from_json_dict({"method": "pca", "n_features": 2, "stats": {}})

    def test_json_dict_is_plain_data(self, matrix):
        doc = to_json_dict(fit("robust", matrix))
        assert set(doc) == {"method", "n_features", "stats"}
        assert all(isinstance(v, list) for v in doc["stats"].values())
