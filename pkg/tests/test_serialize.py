import json

import numpy as np
import pytest

from octocartan import serialize


class TestDumps:
    def test_float_fidelity(self):
        # 17 significant digits reproduce any binary64 exactly
        rng = np.random.default_rng(0)
        for _ in range(200):
            x = float(rng.normal() * 10.0 ** rng.integers(-12, 12))
            assert float(json.loads(serialize.dumps(x))) == x

    def test_special_values(self):
        assert serialize.dumps(1.0) == "1"
        assert float(json.loads(serialize.dumps(-0.0))) == 0.0
        assert serialize.dumps(True) == "true"
        assert serialize.dumps({"a": [1, 2]}) == '{"a":[1,2]}'

    def test_rejects_unserializable(self):
        with pytest.raises(TypeError):
            serialize.dumps(object())


class TestOctonionForm:
    def test_round_trip(self):
        rng = np.random.default_rng(1)
        v = rng.normal(size=8) + 1j * rng.normal(size=8)
        obj = json.loads(serialize.dumps(serialize.octonion_to_obj(v)))
        assert np.array_equal(serialize.octonion_from_obj(obj), v)

    def test_shape_errors(self):
        with pytest.raises(ValueError):
            serialize.octonion_from_obj([[0, 0]] * 7)
        with pytest.raises(ValueError):
            serialize.octonion_to_obj(np.zeros(9))


class TestMatrixForm:
    def test_bit_exact_round_trip(self):
        rng = np.random.default_rng(2)
        g = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
        text = serialize.dumps(serialize.matrix_to_obj(g))
        back = serialize.matrix_from_obj(json.loads(text))
        assert np.array_equal(back, g)

    def test_rejects_bad_shapes(self):
        with pytest.raises(ValueError):
            serialize.matrix_from_obj({"rows": [[[0, 0]] * 8] * 7})
        with pytest.raises(ValueError):
            serialize.matrix_from_obj([1, 2, 3])

    def test_rejects_non_finite(self):
        obj = serialize.matrix_to_obj(np.eye(8))
        obj["rows"][0][0] = [float("nan"), 0.0]
        with pytest.raises(ValueError):
            serialize.matrix_from_obj(obj)
