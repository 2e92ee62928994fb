import numpy as np
import pytest

from octocartan import linalg, pairs


class TestMatApply:
    def test_identity(self):
        rng = np.random.default_rng(0)
        x = rng.normal(size=8) + 1j * rng.normal(size=8)
        assert np.allclose(linalg.mat_apply(np.eye(8), x), x)

    def test_parity_flip(self):
        ipm = np.diag([1, -1, 1, -1, 1, -1, 1, -1]).astype(complex)
        assert np.allclose(linalg.mat_apply(ipm, np.eye(8)[1]), -np.eye(8)[1])

    def test_slice_action_on_e1(self):
        t = pairs.one_param(pairs.KIND_A1, 1.0).matrix
        want = np.cosh(1.0) * np.eye(8)[1] + 1j * np.sinh(1.0) * np.eye(8)[2]
        assert np.allclose(linalg.mat_apply(t, np.eye(8)[1]), want)


class TestExpm:
    def test_zero(self):
        assert np.allclose(linalg.expm(np.zeros((8, 8))), np.eye(8))

    def test_inverse_property(self):
        rng = np.random.default_rng(1)
        for _ in range(20):
            x = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
            x *= 5.0 / np.linalg.norm(x)
            prod = linalg.expm(x) @ linalg.expm(-x)
            assert np.linalg.norm(prod - np.eye(8)) < 1e-10

    def test_closed_form_4x4_block(self):
        # exp of the antidiagonal generator has the cosh/sinh pattern
        x, y = 0.8, -1.3
        got = linalg.expm(pairs._delta4(x, y))
        want = pairs._exp_delta4(x, y)
        assert np.linalg.norm(got - want) < 1e-12

    def test_closed_form_slice_elements(self):
        for kind in (pairs.KIND_A1, pairs.KIND_A0TILDE, pairs.KIND_A0):
            for theta in (-2.0, -0.5, 0.0, 1.0, 3.0):
                el = pairs.one_param(kind, theta)
                assert np.linalg.norm(
                    linalg.expm(el.algebra_matrix) - el.matrix) < 1e-12

    def test_rejects_huge_input(self):
        with pytest.raises(ValueError):
            linalg.expm(np.eye(8) * 100.0)


class TestNullspace:
    def test_identity_rows_have_empty_nullspace(self):
        assert linalg.nullspace(np.eye(64)).shape == (64, 0)

    def test_vectors_annihilate_the_system(self):
        rng = np.random.default_rng(2)
        a = rng.normal(size=(80, 64)) + 1j * rng.normal(size=(80, 64))
        # make columns 0..2 combinations of columns 3..5: kernel dim 3
        a[:, :3] = a[:, 3:6] @ rng.normal(size=(3, 3))
        ns = linalg.nullspace(a)
        assert ns.shape[1] == 3
        assert np.linalg.norm(a @ ns) <= 1e-8 * np.linalg.norm(a)

    def test_zero_matrix_gives_full_space(self):
        assert linalg.nullspace(np.zeros((5, 7))).shape == (7, 7)


class TestSymSignature:
    def test_diag_plus_minus(self):
        assert linalg.sym_signature(np.diag([1.0, -1.0])) == (1, 1, 0)

    def test_zero_matrix(self):
        assert linalg.sym_signature(np.zeros((4, 4))) == (0, 0, 4)

    def test_rejects_asymmetric(self):
        m = np.zeros((3, 3))
        m[0, 1] = 1.0
        with pytest.raises(ValueError):
            linalg.sym_signature(m)


class TestValidation:
    def test_as_cmatrix_shape(self):
        with pytest.raises(ValueError):
            linalg.as_cmatrix(np.zeros((7, 8)))

    def test_as_cmatrix_nan(self):
        m = np.zeros((8, 8))
        m[0, 0] = np.nan
        with pytest.raises(ValueError):
            linalg.as_cmatrix(m)
