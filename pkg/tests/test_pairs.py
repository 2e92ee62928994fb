import numpy as np
import pytest

from octocartan import groups, linalg, pairs

E8 = np.eye(8)


def tau(theta):
    return pairs.one_param(pairs.KIND_A1, theta).algebra_matrix


def alpha_tilde(theta):
    return pairs.one_param(pairs.KIND_A0TILDE, theta).algebra_matrix


class TestOneParam:
    def test_zero_parameter_is_identity(self):
        for kind in (pairs.KIND_A1, pairs.KIND_A0TILDE, pairs.KIND_A0):
            el = pairs.one_param(kind, 0.0)
            assert np.allclose(el.matrix, E8)
            assert np.allclose(el.algebra_matrix, 0.0)

    def test_group_law(self):
        for kind in (pairs.KIND_A1, pairs.KIND_A0TILDE, pairs.KIND_A0):
            a = pairs.one_param(kind, 0.7).matrix
            b = pairs.one_param(kind, -1.9).matrix
            c = pairs.one_param(kind, -1.2).matrix
            assert np.linalg.norm(a @ b - c) < 1e-14

    def test_a0tilde_moves_e0(self):
        th = 0.9
        v = pairs.one_param(pairs.KIND_A0TILDE, th).matrix @ E8[0]
        want = np.cosh(th) * E8[0] + 1j * np.sinh(th) * E8[1]
        assert np.allclose(v, want)

    def test_a1_action_on_e4(self):
        th = 0.9
        v = pairs.one_param(pairs.KIND_A1, th).matrix @ E8[4]
        want = np.cosh(th / 2) * E8[4] - 1j * np.sinh(th / 2) * E8[7]
        assert np.allclose(v, want)

    def test_a1_fixed_vectors(self):
        t = pairs.one_param(pairs.KIND_A1, 1.3).matrix
        assert np.allclose(t @ E8[0], E8[0])
        assert np.allclose(t @ E8[3], E8[3])

    def test_theta_antifixed(self):
        for kind in (pairs.KIND_A1, pairs.KIND_A0TILDE, pairs.KIND_A0):
            x = pairs.one_param(kind, 1.0).algebra_matrix
            assert np.array_equal(groups.cartan_theta(x), -x)

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            pairs.one_param(pairs.KIND_A1, np.inf)

    def test_kind_membership_flags(self):
        rep = groups.classify(pairs.one_param(pairs.KIND_A1, 0.8).matrix)
        assert rep.is_automorphism
        rep = groups.classify(pairs.one_param(pairs.KIND_A0TILDE, 0.8).matrix)
        assert rep.has_triality_companion
        rep = groups.classify(pairs.one_param(pairs.KIND_A0, 0.8).matrix)
        assert rep.fixes_e0 and rep.orthogonal

    def test_tau_is_multiple_of_first_complement_vector(self):
        th = 1.7
        want = (-0.5j * th) * pairs.basis("qg2").elements[0]
        assert np.linalg.norm(tau(th) - want) < 1e-15


class TestBases:
    def test_cardinalities(self):
        for tag, dim in (("sl3c", 8), ("qg2", 6), ("g2c", 14),
                         ("spin7c", 21), ("so7c", 21), ("so8c", 28),
                         ("su3", 8), ("g2compact", 14),
                         ("spin7compact", 21), ("so7compact", 21)):
            assert pairs.basis(tag).dim == dim

    def test_sl3c_leading_element(self):
        b = pairs.basis("sl3c").elements[0]
        want = np.zeros((8, 8))
        want[2, 3], want[3, 2] = -1.0, 1.0
        want[4, 5], want[5, 4] = 1.0, -1.0
        assert np.array_equal(b, want)

    def test_qg2_leading_element(self):
        b = pairs.basis("qg2").elements[0]
        want = np.zeros((8, 8))
        want[1, 2], want[2, 1] = 2.0, -2.0
        want[4, 7], want[7, 4] = -1.0, 1.0
        want[5, 6], want[6, 5] = -1.0, 1.0
        assert np.array_equal(b, want)

    def test_membership_laws(self):
        for m in pairs.basis("g2c").elements:
            assert pairs.derivation_residual(m) < 1e-12
        for m in pairs.basis("spin7c").elements:
            assert pairs.spin7_algebra_residual(m) < 1e-12
        for m in pairs.basis("so7c").elements:
            assert pairs.so7_algebra_residual(m) < 1e-12

    def test_sl3c_annihilates_e1(self):
        for m in pairs.basis("sl3c").elements:
            assert np.linalg.norm(m @ np.eye(8)[1]) == 0.0

    def test_linear_independence(self):
        for tag in ("g2c", "spin7c", "so7c"):
            b = pairs.basis(tag)
            mat = np.stack([m.ravel() for m in b.elements])
            assert np.linalg.matrix_rank(mat) == b.dim

    def test_compact_bases_are_real_antisymmetric(self):
        for tag in ("su3", "g2compact", "spin7compact", "so7compact"):
            for m in pairs.basis(tag).elements:
                assert np.linalg.norm(m.imag) == 0.0
                assert np.linalg.norm(m + m.T) < 1e-12

    def test_compact_basis_spans_inside_complex_span(self):
        comp = pairs.basis("spin7compact")
        cplx = np.stack([m.ravel() for m in pairs.basis("spin7c").elements]).T
        for m in comp.elements:
            coeff, *_ = np.linalg.lstsq(cplx, m.ravel(), rcond=None)
            assert np.linalg.norm(cplx @ coeff - m.ravel()) < 1e-10

    def test_unknown_tag(self):
        with pytest.raises(ValueError):
            pairs.basis("e8")


class TestTraceForm:
    def test_tau_squared(self):
        # oracle: explicit entry sum over the six nonzero entries of tau(1)
        t = tau(1.0)
        acc = 0.0 + 0.0j
        for i in range(8):
            for j in range(8):
                acc += t[i, j] * t[j, i]
        assert acc == pytest.approx(3.0)
        assert pairs.trace_form(t, t) == pytest.approx(acc)

    def test_a1_generator_orthogonal_to_stabilizer_algebra(self):
        for b in pairs.basis("sl3c").elements:
            assert abs(pairs.trace_form(tau(1.0), b)) <= 1e-12

    def test_a0tilde_generator_orthogonal_to_derivations(self):
        for b in pairs.basis("g2c").elements:
            assert abs(pairs.trace_form(alpha_tilde(1.0), b)) <= 1e-12

    def test_proportional_to_structure_constant_form(self):
        # Killing form from the adjoint action equals c * trace form on the
        # 14-dim derivation algebra, for one fitted constant c
        b = pairs.basis("g2c")
        flat = np.stack([m.ravel() for m in b.elements]).T
        ad = []
        for bi in b.elements:
            rows = []
            for bj in b.elements:
                comm = (bi @ bj - bj @ bi).ravel()
                coeff, *_ = np.linalg.lstsq(flat, comm, rcond=None)
                rows.append(coeff)
            ad.append(np.stack(rows, axis=1))
        killing = np.array([[np.trace(ad[i] @ ad[j]) for j in range(b.dim)]
                            for i in range(b.dim)])
        gram = np.array([[pairs.trace_form(x, y) for y in b.elements]
                         for x in b.elements])
        i0 = np.unravel_index(np.argmax(np.abs(gram)), gram.shape)
        c = killing[i0] / gram[i0]
        assert np.linalg.norm(killing - c * gram) <= 1e-8 * np.linalg.norm(killing)
        assert abs(c.imag) < 1e-10 and c.real > 0


class TestOrthogonalComplement:
    def test_complement_of_stabilizer_matches_listed_basis(self):
        comp = pairs.orthogonal_complement(pairs.basis("g2c"), pairs.basis("sl3c"))
        assert comp.dim == 6
        listed = np.stack([m.ravel() for m in pairs.basis("qg2").elements])
        combined = np.vstack([listed,
                              np.stack([m.ravel() for m in comp.elements])])
        assert np.linalg.matrix_rank(combined, tol=1e-9) == 6

    def test_complement_of_derivations_in_spin_contains_generator(self):
        comp = pairs.orthogonal_complement(pairs.basis("spin7c"), pairs.basis("g2c"))
        assert comp.dim == 7
        flat = np.stack([m.ravel() for m in comp.elements]).T
        target = alpha_tilde(1.0).ravel()
        coeff, *_ = np.linalg.lstsq(flat, target, rcond=None)
        assert np.linalg.norm(flat @ coeff - target) < 1e-9

    def test_self_complement_is_empty(self):
        b = pairs.basis("g2c")
        assert pairs.orthogonal_complement(b, b).dim == 0
