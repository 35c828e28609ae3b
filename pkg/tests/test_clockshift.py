import numpy as np
import pytest

import projalg as pa
from projalg.phases import reduce_phase


class TestMatrices:
    def test_n2_pauli_pair(self):
        u1, u2 = pa.clock_shift_matrices(2)
        assert np.array_equal(u1, np.array([[0, 1], [1, 0]]))
        assert np.max(np.abs(u2 - np.diag([1.0, -1.0]))) < 1e-15

    def test_n3_clock_diagonal(self):
        _, u2 = pa.clock_shift_matrices(3)
        w = np.exp(2j * np.pi / 3)
        assert np.allclose(u2, np.diag([1.0, w, w ** 2]))

    @pytest.mark.parametrize("n", range(2, 9))
    def test_generator_order(self, n):
        u1, u2 = pa.clock_shift_matrices(n)
        assert np.max(np.abs(np.linalg.matrix_power(u1, n) - np.eye(n))) < 1e-12
        assert np.max(np.abs(np.linalg.matrix_power(u2, n) - np.eye(n))) < 1e-12

    @pytest.mark.parametrize("n", range(2, 9))
    def test_commutation_phase(self, n):
        u1, u2 = pa.clock_shift_matrices(n)
        lhs = u1 @ u2
        rhs = np.exp(2j * np.pi / n) * (u2 @ u1)
        assert np.max(np.abs(lhs - rhs)) < 1e-12

    def test_invalid_n(self):
        with pytest.raises(ValueError):
            pa.clock_shift_matrices(1)


class TestRealize:
    def test_identity(self):
        for n in (2, 3, 5):
            assert np.array_equal(pa.realize(n, (0, 0)), np.eye(n))

    def test_n2_single_factors(self):
        assert np.array_equal(pa.realize(2, (1, 0)), np.array([[0, 1], [1, 0]]))
        assert np.max(np.abs(pa.realize(2, (0, 1)) - np.diag([1.0, -1.0]))) < 1e-15

    def test_n2_dressed_cross_term(self):
        expected = np.array([[0, -1j], [1j, 0]])
        assert np.max(np.abs(pa.realize(2, (1, 1)) - expected)) < 1e-15

    def test_unitary(self):
        for n in (2, 3, 4):
            for m, mat in pa.element_matrices(n).items():
                assert np.max(np.abs(mat @ mat.conj().T - np.eye(n))) < 1e-12

    def test_wraps_to_canonical(self):
        assert np.array_equal(pa.realize(3, (4, -2)), pa.realize(3, (1, 1)))


class TestMeasuredCocycle:
    def test_n2_hand_values(self):
        alpha = pa.measured_cocycle(2)
        assert alpha.phase((1, 0), (0, 1)) == pytest.approx(-np.pi / 2)
        assert alpha.phase((0, 1), (1, 0)) == pytest.approx(np.pi / 2)

    def test_identity_row_is_zero(self):
        for n in (2, 3, 4):
            alpha = pa.measured_cocycle(n)
            g = pa.make_cyclic_power(n, 2)
            for m in g.elements():
                assert alpha.phase(m, (0, 0)) == 0.0
                assert alpha.phase((0, 0), m) == 0.0

    @pytest.mark.parametrize("n", range(2, 7))
    def test_validates_exhaustively(self, n):
        g = pa.make_cyclic_power(n, 2)
        report = pa.validate_cocycle(g, pa.measured_cocycle(n))
        assert report.passed
        assert report.checks[0].max_residual < 1e-12

    @pytest.mark.parametrize("n", range(2, 7))
    def test_pairing_is_gauge_invariant_content(self, n):
        g = pa.make_cyclic_power(n, 2)
        beta = pa.commutator_pairing(g, pa.measured_cocycle(n), (1, 0), (0, 1))
        assert abs(reduce_phase(beta - 2 * np.pi / n)) < 1e-12

    def test_product_rule_against_matrices(self):
        n = 4
        g = pa.make_cyclic_power(n, 2)
        alpha = pa.measured_cocycle(n)
        mats = pa.element_matrices(n)
        for a in g.elements():
            for b in g.elements():
                lhs = mats[a] @ mats[b]
                rhs = np.exp(1j * alpha.phase(a, b)) * mats[g.prod(a, b)]
                assert np.max(np.abs(lhs - rhs)) < 1e-11

    def test_inconsistent_matrices_rejected(self, z22):
        mats = dict(pa.element_matrices(2))
        bad = mats[(1, 1)].copy()
        bad[0, 1] *= np.exp(0.3j)  # break the common-phase property
        mats[(1, 1)] = bad
        with pytest.raises(pa.RepresentationInconsistencyError):
            pa.measure_cocycle_from_matrices(z22, mats)


class TestTraceIntegral:
    def test_trace_of_elements(self):
        for n in (2, 3, 5):
            g = pa.make_cyclic_power(n, 2)
            for m in g.elements():
                tr = np.trace(pa.realize(n, m))
                expected = n if m == (0, 0) else 0.0
                assert abs(tr - expected) < 1e-12

    def test_identity_matrix(self):
        assert pa.trace_integral(3, np.eye(3)) == 1.0

    def test_random_coefficients_pick_identity_term(self, rng):
        n = 3
        g = pa.make_cyclic_power(n, 2)
        coeffs = {m: complex(rng.standard_normal(), rng.standard_normal())
                  for m in g.elements()}
        total = sum(c * pa.realize(n, m) for m, c in coeffs.items())
        assert pa.trace_integral(n, total) == pytest.approx(coeffs[(0, 0)],
                                                            abs=1e-12)

    def test_trace_orthogonality(self):
        n = 4
        g = pa.make_cyclic_power(n, 2)
        mats = pa.element_matrices(n)
        for a in g.elements():
            for b in g.elements():
                val = np.trace(mats[a].conj().T @ mats[b]) / n
                expected = 1.0 if a == b else 0.0
                assert abs(val - expected) < 1e-12

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            pa.trace_integral(3, np.eye(4))


class TestConsistency:
    @pytest.mark.parametrize("n", [2, 5])
    def test_full_suite(self, n):
        report = pa.consistency_check(n)
        assert report.passed

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            pa.consistency_check(17)

    def test_matrix_representation_cocycle_is_normalized(self):
        for n in (2, 3):
            rep = pa.matrix_representation(n)
            assert rep.cocycle.normalized

    def test_unnormalized_representation_keeps_measured_cocycle(self):
        rep = pa.matrix_representation(3, normalized=False)
        assert rep.cocycle == pa.measured_cocycle(3)
