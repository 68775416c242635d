"""Unit and property tests for the octonion core.

The multiplication table is generated by Cayley-Dickson doubling; the
property suite here (norm multiplicativity, anti-commutation, alternativity,
Moufang, two-generator associativity) is the gate that any admissible table
must pass, so the frozen table is acceptable iff this module is green.
"""

import numpy as np
import pytest

from octoplane.octonion import (
    FANO_TRIPLES,
    MUL_INDEX,
    MUL_SIGN,
    Octonion,
    basis,
    oct_conj,
    oct_inv,
    oct_mul,
    oct_norm,
    oct_norm_sq,
    oct_re,
)

E = np.eye(8)


def rand(n, seed):
    return np.random.default_rng(seed).standard_normal((n, 8))


class TestTableGate:
    def test_identity_element(self):
        assert np.array_equal(oct_mul(E[0], E[5]), E[5])
        for k in range(8):
            assert np.array_equal(oct_mul(E[0], E[k]), E[k])
            assert np.array_equal(oct_mul(E[k], E[0]), E[k])

    def test_imaginary_squares(self):
        for m in range(1, 8):
            assert np.array_equal(oct_mul(E[m], E[m]), -E[0])

    def test_anticommutation_exact(self):
        for i in range(1, 8):
            for j in range(1, 8):
                if i != j:
                    assert np.array_equal(oct_mul(E[i], E[j]), -oct_mul(E[j], E[i]))

    def test_basis_products_unimodular(self):
        # every basis product is +- another basis element
        for i in range(8):
            for j in range(8):
                p = oct_mul(E[i], E[j])
                assert np.count_nonzero(p) == 1
                assert abs(p[MUL_INDEX[i, j]]) == 1.0
                assert p[MUL_INDEX[i, j]] == MUL_SIGN[i, j]

    def test_frozen_fano_orientation(self):
        assert FANO_TRIPLES == (
            (1, 2, 3), (1, 4, 5), (1, 7, 6), (2, 4, 6),
            (2, 5, 7), (3, 4, 7), (3, 6, 5),
        )
        assert np.array_equal(oct_mul(E[1], E[2]), E[3])
        assert np.array_equal(oct_mul(E[2], E[1]), -E[3])

    def test_nonassociativity_witness(self):
        lhs = oct_mul(oct_mul(E[1], E[2]), E[4])
        rhs = oct_mul(E[1], oct_mul(E[2], E[4]))
        assert np.max(np.abs(lhs - rhs)) > 1.0  # (e1 e2) e4 = e7, e1 (e2 e4) = -e7


class TestProperties:
    N = 100_000

    def test_norm_multiplicativity(self):
        a, b = rand(self.N, 1), rand(self.N, 2)
        lhs = oct_norm(oct_mul(a, b))
        rhs = oct_norm(a) * oct_norm(b)
        assert np.max(np.abs(lhs - rhs) / rhs) < 1e-13

    def test_a_times_conj_is_norm_squared(self):
        a = rand(self.N, 3)
        p = oct_mul(a, oct_conj(a))
        target = np.zeros_like(a)
        target[:, 0] = oct_norm_sq(a)
        assert np.max(np.abs(p - target) / oct_norm_sq(a)[:, None]) < 1e-13

    def test_alternativity(self):
        a, b = rand(self.N, 4), rand(self.N, 5)
        scale = np.maximum(oct_norm(a) ** 2 * oct_norm(b), 1e-300)
        d1 = oct_norm(oct_mul(a, oct_mul(a, b)) - oct_mul(oct_mul(a, a), b)) / scale
        d2 = oct_norm(oct_mul(oct_mul(a, b), b) - oct_mul(a, oct_mul(b, b))) / (
            np.maximum(oct_norm(a) * oct_norm(b) ** 2, 1e-300)
        )
        assert max(np.max(d1), np.max(d2)) < 1e-12

    def test_moufang(self):
        a, b, c = rand(20_000, 6), rand(20_000, 7), rand(20_000, 8)
        lhs = oct_mul(oct_mul(a, b), oct_mul(c, a))
        rhs = oct_mul(a, oct_mul(oct_mul(b, c), a))
        scale = np.maximum(oct_norm(a) ** 2 * oct_norm(b) * oct_norm(c), 1e-300)
        assert np.max(oct_norm(lhs - rhs) / scale) < 1e-12

    def test_two_generator_associativity(self):
        a, b = rand(self.N, 9), rand(self.N, 10)
        for c in (oct_mul(a, b), a + b):
            lhs = oct_mul(oct_mul(a, b), c)
            rhs = oct_mul(a, oct_mul(b, c))
            scale = np.maximum(oct_norm(a) * oct_norm(b) * oct_norm(c), 1e-300)
            assert np.max(oct_norm(lhs - rhs) / scale) < 1e-12

    def test_conjugation(self):
        a, b = rand(1000, 11), rand(1000, 12)
        assert np.array_equal(oct_conj(oct_conj(a)), a)
        d = oct_norm(oct_mul(oct_conj(b), oct_conj(a)) - oct_conj(oct_mul(a, b)))
        assert np.max(d / (oct_norm(a) * oct_norm(b))) < 1e-13


class TestScalarOps:
    def test_conj_examples(self):
        assert np.array_equal(oct_conj(E[0]), E[0])
        assert np.array_equal(oct_conj(E[4]), -E[4])
        one_plus_e1 = E[0] + E[1]
        assert np.array_equal(oct_conj(one_plus_e1), E[0] - E[1])

    def test_norm_examples(self):
        assert oct_norm(E[0] + E[1]) == pytest.approx(np.sqrt(2.0), rel=1e-15)
        assert oct_norm(np.full(8, 1.0) / np.sqrt(8.0)) == pytest.approx(1.0, rel=1e-15)

    def test_real_part(self):
        assert oct_re(3.0 * E[0] + 2.0 * E[5]) == 3.0

    def test_inverse_examples(self):
        assert np.allclose(oct_inv(2.0 * E[0]), 0.5 * E[0])
        assert np.allclose(oct_inv(E[1]), -E[1])
        a = rand(100, 13)
        assert np.max(oct_norm(oct_mul(a, oct_inv(a)) - E[0])) < 1e-12
        with pytest.raises(ValueError, match="non-invertible"):
            oct_inv(np.zeros(8))

    def test_octonion_class(self):
        x = Octonion.unit(1) * Octonion.unit(2)
        assert x == Octonion.unit(3)
        assert (Octonion.from_real(2.0).inverse()).coeffs[0] == 0.5
        assert Octonion.unit(3).conj() == -Octonion.unit(3)
        with pytest.raises(ValueError, match="finite"):
            Octonion([np.nan] + [0.0] * 7)
        with pytest.raises(ValueError):
            Octonion([1.0, 2.0])

    def test_basis_range(self):
        with pytest.raises(ValueError):
            basis(8)
