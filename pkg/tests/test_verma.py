"""Verma module action, coproduct, and weight-space enumeration."""

from math import comb

import pytest

from braidrep.ring import LaurentPoly, qbinom
from braidrep.verma import (E, F, K, KINV, AlgebraGen, TensorVec, act_single,
                            act_tensor, weight_basis)

from conftest import random_poly

S = LaurentPoly.monomial(0, 1)


def random_vec(rnd, n, l, nterms=4):
    idxs = weight_basis(n, l)
    picks = rnd.sample(idxs, min(nterms, len(idxs)))
    return TensorVec(n, {idx: random_poly(rnd, max_terms=2, max_exp=2)
                         for idx in picks})


class TestSingleAction:
    def test_k(self):
        assert act_single(K, 2) == LaurentPoly.monomial(-4, 1) * TensorVec.pure((2,))

    def test_kinv_inverts_k(self):
        for j in range(5):
            v = TensorVec.pure((j,))
            assert act_tensor(KINV, act_tensor(K, v)) == v

    def test_e_lowers(self):
        assert act_single(E, 0).is_zero()
        assert act_single(E, 3) == TensorVec.pure((2,))

    def test_f_divided_power(self):
        assert act_single(F(1), 0) == (S - LaurentPoly.monomial(0, -1)) * TensorVec.pure((1,))
        # F^(m) v_j = qbinom(m+j, j) prod_{k<m}(s q^{-k-j} - s^{-1} q^{k+j}) v_{j+m}
        coeff = act_single(F(2), 1).coeff((3,))
        expected = qbinom(3, 1) * LaurentPoly({(-1, 1): 1, (1, -1): -1}) \
            * LaurentPoly({(-2, 1): 1, (2, -1): -1})
        assert coeff == expected

    def test_gen_validation(self):
        with pytest.raises(ValueError):
            AlgebraGen("F", 0)
        with pytest.raises(ValueError):
            AlgebraGen("X")
        with pytest.raises(ValueError):
            act_single(E, -1)


class TestDefiningRelations:
    """Operator identities on single factors, j <= 8 and m <= 4."""

    @pytest.mark.parametrize("j", range(9))
    @pytest.mark.parametrize("m", range(1, 5))
    def test_k_conjugation(self, j, m):
        lhs = act_tensor(K, act_tensor(F(m), act_single(KINV, j)))
        rhs = LaurentPoly.monomial(-2 * m, 0) * act_single(F(m), j)
        assert lhs == rhs

    @pytest.mark.parametrize("j", range(9))
    @pytest.mark.parametrize("a,b", [(1, 1), (1, 2), (2, 2), (1, 3), (2, 3)])
    def test_divided_power_product(self, j, a, b):
        lhs = act_tensor(F(a), act_single(F(b), j))
        rhs = qbinom(a + b, a) * act_single(F(a + b), j)
        assert lhs == rhs

    @pytest.mark.parametrize("j", range(9))
    @pytest.mark.parametrize("m", range(4))
    def test_e_f_commutator(self, j, m):
        v = TensorVec.pure((j,))
        lhs = act_tensor(E, act_tensor(F(m + 1), v))
        if j > 0:
            lhs = lhs - act_tensor(F(m + 1), act_tensor(E, v))
        inner = LaurentPoly.monomial(-m, 0) * act_tensor(K, v) \
            - LaurentPoly.monomial(m, 0) * act_tensor(KINV, v)
        rhs = act_tensor(F(m), inner) if m else inner
        assert lhs == rhs

    def test_relations_on_tensors(self, rnd):
        # the same identities through the coproduct on two and three factors
        for n, l in [(2, 2), (3, 2)]:
            v = random_vec(rnd, n, l)
            for m in (1, 2):
                lhs = act_tensor(E, act_tensor(F(m + 1), v)) \
                    - act_tensor(F(m + 1), act_tensor(E, v))
                inner = LaurentPoly.monomial(-m, 0) * act_tensor(K, v) \
                    - LaurentPoly.monomial(m, 0) * act_tensor(KINV, v)
                assert lhs == act_tensor(F(m), inner)


class TestTensorAction:
    def test_k_group_like(self):
        assert act_tensor(K, TensorVec.pure((0, 1))) \
            == LaurentPoly.monomial(-2, 2) * TensorVec.pure((0, 1))

    def test_e_two_factors(self):
        assert act_tensor(E, TensorVec.pure((1, 0))) == S * TensorVec.pure((0, 0))
        assert act_tensor(E, TensorVec.pure((0, 0, 0))).is_zero()

    def test_k_eigenvalue_on_weight_space(self):
        for n, l in [(2, 3), (3, 2), (4, 1)]:
            eig = LaurentPoly.monomial(-2 * l, n)
            for idx in weight_basis(n, l):
                v = TensorVec.pure(idx)
                assert act_tensor(K, v) == eig * v

    def test_f_degree_shift(self, rnd):
        v = random_vec(rnd, 3, 2)
        assert act_tensor(F(2), v).weight() == 4
        assert act_tensor(E, v).weight() == 1

    def test_coassociativity_three_factors(self, rnd):
        """(Delta x id) Delta(F^(m)) equals (id x Delta) Delta(F^(m)) on vectors.

        Both sides are expanded from the two-factor coproduct
        Delta(F^(m)) = sum_j q^{-j(m-j)} K^{j-m} F^(j) (x) F^(m-j); the
        elementary factors K^a F^(b) act slotwise.
        """
        def kf(a, b, j):
            # K^a F^(b) . v_j as (coeff, new index)
            out = act_tensor(F(b), TensorVec.pure((j,))) if b else TensorVec.pure((j,))
            ((idx,), coeff), = [(k, v) for k, v in out.coeffs.items()]
            coeff = coeff * LaurentPoly.monomial(-2 * a * idx, a)
            return coeff, idx

        def apply_elementary(v, ops):
            result = TensorVec.zero(v.n)
            for idx, c in v.coeffs.items():
                coeff = c
                new = []
                for slot, (a, b) in enumerate(ops):
                    f, i = kf(a, b, idx[slot])
                    coeff = coeff * f
                    new.append(i)
                result = result + TensorVec.pure(tuple(new), coeff)
            return result

        qm = LaurentPoly.monomial
        for m in (1, 2, 3):
            v = random_vec(rnd, 3, 2)
            left = TensorVec.zero(3)   # (Delta x id) Delta
            right = TensorVec.zero(3)  # (id x Delta) Delta
            for j in range(m + 1):
                outer = qm(-j * (m - j), 0)
                for i in range(j + 1):
                    pref = outer * qm(-i * (j - i), 0)
                    ops = [(j - m + i - j, i), (j - m, j - i), (0, m - j)]
                    left = left + pref * apply_elementary(v, ops)
                for i in range(m - j + 1):
                    pref = outer * qm(-i * (m - j - i), 0)
                    ops = [(j - m, j), (i - (m - j), i), (0, m - j - i)]
                    right = right + pref * apply_elementary(v, ops)
            direct = act_tensor(F(m), v)
            assert left == right
            assert left == direct


class TestWeightBasis:
    def test_base_cases(self):
        assert weight_basis(3, 0) == ((0, 0, 0),)
        assert weight_basis(2, 2) == ((0, 2), (1, 1), (2, 0))

    def test_counts(self):
        for n in range(1, 6):
            for l in range(5):
                assert len(weight_basis(n, l)) == comb(n + l - 1, l)

    def test_lex_order_and_uniqueness(self):
        basis = weight_basis(4, 3)
        assert list(basis) == sorted(set(basis))
        assert all(sum(idx) == 3 and len(idx) == 4 for idx in basis)

    def test_validation(self):
        with pytest.raises(ValueError):
            weight_basis(0, 1)
        with pytest.raises(ValueError):
            weight_basis(2, -1)


class TestTensorVec:
    def test_zero_and_equality(self):
        z = TensorVec.zero(2)
        assert z.is_zero()
        assert z == TensorVec.pure((1, 1)) - TensorVec.pure((1, 1))

    def test_homogeneity_guard(self):
        v = TensorVec.pure((1, 0)) + TensorVec.pure((1, 1))
        with pytest.raises(ValueError):
            v.weight()

    def test_length_guard(self):
        with pytest.raises(ValueError):
            TensorVec(2, {(1, 2, 3): 1})

    def test_scalar_multiple(self):
        v = TensorVec.pure((1, 0), 2)
        assert 3 * v == TensorVec.pure((1, 0), 6)
        assert (0 * v).is_zero()

    def test_json_roundtrip(self, rnd):
        v = random_vec(rnd, 3, 2)
        data = v.to_json()
        assert TensorVec.from_json(data) == v
        idxs = [tuple(t["idx"]) for t in data["terms"]]
        assert idxs == sorted(idxs)
