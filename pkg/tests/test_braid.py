"""Braiding operator, braid words, and the relation/equivariance checkers."""

import pytest

from braidrep.braid import (BraidWord, apply_letter, apply_word,
                            check_braid_relations, check_equivariance,
                            check_yang_baxter, rmatrix_pair,
                            rmatrix_pair_inverse, sigma_matrix)
from braidrep.report import all_passed
from braidrep.ring import LaurentPoly, RatFunc
from braidrep.verma import TensorVec, weight_basis

from conftest import random_poly

S = LaurentPoly.monomial(0, 1)
SINV = LaurentPoly.monomial(0, -1)


class TestBraidWord:
    def test_parse_formats(self):
        assert BraidWord.parse(3, "1 -2 1").letters == (1, -2, 1)
        assert BraidWord.parse(3, "1,-2,1").letters == (1, -2, 1)
        assert BraidWord.parse(4, "").letters == ()

    def test_validation(self):
        with pytest.raises(ValueError):
            BraidWord(3, (3,))
        with pytest.raises(ValueError):
            BraidWord(3, (0,))
        with pytest.raises(ValueError):
            BraidWord(1, ())

    def test_inverse(self):
        w = BraidWord(4, (1, -2, 3))
        assert w.inverse().letters == (-3, 2, -1)


class TestRMatrix:
    def test_lowest_values(self):
        assert rmatrix_pair(0, 0) == TensorVec.pure((0, 0))
        assert rmatrix_pair(0, 1) == SINV * TensorVec.pure((1, 0))
        expected = SINV * TensorVec.pure((0, 1)) \
            + (1 - SINV * SINV) * TensorVec.pure((1, 0))
        assert rmatrix_pair(1, 0) == expected

    def test_degree_two_cross_terms(self):
        # components on v_1 (x) v_1 of the degree-2 block
        q2 = LaurentPoly.monomial(2, 0)
        assert rmatrix_pair(2, 0).coeff((1, 1)) == q2 * (SINV - SINV ** 3)
        assert rmatrix_pair(1, 1).coeff((1, 1)) == q2 * SINV * SINV
        assert rmatrix_pair(0, 2).coeff((1, 1)).is_zero()

    def test_weight_preserved(self):
        for i in range(4):
            for j in range(4):
                out = rmatrix_pair(i, j)
                assert out.weight() == i + j

    def test_integral_coefficients(self):
        for i in range(5):
            for j in range(5):
                assert all(isinstance(c, LaurentPoly)
                           for c in rmatrix_pair(i, j).coeffs.values())


class TestRMatrixInverse:
    def test_degree_zero_identity(self):
        assert rmatrix_pair_inverse(0, 0) == TensorVec.pure((0, 0))

    def test_hand_inverted_block(self):
        # inverting [[0, s^-1], [s^-1, 1 - s^-2]] on the degree-1 block
        assert rmatrix_pair_inverse(1, 0) == S * TensorVec.pure((0, 1))
        expected = (1 - S * S) * TensorVec.pure((0, 1)) + S * TensorVec.pure((1, 0))
        assert rmatrix_pair_inverse(0, 1) == expected

    @pytest.mark.parametrize("i,j", [(0, 0), (1, 0), (1, 1), (2, 1), (0, 3)])
    def test_roundtrip_both_ways(self, i, j):
        v = TensorVec.pure((i, j))
        w = BraidWord(2, (1, -1))
        assert apply_word(w, v) == v
        w = BraidWord(2, (-1, 1))
        assert apply_word(w, v) == v

    def test_integrality(self):
        for i in range(4):
            for j in range(4):
                out = rmatrix_pair_inverse(i, j)
                assert all(isinstance(c, LaurentPoly)
                           for c in out.coeffs.values())


class TestApplyWord:
    def test_identity_word(self, rnd):
        for idx in weight_basis(3, 2):
            v = TensorVec.pure(idx, random_poly(rnd, max_terms=2))
            assert apply_word(BraidWord(3, ()), v) == v

    def test_third_strand_untouched(self):
        v = TensorVec.pure((0, 1, 0))
        assert apply_word(BraidWord(3, (1,)), v) == SINV * TensorVec.pure((1, 0, 0))

    def test_strand_mismatch(self):
        with pytest.raises(ValueError):
            apply_word(BraidWord(3, (1,)), TensorVec.pure((0, 1)))

    def test_weight_preservation(self, rnd):
        for _ in range(10):
            idxs = weight_basis(3, 3)
            v = TensorVec(3, {idx: random_poly(rnd, max_terms=2)
                              for idx in rnd.sample(idxs, 3)})
            if v.is_zero():
                continue
            out = apply_word(BraidWord(3, (1, 2, -1)), v)
            assert out.weight() == 3

    def test_random_word_roundtrip(self, rnd):
        for _ in range(12):
            length = rnd.randint(1, 6)
            letters = tuple(rnd.choice((1, -1, 2, -2)) for _ in range(length))
            w = BraidWord(3, letters)
            idxs = weight_basis(3, rnd.randint(0, 3))
            v = TensorVec(3, {idx: random_poly(rnd, max_terms=2)
                              for idx in rnd.sample(idxs, min(3, len(idxs)))})
            assert apply_word(w.inverse(), apply_word(w, v)) == v

    def test_integrality_on_integral_input(self, rnd):
        # mixed positive and negative letters keep Laurent coefficients
        v = TensorVec.pure((2, 1, 0))
        out = apply_word(BraidWord(3, (1, -2, 2, -1, 1)), v)
        assert all(isinstance(c, LaurentPoly) for c in out.coeffs.values())

    def test_ratfunc_coefficients_supported(self):
        half = RatFunc(LaurentPoly.one(), LaurentPoly.monomial(0, 1) + 1)
        v = half * TensorVec.pure((1, 0))
        out = apply_word(BraidWord(2, (1,)), v)
        assert out == half * rmatrix_pair(1, 0)


class TestRelationChecks:
    @pytest.mark.parametrize("n,l", [(3, 2), (4, 2)])
    def test_braid_relations_pass(self, n, l):
        reports = check_braid_relations(n, l)
        assert all_passed(reports)

    def test_commuting_pair_present(self):
        reports = check_braid_relations(4, 2)
        kinds = {(r.check, tuple(sorted(r.params.items()))) for r in reports}
        assert ("braid-commute",
                tuple(sorted({"n": 4, "l": 2, "i": 1, "j": 3}.items()))) in kinds

    def test_perturbed_r_fails(self):
        reports = check_braid_relations(3, 2, perturb=True)
        assert not all_passed(reports)
        bad = [r for r in reports if not r.passed]
        assert bad[0].witness is not None  # pinpoints (row, col, difference)

    @pytest.mark.parametrize("l", range(5))
    def test_yang_baxter(self, l):
        assert all_passed(check_yang_baxter(l))

    def test_yang_baxter_perturbed(self):
        assert not all_passed(check_yang_baxter(2, perturb=True))

    @pytest.mark.parametrize("n,l", [(3, 2), (4, 3)])
    def test_equivariance(self, n, l):
        reports = check_equivariance(n, l)
        assert all_passed(reports)
        assert {r.params["x"] for r in reports} == {"K", "E", "F1"}


class TestSigmaMatrix:
    def test_columns_are_images(self):
        basis = weight_basis(2, 2)
        mat = sigma_matrix(2, 2, 1)
        for c, idx in enumerate(basis):
            image = apply_letter(TensorVec.pure(idx), 1)
            for r, target in enumerate(basis):
                assert mat[r][c] == image.coeff(target)
