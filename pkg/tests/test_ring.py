"""Exact-arithmetic base layer: Laurent polynomials, fractions, q-combinatorics."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidrep.ring import (InexactDivisionError, LaurentPoly, PoleError,
                           RatFunc, ZeroSubstitutionError, qbinom,
                           qfactorial, qint, specialize)

from conftest import random_poly

Q = LaurentPoly.monomial(1, 0)
QINV = LaurentPoly.monomial(-1, 0)
S = LaurentPoly.monomial(0, 1)
SINV = LaurentPoly.monomial(0, -1)


def poly_strategy():
    term = st.tuples(
        st.tuples(st.integers(-4, 4), st.integers(-4, 4)),
        st.integers(-8, 8))
    return st.lists(term, max_size=5).map(LaurentPoly)


class TestLaurentArithmetic:
    def test_additive_cancellation(self):
        assert (Q + S) + (-Q) == S

    def test_difference_of_squares(self):
        assert (Q - QINV) * (Q + QINV) == Q ** 2 - QINV ** 2

    def test_zero_annihilates(self, rnd):
        for _ in range(20):
            p = random_poly(rnd)
            assert (LaurentPoly.zero() * p).is_zero()

    def test_canonical_form_drops_zeros(self):
        p = LaurentPoly({(0, 0): 1, (1, 1): 0})
        assert p.terms == {(0, 0): 1}
        assert (p - p).terms == {}

    @given(poly_strategy(), poly_strategy(), poly_strategy())
    def test_distributivity(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(poly_strategy(), poly_strategy())
    def test_commutativity(self, a, b):
        assert a * b == b * a
        assert a + b == b + a

    @given(poly_strategy(), poly_strategy(), poly_strategy())
    def test_associativity(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    def test_randomized_ring_axioms_bulk(self, rnd):
        for _ in range(1000):
            a, b, c = (random_poly(rnd) for _ in range(3))
            assert a * (b + c) == a * b + a * c

    def test_int_coercion(self):
        assert Q + 1 == LaurentPoly({(1, 0): 1, (0, 0): 1})
        assert 2 * S == LaurentPoly({(0, 1): 2})
        assert 1 - Q == LaurentPoly({(0, 0): 1, (1, 0): -1})

    def test_pow(self):
        assert Q ** 0 == LaurentPoly.one()
        assert (Q + S) ** 2 == Q * Q + 2 * Q * S + S * S

    def test_str_ordering(self):
        p = S + Q ** 2 - 3
        assert str(p) == "-3 + s + q^2"


class TestDivexact:
    def test_monomial_division(self):
        assert (Q * S).divexact(S) == Q

    def test_exact(self):
        a = (Q - S) * (Q + S) * (1 + Q * S)
        assert a.divexact(Q + S) == (Q - S) * (1 + Q * S)

    def test_laurent_shifts(self):
        a = QINV - SINV
        b = Q - S  # a = -(q s)^{-1} (q - s)... check divisibility
        q = a.divexact(b)
        assert q * b == a

    def test_inexact_raises(self):
        with pytest.raises(InexactDivisionError):
            (Q + 1).divexact(S + 1)
        with pytest.raises(InexactDivisionError):
            (2 * Q).divexact(3 * Q + 3 * S)

    @given(poly_strategy(), poly_strategy())
    def test_product_roundtrip(self, a, b):
        if a.is_zero() or b.is_zero():
            return
        assert (a * b).divexact(b) == a


class TestQCombinatorics:
    def test_qint_base_cases(self):
        assert qint(0).is_zero()
        assert qint(1).is_one()
        assert qint(2) == Q + QINV

    def test_qint_3_expansion(self):
        # independent route: (q^3 - q^-3) / (q - q^-1)
        oracle = (Q ** 3 - QINV ** 3).divexact(Q - QINV)
        assert qint(3) == oracle
        assert qint(3) == LaurentPoly({(2, 0): 1, (0, 0): 1, (-2, 0): 1})

    def test_qint_negative_rejected(self):
        with pytest.raises(ValueError):
            qint(-1)

    def test_qbinom_edges(self):
        for n in range(8):
            assert qbinom(n, 0).is_one()
            assert qbinom(n, n).is_one()
        assert qbinom(2, 1) == qint(2)

    def test_qbinom_4_2(self):
        expected = LaurentPoly({(4, 0): 1, (2, 0): 1, (0, 0): 2,
                                (-2, 0): 1, (-4, 0): 1})
        assert qbinom(4, 2) == expected
        # independent multiply-out of [4][3] / ([2][1])
        assert qbinom(4, 2) == (qint(4) * qint(3)).divexact(qint(2) * qint(1))

    def test_qbinom_range_check(self):
        with pytest.raises(ValueError):
            qbinom(3, 4)
        with pytest.raises(ValueError):
            qbinom(3, -1)

    def test_symmetry_and_pascal(self):
        for n in range(13):
            for j in range(n + 1):
                assert qbinom(n, j) == qbinom(n, n - j)
                if 0 < n:
                    lhs = qbinom(n, j)
                    rhs = LaurentPoly.zero()
                    if j <= n - 1:
                        rhs = rhs + LaurentPoly.monomial(j, 0) * qbinom(n - 1, j)
                    if 1 <= j:
                        rhs = rhs + LaurentPoly.monomial(j - n, 0) * qbinom(n - 1, j - 1)
                    assert lhs == rhs

    def test_pascal_oracle_matches_factorial_route(self):
        # build the triangle bottom-up without any division
        triangle = {(0, 0): LaurentPoly.one()}
        for n in range(1, 10):
            for j in range(n + 1):
                acc = LaurentPoly.zero()
                if j <= n - 1:
                    acc = acc + LaurentPoly.monomial(j, 0) * triangle[(n - 1, j)]
                if 1 <= j:
                    acc = acc + LaurentPoly.monomial(j - n, 0) * triangle[(n - 1, j - 1)]
                triangle[(n, j)] = acc
                assert acc == qbinom(n, j)

    def test_qfactorial(self):
        assert qfactorial(0).is_one()
        assert qfactorial(3) == qint(3) * qint(2)


class TestSpecialize:
    def test_simple_values(self):
        assert specialize(Q * SINV, 2, 3) == Fraction(2, 3)
        assert specialize(qint(2), 2, 7) == Fraction(5, 2)
        assert specialize(S - SINV, 5, 1) == 0

    def test_zero_point_rejected(self):
        with pytest.raises(ZeroSubstitutionError):
            specialize(Q, 0, 1)
        with pytest.raises(ZeroSubstitutionError):
            specialize(Q, 1, 0)

    def test_pole_detected(self):
        r = RatFunc(LaurentPoly.one(), S - SINV)
        with pytest.raises(PoleError):
            specialize(r, 2, 1)
        assert specialize(r, 2, 2) == Fraction(2, 3)

    def test_ring_homomorphism(self, rnd):
        for _ in range(50):
            a, b = random_poly(rnd), random_poly(rnd)
            va = specialize(a, Fraction(3, 2), Fraction(-5, 3))
            vb = specialize(b, Fraction(3, 2), Fraction(-5, 3))
            assert specialize(a * b, Fraction(3, 2), Fraction(-5, 3)) == va * vb
            assert specialize(a + b, Fraction(3, 2), Fraction(-5, 3)) == va + vb


class TestRatFunc:
    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            RatFunc(Q, LaurentPoly.zero())

    def test_cross_multiplication_equality(self):
        a = RatFunc(Q * (S + 1), S * (S + 1))
        b = RatFunc(Q, S)
        assert a == b

    def test_collapse_to_poly(self):
        r = RatFunc((Q + S) * (Q - S), Q + S)
        assert r.den.is_one()
        assert r.num == Q - S
        assert r.to_poly() == Q - S

    def test_non_integral(self):
        r = RatFunc(Q, S + 1)
        assert not r.is_integral()
        with pytest.raises(InexactDivisionError):
            r.to_poly()

    def test_arithmetic(self):
        half = RatFunc(LaurentPoly.one(), Q + QINV)
        assert half + half == RatFunc(2, Q + QINV)
        assert half * (Q + QINV) == 1
        assert (half - half).is_zero()
        assert 1 / half == Q + QINV

    def test_field_axioms_random(self, rnd):
        for _ in range(40):
            num1, num2 = random_poly(rnd), random_poly(rnd)
            den1, den2 = random_poly(rnd), random_poly(rnd)
            if den1.is_zero() or den2.is_zero():
                continue
            a, b = RatFunc(num1, den1), RatFunc(num2, den2)
            assert a + b == b + a
            assert a * b == b * a
            assert (a + b) - b == a

    def test_mixing_with_poly(self):
        r = RatFunc(Q, S)
        assert r * S == Q
        assert r + RatFunc(LaurentPoly.zero()) == r


class TestJson:
    def test_poly_roundtrip(self, rnd):
        for _ in range(20):
            p = random_poly(rnd)
            data = p.to_json()
            assert LaurentPoly.from_json(data) == p
            # schema: ascending exponents, decimal-string coefficients
            keys = [(e0, e1) for e0, e1, _ in data["terms"]]
            assert keys == sorted(keys)
            assert all(isinstance(c, str) for _, _, c in data["terms"])

    def test_ratfunc_roundtrip(self):
        r = RatFunc(Q + 1, S + 2)
        assert RatFunc.from_json(r.to_json()) == r
        assert set(r.to_json()) == {"num", "den"}
