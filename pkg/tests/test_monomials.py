import random

import pytest

from cyclebetti.monomials import (AmbientMismatchError, Monomial, MonomialIdeal,
                                  minimalize, one, parse_monomial, variable)


def mono(*exps):
    return Monomial(exps)


def ideal(*gens_exps):
    return MonomialIdeal([Monomial(e) for e in gens_exps])


class TestMonomial:
    def test_divides(self):
        assert mono(1, 0).divides(mono(1, 1))
        assert not mono(2, 0).divides(mono(1, 1))
        assert mono(0, 0).divides(mono(1, 0))

    def test_divides_ambient_mismatch(self):
        with pytest.raises(AmbientMismatchError):
            mono(1, 0).divides(mono(1, 0, 0))

    def test_lcm(self):
        assert mono(1, 1, 0).lcm(mono(0, 1, 1)) == mono(1, 1, 1)
        m = mono(2, 0, 1)
        assert m.lcm(m) == m
        assert mono(2, 0).lcm(mono(1, 1)) == mono(2, 1)

    def test_mul_pow_degree(self):
        assert mono(1, 2) * mono(0, 1) == mono(1, 3)
        assert mono(1, 2) ** 3 == mono(3, 6)
        assert mono(1, 2).degree == 3
        assert mono(0, 0).is_unit()

    def test_rejects_bad_exponents(self):
        with pytest.raises(ValueError):
            Monomial((-1, 0))
        with pytest.raises(ValueError):
            Monomial((2**31 + 1, 0))

    def test_text_roundtrip(self):
        for m in (mono(2, 0, 1), mono(0, 0, 0), mono(1, 1, 1), variable(2, 4)):
            assert parse_monomial(str(m), m.ambient) == m
        assert str(mono(2, 0, 1)) == "x1^2*x3"
        assert str(one(3)) == "1"


class TestMinimalize:
    def test_drops_multiples(self):
        assert ideal((1, 0), (1, 1)) == ideal((1, 0))

    def test_keeps_incomparable(self):
        got = ideal((1, 1, 0), (0, 1, 1), (1, 1, 1))
        assert got == ideal((1, 1, 0), (0, 1, 1))

    def test_empty_is_zero(self):
        assert MonomialIdeal.zero(3).is_zero()
        assert minimalize([]) == ()

    def test_idempotent_no_divisibility_pair(self):
        rng = random.Random(7)
        for _ in range(50):
            gens = [Monomial(tuple(rng.randint(0, 3) for _ in range(4)))
                    for _ in range(rng.randint(1, 12))]
            first = minimalize(gens)
            assert minimalize(first) == first
            for a in first:
                for b in first:
                    assert a == b or not a.divides(b)


class TestIdealAlgebra:
    def test_product(self):
        assert ideal((1, 0)) * ideal((0, 1)) == ideal((1, 1))
        I = ideal((1, 1, 0), (0, 1, 1))
        assert I * MonomialIdeal.unit(3) == I
        sq = ideal((1, 0)) + ideal((0, 1))
        assert sq * sq == ideal((2, 0), (1, 1), (0, 2))

    def test_power(self):
        I = ideal((1, 0), (0, 1))
        assert (I ** 0).is_unit()
        assert I ** 1 == I
        assert I ** 2 == ideal((2, 0), (1, 1), (0, 2))
        assert (MonomialIdeal.zero(2) ** 0).is_unit()

    def test_sum(self):
        assert ideal((1, 0)) + ideal((1, 1)) == ideal((1, 0))
        I = ideal((1, 1, 0), (0, 1, 1))
        assert I + MonomialIdeal.zero(3) == I

    def test_sum_rebuilds_long_path_ideal(self):
        # (x1x2x3) plus x4 times the triangle ideal gives all four 3-paths
        f1 = mono(1, 1, 1, 0)
        triangle = ideal((1, 1, 0, 0), (0, 1, 1, 0), (1, 0, 1, 0))
        got = MonomialIdeal([f1], 4) + variable(4, 4) * triangle
        assert got == ideal((1, 1, 1, 0), (1, 1, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1))
        assert len(got) == 4

    def test_intersection(self):
        assert (ideal((1, 0)) & ideal((0, 1))) == ideal((1, 1))
        I = ideal((1, 1, 0), (0, 1, 1))
        assert (I & I) == I

    def test_intersection_scaled_instance(self):
        # (x1) meet x3*(x1,x2) is x3*(x1), in three variables
        J = ideal((1, 0, 0))
        x3K = ideal((1, 0, 1), (0, 1, 1))
        assert (J & x3K) == ideal((1, 0, 1))

    def test_equality_is_canonical(self):
        assert ideal((1, 0), (1, 1)) == ideal((1, 0))
        assert ideal((1, 0)) != ideal((0, 1))
        assert MonomialIdeal.unit(2) != MonomialIdeal.zero(2)

    def test_ambient_mismatch(self):
        with pytest.raises(AmbientMismatchError):
            ideal((1, 0)) * ideal((1, 0, 0))
        with pytest.raises(AmbientMismatchError):
            ideal((1, 0)) + ideal((1, 0, 0))

    def test_parse_text_form(self):
        got = MonomialIdeal.parse("(x1^2*x3, x2)")
        assert got == ideal((2, 0, 1), (0, 1, 0))
        assert MonomialIdeal.parse("(1)", 2).is_unit()
        assert MonomialIdeal.parse("()", 2).is_zero()
        assert MonomialIdeal.parse(str(got), 3) == got


def random_ideal(rng, ambient=4, max_exp=3, max_gens=6):
    count = rng.randint(1, max_gens)
    return MonomialIdeal(
        [Monomial(tuple(rng.randint(0, max_exp) for _ in range(ambient)))
         for _ in range(count)], ambient)


class TestAlgebraProperties:
    def test_product_commutative_associative(self):
        rng = random.Random(11)
        for _ in range(30):
            a, b, c = (random_ideal(rng) for _ in range(3))
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)

    def test_power_additivity(self):
        rng = random.Random(13)
        for _ in range(10):
            I = random_ideal(rng, max_exp=2, max_gens=4)
            for u in range(3):
                for v in range(3):
                    assert I ** (u + v) == (I ** u) * (I ** v)

    def test_intersection_contained_in_both(self):
        rng = random.Random(17)
        for _ in range(30):
            a, b = random_ideal(rng), random_ideal(rng)
            meet = a & b
            assert meet.is_subideal_of(a)
            assert meet.is_subideal_of(b)


class TestScaledIntersectionIdentity:
    """(xn K)^s J^t meet (xn K)^(s+1) (J + xn K)^(t-1) equals xn (xn K)^s J^t,
    whenever J is inside K and xn avoids the common support."""

    @pytest.mark.parametrize("j_gens,k_gens,n", [
        (((1, 0, 0),), ((1, 0, 0), (0, 1, 0)), 3),             # J=(x1), K=(x1,x2)
        (((1, 1, 0, 0),), ((1, 1, 0, 0), (0, 1, 1, 0)), 4),    # edge inside path
        (((1, 0, 0),), ((1, 0, 0), (0, 0, 1)), 3),             # xn in supp(K) only
        (((2, 0, 0), (1, 1, 0)), ((1, 0, 0), (0, 1, 0)), 3),
    ])
    def test_identity(self, j_gens, k_gens, n):
        J = ideal(*j_gens)
        K = ideal(*k_gens)
        assert J.is_subideal_of(K)
        xn = variable(n, n)
        xnK = xn * K
        I = J + xnK
        for s in (0, 1, 2):
            for t in (1, 2, 3):
                left = (xnK ** s * J ** t) & (xnK ** (s + 1) * I ** (t - 1))
                assert left == xn * (xnK ** s * J ** t), (s, t)
