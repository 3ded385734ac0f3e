import math
import random

import pytest

from cyclebetti.families import long_path_ideal, mixed_power
from cyclebetti.formulas import (binomial, long_path_betti, long_path_pd_reg,
                                 reduced_power_betti, reduced_power_pd_reg,
                                 series_betti, short_path_betti,
                                 short_path_betti_parts, short_path_pd_reg)
from cyclebetti.oracle import graded_betti


class TestBinomial:
    def test_plain(self):
        assert binomial(5, 2) == 10
        assert binomial(0, 0) == 1

    def test_zero_conventions(self):
        assert binomial(3, -1) == 0
        assert binomial(2, 5) == 0
        assert binomial(-1, 2) == 0
        assert binomial(-1, 0) == 0
        assert binomial(-3, -3) == 0

    def test_exact_large(self):
        assert binomial(103, 26) == math.comb(103, 26)
        assert binomial(200, 100) == math.comb(200, 100)


class TestLongPathBetti:
    def test_triangle_values(self):
        assert long_path_betti(3, 1, 0) == 3
        assert long_path_betti(3, 1, 1) == 2

    def test_vanishing_beyond_pd(self):
        for n in range(2, 8):
            for t in range(1, 5):
                for i in range(min(n - 1, t) + 1, n + t + 2):
                    assert long_path_betti(n, t, i) == 0

    def test_matches_oracle_small(self):
        for n in (3, 4):
            for t in (1, 2):
                totals = graded_betti(long_path_ideal(n) ** t).totals()
                want = [long_path_betti(n, t, i) for i in range(len(totals))]
                assert totals == want


class TestReducedPowerBetti:
    def test_square_cycle(self):
        assert [reduced_power_betti(4, 1, i) for i in range(4)] == [3, 2, 0, 0]

    def test_zeroth_power(self):
        assert reduced_power_betti(6, 0, 0) == 1
        assert reduced_power_betti(6, 0, 1) == 0

    def test_matches_oracle_small(self):
        from cyclebetti.families import reduced_short_path_ideal
        for n in (4, 5, 6):
            for s in (1, 2):
                totals = graded_betti(reduced_short_path_ideal(n) ** s).totals()
                want = [reduced_power_betti(n, s, i) for i in range(len(totals))]
                assert totals == want, (n, s)


class TestShortPathClosedForm:
    def test_whole_ring(self):
        for s in range(4):
            for t in range(4):
                for i in range(4):
                    want = 1 if i == 0 else 0
                    assert short_path_betti(2, s, t, i) == want

    def test_parts_exposed(self):
        plus, minus, const = short_path_betti_parts(3, 1, 1, 0)
        assert (plus, minus, const) == (3, 0, 2)
        assert short_path_betti(3, 1, 1, 0) == 5

    def test_n3_quadratic_forms(self):
        # the three homological degrees at n=3 are explicit quadratics
        for s in range(6):
            for t in range(1, 6):
                v0 = (t + 1) * (s + 1) + t * (t + 1) // 2
                v1 = t * (t + 1) + 2 * s * t + s + t
                v2 = t * (t + 1) // 2 + s * t
                assert short_path_betti(3, s, t, 0) == v0, (s, t)
                assert short_path_betti(3, s, t, 1) == v1, (s, t)
                assert short_path_betti(3, s, t, 2) == v2, (s, t)
                assert short_path_betti(3, s, t, 3) == 0, (s, t)

    def test_n3_against_oracle(self):
        for s in range(3):
            for t in range(3):
                if s == t == 0:
                    continue
                totals = graded_betti(mixed_power(3, s, t)).totals()
                want = [short_path_betti(3, s, t, i) for i in range(len(totals))]
                assert totals == want, (s, t)

    def test_example_row(self):
        got = [short_path_betti(27, 0, 4, i) for i in range(9)]
        assert got == [27405, 98658, 136332, 89181, 27405, 3654, 378, 27, 1]
        assert short_path_betti(27, 0, 4, 9) == 0

    def test_reduces_to_reduced_power_at_t0(self):
        for n in range(2, 9):
            for s in range(6):
                for i in range(n + 2):
                    assert short_path_betti(n, s, 0, i) == \
                        reduced_power_betti(n, s, i), (n, s, i)

    def test_negative_parameters_vanish(self):
        assert short_path_betti(5, 1, 2, -1) == 0
        assert short_path_betti_parts(5, 1, 2, -3) == (0, 0, 0)


def displayed_power_betti(n, t, i):
    """The two displayed single-power formulas (odd/even), written directly."""
    k = n // 2
    first = sum(math.comb(n, i - 2 * j) * math.comb(n + t - 1 - i + j, n - 1)
                for j in range(i // 2 + 1)
                if 0 <= i - 2 * j <= n and n + t - 1 - i + j >= n - 1)
    if n % 2:
        second = sum(math.comb(n, i - 1 - 2 * j) * math.comb(t + k - 1 - j, n - 1)
                     for j in range((i - 1) // 2 + 1)
                     if 0 <= i - 1 - 2 * j <= n and t + k - 1 - j >= n - 1)
    else:
        second = sum(math.comb(n, i - 2 * j) * math.comb(t + k - 1 - j, n - 1)
                     for j in range(i // 2 + 1)
                     if 0 <= i - 2 * j <= n and t + k - 1 - j >= n - 1)
    return first - second


class TestDisplayedSinglePowerFormulas:
    def test_closed_form_specializes(self):
        for n in range(2, 15):
            for t in range(9):
                for i in range(2 * n + 2):
                    assert short_path_betti(n, 0, t, i) == \
                        displayed_power_betti(n, t, i), (n, t, i)


class TestPdReg:
    def test_long_power(self):
        assert long_path_pd_reg(5, 2) == (2, 8)

    def test_short_power(self):
        assert short_path_pd_reg(5, 0, 2) == (4, 6)
        assert short_path_pd_reg(27, 0, 4) == (8, 100)
        assert short_path_pd_reg(6, 0, 2) == (4, 8)

    def test_reduced_power(self):
        assert reduced_power_pd_reg(4, 1) == (1, 2)
        assert reduced_power_pd_reg(6, 9) == (4, 36)

    def test_long_power_against_oracle(self):
        for n in (3, 4, 5):
            for t in (1, 2):
                table = graded_betti(long_path_ideal(n) ** t)
                assert (table.pd(), table.reg()) == long_path_pd_reg(n, t)

    def test_parity_against_oracle(self):
        for n in (4, 5):
            for s in range(2):
                for t in (1, 2):
                    table = graded_betti(mixed_power(n, s, t))
                    assert (table.pd(), table.reg()) == short_path_pd_reg(n, s, t)


class TestSeries:
    def test_two_variable_column(self):
        for t in range(8):
            assert series_betti(2, t, 0) == t + 1
            assert series_betti(2, t, 1) == t
            assert series_betti(2, t, 2) == 0

    def test_triangle_syzygies(self):
        assert series_betti(3, 1, 1) == 2

    def test_matches_closed_form(self):
        for n in range(2, 9):
            for t in range(1, 7):
                for i in range(n + 2):
                    assert series_betti(n, t, i) == long_path_betti(n, t, i), (n, t, i)

    def test_three_term_recurrence(self):
        def coeff(n, t, i):
            return series_betti(n, t, i) if t >= 0 and i >= 0 else 0

        for n in range(3, 9):
            for t in range(8):
                for i in range(n + 2):
                    assert coeff(n, t, i) == (coeff(n, t - 1, i)
                                              + coeff(n - 1, t, i)
                                              + coeff(n - 1, t - 1, i - 1)), (n, t, i)


class TestBinomialIdentities:
    def test_seeded_sweep(self):
        rng = random.Random(77)
        for _ in range(1000):
            n, m, s = rng.randint(2, 60), rng.randint(0, 60), rng.randint(0, 60)
            assert binomial(n + 1, s + 1) == binomial(n, s) + binomial(n, s + 1)
            assert (binomial(n - 2, m - 2) + 2 * binomial(n - 2, m - 1)
                    + binomial(n - 2, m)) == binomial(n, m)
            assert sum(binomial(n + j, m) for j in range(s + 1)) == \
                binomial(n + s + 1, m + 1) - binomial(n, m + 1)
            assert sum(j * binomial(n + j, m) for j in range(s + 1)) == \
                (s * binomial(n + s + 1, m + 1) - binomial(n + s + 1, m + 2)
                 + binomial(n + 1, m + 2))
