import random

import pytest

from cyclebetti.families import (corner_power, mixed_power, support_envelope)
from cyclebetti.formulas import (long_path_betti, reduced_power_betti,
                                 short_path_betti, short_path_pd_reg)
from cyclebetti.oracle import graded_betti
from cyclebetti.recursion import (clear_caches, composed_support, corner_rec,
                                  exchange_residual, long_path_rec, mixed_rec,
                                  shift_residual, short_path_pd_rec)


class TestLongPathRec:
    def test_two_variable_base(self):
        assert long_path_rec(2, 0, 3, 0) == 4
        assert long_path_rec(2, 0, 3, 1) == 3
        assert long_path_rec(2, 0, 3, 2) == 0

    def test_triangle_syzygies(self):
        assert long_path_rec(3, 0, 1, 1) == 2

    def test_negative_arguments_vanish(self):
        assert long_path_rec(4, -1, 2, 0) == 0
        assert long_path_rec(4, 0, 2, -1) == 0

    def test_matches_closed_form(self):
        for n in range(2, 11):
            for t in range(1, 9):
                for i in range(n + 2):
                    assert long_path_rec(n, 0, t, i) == \
                        long_path_betti(n, t, i), (n, t, i)

    def test_mixed_product_against_oracle(self):
        # long(n-1)^s * long(n)^t, directly
        from cyclebetti.families import long_path_ideal
        for n in (3, 4):
            for s in (1, 2):
                for t in (1, 2):
                    I = long_path_ideal(n - 1).embed(n) ** s * long_path_ideal(n) ** t
                    totals = graded_betti(I).totals()
                    want = [long_path_rec(n, s, t, i) for i in range(len(totals))]
                    assert totals == want, (n, s, t)


class TestMixedCornerRec:
    def test_small_value(self):
        assert mixed_rec(3, 1, 2, 0) == 9

    def test_corner_single(self):
        for n in (3, 4, 6):
            assert [corner_rec(n, 0, 1, i) for i in range(3)] == [2, 1, 0]

    def test_matches_closed_form(self):
        for n in range(2, 10):
            for t in range(6):
                for i in range(n + 1):
                    assert mixed_rec(n, 0, t, i) == short_path_betti(n, 0, t, i)

    def test_corner_against_oracle(self):
        for n in (3, 4, 5):
            for s in range(2):
                for t in range(1, 3):
                    totals = graded_betti(corner_power(n, s, t)).totals()
                    want = [corner_rec(n, s, t, i) for i in range(len(totals))]
                    assert totals == want, (n, s, t)

    def test_reduces_at_t0(self):
        for n in range(2, 8):
            for s in range(5):
                for i in range(n + 1):
                    assert mixed_rec(n, s, 0, i) == reduced_power_betti(n, s, i)

    def test_memo_transparency(self):
        values = [mixed_rec(6, 2, 2, i) for i in range(7)]
        clear_caches()
        assert [mixed_rec(6, 2, 2, i) for i in range(7)] == values
        clear_caches()
        assert [mixed_rec(6, 2, 2, i) for i in range(7)] == values

    def test_strict_delta_shifts_corner_count(self):
        # the closed-form multiset over-counts the s=0 corner families by one
        # generator; the chain multiset matches the true generator count
        for t in (1, 2, 3):
            assert corner_rec(4, 0, t, 0) == t + 1
            assert corner_rec(4, 0, t, 0, strict_delta=True) == t + 2


class TestComposedSupport:
    def test_base_case(self):
        assert composed_support(0, 1) == {(0, 0): 1}

    def test_marginal_multiplicity(self):
        for total in range(2, 13):
            for t in range(1, total + 1):
                s = total - t
                assert composed_support(s, t)[(total - 2, 1)] == 1, (s, t)

    def test_support_inside_envelope(self):
        for s in range(9):
            for t in range(1, 9):
                support = set(composed_support(s, t))
                assert support <= support_envelope(s, t), (s, t)

    def test_requires_positive_t(self):
        with pytest.raises(ValueError):
            composed_support(2, 0)


class TestResiduals:
    def test_examples(self):
        assert shift_residual(4, 0, 1, "recursion") == 0
        assert exchange_residual(5, 3, 2, 4, "closed") == 0

    def test_hypothesis_enforced(self):
        with pytest.raises(ValueError):
            exchange_residual(5, 1, 1, 2)
        with pytest.raises(ValueError):
            shift_residual(3, 0, 1)

    def test_seeded_sweeps(self):
        rng = random.Random(101)
        for _ in range(120):
            n, s, i = rng.randint(4, 10), rng.randint(0, 5), rng.randint(0, 14)
            assert shift_residual(n, s, i, "recursion") == 0
            assert shift_residual(n + 2, s + 3, i, "closed") == 0
        for _ in range(120):
            n, s, t, i = (rng.randint(4, 10), rng.randint(0, 5),
                          rng.randint(2, 6), rng.randint(0, 18))
            assert exchange_residual(n, s, t, i, "recursion") == 0
            assert exchange_residual(n + 2, s + 3, t, i, "closed") == 0


class TestPdRecursion:
    def test_examples(self):
        assert short_path_pd_rec(5, 0, 2) == 4
        assert short_path_pd_rec(6, 0, 2) == 4
        assert short_path_pd_rec(3, 1, 1) == 2

    def test_matches_closed_and_support(self):
        for n in range(2, 13):
            for total in range(1, 9):
                for t in range(1, total + 1):
                    s = total - t
                    closed = short_path_pd_reg(n, s, t)[0]
                    assert short_path_pd_rec(n, s, t) == closed, (n, s, t)
                    support_pd = max(i for i in range(n + 1)
                                     if short_path_betti(n, s, t, i) != 0)
                    assert support_pd == closed, (n, s, t)


class TestMainIdentity:
    def test_small_grid(self):
        for n in range(2, 10):
            for s in range(5):
                for t in range(5):
                    for i in range(2 * (s + t) + 3):
                        assert mixed_rec(n, s, t, i) == \
                            short_path_betti(n, s, t, i), (n, s, t, i)

    def test_mixed_against_oracle(self):
        for n in (4, 5):
            for s in range(2):
                for t in range(1, 3):
                    totals = graded_betti(mixed_power(n, s, t)).totals()
                    want = [mixed_rec(n, s, t, i) for i in range(len(totals))]
                    assert totals == want, (n, s, t)
