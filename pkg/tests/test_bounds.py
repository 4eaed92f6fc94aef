import math
from fractions import Fraction

import pytest

from nanoread.balls import rho_geq, sticky_ball
from nanoread.bounds import (
    bound_report,
    expected_runs,
    packing_chain,
    redundancy_lower_bound,
    tail_count,
    weighted_sum,
)
from nanoread.oracle import all_words


class TestRedundancyLowerBound:
    def test_domain(self):
        with pytest.raises(ValueError):
            redundancy_lower_bound(4, 2)  # n = 2 * window
        with pytest.raises(ValueError):
            redundancy_lower_bound(10, 1)

    def test_asymptote(self):
        # value approaches log2(n) - window from below as n grows
        for n in (2**10, 2**20):
            drift = redundancy_lower_bound(n, 2) - (math.log2(n) - 2)
            assert -0.1 < drift < 0

    def test_monotone_in_n(self):
        prev = -math.inf
        for n in range(8, 2**20, 9973):
            val = redundancy_lower_bound(n, 2)
            assert val > prev
            prev = val


class TestWeightedSum:
    def test_no_long_runs_counts_everything(self):
        # window exceeding n-1 gives every output word weight 1
        assert weighted_sum(4, 5) == Fraction(8)
        assert weighted_sum(1, 2) == Fraction(1)

    def test_direct_enumeration_agrees(self):
        # independent per-word summation over the output space
        for n, w in ((5, 2), (7, 2), (6, 3)):
            direct = Fraction(0)
            for y in all_words(n - 1):
                r = rho_geq(y, w)
                direct += Fraction(1, r) if r else Fraction(1)
            assert weighted_sum(n, w) == direct

    def test_known_value(self):
        assert weighted_sum(5, 2) == Fraction(15)
        assert weighted_sum(7, 2) == Fraction(143, 3)

    def test_hyperedge_weight_at_least_one(self):
        # the weight assignment is feasible: every nonempty error ball
        # carries total weight >= 1
        for n, w in ((6, 2), (7, 3)):
            for x in all_words(n):
                ball = sticky_ball(x, w)
                if not ball:
                    continue
                total = Fraction(0)
                for y in ball:
                    r = rho_geq(y, w)
                    total += Fraction(1, r) if r else Fraction(1)
                assert total >= 1


class TestTailCount:
    def test_direct_enumeration_agrees(self):
        for n, a in ((8, 2), (9, 1), (10, 3)):
            cutoff = Fraction(n - 2 * a + 4, 2 ** (a + 1))
            direct = sum(1 for x in all_words(n) if rho_geq(x, a) < cutoff)
            assert tail_count(n, a) == direct

    def test_inequality(self):
        for n in range(1, 15):
            for a in (1, 2, 3):
                if a > n:
                    continue
                bound = (1 << n) * math.exp(-n / 2 ** (2 * a + 1))
                assert tail_count(n, a) <= bound + 1e-9

    def test_degenerate_threshold(self):
        # a large enough that the cutoff is non-positive: nothing counted
        assert tail_count(4, 4) == 0


class TestExpectedRuns:
    def test_formula_instantiation(self):
        assert expected_runs(6, 1) == Fraction(7, 2)
        assert expected_runs(6, 3) == Fraction(5, 8)

    def test_domain(self):
        with pytest.raises(ValueError):
            expected_runs(4, 5)
        with pytest.raises(ValueError):
            expected_runs(4, 0)

    def test_matches_exhaustive_average(self):
        for n in range(1, 13):
            for a in range(1, n + 1):
                total = sum(rho_geq(x, a) for x in all_words(n))
                assert expected_runs(n, a) == Fraction(total, 1 << n)


class TestPackingChain:
    def test_terms_ordered(self):
        for n in (6, 8, 10, 12):
            for w in (2, 3):
                ws, split, closed = packing_chain(n, w)
                assert ws <= split
                assert float(split) <= closed + 1e-9


class TestBoundReport:
    def test_small_n_all_fields(self):
        rep = bound_report(8, 2)
        assert rep.lower_bound_bits is not None
        assert rep.weighted_sum is not None
        assert rep.tail_count is not None
        assert rep.expected_runs is not None

    def test_lower_bound_absent_at_boundary(self):
        rep = bound_report(4, 2)
        assert rep.lower_bound_bits is None
        assert rep.weighted_sum is not None

    def test_serializes_flat(self):
        d = bound_report(8, 2).to_dict()
        assert d["n"] == 8 and d["window"] == 2
        assert isinstance(d["weighted_sum"], str)
