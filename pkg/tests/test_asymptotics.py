"""
Tests pour le module asymptotics.py
Tests des rapports asymptotiques exacts et certifiés
"""

import pytest
import os
import sys
from fractions import Fraction

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from asymptotics import (better_than_mrd_limit, better_than_mrd_ratio, better_than_mrd_series_lower,
                         linkage_anticode_limit, linkage_anticode_ratio, lmrd_anticode_ratio,
                         lmrd_anticode_ratio_infimum, lmrd_anticode_ratio_limit, lmrd_singleton_ratio,
                         lmrd_singleton_ratio_limit, mrd_subclass_bound, q_binomial_limit_gap)
from combinatorics import interval_width
from lower_bounds import best_lower_value
from reports import format_ratio


def contains(interval, value):
    return float(interval.a) <= float(value) <= float(interval.b)


class TestLmrdRatios:
    """Tests des rapports code MRD relevé / bornes supérieures."""

    def test_singleton_limit_single_factor(self):
        """Test (1/2;1/2)_1 = 1/2."""
        assert contains(lmrd_singleton_ratio_limit(2, 2, 4), Fraction(1, 2))

    def test_singleton_limit_two_factors(self):
        """Test (2/3)(8/9) = 16/27."""
        assert contains(lmrd_singleton_ratio_limit(3, 3, 4), Fraction(16, 27))

    def test_singleton_limit_large_k(self):
        assert lmrd_singleton_ratio_limit(2, 60, 4).a > 0.288788

    def test_anticode_limit(self):
        assert lmrd_anticode_ratio_limit(2, 3, 4) == Fraction(21, 32)
        assert lmrd_anticode_ratio_limit(3, 2, 4) == Fraction(8, 9)

    def test_anticode_infimum(self):
        """Test de la minoration 0.577576 pour q = 2."""
        infimum = lmrd_anticode_ratio_infimum(2, 4)
        assert infimum.a > 0.577576
        assert interval_width(infimum) < 1e-12

    @pytest.mark.parametrize("q", [2, 3])
    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_finite_ratios_decrease(self, q, k):
        """Test de la décroissance en v jusqu'à 40, d = 4."""
        singleton = [lmrd_singleton_ratio(q, v, 4, k) for v in range(2 * k, 41)]
        anticode = [lmrd_anticode_ratio(q, v, 4, k) for v in range(2 * k, 41)]
        assert all(a > b for a, b in zip(singleton, singleton[1:]))
        assert all(a > b for a, b in zip(anticode, anticode[1:]))
        limit = lmrd_singleton_ratio_limit(q, k, 4)
        assert float(singleton[-1]) >= float(limit.a)
        assert anticode[-1] > lmrd_anticode_ratio_limit(q, k, 4)

    def test_q_binomial_gap_shrinks(self):
        for q, b in ((2, 2), (2, 3), (3, 2)):
            gaps = [q_binomial_limit_gap(q, a, b) for a in range(1, 31)]
            assert all(x > y for x, y in zip(gaps, gaps[1:]))
            assert gaps[-1] < Fraction(1, 10 ** 8)


class TestLinkageAnticode:
    """Tests du rapport liaison / anticode le long d'une progression."""

    def test_known_instance(self):
        """Test de l'encadrement [0.99963386, 0.99963388]."""
        limit = linkage_anticode_limit(2, 4, 3, 13, 6, 1597245, (333, 381))
        assert limit.a >= 0.99963386
        assert limit.b <= 0.99963388

    def test_zero_second_value(self):
        limit = linkage_anticode_limit(2, 4, 3, 13, 6, 1597245, 0)
        assert contains(limit, Fraction(1597245 * 21, 32 * 2 ** 20))

    def test_finite_ratio_converges(self):
        limit = linkage_anticode_limit(2, 4, 3, 7, 3, 333, 1)
        ratio = linkage_anticode_ratio(2, 4, 3, 7, 3, 10, 333, 1)
        assert abs(float(ratio) - float(limit.a)) < 1e-6


class TestBetterThanMrd:
    """Tests de la comparaison avec la borne MRD."""

    def test_subclass_bound(self):
        assert mrd_subclass_bound(2, 6) == 71
        assert mrd_subclass_bound(2, 19) == 5010762411

    def test_v20(self, default_seeds):
        comparison = better_than_mrd_ratio(2, 20, default_seeds)
        assert comparison.series_ratio == Fraction(comparison.lower * 3, 7 * 2 ** 33)
        assert abs(float(comparison.series_ratio) - 1.3056442377) < 1e-9

    def test_v19(self, default_seeds):
        comparison = better_than_mrd_ratio(2, 19, default_seeds)
        assert comparison.lower == 6542315853
        assert format_ratio(comparison.ratio) == '1.305653'

    def test_limit_q3(self):
        assert better_than_mrd_limit(3) == Fraction(1360, 1323)
        assert better_than_mrd_limit(3) == 1 + Fraction(1, 27) - Fraction(4, 441)

    @pytest.mark.parametrize("v", [12, 13])
    def test_series_lower_q3(self, v, default_seeds):
        assert best_lower_value(3, v, 4, 3, default_seeds) >= better_than_mrd_series_lower(3, v)
        assert better_than_mrd_ratio(3, v, default_seeds).series_ratio >= better_than_mrd_limit(3)
