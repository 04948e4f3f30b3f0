"""
Tests pour le module partial_spreads.py
Tests des bornes pour A_q(v, 2k; k)
"""

import pytest
import os
import sys
from fractions import Fraction

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from partial_spreads import (beutelspacher_lower, divisible_code_lambda_upper, divisible_code_upper,
                             drake_freeman_upper, nastase_sissokho_exact, ps_best_lower, ps_best_upper,
                             ps_lower_upper_ratio, spread_exists, trivial_ps_upper)


class TestSimpleBounds:
    """Tests des bornes élémentaires."""

    def test_spread_exists(self):
        assert spread_exists(2, 6, 3)
        assert not spread_exists(2, 7, 3)

    def test_trivial_bound(self):
        """Test du comptage de points."""
        assert trivial_ps_upper(2, 8, 3) == 36
        assert trivial_ps_upper(2, 7, 3) == 18

    def test_beutelspacher(self):
        """Test de la borne inférieure de Beutelspacher."""
        assert beutelspacher_lower(2, 8, 3) == 33
        assert beutelspacher_lower(2, 7, 3) == 17
        assert beutelspacher_lower(2, 5, 2) == 9

    def test_beutelspacher_preconditions(self):
        with pytest.raises(ValueError):
            beutelspacher_lower(2, 6, 3)
        with pytest.raises(ValueError):
            beutelspacher_lower(2, 4, 3)

    def test_invalid_dimension(self):
        with pytest.raises(ValueError):
            trivial_ps_upper(2, 3, 4)


class TestDrakeFreeman:
    """Tests de la borne de Drake et Freeman."""

    @pytest.mark.parametrize("q, v, k, expected", [(2, 8, 3, 34), (2, 7, 3, 17), (2, 5, 2, 9)])
    def test_values(self, q, v, k, expected):
        assert drake_freeman_upper(q, v, k) == expected

    def test_requires_remainder(self):
        with pytest.raises(ValueError):
            drake_freeman_upper(2, 6, 3)


class TestNastaseSissokho:
    """Tests de la valeur exacte quand k > [r 1]_q."""

    def test_exact_values(self):
        assert nastase_sissokho_exact(2, 7, 3) == 17
        assert nastase_sissokho_exact(2, 9, 4) == 33

    def test_absent_when_condition_fails(self):
        assert nastase_sissokho_exact(2, 8, 3) is None
        assert nastase_sissokho_exact(2, 6, 3) is None

    @pytest.mark.parametrize("q", [2, 3, 4])
    def test_equals_beutelspacher(self, q):
        """Test que la valeur exacte coïncide avec la borne de Beutelspacher."""
        for v in range(4, 16):
            for k in range(2, v // 2 + 1):
                exact = nastase_sissokho_exact(q, v, k)
                if exact is not None:
                    assert exact == beutelspacher_lower(q, v, k)


class TestDivisibleCodes:
    """Tests des bornes issues de la divisibilité des trous."""

    def test_divisible_values(self):
        """Test de la recherche sur (z, u)."""
        assert divisible_code_upper(2, 8, 3) == 34
        assert divisible_code_upper(2, 11, 5) == 65
        assert divisible_code_upper(2, 7, 3) == 17

    def test_lambda_value(self):
        """Test de la recherche sur y avec racines irrationnelles."""
        assert divisible_code_lambda_upper(2, 8, 3) == 34

    def test_absent_for_spreads(self):
        assert divisible_code_upper(2, 9, 3) is None
        assert divisible_code_lambda_upper(2, 9, 3) is None

    def test_lambda_above_beutelspacher(self):
        """Test que la borne reste au-dessus de la borne inférieure."""
        value = divisible_code_lambda_upper(2, 13, 5)
        assert value is not None
        assert value >= beutelspacher_lower(2, 13, 5)

    @pytest.mark.parametrize("q", [2, 3])
    def test_below_point_counting(self, q):
        """Test que toutes les bornes raffinées restent sous le comptage de points."""
        for v in range(4, 17):
            for k in range(2, v // 2 + 1):
                if v % k == 0:
                    continue
                trivial = trivial_ps_upper(q, v, k)
                assert drake_freeman_upper(q, v, k) <= trivial
                for bound in (divisible_code_upper(q, v, k), divisible_code_lambda_upper(q, v, k)):
                    assert bound is None or bound <= trivial


class TestBestBounds:
    """Tests de l'agrégation des bornes de spreads partiels."""

    def test_spread_case(self):
        upper = ps_best_upper(2, 6, 2)
        lower = ps_best_lower(2, 6, 2)
        assert upper.value == lower.value == 21
        assert upper.name == 'spread'

    def test_eight_three(self):
        """Test A_2(8,6;3): borne supérieure 34, inférieure 33."""
        upper = ps_best_upper(2, 8, 3)
        assert upper.value == 34
        assert upper.name == 'drake-freeman'
        assert ps_best_lower(2, 8, 3).value == 33

    def test_seven_three_exact(self):
        assert ps_best_upper(2, 7, 3).value == 17
        assert ps_best_lower(2, 7, 3).value == 17

    def test_eleven_five(self):
        """Test A_2(11,10;5) <= 65."""
        assert ps_best_upper(2, 11, 5).value == 65

    def test_small_ambient(self):
        assert ps_best_upper(2, 5, 3).value == 1

    @pytest.mark.parametrize("q", [2, 3])
    def test_lower_below_upper(self, q):
        for v in range(2, 17):
            for k in range(1, v + 1):
                assert ps_best_lower(q, v, k).value <= ps_best_upper(q, v, k).value

    @pytest.mark.parametrize("q", [2, 3, 5])
    def test_remainder_one_is_exact(self, q):
        """Test que r = 1 donne la valeur exacte pour k >= 2."""
        for k in range(2, 5):
            for t in range(2, 4):
                v = t * k + 1
                assert ps_best_upper(q, v, k).value == (q ** v - q ** (k + 1) + q ** k - 1) // (q ** k - 1)


class TestRatio:
    """Tests du rapport borne inférieure / comptage de points."""

    def test_spread_ratio_is_one(self):
        assert ps_lower_upper_ratio(2, 6, 3) == 1

    def test_value(self):
        assert ps_lower_upper_ratio(2, 7, 3) == Fraction(17 * 7, 127)

    def test_tends_to_one(self):
        ratios = [ps_lower_upper_ratio(2, 3 * t + 1, 3) for t in range(2, 8)]
        assert all(a < b for a, b in zip(ratios, ratios[1:]))
        assert ratios[-1] > Fraction(9, 10)
