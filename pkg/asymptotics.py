"""
Asymptotic Ratios
Rapports asymptotiques entre bornes, évalués exactement ou par intervalles certifiés

Finite ratios are exact fractions. Limits involving infinite products are
mpmath intervals from `combinatorics.q_pochhammer`.
"""

from dataclasses import dataclass
from fractions import Fraction

from mpmath import iv

from combinatorics import enclose, lifted_mrd_size, q_binomial, q_pochhammer, q_pochhammer_exact
from lower_bounds import best_lower_value


def lmrd_singleton_ratio(q, v, d, k):
    """Lifted MRD size over the Singleton bound, for k <= v - k."""
    return Fraction(lifted_mrd_size(q, k, v, d), q_binomial(v - d // 2 + 1, v - k, q))


def lmrd_singleton_ratio_limit(q, k, d, precision=15):
    """Limit for v -> infinity: (1/q; 1/q)_{k-d/2+1}."""
    return q_pochhammer(q, k - d // 2 + 1, precision)


def lmrd_anticode_ratio(q, v, d, k):
    """Lifted MRD size over the unrounded anticode bound, for k <= v - k."""
    anticode = Fraction(q_binomial(v, k, q), q_binomial(v - k + d // 2 - 1, d // 2 - 1, q))
    return lifted_mrd_size(q, k, v, d) / anticode


def lmrd_anticode_ratio_limit(q, k, d):
    """Limit for v -> infinity: (1/q; 1/q)_k / (1/q; 1/q)_{d/2-1}, exact."""
    return q_pochhammer_exact(q, k) / q_pochhammer_exact(q, d // 2 - 1)


def lmrd_anticode_ratio_infimum(q, d, precision=15):
    """Infimum of the limit over k: (1/q; 1/q)_inf / (1/q; 1/q)_{d/2-1}."""
    saved = iv.prec
    try:
        iv.dps = precision + 10
        return q_pochhammer(q, None, precision) / enclose(q_pochhammer_exact(q, d // 2 - 1))
    finally:
        iv.prec = saved


def q_binomial_limit_gap(q, a, b):
    """|[a+b choose b]_q / q^(ab) - 1 / (1/q; 1/q)_b|."""
    return abs(Fraction(q_binomial(a + b, b, q), q ** (a * b)) - 1 / q_pochhammer_exact(q, b))


def _linkage_anticode_value(q, d, k, v0, s, a_v0, a_s):
    e = k - d // 2 + 1
    product = Fraction(1)
    for i in range(d // 2, k + 1):
        product *= 1 - Fraction(1, q ** i)
    return (a_v0 + Fraction(a_s, q ** (s * e) - 1)) / q ** ((v0 - k) * e) * product


def linkage_anticode_limit(q, d, k, v0, s, a_v0, a_s, precision=15):
    """
    Limit of the arithmetic-progression lower bound over the anticode bound.

    a_v0 and a_s are integers or (low, high) pairs bounding unknown values;
    the limit is increasing in both.

    Returns:
        mpmath.iv.mpf
    """
    low_v0, high_v0 = a_v0 if isinstance(a_v0, tuple) else (a_v0, a_v0)
    low_s, high_s = a_s if isinstance(a_s, tuple) else (a_s, a_s)
    low = _linkage_anticode_value(q, d, k, v0, s, low_v0, low_s)
    high = _linkage_anticode_value(q, d, k, v0, s, high_v0, high_s)

    saved = iv.prec
    try:
        iv.dps = precision + 10
        return iv.mpf([enclose(low).a, enclose(high).b])
    finally:
        iv.prec = saved


def linkage_anticode_ratio(q, d, k, v0, s, l, a_v0, a_s):
    """Finite-l value of the same ratio, against the unrounded anticode bound."""
    v = v0 + l * s
    b = lifted_mrd_size(q, k, s + k, d)
    lower = a_v0 * b ** l + a_s * q_binomial(l, 1, b)
    anticode = Fraction(q_binomial(v, k, q), q_binomial(v - k + d // 2 - 1, d // 2 - 1, q))
    return lower / anticode


@dataclass(frozen=True)
class MrdComparison:
    """Best lower bound for A_q(v, 4; 3) against the lifted-MRD-subclass bound."""

    q: int
    v: int
    lower: int
    mrd_bound: int
    ratio: Fraction
    series_ratio: Fraction


def mrd_subclass_bound(q, v):
    """q^(2v-6) + [v-3 choose 2]_q, the bound for (v, N, 4; 3)_q codes containing a lifted MRD code."""
    return q ** (2 * v - 6) + q_binomial(v - 3, 2, q)


def better_than_mrd_ratio(q, v, seeds=None):
    """
    Compare the best lower bound for A_q(v, 4; 3) with the lifted-MRD-subclass bound.

    ratio divides by the bound itself; series_ratio divides by its leading
    behaviour q^(2v-10) (q^4 + 1/(1/q; 1/q)_2).
    """
    lower = best_lower_value(q, v, 4, 3, seeds)
    bound = mrd_subclass_bound(q, v)
    leading = Fraction(q) ** (2 * v - 10) * (q ** 4 + 1 / q_pochhammer_exact(q, 2))
    return MrdComparison(q, v, lower, bound, Fraction(lower, bound), lower / leading)


def better_than_mrd_limit(q):
    """Limit of the series ratio for q >= 3."""
    return Fraction((q ** 4 + q + 1) * (q - 1) ** 2 * (q + 1), q ** 3 * (q ** 4 - q ** 3 - q ** 2 + q + 1))


def better_than_mrd_series_lower(q, v):
    """q^(2v-10) (q^4 + q + 1), a lower bound for A_q(v, 4; 3) when v >= 12."""
    return q ** (2 * v - 10) * (q ** 4 + q + 1)
