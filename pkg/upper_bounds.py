"""
Upper Bounds
Bornes supérieures pour A_q(v, d; k) et agrégation de la meilleure borne connue

Every bound takes (q, v, d, k) with d even. Values are exact integers.
`best_upper` resolves the trivial ranges, normalizes k to min(k, v - k) and
takes the minimum of all unconditional bounds; the bound for codes containing
a lifted MRD code is reported on its own.
"""

import math
from fractions import Fraction
from functools import lru_cache

from bound_types import BoundReport, BoundValue, check_params, normalized_dim, smallest, trivial_bound
from combinatorics import count_close_subspaces, q_binomial
from partial_spreads import ps_best_upper

# Exact values and bounds obtained by computer, keyed on the normalized (q, v, d, k)
CONSTANT_UPPER = {
    (2, 6, 4, 3): BoundValue(77, 'exact value', 'A_2(6,4;3) = 77'),
    (2, 8, 6, 4): BoundValue(272, 'computer bound', 'A_2(8,6;4) <= 272'),
}


def sphere_packing_upper(q, v, d, k):
    radius = (d // 2 - 1) // 2
    ball = sum(q ** (i * i) * q_binomial(k, i, q) * q_binomial(v - k, i, q) for i in range(radius + 1))
    return BoundValue(q_binomial(v, k, q) // ball, 'sphere-packing')


def singleton_upper(q, v, d, k):
    return BoundValue(q_binomial(v - d // 2 + 1, max(k, v - k), q), 'singleton')


def anticode_upper(q, v, d, k):
    denominator = q_binomial(max(k, v - k) + d // 2 - 1, d // 2 - 1, q)
    return BoundValue(q_binomial(v, k, q) // denominator, 'anticode')


def johnson_i_upper(q, v, d, k):
    """Johnson type bound I, or None when (q^k - 1)^2 <= (q^v - 1)(q^(k-d/2) - 1)."""
    shifted = Fraction(q) ** (k - d // 2)
    denominator = (q ** k - 1) ** 2 - (q ** v - 1) * (shifted - 1)
    if denominator <= 0:
        return None
    value = (q ** k - shifted) * (q ** v - 1) / denominator
    return BoundValue(math.floor(value), 'johnson I')


def johnson_ii_step(q, v, d, k, lookup):
    """
    One step of the Johnson type bound II.

    Args:
        lookup: callable (v, d, k) -> upper bound for A_q(v, d; k)

    Returns:
        BoundValue: the smaller of the two branches
    """
    candidates = []
    if k >= 1:
        below = lookup(v - 1, d, k - 1)
        candidates.append(BoundValue((q ** v - 1) * below // (q ** k - 1), 'johnson II', 'through k-1'))
    if k < v:
        same = lookup(v - 1, d, k)
        candidates.append(BoundValue((q ** v - 1) * same // (q ** (v - k) - 1), 'johnson II', 'through k'))
    return smallest(candidates)


@lru_cache(maxsize=None)
def _johnson_iterated_value(q, v, d, k):
    k = normalized_dim(v, k)
    trivial = trivial_bound(q, v, d, k)
    if trivial is not None:
        return trivial.value
    if d == 2 * k:
        return ps_best_upper(q, v, k).value
    return (q ** v - 1) * _johnson_iterated_value(q, v - 1, d, k - 1) // (q ** k - 1)


def johnson_iterated_upper(q, v, d, k):
    """Johnson type bound II iterated through k - 1 down to a partial spread."""
    check_params(q, v, d, k)
    k = normalized_dim(v, k)
    base = v - k + d // 2
    return BoundValue(_johnson_iterated_value(q, v, d, k), 'johnson iterated',
                      f'base A_{q}({base},{d};{d // 2})')


def ahlswede_upper(q, v, d, k, t, m, inner=None):
    """
    Bound from counting the k-spaces meeting a fixed m-space in dimension >= k - t.

    Args:
        inner: upper bound for A_q(m, d - 2t; k - t); taken from the aggregator
               (without this bound) when omitted

    Returns:
        BoundValue or None when (t, m) is not admissible
    """
    r = d // 2
    if not (0 <= t < r <= k and k - t <= m <= v and t <= v - m):
        return None
    if inner is None:
        inner = _upper_value(q, m, d - 2 * t, k - t, False).value
    value = q_binomial(v, k, q) * inner // count_close_subspaces(q, v, k, m, t)
    return BoundValue(value, 'ahlswede', f't={t}, m={m}')


def ahlswede_best(q, v, d, k):
    candidates = []
    for t in range(d // 2):
        for m in range(k - t, v - t + 1):
            if t == 0 and m == v:
                continue
            candidates.append(ahlswede_upper(q, v, d, k, t, m))
    return smallest(candidates)


def mrd_containing_upper(q, v, d, k):
    """
    Upper bound for codes that contain a lifted MRD code.

    Applies for v >= 2k when d = 2(k - 1) with k >= 3, or d = k even.
    """
    if v < 2 * k:
        return None
    candidates = []
    if d == 2 * (k - 1) and k >= 3:
        value = q ** (2 * (v - k)) + _upper_value(q, v - k, 2 * (k - 2), k - 1, True).value
        candidates.append(BoundValue(value, 'lmrd-subclass', 'd = 2(k-1)'))
    if d == k and k % 2 == 0:
        half = k // 2
        middle = Fraction(q_binomial(v - k, half, q) * (q ** v - q ** (v - k)), q ** k - q ** half)
        value = q ** ((v - k) * (half + 1)) + middle + _upper_value(q, v - k, k, k, True).value
        candidates.append(BoundValue(math.floor(value), 'lmrd-subclass', 'd = k'))
    return smallest(candidates)


def _upper_candidates(q, v, d, k, with_ahlswede):
    """All unconditional upper bounds for nontrivial, normalized parameters."""
    if d == 2 * k:
        candidates = [ps_best_upper(q, v, k)]
        johnson = johnson_i_upper(q, v, d, k)
        if johnson is not None:
            candidates.append(johnson)
        return candidates

    def lookup(vv, dd, kk):
        return _upper_value(q, vv, dd, kk, with_ahlswede).value

    candidates = [
        sphere_packing_upper(q, v, d, k),
        singleton_upper(q, v, d, k),
        anticode_upper(q, v, d, k),
        johnson_iterated_upper(q, v, d, k),
        johnson_ii_step(q, v, d, k, lookup),
    ]
    if with_ahlswede:
        candidates.append(ahlswede_best(q, v, d, k))
    candidates.append(CONSTANT_UPPER.get((q, v, d, k)))
    return [c for c in candidates if c is not None]


@lru_cache(maxsize=None)
def _upper_value(q, v, d, k, with_ahlswede):
    trivial = trivial_bound(q, v, d, k)
    if trivial is not None:
        return trivial
    return smallest(_upper_candidates(q, v, d, normalized_dim(v, k), with_ahlswede))


def best_upper(q, v, d, k):
    """
    Best implemented upper bound for A_q(v, d; k).

    Returns:
        BoundReport: every applicable bound, the minimum, and the
                     lifted-MRD subclass bound when it applies
    """
    check_params(q, v, d, k)
    report = BoundReport(q, v, d, k)
    trivial = trivial_bound(q, v, d, k)
    if trivial is not None:
        report.upper = [trivial]
        report.best_upper = trivial
        return report

    kn = normalized_dim(v, k)
    report.upper = _upper_candidates(q, v, d, kn, True)
    report.best_upper = smallest(report.upper)
    report.mrd_subclass_upper = mrd_containing_upper(q, v, d, k)
    return report


def best_upper_value(q, v, d, k):
    return _upper_value(q, v, d, k, True).value


def johnson_anticode_ratio(q, v, d, k):
    """Iterated Johnson bound over the anticode bound, as an exact fraction."""
    return Fraction(johnson_iterated_upper(q, v, d, k).value, anticode_upper(q, v, d, k).value)
