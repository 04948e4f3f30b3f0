"""
Lower Bounds
Bornes inférieures pour A_q(v, d; k): codes MRD relevés, constructions de liaison et programmation dynamique

The linkage operators take a lookup n -> best known lower bound for
A_q(n, d; k), evaluated only at n < v, so the dynamic program in `linkage_dp`
can fill its table in increasing n.
"""

import os
from fractions import Fraction
from functools import lru_cache

from dotenv import load_dotenv

from bound_types import BoundReport, BoundValue, check_params, largest, normalized_dim, trivial_bound
from combinatorics import lifted_mrd_size, q_binomial, rank_code_size
from partial_spreads import ps_best_lower

load_dotenv()

# Configuration
SEEDS_PATH = os.getenv('CDC_SEEDS')

# Valeurs connues A_2(v, 4; 3) et A_2(8, 6; 3)
DEFAULT_SEEDS = {
    (2, 6, 4, 3): (77, 'exact value'),
    (2, 7, 4, 3): (333, 'known code'),
    (2, 8, 4, 3): (1326, 'known code'),
    (2, 9, 4, 3): (5986, 'known code'),
    (2, 10, 4, 3): (23870, 'known code'),
    (2, 11, 4, 3): (97526, 'known code'),
    (2, 12, 4, 3): (385515, 'known code'),
    (2, 13, 4, 3): (1597245, 'exact value'),
    (2, 8, 6, 3): (34, 'known partial spread'),
}


def seven_four_three_lower(q):
    """A_q(7, 4; 3) >= q^8 + q^5 + q^4 + q^2 - q, valid for every q."""
    return q ** 8 + q ** 5 + q ** 4 + q ** 2 - q


class SeedTable:
    """Known lower bounds that are not produced by the constructions of this package."""

    def __init__(self, entries=None):
        self.entries = dict(DEFAULT_SEEDS if entries is None else entries)

    @classmethod
    def from_file(cls, path, base=None):
        """
        Load seeds from a text file, one `q v d k value source-tag` per line.

        Entries replace those of `base` (the default seeds when omitted).
        Blank lines and lines starting with '#' are ignored.
        """
        table = cls(base.entries if base is not None else None)
        with open(path, 'r', encoding='utf-8') as f:
            for number, line in enumerate(f, 1):
                line = line.strip()
                if not line or line.startswith('#'):
                    continue
                parts = line.split(None, 5)
                if len(parts) < 5:
                    raise ValueError(f"{path}:{number}: expected 'q v d k value source-tag'")
                q, v, d, k, value = (int(x) for x in parts[:5])
                check_params(q, v, d, k)
                source = parts[5] if len(parts) > 5 else 'seed file'
                table.entries[(q, v, d, normalized_dim(v, k))] = (value, source)
        return table

    def add(self, q, v, d, k, value, source='seed'):
        self.entries[(q, v, d, normalized_dim(v, k))] = (value, source)

    def get(self, q, v, d, k):
        """Best seed for the parameters (either orientation of k), or None."""
        kn = normalized_dim(v, k)
        candidates = []
        if (q, v, d, kn) in self.entries:
            value, source = self.entries[(q, v, d, kn)]
            candidates.append(BoundValue(value, 'seed', source))
        if (v, d, kn) == (7, 4, 3):
            candidates.append(BoundValue(seven_four_three_lower(q), 'seed', 'q^8+q^5+q^4+q^2-q'))
        return largest(candidates)

    def snapshot(self):
        """Hashable copy of the entries, used as a cache key."""
        return tuple(sorted(self.entries.items()))

    def __len__(self):
        return len(self.entries)


_default_table = None


def load_seed_table():
    """Default seeds, overridden by the file named in CDC_SEEDS when set."""
    global _default_table
    if _default_table is None:
        if SEEDS_PATH:
            _default_table = SeedTable.from_file(SEEDS_PATH)
        else:
            _default_table = SeedTable()
    return _default_table


def lmrd_lower(q, v, d, k):
    return BoundValue(lifted_mrd_size(q, k, v, d), 'lmrd')


def original_linkage_lower(q, v, d, k, lookup):
    """
    max over v1 + v2 = v with v1, v2 >= k of L(v1) * |MRD(k x v2, d/2)| + L(v2).

    Ties go to the smallest v1. Returns None when v < 2k.
    """
    best = None
    for v1 in range(k, v - k + 1):
        v2 = v - v1
        value = lookup(v1) * rank_code_size(q, k, v2, d // 2) + lookup(v2)
        if best is None or value > best.value:
            best = BoundValue(value, 'linkage', f'v1={v1}, v2={v2}')
    return best


def improved_linkage_lower(q, v, d, k, lookup):
    """
    max over k <= m <= v - d/2 of L(m) * M(q, k, v - m + k, d) + L(v - m + k - d/2).

    Ties go to the smallest m. Returns None when v < k + d/2.
    """
    best = None
    for m in range(k, v - d // 2 + 1):
        value = lookup(m) * lifted_mrd_size(q, k, v - m + k, d) + lookup(v - m + k - d // 2)
        if best is None or value > best.value:
            best = BoundValue(value, 'improved linkage', f'm={m}')
    return best


def _base_lower(q, n, d, k, seeds):
    """Lower bound for A_q(n, d; k) from everything except the linkage steps at n."""
    trivial = trivial_bound(q, n, d, k)
    if trivial is not None:
        return trivial
    if n - k < k:
        return best_lower(q, n, d, n - k, seeds).best_lower
    candidates = [seeds.get(q, n, d, k), lmrd_lower(q, n, d, k)]
    if d == 2 * k:
        candidates.append(ps_best_lower(q, n, k))
    return largest(candidates)


@lru_cache(maxsize=None)
def _dp_tables(q, d, k, v_max, frozen_seeds):
    seeds = SeedTable(dict(frozen_seeds))
    table = {}
    original = {}
    improved = {}

    def lookup(n):
        return table[n].value

    for n in range(k, v_max + 1):
        lmrd = lmrd_lower(q, n, d, k)
        improved[n] = largest([lmrd, improved_linkage_lower(q, n, d, k, lookup)])
        original[n] = largest([lmrd, original_linkage_lower(q, n, d, k, lookup)])
        table[n] = largest([_base_lower(q, n, d, k, seeds), improved[n]])
    return table, original, improved


def linkage_dp(q, d, k, v_max, seeds=None, method='improved'):
    """
    Fill a(n) for k <= n <= v_max by the improved linkage recursion.

    a(n) is the best of the seeds, the lifted MRD size, the partial spread
    bound (d = 2k) and max_m a(m) * M(q, k, n - m + k, d) + a(n - m + k - d/2).

    Args:
        method: 'improved' for the improved linkage value at each n,
                'original' for the original linkage value at each n,
                'best' for the full table a(n)

    Returns:
        dict: n -> BoundValue
    """
    if method not in ('improved', 'original', 'best'):
        raise ValueError(f"unknown method {method!r}")
    if d < 2 or d % 2:
        raise ValueError(f"subspace distance must be even and >= 2, got {d}")
    seeds = seeds if seeds is not None else load_seed_table()
    table, original, improved = _dp_tables(q, d, k, v_max, seeds.snapshot())
    return dict({'improved': improved, 'original': original, 'best': table}[method])


def arithmetic_progression_lower(q, d, k, v0, s, l, a_v0, a_s):
    """
    Closed forms of l steps of the linkage recursion with step s.

    Args:
        a_v0: lower bound for A_q(v0, d; k)
        a_s: lower bound for A_q(s - d/2 + k, d; k)

    Returns:
        tuple: (first form, second form or None when v0 < 2k - d/2 or k < d/2)
    """
    if not (k <= v0 and 2 * s >= d and l >= 0):
        raise ValueError("need k <= v0, 2s >= d and l >= 0")
    b = lifted_mrd_size(q, k, s + k, d)
    first = BoundValue(a_v0 * b ** l + a_s * q_binomial(l, 1, b), 'progression', f'v={v0 + l * s}')

    second = None
    if v0 >= 2 * k - d // 2 and k >= d // 2:
        growth = q ** (k - d // 2 + 1)
        step = q ** (s * (k - d // 2 + 1))
        value = a_s * growth ** (v0 - k + d // 2) * q_binomial(l, 1, step) + a_v0
        second = BoundValue(value, 'progression', f'v={v0 + l * s}, second form')
    return first, second


def best_lower(q, v, d, k, seeds=None):
    """
    Best implemented lower bound for A_q(v, d; k).

    Returns:
        BoundReport: seed, lifted MRD, partial spread and linkage values with the maximum
    """
    check_params(q, v, d, k)
    seeds = seeds if seeds is not None else load_seed_table()
    report = BoundReport(q, v, d, k)
    trivial = trivial_bound(q, v, d, k)
    if trivial is not None:
        report.lower = [trivial]
        report.best_lower = trivial
        return report

    kn = normalized_dim(v, k)
    candidates = [seeds.get(q, v, d, kn), lmrd_lower(q, v, d, kn)]
    if d == 2 * kn:
        candidates.append(ps_best_lower(q, v, kn))
    candidates.append(linkage_dp(q, d, kn, v, seeds, 'improved')[v])
    candidates.append(linkage_dp(q, d, kn, v, seeds, 'original')[v])
    report.lower = [c for c in candidates if c is not None]
    report.best_lower = largest(report.lower)
    return report


def best_lower_value(q, v, d, k, seeds=None):
    return best_lower(q, v, d, k, seeds).best_lower.value


def lmrd_fraction(q, v, d, k, seeds=None):
    """Best lower bound over the lifted MRD size, as an exact fraction."""
    return Fraction(best_lower_value(q, v, d, k, seeds), lifted_mrd_size(q, k, v, d))
