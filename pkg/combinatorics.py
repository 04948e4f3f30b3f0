"""
Exact Combinatorics
Coefficients q-binomiaux, comptage de sous-espaces et produits q-Pochhammer

All counts are exact Python integers. Floating point only appears in
`q_pochhammer`, which returns a certified mpmath interval.
"""

import math
from fractions import Fraction

from mpmath import iv


def q_binomial(v, k, q):
    """
    Gaussian binomial coefficient [v choose k]_q.

    Zero outside 0 <= k <= v. For q = 1 this is the ordinary binomial.
    q does not need to be a prime power.
    """
    if k < 0 or v < 0 or k > v:
        return 0
    if q == 1:
        return math.comb(v, k)
    k = min(k, v - k)
    numerator = 1
    denominator = 1
    for i in range(1, k + 1):
        numerator *= q ** (v - k + i) - 1
        denominator *= q ** i - 1
    return numerator // denominator


def count_close_subspaces(q, v, k, m, t):
    """
    Number of k-subspaces U of GF(q)^v with dim(U ∩ W) >= k - t for a fixed
    m-subspace W.

    Args:
        q: field order
        v: ambient dimension
        k: dimension of the counted subspaces
        m: dimension of W
        t: allowed dimension loss, 0 <= t <= k

    Returns:
        int: exact count
    """
    if not 0 <= t <= k <= v:
        raise ValueError(f"need 0 <= t <= k <= v, got t={t}, k={k}, v={v}")
    if not k - t <= m <= v:
        raise ValueError(f"need k - t <= m <= v, got m={m}")

    total = 0
    for i in range(t + 1):
        total += q ** ((m + i - k) * i) * q_binomial(m, k - i, q) * q_binomial(v - m, i, q)
    return total


def rank_code_size(q, rows, cols, d_rank):
    """Size of an MRD code of rows x cols matrices with rank distance d_rank (1 if none is larger)."""
    small, large = min(rows, cols), max(rows, cols)
    if d_rank > small:
        return 1
    return q ** (large * (small - d_rank + 1))


def lifted_mrd_size(q, k, v, d):
    """M(q, k, v, d): size of a lifted MRD code of k-subspaces of GF(q)^v at subspace distance d."""
    if d % 2:
        raise ValueError(f"subspace distance must be even, got {d}")
    if not 0 <= k <= v:
        raise ValueError(f"need 0 <= k <= v, got k={k}, v={v}")
    if d > 2 * min(k, v - k):
        return 1
    return rank_code_size(q, k, v - k, d // 2)


def isqrt(n):
    """
    Integer square root.

    Returns:
        tuple: (floor(sqrt(n)), True if n is a perfect square)
    """
    if n < 0:
        raise ValueError(f"square root of negative number {n}")
    root = math.isqrt(n)
    return root, root * root == n


def q_pochhammer_exact(q, n):
    """(1/q; 1/q)_n as an exact fraction."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    value = Fraction(1)
    for i in range(1, n + 1):
        value *= 1 - Fraction(1, q ** i)
    return value


def enclose(value):
    """Interval enclosing an exact fraction or integer at the current working precision."""
    value = Fraction(value)
    return iv.mpf(value.numerator) / iv.mpf(value.denominator)


def _tail_terms(q, precision):
    """Smallest n with q^-n / (q - 1) below half the requested width."""
    width = Fraction(1, 10 ** precision)
    n = 0
    while Fraction(1, q ** n * (q - 1)) >= width / 2:
        n += 1
    return n


def q_pochhammer(q, n=None, precision=15):
    """
    Certified enclosure of (1/q; 1/q)_n = prod_{i=1..n} (1 - q^-i).

    Args:
        q: integer >= 2
        n: number of factors, None for the infinite product
        precision: requested width 10^-precision

    Returns:
        mpmath.iv.mpf: interval containing the product
    """
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")

    saved = iv.prec
    try:
        iv.dps = precision + 10
        if n is not None:
            return enclose(q_pochhammer_exact(q, n))

        terms = _tail_terms(q, precision)
        head = enclose(q_pochhammer_exact(q, terms))
        # prod_{i>terms} (1 - q^-i) lies in [1 - sum_{i>terms} q^-i, 1]
        tail = enclose(Fraction(1, q ** terms * (q - 1)))
        return head * (1 - tail * iv.mpf([0, 1]))
    finally:
        iv.prec = saved


def interval_width(interval):
    return float(interval.delta)
