"""
Partial Spread Bounds
Bornes pour A_q(v, 2k; k): ensembles de k-sous-espaces deux à deux d'intersection triviale

Throughout, v = t*k + r with 0 <= r < k. Radical expressions are floored and
ceiled with integer square roots only.
"""

from fractions import Fraction

from bound_types import BoundValue, smallest
from combinatorics import isqrt, q_binomial


def _decompose(v, k):
    if not 1 <= k <= v:
        raise ValueError(f"need 1 <= k <= v, got k={k}, v={v}")
    return divmod(v, k)


def spread_exists(q, v, k):
    _decompose(v, k)
    return v % k == 0


def trivial_ps_upper(q, v, k):
    """Point counting: floor((q^v - 1) / (q^k - 1))."""
    _decompose(v, k)
    return (q ** v - 1) // (q ** k - 1)


def beutelspacher_lower(q, v, k):
    """(q^v - q^(k+r) + q^k - 1) / (q^k - 1) for t >= 2 and 1 <= r < k."""
    t, r = _decompose(v, k)
    if r == 0:
        raise ValueError(f"{k} divides {v}: use the spread size")
    if t < 2:
        raise ValueError(f"need v >= 2k, got v={v}, k={k}")
    return (q ** v - q ** (k + r) + q ** k - 1) // (q ** k - 1)


def drake_freeman_upper(q, v, k):
    """
    q^r (q^(kt) - 1)/(q^k - 1) - floor(theta) - 1
    with 2 theta = sqrt(1 + 4 q^k (q^k - q^r)) - (2 q^k - 2 q^r + 1).
    """
    t, r = _decompose(v, k)
    if r == 0:
        raise ValueError(f"{k} divides {v}: the bound needs r > 0")
    c = 2 * q ** k - 2 * q ** r + 1
    root, _ = isqrt(1 + 4 * q ** k * (q ** k - q ** r))
    # floor((sqrt(D) - c) / 2) == (isqrt(D) - c) // 2, square or not
    floor_theta = (root - c) // 2
    return q ** r * (q ** (k * t) - 1) // (q ** k - 1) - floor_theta - 1


def nastase_sissokho_exact(q, v, k):
    """Exact A_q(v, 2k; k) when k > [r choose 1]_q, else None."""
    t, r = _decompose(v, k)
    if r == 0 or k <= q_binomial(r, 1, q):
        return None
    return (q ** v - q ** (k + r) + q ** k - 1) // (q ** k - 1)


def _spread_quotient(q, v, k, r):
    """l = (q^(v-k) - q^r) / (q^k - 1)."""
    return (q ** (v - k) - q ** r) // (q ** k - 1)


def divisible_code_upper(q, v, k):
    """
    Upper bound l q^k + 1 + z (q - 1) from the divisibility of the holes.

    Applies when k = [r choose 1]_q + 1 - z + u > r with u >= 0 and
    0 <= z <= [r choose 1]_q / 2; returns the minimum over z, or None.
    """
    t, r = _decompose(v, k)
    if r == 0 or t < 2 or k <= r:
        return None
    theta = q_binomial(r, 1, q)
    l = _spread_quotient(q, v, k, r)
    best = None
    for z in range(theta // 2 + 1):
        # u is fixed by k, theta and z
        u = k - theta - 1 + z
        if u < 0:
            continue
        value = l * q ** k + 1 + z * (q - 1)
        if best is None or value < best:
            best = value
    return best


def _ceil_lambda_term(lam, radicand):
    """ceil(lambda - 1/2 - sqrt(radicand)/2)."""
    root, exact = isqrt(radicand)
    if exact:
        return -((root + 1 - 2 * lam) // 2)
    # sqrt lies strictly between root and root + 1
    return (2 * lam - root) // 2


def divisible_code_lambda_upper(q, v, k):
    """
    Upper bound l q^k + ceil(lambda - 1/2 - sqrt(1 + 4 lambda (lambda - (z + y - 1)(q - 1) - 1)) / 2)
    with lambda = q^y, max(r, 2) <= y <= k and z = [r choose 1]_q + 1 - k >= 0.
    Returns the minimum over y, or None.
    """
    t, r = _decompose(v, k)
    if r == 0 or t < 2 or k <= r:
        return None
    z = q_binomial(r, 1, q) + 1 - k
    if z < 0:
        return None
    l = _spread_quotient(q, v, k, r)
    best = None
    for y in range(max(r, 2), k + 1):
        lam = q ** y
        radicand = 1 + 4 * lam * (lam - (z + y - 1) * (q - 1) - 1)
        if radicand < 0:
            continue
        value = l * q ** k + _ceil_lambda_term(lam, radicand)
        if best is None or value < best:
            best = value
    return best


def ps_best_upper(q, v, k):
    """Best upper bound for A_q(v, 2k; k)."""
    t, r = _decompose(v, k)
    if t < 2 and r:
        return BoundValue(1, 'trivial', 'v < 2k')
    if r == 0:
        return BoundValue((q ** v - 1) // (q ** k - 1), 'spread', f'{k} | {v}')

    candidates = [
        BoundValue(trivial_ps_upper(q, v, k), 'point counting'),
        BoundValue(drake_freeman_upper(q, v, k), 'drake-freeman'),
    ]
    exact = nastase_sissokho_exact(q, v, k)
    if exact is not None:
        candidates.append(BoundValue(exact, 'nastase-sissokho', f'k > [{r} 1]_{q}'))
    divisible = divisible_code_upper(q, v, k)
    if divisible is not None:
        candidates.append(BoundValue(divisible, 'divisible holes'))
    divisible_lambda = divisible_code_lambda_upper(q, v, k)
    if divisible_lambda is not None:
        candidates.append(BoundValue(divisible_lambda, 'divisible holes, lambda'))
    return smallest(candidates)


def ps_best_lower(q, v, k):
    """Best lower bound for A_q(v, 2k; k)."""
    t, r = _decompose(v, k)
    if t < 2 and r:
        return BoundValue(1, 'trivial', 'v < 2k')
    if r == 0:
        return BoundValue((q ** v - 1) // (q ** k - 1), 'spread', f'{k} | {v}')
    return BoundValue(beutelspacher_lower(q, v, k), 'beutelspacher', f't={t}, r={r}')


def ps_lower_upper_ratio(q, v, k):
    """Beutelspacher lower bound over the unrounded point-counting bound."""
    t, r = _decompose(v, k)
    if r == 0:
        return Fraction(1)
    return Fraction(beutelspacher_lower(q, v, k) * (q ** k - 1), q ** v - 1)
