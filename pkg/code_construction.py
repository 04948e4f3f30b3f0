"""
Code Construction
Construction explicite de codes: codes de Gabidulin, relèvement, spreads, recherche gloutonne et liaison

A constant dimension code is a `SubspaceCode`: k-subspaces of GF(q)^v given by
their rref representatives. Rank-metric codes hold all their codewords as one
FieldArray of shape (N, rows, cols).
"""

import itertools
import os
from functools import lru_cache

import numpy as np
from dotenv import load_dotenv

from bound_types import normalized_dim
from combinatorics import lifted_mrd_size, q_binomial
from finite_field import ExtensionField, as_field
from fq_linalg import (BudgetExceeded, Subspace, grassmannian_enumerate, hstack, orthogonal_complement,
                       subspace_distance)

load_dotenv()

# Configuration
CODE_BUDGET = int(os.getenv('CDC_CODE_BUDGET', str(2 ** 20)))


class RankMetricCode:
    """rows x cols matrices over GF(q); min_rank_distance None means a single codeword."""

    def __init__(self, field, rows, cols, codewords, min_rank_distance):
        self.field = field
        self.rows = rows
        self.cols = cols
        self.codewords = codewords
        self.min_rank_distance = min_rank_distance

    def __len__(self):
        return self.codewords.shape[0]

    def __iter__(self):
        return iter(self.codewords)

    def __repr__(self):
        return f"RankMetricCode({self.rows}x{self.cols}, N={len(self)}, d={self.min_rank_distance})"


class SubspaceCode:
    """A (v, N, d; k)_q constant dimension code; claimed_d None means no pair to measure."""

    def __init__(self, field, v, k, codewords, claimed_d=None, provenance=''):
        self.field = field
        self.v = v
        self.k = k
        self.codewords = list(codewords)
        self.claimed_d = claimed_d
        self.provenance = provenance

    @property
    def q(self):
        return self.field.q

    def __len__(self):
        return len(self.codewords)

    def __iter__(self):
        return iter(self.codewords)

    def __repr__(self):
        return f"SubspaceCode(q={self.q}, v={self.v}, N={len(self)}, d={self.claimed_d}, k={self.k})"


def _min_distance(*values):
    present = [x for x in values if x is not None]
    return min(present) if present else None


# ==================== Rank-metric codes ====================

def zero_rank_code(field_or_q, rows, cols):
    """The code holding only the zero matrix."""
    field = as_field(field_or_q)
    return RankMetricCode(field, rows, cols, field.GF.Zeros((1, rows, cols)), None)


def gabidulin(field_or_q, k, n, d):
    """
    Linear MRD code of k x n matrices with minimum rank distance d.

    Evaluates the q-linearized polynomials sum_{i < min-d+1} a_i x^(q^i),
    a_i in GF(q^max(k,n)), at the first min(k, n) polynomial basis elements,
    then expands each value over the same basis.
    """
    field = as_field(field_or_q)
    small, large = min(k, n), max(k, n)
    if not 1 <= d <= small:
        raise ValueError(f"need 1 <= d <= min(k, n), got d={d} for {k}x{n}")
    dim = small - d + 1
    size = field.q ** (large * dim)
    if size > CODE_BUDGET:
        raise BudgetExceeded(f"rank-metric code of {size} codewords exceeds budget {CODE_BUDGET}")

    ext = ExtensionField(field, large)
    points = [ext.x_power(l) for l in range(small)]
    basis = []
    for i in range(dim):
        images = [ext.frobenius(p, i) for p in points]
        for j in range(large):
            beta = ext.x_power(j)
            matrix = np.array([ext.coordinates(ext.mul(beta, image)) for image in images], dtype=np.int64).T
            if k < n:
                matrix = matrix.T
            basis.append(matrix.ravel())

    basis = field.GF(np.array(basis, dtype=np.int64))
    coeffs = field.GF(np.array(list(itertools.product(range(field.q), repeat=len(basis))), dtype=np.int64))
    codewords = (coeffs @ basis).reshape(-1, k, n)
    return RankMetricCode(field, k, n, codewords, d)


def mrd_or_zero(field_or_q, rows, cols, d_rank):
    """Gabidulin code, or the zero code when d_rank exceeds min(rows, cols)."""
    if d_rank > min(rows, cols):
        return zero_rank_code(field_or_q, rows, cols)
    return gabidulin(field_or_q, rows, cols, d_rank)


# ==================== Subspace codes ====================

def single_codeword_code(field_or_q, v, k):
    """The code holding the row space of (I_k | 0)."""
    field = as_field(field_or_q)
    rep = hstack(field, field.GF.Identity(k), field.GF.Zeros((k, v - k)))
    return SubspaceCode(field, v, k, [Subspace(field, rep, check=False)], None, 'single codeword')


def lift(r):
    """Row spaces of (I_k | M) for every codeword M."""
    field = r.field
    identity = field.GF.Identity(r.rows)
    codewords = [Subspace(field, hstack(field, identity, M), check=False) for M in r.codewords]
    claimed = 2 * r.min_rank_distance if r.min_rank_distance is not None else None
    return SubspaceCode(field, r.rows + r.cols, r.rows, codewords, claimed, 'lifted MRD')


def lifted_mrd_code(field_or_q, v, d, k):
    field = as_field(field_or_q)
    if d < 2 or d % 2:
        raise ValueError(f"subspace distance must be even and >= 2, got {d}")
    if d // 2 > min(k, v - k):
        return single_codeword_code(field, v, k)
    return lift(gabidulin(field, k, v - k, d // 2))


def spread_construct(field_or_q, v, k):
    """
    Spread of k-subspaces of GF(q)^v by field reduction, for k | v.

    Every GF(q^k)-line <w> of GF(q^k)^(v/k), w normalized with a leading 1,
    gives the k-subspace spanned over GF(q) by x^j * w, j < k.
    """
    field = as_field(field_or_q)
    if k < 1 or v % k:
        raise ValueError(f"a spread needs k | v, got k={k}, v={v}")
    t = v // k
    ext = ExtensionField(field, k)
    codewords = []
    for lead in range(t):
        for tail in itertools.product(range(ext.order), repeat=t - lead - 1):
            w = [0] * lead + [1] + list(tail)
            rows = []
            for j in range(k):
                scale = ext.x_power(j)
                row = []
                for coordinate in w:
                    row.extend(ext.coordinates(ext.mul(scale, coordinate)))
                rows.append(row)
            codewords.append(Subspace.from_rows(field, rows, v))
    return SubspaceCode(field, v, k, codewords, 2 * k if len(codewords) > 1 else None, 'spread')


GREEDY_ORDERS = ('enumeration', 'lifted-first')


def greedy_cdc(field_or_q, v, d, k, order='enumeration'):
    """
    Keep every subspace of `order` at distance >= d from all kept ones.

    Args:
        order: 'enumeration' for the Grassmannian enumeration order,
               'lifted-first' for the lifted MRD codewords followed by that
               enumeration, or any iterable of k-subspaces

    Returns:
        SubspaceCode: provenance records the order used
    """
    field = as_field(field_or_q)
    if order == 'enumeration':
        candidates = grassmannian_enumerate(field, v, k)
    elif order == 'lifted-first':
        seed = lifted_mrd_code(field, v, d, k)
        candidates = itertools.chain(seed, grassmannian_enumerate(field, v, k))
    elif isinstance(order, str):
        raise ValueError(f"unknown greedy order {order!r}, expected one of {GREEDY_ORDERS}")
    else:
        candidates, order = order, 'custom'
    kept = []
    for U in candidates:
        if all(subspace_distance(U, W) >= d for W in kept):
            kept.append(U)
    return SubspaceCode(field, v, k, kept, d if len(kept) > 1 else None, f'greedy ({order} order)')


def orthogonal_code(code):
    complements = [orthogonal_complement(U) for U in code]
    return SubspaceCode(code.field, code.v, code.v - code.k, complements, code.claimed_d,
                        f'orthogonal of {code.provenance}' if code.provenance else 'orthogonal')


def improved_linkage_assemble(c1, c2, r, d):
    """
    (τ(U) | M) for U in c1, M in r, together with (0_{k x (v1-k+d/2)} | τ(W)) for W in c2.

    Requires dim c1 = dim c2 = rows(r) = k and cols(r) = v2 - k + d/2.
    """
    field, k = c1.field, c1.k
    if c2.field != field or r.field != field:
        raise ValueError("codes over different fields")
    if d < 2 or d % 2:
        raise ValueError(f"subspace distance must be even and >= 2, got {d}")
    if c2.k != k or r.rows != k:
        raise ValueError(f"dimension mismatch: dim c1={k}, dim c2={c2.k}, rows(r)={r.rows}")
    if r.cols != c2.v - k + d // 2:
        raise ValueError(f"rank code needs {c2.v - k + d // 2} columns, has {r.cols}")
    prefix = c1.v - k + d // 2

    first = [Subspace(field, hstack(field, U.rep, M), check=False) for U in c1 for M in r.codewords]
    zeros = field.GF.Zeros((k, prefix))
    second = [Subspace(field, hstack(field, zeros, W.rep), check=False) for W in c2]

    rank_part = 2 * r.min_rank_distance if r.min_rank_distance is not None else None
    claimed = _min_distance(c1.claimed_d, c2.claimed_d, rank_part, d)
    return SubspaceCode(field, prefix + c2.v, k, first + second, claimed, 'improved linkage')


def multiple_linkage_assemble(codes, rank_codes, deltas):
    """
    Union of m >= 2 linked blocks, built by repeated improved linkage.

    Block i (from 0) holds (0 | τ(U_i) | M_i) with U_i in codes[i] and M_i in
    rank_codes[i]; rank_codes[0] is ignored. Consecutive blocks overlap in
    deltas[i - 1] columns and deltas[-1] must be 0.
    """
    if not len(codes) == len(rank_codes) == len(deltas) or len(codes) < 2:
        raise ValueError("need at least two blocks with matching rank codes and overlaps")
    if deltas[-1] != 0:
        raise ValueError("the last overlap must be 0")
    k = codes[0].k
    assembled = codes[0]
    for i in range(1, len(codes)):
        if not 0 <= deltas[i - 1] < k:
            raise ValueError(f"overlap {deltas[i - 1]} out of range for k={k}")
        assembled = improved_linkage_assemble(codes[i], assembled, rank_codes[i], 2 * (k - deltas[i - 1]))
    assembled.provenance = 'multiple linkage'
    return assembled


def linkage_three_block(field_or_q, k, v1, v2, d_rank, c3, c4):
    """
    (I_k | A) for A in an MRD code of k x (v1+v2) matrices at rank distance d_rank,
    together with (0_k | τ(U) | 0) for U in c3 and (0 | τ(W)) for W in c4.
    """
    field = as_field(field_or_q)
    if c3.v != v1 or c4.v != v2:
        raise ValueError(f"expected codes in GF(q)^{v1} and GF(q)^{v2}")
    identity = SubspaceCode(field, k, k, [Subspace.full_space(field, k)], None)
    blocks = [c4, c3, identity]
    rank_codes = [None, zero_rank_code(field, k, v2), mrd_or_zero(field, k, v1 + v2, d_rank)]
    code = multiple_linkage_assemble(blocks, rank_codes, [0, 0, 0])
    code.provenance = 'three-block linkage'
    return code


def count_lmrd_subcode(code):
    """Number of codewords whose representative starts with the identity matrix."""
    identity = np.eye(code.k, dtype=np.int64)
    return sum(1 for U in code if np.array_equal(U.rep.view(np.ndarray)[:, :code.k], identity))


# ==================== Constructive linkage plan ====================

@lru_cache(maxsize=None)
def linkage_plan(q, v, d, k):
    """
    Largest code size reachable by explicit constructions, with its recipe.

    Recipes: ('single',), ('grassmannian',), ('orthogonal',), ('spread',),
    ('lmrd',) and ('linkage', m), the last assembling the codes for
    (m, d, k) and (v - m + k - d/2, d, k) with an MRD code of k x (v - m).
    """
    if d > 2 * normalized_dim(v, k):
        return 1, ('single',)
    if d <= 2:
        return q_binomial(v, k, q), ('grassmannian',)
    if k > v - k:
        return linkage_plan(q, v, d, v - k)[0], ('orthogonal',)
    if d == 2 * k and v % k == 0:
        return (q ** v - 1) // (q ** k - 1), ('spread',)

    best = (lifted_mrd_size(q, k, v, d), ('lmrd',))
    for m in range(k, v - d // 2 + 1):
        value = (linkage_plan(q, m, d, k)[0] * lifted_mrd_size(q, k, v - m + k, d)
                 + linkage_plan(q, v - m + k - d // 2, d, k)[0])
        if value > best[0]:
            best = (value, ('linkage', m))
    return best


def construct_best_linkage(field_or_q, v, d, k):
    """Build the code described by `linkage_plan`."""
    field = as_field(field_or_q)
    size, recipe = linkage_plan(field.q, v, d, k)
    kind = recipe[0]

    if kind == 'single':
        code = single_codeword_code(field, v, k)
    elif kind == 'grassmannian':
        codewords = list(grassmannian_enumerate(field, v, k))
        code = SubspaceCode(field, v, k, codewords, 2 if len(codewords) > 1 else None, 'grassmannian')
    elif kind == 'orthogonal':
        code = orthogonal_code(construct_best_linkage(field, v, d, v - k))
    elif kind == 'spread':
        code = spread_construct(field, v, k)
    elif kind == 'lmrd':
        code = lifted_mrd_code(field, v, d, k)
    else:
        m = recipe[1]
        c1 = construct_best_linkage(field, m, d, k)
        c2 = construct_best_linkage(field, v - m + k - d // 2, d, k)
        r = mrd_or_zero(field, k, v - m, d // 2)
        code = improved_linkage_assemble(c1, c2, r, d)
        code.provenance = f'improved linkage m={m}'

    if len(code) != size:
        raise RuntimeError(f"constructed {len(code)} codewords, planned {size}")
    return code
