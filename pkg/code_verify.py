"""
Code Verification
Vérification exhaustive des codes: distance minimale, forme échelonnée et oracles de comptage
"""

import itertools
import os
from dataclasses import dataclass, field

import numpy as np
from dotenv import load_dotenv

from finite_field import as_field
from fq_linalg import (Subspace, grassmannian_enumerate, hamming_distance, intersection_dim, is_rref,
                       pivot_vector, rank, rank_bits, row_to_bits, subspace_distance)

load_dotenv()

# Configuration
PAIR_BUDGET = int(os.getenv('CDC_PAIR_BUDGET', str(10 ** 8)))


@dataclass
class VerificationReport:
    """Outcome of `verify_code`; min_distance None stands for a single codeword (infinite distance)."""

    N: int
    k_uniform: bool
    rref_ok: bool
    min_distance: int = None
    witness: tuple = None
    duplicates: list = field(default_factory=list)
    malformed: list = field(default_factory=list)
    pairs_checked: int = 0
    budget_exceeded: bool = False

    def passes(self, claimed_d=None, claimed_N=None):
        """True when the code is well formed and meets the claimed parameters."""
        if not (self.k_uniform and self.rref_ok) or self.duplicates or self.budget_exceeded:
            return False
        if claimed_N is not None and claimed_N != self.N:
            return False
        if claimed_d is not None and self.min_distance is not None and self.min_distance < claimed_d:
            return False
        return True

    def to_dict(self):
        return {
            'N': self.N,
            'k_uniform': self.k_uniform,
            'rref_ok': self.rref_ok,
            'min_distance': self.min_distance,
            'witness': list(self.witness) if self.witness else None,
            'duplicates': [list(pair) for pair in self.duplicates],
            'malformed': self.malformed,
            'pairs_checked': self.pairs_checked,
            'budget_exceeded': self.budget_exceeded,
        }


def verify_code(code, pair_budget=None):
    """
    Check every codeword and compute the exact minimum subspace distance.

    Args:
        code: SubspaceCode
        pair_budget: maximum number of pairs to compare (CDC_PAIR_BUDGET by default)

    Returns:
        VerificationReport: a partial minimum with budget_exceeded set when
                            the pair count is over budget
    """
    budget = PAIR_BUDGET if pair_budget is None else pair_budget
    codewords = code.codewords
    report = VerificationReport(N=len(codewords), k_uniform=True, rref_ok=True)

    seen = {}
    for index, U in enumerate(codewords):
        if U.dim != code.k or U.ambient_dim != code.v:
            report.k_uniform = False
            report.malformed.append(index)
        elif not is_rref(U.rep):
            report.rref_ok = False
            report.malformed.append(index)
        if (U.dim, U.key) in seen:
            report.duplicates.append((seen[(U.dim, U.key)], index))
        else:
            seen[(U.dim, U.key)] = index

    # distances between codewords of different dimensions are not measured
    if not report.k_uniform:
        return report

    binary = code.field.q == 2
    for i, j in itertools.combinations(range(len(codewords)), 2):
        if report.pairs_checked >= budget:
            report.budget_exceeded = True
            break
        report.pairs_checked += 1
        U, W = codewords[i], codewords[j]
        if binary:
            distance = 2 * (rank_bits(U.bits + W.bits) - code.k)
        else:
            distance = subspace_distance(U, W)
        if report.min_distance is None or distance < report.min_distance:
            report.min_distance = distance
            report.witness = (i, j)
    return report


def min_rank_distance(r, pairwise=True):
    """
    Minimum rank distance of a rank-metric code.

    pairwise=False uses the minimum rank of the nonzero codewords, which is
    the same for linear codes.
    """
    matrices = list(r.codewords)
    best = None
    if r.field.q == 2:
        rows = [tuple(row_to_bits(row) for row in M.view(np.ndarray)) for M in matrices]
        if pairwise:
            pairs = ((a, b) for a, b in itertools.combinations(rows, 2))
            ranks = (rank_bits([x ^ y for x, y in zip(a, b)]) for a, b in pairs)
        else:
            ranks = (rank_bits(a) for a in rows if any(a))
    elif pairwise:
        ranks = (rank(A - B) for A, B in itertools.combinations(matrices, 2))
    else:
        ranks = (rank(A) for A in matrices if np.any(A.view(np.ndarray)))
    for value in ranks:
        if best is None or value < best:
            best = value
    return best


def is_linear(r, samples=None):
    """Closure under addition and scaling, over all pairs or the first `samples` pairs."""
    keys = {tuple(int(x) for x in M.view(np.ndarray).ravel()) for M in r.codewords}
    pairs = itertools.combinations(range(len(r)), 2)
    if samples is not None:
        pairs = itertools.islice(pairs, samples)
    for i, j in pairs:
        total = r.codewords[i] + r.codewords[j]
        if tuple(int(x) for x in total.view(np.ndarray).ravel()) not in keys:
            return False
    for scalar in range(2, r.field.q):
        for M in r.codewords:
            scaled = r.field.GF(scalar) * M
            if tuple(int(x) for x in scaled.view(np.ndarray).ravel()) not in keys:
                return False
    return True


def pivot_bound_holds(code):
    """Hamming distance of pivot vectors never exceeds the subspace distance, over all pairs."""
    for U, W in itertools.combinations(code.codewords, 2):
        if hamming_distance(pivot_vector(U), pivot_vector(W)) > subspace_distance(U, W):
            return False
    return True


def points_covered(code):
    """How many codewords contain each nonzero vector of the ambient space."""
    counts = {}
    for U in code:
        for vector in U.vectors():
            if any(vector):
                counts[vector] = counts.get(vector, 0) + 1
    return counts


def oracle_count_close(field_or_q, v, k, m, t):
    """Count k-subspaces meeting span(e_1..e_m) in dimension >= k - t by enumeration."""
    field = as_field(field_or_q)
    W = Subspace(field, field.GF(np.eye(m, v, dtype=np.int64)), check=False)
    return sum(1 for U in grassmannian_enumerate(field, v, k) if intersection_dim(U, W) >= k - t)


def oracle_grassmannian_size(field_or_q, v, k):
    field = as_field(field_or_q)
    return sum(1 for _ in grassmannian_enumerate(field, v, k))
