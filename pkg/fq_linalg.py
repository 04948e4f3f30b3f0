"""
Linear Algebra over GF(q)
Forme échelonnée réduite, sous-espaces et distances de sous-espaces

Matrices are `galois.FieldArray` instances of the field class held by a
`finite_field.FieldSpec`. A subspace is stored through its unique reduced row
echelon representative. Over GF(2) rows are also kept as integer bitmasks
(column 0 is the most significant bit) for the pairwise distance loops.
"""

import itertools
import os

import numpy as np
from dotenv import load_dotenv

from combinatorics import q_binomial

load_dotenv()

# Configuration
GRASSMANNIAN_BUDGET = int(os.getenv('CDC_GRASSMANNIAN_BUDGET', str(10 ** 7)))


class BudgetExceeded(RuntimeError):
    """An enumeration or verification would exceed its configured budget."""


def as_matrix(field, entries, cols=None):
    """Build a FieldArray over `field` from nested lists or an integer array."""
    array = np.array(entries, dtype=np.int64)
    if array.size == 0:
        array = np.zeros((0, cols if cols is not None else 0), dtype=np.int64)
    elif array.ndim == 1:
        array = array.reshape(1, -1)
    return field.GF(array)


def vstack(field, *matrices):
    return field.GF(np.vstack([np.asarray(m.view(np.ndarray), dtype=np.int64) for m in matrices]))


def hstack(field, *matrices):
    return field.GF(np.hstack([np.asarray(m.view(np.ndarray), dtype=np.int64) for m in matrices]))


def to_lists(matrix):
    return [[int(x) for x in row] for row in matrix.view(np.ndarray)]


def _nonzero_rows(array):
    return int(np.count_nonzero(np.any(array.view(np.ndarray) != 0, axis=1)))


# ==================== GF(2) bitmask helpers ====================

def row_to_bits(row):
    bits = 0
    for x in row:
        bits = (bits << 1) | int(x)
    return bits


def bits_to_row(bits, width):
    return [(bits >> (width - 1 - j)) & 1 for j in range(width)]


def rank_bits(rows):
    """Rank over GF(2) of rows given as bitmasks."""
    basis = []
    for row in rows:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
            basis.sort(reverse=True)
    return len(basis)


def rref_bits(rows, width):
    """Reduced row echelon form over GF(2) of bitmask rows, zero rows dropped."""
    pending = [r for r in rows if r]
    reduced = []
    for col in range(width):
        bit = 1 << (width - 1 - col)
        pivot = next((r for r in pending if r & bit), None)
        if pivot is None:
            continue
        pending.remove(pivot)
        pending = [r ^ pivot if r & bit else r for r in pending]
        reduced = [r ^ pivot if r & bit else r for r in reduced]
        reduced.append(pivot)
    return reduced


# ==================== Row reduction ====================

def rref(matrix):
    """
    Reduced row echelon form and rank.

    Args:
        matrix: FieldArray of shape (rows, cols)

    Returns:
        tuple: (reduced FieldArray of the same shape, rank)
    """
    rows, cols = matrix.shape
    if rows == 0 or cols == 0:
        return matrix.copy(), 0
    reduced = matrix.row_reduce()
    return reduced, _nonzero_rows(reduced)


def rank(matrix):
    rows, cols = matrix.shape
    if rows == 0 or cols == 0:
        return 0
    return int(np.linalg.matrix_rank(matrix))


def is_rref(matrix):
    reduced, r = rref(matrix)
    return r == matrix.shape[0] and np.array_equal(reduced.view(np.ndarray), matrix.view(np.ndarray))


class Subspace:
    """A subspace of GF(q)^v given by its full-rank rref representative."""

    def __init__(self, field, rep, check=True):
        self.field = field
        self.rep = rep
        self.dim, self.ambient_dim = rep.shape
        if check and not is_rref(rep):
            raise ValueError("representative is not a full-rank matrix in reduced row echelon form")
        self.key = tuple(int(x) for x in rep.view(np.ndarray).ravel())
        self._bits = None

    @classmethod
    def from_rows(cls, field, rows, ambient_dim=None):
        """Row space of arbitrary generating rows."""
        matrix = as_matrix(field, rows, ambient_dim) if not hasattr(rows, 'row_reduce') else rows
        width = matrix.shape[1]
        if field.q == 2:
            reduced = rref_bits([row_to_bits(r) for r in matrix.view(np.ndarray)], width)
            rep = as_matrix(field, [bits_to_row(b, width) for b in reduced], width)
            return cls(field, rep, check=False)
        reduced, r = rref(matrix)
        return cls(field, reduced[:r], check=False)

    @classmethod
    def full_space(cls, field, v):
        return cls(field, field.GF.Identity(v), check=False)

    @classmethod
    def zero_space(cls, field, v):
        return cls(field, as_matrix(field, [], v), check=False)

    @property
    def bits(self):
        """Rows as bitmasks (GF(2) only)."""
        if self._bits is None:
            self._bits = tuple(row_to_bits(r) for r in self.rep.view(np.ndarray))
        return self._bits

    @property
    def pivots(self):
        return tuple(int(np.flatnonzero(row)[0]) for row in self.rep.view(np.ndarray))

    def rows(self):
        return to_lists(self.rep)

    def vectors(self):
        """Every vector of the subspace, as tuples."""
        q = self.field.q
        if self.dim == 0:
            return [tuple([0] * self.ambient_dim)]
        coeffs = self.field.GF(np.array(list(itertools.product(range(q), repeat=self.dim)), dtype=np.int64))
        return [tuple(int(x) for x in row) for row in (coeffs @ self.rep).view(np.ndarray)]

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field == other.field
                and self.ambient_dim == other.ambient_dim and self.dim == other.dim
                and self.key == other.key)

    def __hash__(self):
        return hash((self.ambient_dim, self.dim, self.key))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, rows={self.rows()})"


# ==================== Distances ====================

def _check_ambient(U, W):
    if U.ambient_dim != W.ambient_dim:
        raise ValueError(f"ambient dimension mismatch: {U.ambient_dim} != {W.ambient_dim}")


def sum_dim(U, W):
    """dim(U + W)."""
    _check_ambient(U, W)
    if U.dim == 0 or W.dim == 0:
        return U.dim + W.dim
    if U.field.q == 2:
        return rank_bits(U.bits + W.bits)
    return rank(vstack(U.field, U.rep, W.rep))


def intersection_dim(U, W):
    return U.dim + W.dim - sum_dim(U, W)


def subspace_distance(U, W):
    """d_s(U, W) = dim(U + W) - dim(U ∩ W), for subspaces of any dimensions."""
    return 2 * sum_dim(U, W) - U.dim - W.dim


def injection_distance(U, W):
    return max(U.dim, W.dim) - intersection_dim(U, W)


def pivot_vector(U):
    """Indicator of the pivot columns of the rref representative."""
    marks = [0] * U.ambient_dim
    for col in U.pivots:
        marks[col] = 1
    return tuple(marks)


def hamming_distance(a, b):
    if len(a) != len(b):
        raise ValueError("vectors of different lengths")
    return sum(1 for x, y in zip(a, b) if x != y)


def orthogonal_complement(U):
    """U^⊥ with respect to the standard dot product."""
    field, v = U.field, U.ambient_dim
    if U.dim == 0:
        return Subspace.full_space(field, v)
    if U.dim == v:
        return Subspace.zero_space(field, v)
    return Subspace.from_rows(field, U.rep.null_space())


def apply_basis_change(U, matrix):
    """Image of U under the invertible map x -> x @ matrix."""
    return Subspace.from_rows(U.field, U.rep @ matrix)


def random_subspace(field, v, k, rng):
    """Uniformly random full-rank k x v generator, returned as a Subspace."""
    while True:
        candidate = Subspace.from_rows(field, rng.integers(0, field.q, size=(k, v)), v)
        if candidate.dim == k:
            return candidate


# ==================== Grassmannian ====================

def grassmannian_enumerate(field, v, k, budget=None):
    """
    Yield every k-dimensional subspace of GF(q)^v exactly once.

    Pivot sets are taken in lexicographic order, then the free entries in
    lexicographic order.

    Raises:
        BudgetExceeded: if [v choose k]_q exceeds the budget
    """
    if not 0 <= k <= v:
        raise ValueError(f"need 0 <= k <= v, got k={k}, v={v}")
    budget = GRASSMANNIAN_BUDGET if budget is None else budget
    total = q_binomial(v, k, field.q)
    if total > budget:
        raise BudgetExceeded(f"Grassmannian of {total} subspaces exceeds budget {budget}")

    q = field.q
    for pivots in itertools.combinations(range(v), k):
        template = np.zeros((k, v), dtype=np.int64)
        free = []
        for i, p in enumerate(pivots):
            template[i, p] = 1
            free.extend((i, j) for j in range(p + 1, v) if j not in pivots)
        for values in itertools.product(range(q), repeat=len(free)):
            matrix = template.copy()
            for (i, j), x in zip(free, values):
                matrix[i, j] = x
            yield Subspace(field, field.GF(matrix), check=False)
