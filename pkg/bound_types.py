"""
Bound Values and Reports
Valeurs de bornes avec provenance, et rapports combinant bornes inférieures et supérieures
"""

from dataclasses import dataclass, field

from combinatorics import q_binomial


@dataclass(frozen=True)
class BoundValue:
    """An exact bound together with the name of the result that produced it."""

    value: int
    name: str
    detail: str = ''

    def label(self):
        return f"{self.name} ({self.detail})" if self.detail else self.name

    def to_dict(self):
        entry = {'name': self.name, 'value': self.value}
        if self.detail:
            entry['detail'] = self.detail
        return entry


def smallest(candidates):
    """Minimum by value; the first candidate wins ties."""
    best = None
    for candidate in candidates:
        if candidate is not None and (best is None or candidate.value < best.value):
            best = candidate
    return best


def largest(candidates):
    """Maximum by value; the first candidate wins ties."""
    best = None
    for candidate in candidates:
        if candidate is not None and (best is None or candidate.value > best.value):
            best = candidate
    return best


def check_params(q, v, d, k):
    if q < 2:
        raise ValueError(f"q must be a prime power >= 2, got {q}")
    if not 0 <= k <= v:
        raise ValueError(f"need 0 <= k <= v, got k={k}, v={v}")
    if d < 0 or d % 2:
        raise ValueError(f"subspace distance must be even and >= 0, got {d}")


def normalized_dim(v, k):
    """k after the orthogonality reduction k -> min(k, v - k)."""
    return min(k, v - k)


def trivial_bound(q, v, d, k):
    """
    Exact value of A_q(v, d; k) when the parameters are trivial, else None.

    A single codeword when d > 2 min(k, v - k); the whole Grassmannian when d <= 2.
    """
    check_params(q, v, d, k)
    if d > 2 * normalized_dim(v, k):
        return BoundValue(1, 'trivial', 'd > 2 min(k, v-k)')
    if d <= 2:
        return BoundValue(q_binomial(v, k, q), 'grassmannian', 'd <= 2')
    return None


@dataclass
class BoundReport:
    """Every applicable bound for one parameter set, with the best of each side."""

    q: int
    v: int
    d: int
    k: int
    lower: list = field(default_factory=list)
    upper: list = field(default_factory=list)
    best_lower: BoundValue = None
    best_upper: BoundValue = None
    mrd_subclass_upper: BoundValue = None

    @property
    def params(self):
        return {'q': self.q, 'v': self.v, 'd': self.d, 'k': self.k}

    def merge(self, other):
        """Combine a lower-bound report and an upper-bound report for the same parameters."""
        if (self.q, self.v, self.d, self.k) != (other.q, other.v, other.d, other.k):
            raise ValueError("cannot merge reports for different parameters")
        return BoundReport(
            self.q, self.v, self.d, self.k,
            lower=self.lower or other.lower,
            upper=self.upper or other.upper,
            best_lower=self.best_lower or other.best_lower,
            best_upper=self.best_upper or other.best_upper,
            mrd_subclass_upper=self.mrd_subclass_upper or other.mrd_subclass_upper,
        )

    def to_dict(self):
        data = {
            'params': self.params,
            'lower': [b.to_dict() for b in self.lower],
            'upper': [b.to_dict() for b in self.upper],
            'best_lower': self.best_lower.to_dict() if self.best_lower else None,
            'best_upper': self.best_upper.to_dict() if self.best_upper else None,
        }
        if self.mrd_subclass_upper is not None:
            data['mrd_subclass_upper'] = self.mrd_subclass_upper.to_dict()
        return data
