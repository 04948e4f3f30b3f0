"""
Finite Field Arithmetic
Arithmétique exacte dans GF(q) et dans les extensions GF(q^m)

Elements are plain integers in [0, q): the base-p little-endian digits of the
integer are the coefficients of the element over GF(p). This is the integer
representation galois uses, so values move between this module and
`galois.FieldArray` without conversion.
"""

import itertools
import os
from functools import lru_cache

import galois
from dotenv import load_dotenv

load_dotenv()

# Configuration
MAX_FIELD_ORDER = int(os.getenv('CDC_MAX_FIELD_ORDER', str(2 ** 20)))


def smallest_irreducible(field, degree):
    """
    Lexicographically smallest monic irreducible polynomial of `degree` over `field`.

    Coefficients are compared low degree first.

    Args:
        field: galois FieldArray class of the base field
        degree: degree >= 1

    Returns:
        galois.Poly: monic irreducible polynomial
    """
    if degree == 1:
        return galois.Poly([0, 1], field=field, order="asc")

    for low in itertools.product(range(field.order), repeat=degree):
        candidate = galois.Poly(list(low) + [1], field=field, order="asc")
        # a zero constant term means x divides the candidate
        if low[0] == 0:
            continue
        if candidate.is_irreducible():
            return candidate

    raise ValueError(f"no irreducible polynomial of degree {degree} over GF({field.order})")


def _ascending_coefficients(poly, size):
    """Coefficients of `poly` low degree first, padded to `size`."""
    coeffs = [int(c) for c in poly.coeffs[::-1]]
    return coeffs + [0] * (size - len(coeffs))


class FieldSpec:
    """GF(q) with q = p^e, its modulus and its galois field class."""

    def __init__(self, p, e, modulus=None):
        if e < 1:
            raise ValueError(f"extension degree must be >= 1, got {e}")
        if not galois.is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p ** e > MAX_FIELD_ORDER:
            raise ValueError(f"GF({p}^{e}) exceeds the configured limit {MAX_FIELD_ORDER}")

        self.p = p
        self.e = e
        self.q = p ** e

        prime_field = galois.GF(p)
        if modulus is None:
            poly = smallest_irreducible(prime_field, e)
        else:
            poly = galois.Poly(list(modulus), field=prime_field, order="asc")
            if poly.degree != e or int(poly.coeffs[0]) != 1:
                raise ValueError(f"modulus {list(modulus)} is not monic of degree {e}")
            if not poly.is_irreducible():
                raise ValueError(f"modulus {list(modulus)} is reducible over GF({p})")
        self.modulus = tuple(_ascending_coefficients(poly, e + 1))

        if e == 1:
            self.GF = prime_field
        else:
            self.GF = galois.GF(self.q, irreducible_poly=list(reversed(self.modulus)))

    def __repr__(self):
        return f"FieldSpec(p={self.p}, e={self.e}, modulus={list(self.modulus)})"

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def element(self, value):
        """Check that `value` encodes an element of this field."""
        if not 0 <= value < self.q:
            raise ValueError(f"{value} is not an element of GF({self.q})")
        return value


@lru_cache(maxsize=None)
def field_make(p, e):
    """Build GF(p^e) with the smallest monic irreducible modulus."""
    return FieldSpec(p, e)


@lru_cache(maxsize=None)
def field_for_order(q):
    """
    Build GF(q) from its order.

    Args:
        q: prime power

    Returns:
        FieldSpec
    """
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = next(n for n in range(2, q + 1) if q % n == 0)
    e, rest = 0, q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise ValueError(f"{q} is not a prime power")
    return field_make(p, e)


def as_field(field_or_q):
    """Accept either a FieldSpec or a field order."""
    if isinstance(field_or_q, FieldSpec):
        return field_or_q
    return field_for_order(int(field_or_q))


def field_add(field, a, b):
    if field.q == 2:
        return field.element(a) ^ field.element(b)
    return int(field.GF(field.element(a)) + field.GF(field.element(b)))


def field_mul(field, a, b):
    if field.q == 2:
        return field.element(a) & field.element(b)
    return int(field.GF(field.element(a)) * field.GF(field.element(b)))


def field_inv(field, a):
    if field.element(a) == 0:
        raise ZeroDivisionError("inverse of zero")
    if field.q == 2:
        return 1
    return int(field.GF(a) ** -1)


class ExtensionField:
    """
    GF(Q) with Q = q^m, built as GF(q)[x] modulo an irreducible of degree m.

    Elements are integers whose base-q little-endian digits are the
    coordinates over GF(q) in the polynomial basis 1, x, ..., x^(m-1).
    """

    def __init__(self, base, m):
        if m < 1:
            raise ValueError(f"extension degree must be >= 1, got {m}")
        self.base = base
        self.m = m
        self.order = base.q ** m
        self.modulus = smallest_irreducible(base.GF, m)

    def __repr__(self):
        return f"ExtensionField(GF({self.base.q})^{self.m})"

    def _poly(self, value):
        if not 0 <= value < self.order:
            raise ValueError(f"{value} is not an element of GF({self.base.q}^{self.m})")
        return galois.Poly.Int(value, field=self.base.GF)

    def x_power(self, i):
        """The basis element x^i for 0 <= i < m."""
        return self.base.q ** i

    def add(self, a, b):
        return int(self._poly(a) + self._poly(b))

    def mul(self, a, b):
        return int((self._poly(a) * self._poly(b)) % self.modulus)

    def power(self, a, n):
        return int(pow(self._poly(a), n, self.modulus))

    def frobenius(self, a, i=1):
        """a^(q^i)."""
        return int(pow(self._poly(a), self.base.q ** i, self.modulus))

    def scalar(self, c, a):
        """Product of a base field scalar with an element."""
        return self.mul(self.base.element(c), a)

    def coordinates(self, a):
        """Coordinate vector of `a` over the base field, low degree first."""
        digits = []
        for _ in range(self.m):
            a, digit = divmod(a, self.base.q)
            digits.append(digit)
        return digits

    def from_coordinates(self, digits):
        value = 0
        for digit in reversed(list(digits)):
            value = value * self.base.q + int(digit)
        return value


def extension_frobenius(extension, a, i):
    """a^(q^i) in `extension`."""
    return extension.frobenius(a, i)
