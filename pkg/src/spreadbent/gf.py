"""Arithmetic in GF(2^m) with an explicit irreducible modulus.

Elements are plain ints: bit i is the coefficient of g^i, where g is the
residue class of X modulo the field polynomial.  All tables and file
formats in this package index field elements by that word.

Note the convention used throughout: every power of 0 is 0, including
0^0 and negative powers.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd

import numpy as np

from .errors import InvalidArgument, InvalidModulus

MAX_DEGREE = 16
TABLE_DEGREE = 10   # full multiplication table up to 2^10 x 2^10 entries


# ---------- polynomials over GF(2), encoded as ints

def clmul(a, b):
    """Carry-less product of two bit-polynomials."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def poly_mod(a, mod):
    dm = mod.bit_length() - 1
    while a.bit_length() - 1 >= dm:
        a ^= mod << (a.bit_length() - 1 - dm)
    return a


def poly_gcd(a, b):
    while b:
        a, b = b, poly_mod(a, b)
    return a


def is_irreducible(poly):
    """Ben-Or test: gcd(X^(2^i) - X, poly) = 1 for all i <= deg/2."""
    deg = poly.bit_length() - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    if not poly & 1:
        return False
    x = 0b10
    h = x
    for _ in range(deg // 2):
        h = poly_mod(clmul(h, h), poly)
        if poly_gcd(poly, h ^ x) != 1:
            return False
    return True


def smallest_irreducible(m):
    for poly in range(1 << m, 1 << (m + 1)):
        if poly & 1 and is_irreducible(poly):
            return poly
    raise AssertionError("no irreducible polynomial found")  # unreachable


def _prime_factors(n):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def gf2_rank(vectors):
    """Rank over GF(2) of a collection of int bit-vectors."""
    basis = []
    for v in vectors:
        v = int(v)
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


# ---------- the field

@dataclass(frozen=True)
class FieldSpec:
    m: int
    modulus: int

    def __post_init__(self):
        if not 1 <= self.m <= MAX_DEGREE:
            raise InvalidArgument(f"extension degree must be in 1..{MAX_DEGREE}, got {self.m}")
        if self.modulus.bit_length() - 1 != self.m or not self.modulus & 1:
            raise InvalidModulus(f"modulus {self.modulus:#x} does not have degree {self.m} with constant term 1")
        if not is_irreducible(self.modulus):
            raise InvalidModulus(f"modulus {self.modulus:#x} is reducible over GF(2)")

    @property
    def order(self):
        return 1 << self.m

    @property
    def group_order(self):
        """Order of the multiplicative group, 2^m - 1."""
        return (1 << self.m) - 1

    def elements(self):
        return np.arange(self.order, dtype=np.int64)

    def check(self, a):
        if not 0 <= a < self.order:
            raise InvalidArgument(f"{a} is not an element of GF(2^{self.m})")

    # -- scalar arithmetic

    def mul(self, a, b):
        return poly_mod(clmul(int(a), int(b)), self.modulus)

    def pow(self, a, t):
        a = int(a)
        if a == 0:
            return 0
        t %= self.group_order
        r = 1
        while t:
            if t & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            t >>= 1
        return r

    def inv(self, a):
        return self.pow(a, -1)

    def trace(self, x, k=1):
        """Relative trace Tr^m_k(x); k = 1 gives the absolute trace."""
        if k < 1 or self.m % k:
            raise InvalidArgument(f"k={k} does not divide m={self.m}")
        r = 0
        y = int(x)
        for _ in range(self.m // k):
            r ^= y
            y = self.pow(y, 1 << k)
        return r

    def in_subfield(self, a, k):
        return self.pow(a, 1 << k) == a if a else True

    # -- vectorised arithmetic over numpy int arrays

    def mul_vec(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m <= TABLE_DEGREE:
            return _mul_table(self)[a, b]
        return self.clmul_vec(a, b)

    def clmul_vec(self, a, b):
        """Shift-and-xor product with reduction; no tables."""
        a, b = np.broadcast_arrays(a, b)
        r = np.zeros(a.shape, dtype=np.int64)
        for i in range(self.m):
            r ^= np.where((b >> i) & 1, a << i, 0)
        for bit in range(2 * self.m - 2, self.m - 1, -1):
            r ^= np.where((r >> bit) & 1, self.modulus << (bit - self.m), 0)
        return r

    def pow_vec(self, a, t):
        a = np.asarray(a, dtype=np.int64)
        t %= self.group_order
        r = np.ones(a.shape, dtype=np.int64)
        base = a
        while t:
            if t & 1:
                r = self.mul_vec(r, base)
            base = self.mul_vec(base, base)
            t >>= 1
        return np.where(a == 0, 0, r)

    def power_table(self, t):
        """x^t for every element x (index = element word), with 0^t = 0."""
        return _power_table(self, t % self.group_order)

    def linear_table(self, func):
        """Tabulate an F_2-linear map given by its scalar definition."""
        table = np.zeros(1, dtype=np.int64)
        for i in range(self.m):
            table = np.concatenate([table, table ^ func(1 << i)])
        return table

    def trace_table(self, k=1):
        if k < 1 or self.m % k:
            raise InvalidArgument(f"k={k} does not divide m={self.m}")
        return _trace_table(self, k)

    # -- structure

    @cached_property
    def primitive_element(self):
        """Smallest element whose multiplicative order is 2^m - 1."""
        q = self.group_order
        if q == 1:
            return 1
        factors = _prime_factors(q)
        for g in range(2, self.order):
            if all(self.pow(g, q // p) != 1 for p in factors):
                return g
        raise AssertionError("field has no primitive element")  # unreachable

    def trace_gram(self):
        """Gram matrix of the pairing Tr(uv) in the polynomial basis."""
        t = self.trace_table(1)
        return np.array([[t[self.mul(1 << i, 1 << j)] for j in range(self.m)]
                         for i in range(self.m)], dtype=np.uint8)


@lru_cache(maxsize=None)
def _mul_table(field):
    e = field.elements()
    table = field.clmul_vec(e[:, None], e[None, :])
    table.setflags(write=False)
    return table


@lru_cache(maxsize=256)
def _power_table(field, t):
    table = field.pow_vec(field.elements(), t)
    table.setflags(write=False)
    return table


@lru_cache(maxsize=None)
def _trace_table(field, k):
    table = field.linear_table(lambda x: field.trace(x, k))
    table.setflags(write=False)
    return table


def make_field(m, modulus=None):
    """Build GF(2^m); without a modulus the smallest irreducible one is used."""
    if not 1 <= m <= MAX_DEGREE:
        raise InvalidArgument(f"extension degree must be in 1..{MAX_DEGREE}, got {m}")
    if modulus is None:
        modulus = _default_modulus(m)
    return FieldSpec(m, int(modulus))


_DEFAULT_MODULI = {}


def _default_modulus(m):
    if m not in _DEFAULT_MODULI:
        _DEFAULT_MODULI[m] = smallest_irreducible(m)
    return _DEFAULT_MODULI[m]


@dataclass(frozen=True)
class SubfieldBasis:
    k: int
    elements: tuple

    def span(self):
        """All 2^k subfield elements; entry i is the combination selected by the bits of i."""
        out = [0]
        for a in self.elements:
            out = out + [x ^ a for x in out]
        return out


def subfield_basis(field, k):
    """Polynomial basis {delta^0, ..., delta^(k-1)} of the copy of GF(2^k) inside the field.

    delta = g^((2^m-1)/(2^k-1)) for the primitive element g, so delta
    generates the multiplicative group of the subfield and has degree k.
    """
    if k < 1 or field.m % k:
        raise InvalidArgument(f"k={k} does not divide m={field.m}")
    delta = field.pow(field.primitive_element, field.group_order // ((1 << k) - 1))
    elems = tuple(field.pow(delta, i) if i else 1 for i in range(k))
    assert all(field.pow(a, 1 << k) == a for a in elems)
    assert gf2_rank(elems) == k
    return SubfieldBasis(k, elems)


def subfield_elements(field, k):
    return subfield_basis(field, k).span()


def inverse_mod(a, n):
    if gcd(a, n) != 1:
        raise InvalidArgument(f"{a} is not invertible modulo {n}")
    return pow(a, -1, n) if n > 1 else 0
