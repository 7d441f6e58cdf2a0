"""Boolean functions on V_n stored as truth tables.

Index convention for V_n = GF(2^m) x GF(2^m): index(x, y) = x * 2^m + y,
so the y-coordinate occupies the low m bits.
"""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgument
from .gf import gf2_rank


class TruthTable:
    """Boolean function on V_n, one uint8 (0/1) per point."""

    __slots__ = ("n", "bits")

    def __init__(self, bits, n=None):
        bits = np.asarray(bits).astype(np.uint8) & 1
        size = bits.size
        if size & (size - 1) or size == 0:
            raise InvalidArgument(f"truth table length {size} is not a power of two")
        if n is None:
            n = size.bit_length() - 1
        if size != 1 << n:
            raise InvalidArgument(f"truth table length {size} != 2^{n}")
        bits = bits.reshape(-1)
        bits.setflags(write=False)
        self.n = n
        self.bits = bits

    @classmethod
    def zeros(cls, n):
        return cls(np.zeros(1 << n, dtype=np.uint8), n)

    @classmethod
    def from_support(cls, n, support):
        bits = np.zeros(1 << n, dtype=np.uint8)
        if not isinstance(support, np.ndarray):
            support = np.fromiter(support, dtype=np.int64)
        bits[support] = 1
        return cls(bits, n)

    def weight(self):
        return int(self.bits.sum(dtype=np.int64))

    def support(self):
        return np.flatnonzero(self.bits)

    def __xor__(self, other):
        if self.n != other.n:
            raise InvalidArgument("dimension mismatch")
        return TruthTable(self.bits ^ other.bits, self.n)

    def __and__(self, other):
        if self.n != other.n:
            raise InvalidArgument("dimension mismatch")
        return TruthTable(self.bits & other.bits, self.n)

    def __eq__(self, other):
        if not isinstance(other, TruthTable):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.bits, other.bits)

    def __hash__(self):
        return hash((self.n, self.bits.tobytes()))

    def __repr__(self):
        return f"TruthTable(n={self.n}, weight={self.weight()})"


class PairingSpec:
    """Nondegenerate symmetric bilinear form <b, x> = bits(b) . gram . bits(x)."""

    __slots__ = ("n", "gram", "_cols", "tag")

    def __init__(self, gram, tag=None):
        gram = np.asarray(gram, dtype=np.uint8) & 1
        n = gram.shape[0]
        if gram.shape != (n, n):
            raise InvalidArgument("gram matrix must be square")
        if not np.array_equal(gram, gram.T):
            raise InvalidArgument("gram matrix must be symmetric")
        cols = [int(sum(int(gram[i, j]) << i for i in range(n))) for j in range(n)]
        if gf2_rank(cols) != n:
            raise InvalidArgument("gram matrix is singular over GF(2)")
        gram.setflags(write=False)
        self.n = n
        self.gram = gram
        self._cols = cols
        self.tag = tag

    def is_identity(self):
        return np.array_equal(self.gram, np.eye(self.n, dtype=np.uint8))

    def apply(self, idx):
        """Image of index (or index array) b under the gram matrix."""
        idx = np.asarray(idx, dtype=np.int64)
        out = np.zeros(idx.shape, dtype=np.int64)
        for j, col in enumerate(self._cols):
            out ^= np.where((idx >> j) & 1, col, 0)
        return out

    def inner(self, b, x):
        return int(np.bitwise_count(np.int64(int(self.apply(b)) & x))) & 1

    def __eq__(self, other):
        return isinstance(other, PairingSpec) and np.array_equal(self.gram, other.gram)

    def __hash__(self):
        return hash(self.gram.tobytes())

    def __repr__(self):
        return f"PairingSpec(n={self.n}, tag={self.tag!r})"


def dot_pairing(n):
    return PairingSpec(np.eye(n, dtype=np.uint8), tag="dot")


def trace_pairing(field):
    """<(u,v),(x,y)> = Tr(ux) + Tr(vy) on GF(2^m) x GF(2^m) under the xy layout."""
    m = field.m
    block = field.trace_gram()
    gram = np.zeros((2 * m, 2 * m), dtype=np.uint8)
    gram[:m, :m] = block
    gram[m:, m:] = block
    return PairingSpec(gram, tag="trace")


@dataclass(frozen=True)
class Spectrum:
    n: int
    values: np.ndarray

    def __getitem__(self, b):
        return int(self.values[b])


def fwht(a):
    """Unnormalised Walsh-Hadamard transform along the last axis (copying)."""
    a = np.array(a, dtype=np.int64)
    lead = a.shape[:-1]
    size = a.shape[-1]
    h = 1
    while h < size:
        v = a.reshape(lead + (size // (2 * h), 2, h))
        x = v[..., 0, :].copy()
        v[..., 0, :] += v[..., 1, :]
        v[..., 1, :] = x - v[..., 1, :]
        h *= 2
    return a


def _pairing_for(n, p):
    if p is None:
        return None
    if p.n != n:
        raise InvalidArgument(f"pairing dimension {p.n} != function dimension {n}")
    return None if p.is_identity() else p


def apply_pairing(transformed, n, p):
    """Reindex dot-product transform values (last axis) for pairing p."""
    p = _pairing_for(n, p)
    if p is None:
        return transformed
    return transformed[..., p.apply(np.arange(1 << n))]


def walsh_spectrum(f, p=None):
    signs = 1 - 2 * f.bits.astype(np.int64)
    return Spectrum(f.n, apply_pairing(fwht(signs), f.n, p))


def is_bent(f, p=None):
    if f.n % 2:
        return False
    w = walsh_spectrum(f, p).values
    return bool(np.all(np.abs(w) == 1 << (f.n // 2)))


def bent_dual(f, p=None):
    """Dual read off the spectrum signs; None when f is not bent."""
    if f.n % 2:
        raise InvalidArgument("bent functions need even n")
    w = walsh_spectrum(f, p).values
    if not np.all(np.abs(w) == 1 << (f.n // 2)):
        return None
    return TruthTable((w < 0).astype(np.uint8), f.n)


def moebius(bits):
    a = np.array(bits, dtype=np.uint8)
    size = a.size
    h = 1
    while h < size:
        v = a.reshape(-1, 2, h)
        v[:, 1, :] ^= v[:, 0, :]
        h *= 2
    return a


def anf_degree(f):
    """(ANF coefficient table, algebraic degree); the zero function has degree 0."""
    anf = moebius(f.bits)
    monomials = np.flatnonzero(anf)
    degree = int(np.bitwise_count(monomials).max()) if monomials.size else 0
    return anf, degree


def algebraic_degree(f):
    return anf_degree(f)[1]
