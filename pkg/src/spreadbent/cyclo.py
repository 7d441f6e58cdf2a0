"""Exact arithmetic in Z[zeta] for zeta a primitive 2^K-th root of unity.

An element is stored by its coordinates in the integral basis
1, zeta, ..., zeta^(L-1) with L = 2^(K-1), using zeta^L = -1.  Because the
basis is a Z-basis, a value is the rational integer N exactly when its
coordinate vector is (N, 0, ..., 0); |z|^2 = 2^n is therefore tested as
z * conj(z) == (2^n, 0, ..., 0) with no floating point anywhere.

The array helpers operate on coefficient stacks of shape (L, N), i.e. N
cyclotomic integers at once; the spectral code uses those.
"""

import cmath

import numpy as np

from .errors import InvalidArgument


def basis_size(level):
    if level < 1:
        raise InvalidArgument(f"level must be positive, got {level}")
    return 1 << (level - 1)


class CycloInt:
    __slots__ = ("level", "coeffs")

    def __init__(self, level, coeffs):
        size = basis_size(level)
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != size:
            raise InvalidArgument(f"level {level} needs {size} coefficients, got {len(coeffs)}")
        self.level = level
        self.coeffs = coeffs

    @classmethod
    def integer(cls, level, value):
        return cls(level, (value,) + (0,) * (basis_size(level) - 1))

    def _same_level(self, other):
        if isinstance(other, int):
            return CycloInt.integer(self.level, other)
        if other.level != self.level:
            raise InvalidArgument(f"level mismatch: {self.level} vs {other.level}")
        return other

    def __add__(self, other):
        other = self._same_level(other)
        return CycloInt(self.level, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloInt(self.level, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._same_level(other))

    def __mul__(self, other):
        return cyc_mul(self, self._same_level(other))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = CycloInt.integer(self.level, other)
        if not isinstance(other, CycloInt):
            return NotImplemented
        return self.level == other.level and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.level, self.coeffs))

    def __repr__(self):
        return f"CycloInt(level={self.level}, coeffs={self.coeffs})"

    def conj(self):
        return cyc_conj(self)

    def norm_sq(self):
        """z * conj(z), an element of the real subring."""
        return cyc_mul(self, cyc_conj(self))

    def as_integer(self):
        """The rational integer this element equals, or None."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def to_complex(self):
        zeta = cmath.exp(2j * cmath.pi / (1 << self.level))
        return sum(c * zeta ** t for t, c in enumerate(self.coeffs))


def cyc_mul(a, b):
    if a.level != b.level:
        raise InvalidArgument(f"level mismatch: {a.level} vs {b.level}")
    size = len(a.coeffs)
    out = [0] * size
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j, y in enumerate(b.coeffs):
            t = i + j
            if t < size:
                out[t] += x * y
            else:
                out[t - size] -= x * y
    return CycloInt(a.level, out)


def cyc_conj(a):
    """Image under zeta -> zeta^-1, using zeta^-t = -zeta^(L-t) for 0 < t < L."""
    c = a.coeffs
    return CycloInt(a.level, (c[0],) + tuple(-c[len(c) - t] for t in range(1, len(c))))


def unit_root(level, t):
    """zeta_{2^level}^t in basis/sign form."""
    size = basis_size(level)
    t %= 2 * size
    coeffs = [0] * size
    if t < size:
        coeffs[t] = 1
    else:
        coeffs[t - size] = -1
    return CycloInt(level, coeffs)


# ---------- stacked (L, N) coefficient arrays

def unit_root_stack(level, exponents):
    """Coefficient stack of zeta^e for an integer exponent array e."""
    size = basis_size(level)
    e = np.asarray(exponents, dtype=np.int64) % (2 * size)
    out = np.zeros((size,) + e.shape, dtype=np.int64)
    for t in range(size):
        out[t] = (e == t).astype(np.int64) - (e == t + size)
    return out


def mul_stack(a, b):
    size = a.shape[0]
    out = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=np.int64)
    for i in range(size):
        for j in range(size):
            t = i + j
            if t < size:
                out[t] += a[i] * b[j]
            else:
                out[t - size] -= a[i] * b[j]
    return out


def conj_stack(a):
    out = np.empty_like(a)
    out[0] = a[0]
    size = a.shape[0]
    for t in range(1, size):
        out[size - t] = -a[t]
    return out


def norm_sq_stack(a):
    return mul_stack(a, conj_stack(a))


def stack_is_integer(a, value):
    """Boolean array: entry equals the rational integer `value` exactly."""
    ok = a[0] == value
    if a.shape[0] > 1:
        ok &= np.all(a[1:] == 0, axis=0)
    return ok


def stack_entry(level, a, idx):
    return CycloInt(level, a[(slice(None),) + np.index_exp[idx]].tolist())
