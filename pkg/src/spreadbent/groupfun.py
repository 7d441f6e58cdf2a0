"""Functions V_n -> B for a finite abelian 2-group B and their exact character sums.

B = Z_{o_1} x ... x Z_{o_r} with every o_i a power of two.  A character is
indexed by a tuple a with a_i < o_i and acts as
    chi_a(g) = prod_i zeta_{o_i}^(a_i g_i) = zeta_{2^K}^(sum_i a_i g_i 2^K / o_i),
where 2^K is the largest order.  Character sums are therefore elements of
Z[zeta_{2^K}], computed as 2^(K-1) integer Walsh-Hadamard transforms.
"""

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import cyclo
from .boolfun import TruthTable, apply_pairing, bent_dual, fwht, is_bent
from .errors import BoundViolation, InvalidArgument

MAX_EXACT_N = 20
MAX_EXACT_LEVEL = 8


def worker_count():
    """Thread cap from BENT_THREADS (default: cpu count)."""
    raw = os.environ.get("BENT_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return os.cpu_count() or 1


@dataclass(frozen=True)
class GroupSpec:
    orders: tuple

    def __post_init__(self):
        orders = tuple(int(o) for o in self.orders)
        if not orders:
            raise InvalidArgument("group needs at least one cyclic factor")
        for o in orders:
            if o < 2 or o & (o - 1):
                raise InvalidArgument(f"cyclic order {o} is not a power of two >= 2")
        object.__setattr__(self, "orders", orders)

    @classmethod
    def cyclic(cls, k):
        return cls((1 << k,))

    @classmethod
    def elementary(cls, k):
        return cls((2,) * k)

    @property
    def size(self):
        return int(np.prod(self.orders))

    @property
    def k_total(self):
        return self.size.bit_length() - 1

    @property
    def level(self):
        return max(self.orders).bit_length() - 1

    @property
    def is_cyclic(self):
        return len(self.orders) == 1

    @property
    def is_elementary(self):
        return all(o == 2 for o in self.orders)

    def element(self, i):
        """Mixed-radix decoding; the first factor is the most significant digit."""
        return tuple(int(v) for v in np.unravel_index(int(i), self.orders))

    def index(self, g):
        return int(np.ravel_multi_index(tuple(int(x) for x in g), self.orders))

    def elements(self):
        return [self.element(i) for i in range(self.size)]

    def characters(self, include_zero=False):
        chars = list(itertools.product(*(range(o) for o in self.orders)))
        return chars if include_zero else chars[1:]

    def coerce(self, g):
        if isinstance(g, (int, np.integer)):
            if self.is_cyclic:
                return (int(g) % self.orders[0],)
            return self.element(g)
        g = tuple(int(x) for x in g)
        if len(g) != len(self.orders) or any(not 0 <= x < o for x, o in zip(g, self.orders)):
            raise InvalidArgument(f"{g} is not an element of {self}")
        return g

    def tag(self):
        return ",".join(str(o) for o in self.orders)

    def __str__(self):
        return " x ".join(f"Z_{o}" for o in self.orders)


class GroupFunction:
    __slots__ = ("n", "group", "values")

    def __init__(self, n, group, values):
        values = np.asarray(values, dtype=np.int64)
        if values.ndim == 1:
            values = values[:, None]
        if values.shape != (1 << n, len(group.orders)):
            raise InvalidArgument(f"expected {(1 << n, len(group.orders))} values, got {values.shape}")
        if np.any(values < 0) or np.any(values >= np.array(group.orders)):
            raise InvalidArgument("value out of range for the group")
        values.setflags(write=False)
        self.n = n
        self.group = group
        self.values = values

    @classmethod
    def cyclic(cls, n, k, values):
        return cls(n, GroupSpec.cyclic(k), np.asarray(values, dtype=np.int64) % (1 << k))

    @classmethod
    def from_indices(cls, n, group, idx):
        idx = np.asarray(idx, dtype=np.int64)
        return cls(n, group, np.stack(np.unravel_index(idx, group.orders), axis=1))

    @classmethod
    def from_truth_table(cls, f):
        return cls(f.n, GroupSpec.cyclic(1), f.bits)

    def indices(self):
        """Values as mixed-radix integers 0..|B|-1."""
        return np.ravel_multi_index(tuple(self.values.T), self.group.orders).astype(np.int64)

    @property
    def cyclic_values(self):
        if not self.group.is_cyclic:
            raise InvalidArgument("function is not into a cyclic group")
        return self.values[:, 0]

    def scaled(self, t):
        """2^t * f, computed componentwise modulo each order."""
        return GroupFunction(self.n, self.group, (self.values << t) % np.array(self.group.orders))

    def character_exponents(self, a):
        """Exponent of zeta_{2^K} in chi_a(f(x)) for every x."""
        a = self.group.coerce(a)
        level = self.group.level
        top = 1 << level
        e = np.zeros(1 << self.n, dtype=np.int64)
        for ai, o, col in zip(a, self.group.orders, self.values.T):
            e += ai * col * (top // o)
        return e % top

    def __eq__(self, other):
        if not isinstance(other, GroupFunction):
            return NotImplemented
        return (self.n == other.n and self.group == other.group
                and np.array_equal(self.values, other.values))

    def __hash__(self):
        return hash((self.n, self.group, self.values.tobytes()))

    def __repr__(self):
        return f"GroupFunction(n={self.n}, group={self.group})"


# ---------- binary decomposition f = a_0 + 2 a_1 + ...

def components(f):
    """Boolean functions a_0..a_{k-1} with f = a_0 + 2 a_1 + ... + 2^(k-1) a_{k-1}."""
    if not f.group.is_cyclic:
        raise InvalidArgument("components() needs a cyclic group")
    k = f.group.k_total
    v = f.cyclic_values
    return [TruthTable((v >> j) & 1, f.n) for j in range(k)]


def compose(tables):
    if not tables:
        raise InvalidArgument("need at least one component")
    n = tables[0].n
    v = np.zeros(1 << n, dtype=np.int64)
    for j, t in enumerate(tables):
        if t.n != n:
            raise InvalidArgument("dimension mismatch")
        v |= t.bits.astype(np.int64) << j
    return GroupFunction.cyclic(n, len(tables), v)


def vector_components(f):
    """Coordinate Boolean functions of a function into an elementary abelian group."""
    if not f.group.is_elementary:
        raise InvalidArgument("vector_components() needs an elementary abelian group")
    return [TruthTable(col, f.n) for col in f.values.T]


# ---------- exact character sums

class GenSpectrum:
    """H_f(a, b) for one character a and all b, as a (L, 2^n) coefficient stack."""

    __slots__ = ("level", "character", "coeffs")

    def __init__(self, level, character, coeffs):
        self.level = level
        self.character = character
        self.coeffs = coeffs

    def __len__(self):
        return self.coeffs.shape[1]

    def __getitem__(self, b):
        return cyclo.stack_entry(self.level, self.coeffs, b)

    def __iter__(self):
        for b in range(len(self)):
            yield self[b]

    def norm_sq(self):
        return cyclo.norm_sq_stack(self.coeffs)

    def flat(self, n):
        """Boolean array: |H(a,b)|^2 == 2^n exactly."""
        return cyclo.stack_is_integer(self.norm_sq(), 1 << n)


def gen_walsh(f, a, p=None):
    """H_f(a,b) = sum_x chi_a(f(x)) (-1)^<b,x> for every b, exactly."""
    level = f.group.level
    if f.n > MAX_EXACT_N or level > MAX_EXACT_LEVEL:
        raise InvalidArgument("outside the exact 64-bit coefficient range (n <= 20, K <= 8)")
    a = f.group.coerce(a)
    stack = cyclo.unit_root_stack(level, f.character_exponents(a))
    coeffs = apply_pairing(fwht(stack), f.n, p)
    return GenSpectrum(level, a, coeffs)


def _require_even(f):
    if f.n % 2:
        raise InvalidArgument("bentness needs even n")


def first_failure(f, p=None, characters=None):
    """First (a, b) in character order with |H_f(a,b)|^2 != 2^n, or None."""
    if characters is None:
        characters = f.group.characters()
    characters = list(characters)

    def scan(a):
        bad = np.flatnonzero(~gen_walsh(f, a, p).flat(f.n))
        return int(bad[0]) if bad.size else None

    workers = min(worker_count(), len(characters))
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(scan, characters))
    else:
        results = [scan(a) for a in characters]
    for a, b in zip(characters, results):
        if b is not None:
            return a, b
    return None


def is_generalized_bent(f, p=None):
    _require_even(f)
    if not f.group.is_cyclic:
        raise InvalidArgument("generalized bentness is defined for cyclic groups")
    return first_failure(f, p, [(1,)]) is None


def is_group_bent(f, p=None):
    """Every nontrivial character sum has absolute value 2^(n/2)."""
    _require_even(f)
    if f.group.size > 1 << (f.n // 2):
        raise BoundViolation(f"|B| = {f.group.size} exceeds 2^(n/2) = {1 << (f.n // 2)}")
    return first_failure(f, p) is None


def is_vectorial_bent(f, p=None):
    if not f.group.is_elementary:
        raise InvalidArgument("vectorial bentness needs an elementary abelian group")
    return is_group_bent(f, p)


def parseval_total(f, a, p=None):
    """sum_b |H_f(a,b)|^2 as a CycloInt (equals 2^(2n) for every a)."""
    s = gen_walsh(f, a, p)
    total = s.norm_sq().sum(axis=1)
    return cyclo.CycloInt(s.level, total.tolist())


def derivatives_balanced(f):
    """Diagnostic: every D_a f(x) = f(x+a) - f(x), a != 0, takes each value 2^n/|B| times."""
    size = 1 << f.n
    x = np.arange(size)
    orders = np.array(f.group.orders)
    expected = size // f.group.size
    for a in range(1, size):
        diff = (f.values[x ^ a] - f.values) % orders
        idx = np.ravel_multi_index(tuple(diff.T), f.group.orders)
        if np.any(np.bincount(idx, minlength=f.group.size) != expected):
            return False
    return True


# ---------- the affine-space characterisation of generalized bentness

@dataclass(frozen=True)
class AffineWitness:
    t: int
    kind: str          # "not-bent" or "triple"
    members: tuple     # span masks of the offending member(s)
    names: tuple

    def __str__(self):
        if self.kind == "not-bent":
            return f"t={self.t}: {self.names[0]} is not bent"
        return f"t={self.t}: dual of {' + '.join(self.names)} differs from the sum of duals"


@dataclass(frozen=True)
class AffineCheck:
    verdict: bool
    witness: AffineWitness = None

    def __bool__(self):
        return self.verdict


def _member_name(top, mask):
    terms = [f"a{top}"] + [f"a{j}" for j in range(top - 1, -1, -1) if mask >> j & 1]
    return "+".join(terms)


def affine_space_check(f, p=None, levels=None):
    """Check every A_t = a_{k-t-1} + span(a_{k-t-2}, ..., a_0).

    Level t passes when every member is bent and every three members
    b0, b1, b2 satisfy (b0+b1+b2)* = b0* + b1* + b2*; that is equivalent to
    2^t f being generalized bent.  All levels passing is equivalent to f being
    Z_{2^k}-bent.  Returns the verdict plus the first failing witness.
    """
    _require_even(f)
    comps = components(f)
    k = len(comps)
    if levels is None:
        levels = range(k)
    for t in levels:
        top = k - t - 1
        duals = {}
        for mask in range(1 << top):
            member = comps[top]
            for j in range(top):
                if mask >> j & 1:
                    member = member ^ comps[j]
            dual = bent_dual(member, p)
            if dual is None:
                return AffineCheck(False, AffineWitness(t, "not-bent", (mask,), (_member_name(top, mask),)))
            duals[mask] = dual
        for c0, c1, c2 in itertools.combinations(range(1 << top), 3):
            rhs = duals[c0] ^ duals[c1] ^ duals[c2]
            if duals[c0 ^ c1 ^ c2] != rhs:
                masks = (c0, c1, c2)
                return AffineCheck(False, AffineWitness(t, "triple", masks,
                                                        tuple(_member_name(top, c) for c in masks)))
    return AffineCheck(True)


def is_boolean_bent(f, p=None):
    """Bentness of a Z_2-valued function (or TruthTable)."""
    if isinstance(f, GroupFunction):
        if f.group.size != 2:
            raise InvalidArgument("boolean mode needs a two-element group")
        f = TruthTable(f.values[:, 0], f.n)
    return is_bent(f, p)
