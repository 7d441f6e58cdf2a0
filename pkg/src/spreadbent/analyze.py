"""Searches and cross-checks: exponent classes, closed-form character sums,
constancy on partitions and dual identities."""

import itertools
from dataclasses import dataclass

import numpy as np

from .boolfun import TruthTable, bent_dual, is_bent
from .errors import InvalidArgument, NotBentError, PreconditionViolation
from .gf import make_field
from .groupfun import GroupFunction
from .spread import Partition, check_gamma_params, gamma_exponents

# Witness rule: b0, b1, b2 pairwise distinct and nonzero.  Calibrated on the
# published n = 4, 5 rows; admitting one zero gives the same classification
# for every n in 4..10.
ALLOW_ZERO = False


@dataclass(frozen=True)
class WitnessTriple:
    b0: int
    b1: int
    b2: int
    e: int


@dataclass(frozen=True)
class BebebeResult:
    holds: bool
    witness: WitnessTriple = None

    def __bool__(self):
        return self.holds


def bebebe_check(field, e, allow_zero=ALLOW_ZERO, anchor=1):
    """Search pairwise distinct b0, b1, b2 with (b0+b1+b2)^-e = b0^-e + b1^-e + b2^-e.

    Both sides scale by c^-e under b_i -> c b_i, so b0 is pinned to `anchor`
    (any nonzero element) and (b1, b2) is swept in lexicographic order; the
    sweep includes b1 or b2 = 0 when zeros are admitted, which covers every
    triple containing a zero.  Returns the lexicographically first witness.
    """
    if anchor == 0:
        raise InvalidArgument("anchor must be nonzero")
    p = field.power_table(-e)
    q = field.order
    b = np.arange(q, dtype=np.int64)
    pa = p[anchor]
    for b1 in range(q):
        if b1 == anchor or (b1 == 0 and not allow_zero):
            continue
        lhs = p[anchor ^ b1 ^ b]
        rhs = pa ^ p[b1] ^ p[b]
        ok = (lhs == rhs) & (b != anchor) & (b != b1)
        if not allow_zero:
            ok &= b != 0
        hits = np.flatnonzero(ok)
        if hits.size:
            return BebebeResult(True, WitnessTriple(anchor, b1, int(hits[0]), e))
    return BebebeResult(False)


def cyclotomic_classes(n):
    """Cyclotomic classes of 2 modulo 2^n - 1, keyed by their least element."""
    q = (1 << n) - 1
    seen = set()
    out = {}
    for e in range(q):
        if e in seen:
            continue
        cls = set()
        x = e
        while x not in cls:
            cls.add(x)
            x = (2 * x) % q
        seen |= cls
        out[min(cls)] = sorted(cls)
    return out


def coset_leaders(n):
    """Leaders of all classes except those of 0 and 1."""
    return [e for e in cyclotomic_classes(n) if e not in (0, 1)]


@dataclass(frozen=True)
class CosetClassification:
    n: int
    fulfilled: frozenset
    not_fulfilled: frozenset


def table1(n, allow_zero=ALLOW_ZERO, field=None):
    field = field or make_field(n)
    if field.m != n:
        raise InvalidArgument("field degree must equal n")
    good, bad = set(), set()
    for e in coset_leaders(n):
        (good if bebebe_check(field, e, allow_zero) else bad).add(e)
    return CosetClassification(n, frozenset(good), frozenset(bad))


# ---------- closed-form character sums over the Gamma cells

def omega_upsilon(field, k, u, v, gamma, variant="omega"):
    """(brute force, closed form) of Omega_gamma or Upsilon_gamma.

    Omega  = sum_{Tr^m_k(s)=gamma} sum_{x != 0} (-1)^(Tr(ux) + Tr(v s x^(2^k+1))),  v != 0
    Upsilon = sum_{Tr^m_k(s)=gamma} sum_{x != 0} (-1)^(Tr(u s x^-d) + Tr(vx)),     u != 0
    """
    check_gamma_params(field, k)
    e, d = gamma_exponents(field.m, k)
    if not field.in_subfield(gamma, k):
        raise InvalidArgument(f"gamma={gamma} is not in GF(2^{k})")
    tr = field.trace_table(1)
    rel = field.trace_table(k)
    s = np.flatnonzero(rel == gamma)[:, None]
    x = np.arange(1, field.order, dtype=np.int64)[None, :]
    m, q = field.m, field.order
    if variant == "omega":
        if v == 0:
            raise PreconditionViolation("Omega needs v != 0")
        xk = field.power_table((1 << k) + 1)[x]
        expo = tr[field.mul_vec(u, x)] ^ tr[field.mul_vec(field.mul_vec(v, s), xk)]
        target = field.pow(rel[field.mul(u, field.pow(v, d))], 2)
        hit = gamma == target
    elif variant == "upsilon":
        if u == 0:
            raise PreconditionViolation("Upsilon needs u != 0")
        xd = field.power_table(-d)[x]
        expo = tr[field.mul_vec(field.mul_vec(u, s), xd)] ^ tr[field.mul_vec(v, x)]
        hit = field.pow(gamma, 2) == rel[field.mul(v, field.pow(u, e))]
    else:
        raise InvalidArgument(f"unknown variant {variant!r}")
    brute = int(np.sum(1 - 2 * expo))
    small = 1 << (m - k)
    closed = q - small if hit else -small
    return brute, closed


def omega_upsilon_sweep(field, k, variant="omega"):
    """Every (u, v, gamma) with the nonzero-side condition; yields (u, v, gamma, brute, closed)."""
    gammas = sorted(set(field.trace_table(k).tolist()))
    q = field.order
    for u in range(q):
        for v in range(q):
            if (variant == "omega" and v == 0) or (variant == "upsilon" and u == 0):
                continue
            for g in gammas:
                yield (u, v, g) + omega_upsilon(field, k, u, v, g, variant)


# ---------- structural checks

def constant_on(f, partition):
    """True iff f takes one value on every cell."""
    cells = partition.cells if isinstance(partition, Partition) else partition
    if isinstance(f, TruthTable):
        vals = f.bits.astype(np.int64)
    elif isinstance(f, GroupFunction):
        vals = f.indices()
    else:
        vals = np.asarray(f)
    n_points = vals.shape[0]
    for c in cells:
        c = np.asarray(c, dtype=np.int64)
        if c.size and c.max() >= n_points:
            raise InvalidArgument("partition does not match the function's domain")
        if c.size and np.any(vals[c] != vals[c[0]]):
            return False
    return True


def triple_dual_check(b0, b1, b2, p=None):
    """(b0+b1+b2)* == b0* + b1* + b2*, bit-exact.

    Raises NotBentError if an input or the sum is not bent.
    """
    duals = []
    for name, b in (("b0", b0), ("b1", b1), ("b2", b2)):
        dual = bent_dual(b, p)
        if dual is None:
            raise NotBentError(f"{name} is not bent")
        duals.append(dual)
    total = bent_dual(b0 ^ b1 ^ b2, p)
    if total is None:
        raise NotBentError("b0 + b1 + b2 is not bent")
    return total == duals[0] ^ duals[1] ^ duals[2]


def _combinations(tables):
    n = tables[0].n
    for mask in range(1, 1 << len(tables)):
        acc = TruthTable.zeros(n)
        for j, t in enumerate(tables):
            if mask >> j & 1:
                acc = acc ^ t
        yield mask, acc


def vectorial_dual_bent_check(components, p=None, strong=False):
    """Every nonzero combination of the component duals is bent.

    With strong=True also require (c.F)* = combination of component duals for
    every nonzero c, i.e. duals add like the components do.
    Raises NotBentError if the components are not vectorial bent.
    """
    components = list(components)
    if not components:
        raise InvalidArgument("need at least one component")
    combo_duals = {}
    for mask, combo in _combinations(components):
        dual = bent_dual(combo, p)
        if dual is None:
            raise NotBentError(f"component combination {mask:#b} is not bent")
        combo_duals[mask] = dual
    singles = [combo_duals[1 << j] for j in range(len(components))]
    for mask, dsum in _combinations(singles):
        if not is_bent(dsum, p):
            return False
        if strong and dsum != combo_duals[mask]:
            return False
    return True


def pairwise_dual_additivity(tables, p=None):
    """(b + b')* == b* + b'* for every pair of the given bent tables."""
    duals = [bent_dual(t, p) for t in tables]
    if any(d is None for d in duals):
        raise NotBentError("input is not bent")
    for i, j in itertools.combinations(range(len(tables)), 2):
        s = bent_dual(tables[i] ^ tables[j], p)
        if s is None or s != duals[i] ^ duals[j]:
            return False
    return True
