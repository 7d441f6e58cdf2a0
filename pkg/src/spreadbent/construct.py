"""Bent, vectorial bent and Z_{2^k}-bent constructions over GF(2^m) x GF(2^m)."""

from dataclasses import dataclass
from math import gcd

import numpy as np

from .boolfun import TruthTable
from .errors import InvalidArgument, InvalidAssignment, PreconditionViolation
from .gf import gf2_rank, subfield_basis
from .groupfun import GroupFunction, GroupSpec
from .spread import HYPER, Partition, check_gamma_params, gamma_exponents, gamma_labels, grid, is_partial_spread


@dataclass(frozen=True)
class ExponentPair:
    m: int
    k: int
    e: int
    d: int


def exponent_pair(m, k):
    """e = 2^m - 2^k - 2 and its inverse d modulo 2^m - 1."""
    if k < 1 or m % k:
        raise PreconditionViolation(f"k={k} does not divide m={m}")
    q = (1 << m) - 1
    if gcd(q, (1 << k) + 1) != 1:
        raise PreconditionViolation(f"gcd(2^{m}-1, 2^{k}+1) != 1")
    e, d = gamma_exponents(m, k)
    assert (e * d) % q == 1 % q
    assert (-e - (1 << k) - 1) % q == 0
    return ExponentPair(m, k, e, d)


def _trace_form(field, coef, left, right):
    """Tr(coef * left * right) elementwise."""
    tr = field.trace_table(1)
    prod = field.mul_vec(left, right)
    return tr[field.mul_vec(coef, prod)]


def _check_basis(field, k, basis):
    if basis is None:
        return subfield_basis(field, k).elements
    elems = tuple(int(a) for a in getattr(basis, "elements", basis))
    if len(elems) != k or gf2_rank(elems) != k or not all(field.in_subfield(a, k) for a in elems):
        raise InvalidArgument(f"{elems} is not a basis of the subfield GF(2^{k})")
    return elems


def theorem_main(field, k, variant="f1", basis=None):
    """f1 = sum_i 2^i Tr(a_i x y^d) or f2 = sum_i 2^i Tr(a_i^-e x^e y), into Z_{2^k}."""
    ep = exponent_pair(field.m, k)
    alphas = _check_basis(field, k, basis)
    x, y = grid(field)
    if variant == "f1":
        left, right = x, field.power_table(ep.d)[y]
        coefs = alphas
    elif variant == "f2":
        left, right = field.power_table(ep.e)[x], y
        coefs = [field.pow(a, -ep.e) for a in alphas]
    else:
        raise InvalidArgument(f"unknown variant {variant!r}")
    prod = field.mul_vec(left, right)
    tr = field.trace_table(1)
    values = np.zeros(prod.shape, dtype=np.int64)
    for i, c in enumerate(coefs):
        tr_c = tr[field.mul_vec(c, field.elements())]
        values += tr_c[prod] << i
    return GroupFunction.cyclic(2 * field.m, k, values)


# ---------- partial-spread Constructions I and II

@dataclass
class Assignment:
    """Group element -> cell positions; `tilde` is the value owning whole subspaces (variant II)."""
    cells: dict
    tilde: tuple = None


def default_assignment(num_cells, group, m, variant="I"):
    """Consecutive cells per nonzero element in index order; tilde = first nonzero element."""
    per = 1 << (m - group.k_total)
    out = {}
    pos = 0
    tilde = group.element(1) if variant == "II" else None
    for i in range(1, group.size):
        g = group.element(i)
        take = per + 1 if g == tilde else per
        out[g] = tuple(range(pos, pos + take))
        pos += take
    if pos > num_cells:
        raise InvalidAssignment(f"need {pos} subspaces, only {num_cells} available")
    return Assignment(out, tilde)


def spread_construction(cells, group, variant="I", asg=None, n=None):
    """Function V_n -> B constant on the punctured subspaces of a partial spread.

    Variant I: each nonzero value takes 2^(m-k) punctured subspaces, all
    other points map to 0.  Variant II: the value tilde takes 2^(m-k)+1 whole
    subspaces (the origin included), other nonzero values 2^(m-k) punctured
    ones.  With B = Z_2 these are the PS- and PS+ functions.
    """
    if isinstance(cells, Partition):
        n = cells.n
        cells = cells.cells
    else:
        if n is None:
            raise InvalidArgument("n is required when cells are not a Partition")
        cells = [np.asarray(c, dtype=np.int64) for c in cells]
    m = n // 2
    k = group.k_total
    if k > m:
        raise InvalidAssignment(f"|B| = 2^{k} exceeds 2^{m}")
    if asg is None:
        asg = default_assignment(len(cells), group, m, variant)
    per = 1 << (m - k)
    used = []
    for i in range(1, group.size):
        g = group.element(i)
        want = per + 1 if (variant == "II" and g == asg.tilde) else per
        got = asg.cells.get(g, ())
        if len(got) != want:
            raise InvalidAssignment(f"value {g} has {len(got)} subspaces, needs {want}")
        used.extend(got)
    if variant == "II" and (asg.tilde is None or asg.tilde == group.element(0)):
        raise InvalidAssignment("variant II needs a nonzero distinguished value")
    if len(set(used)) != len(used):
        raise InvalidAssignment("a subspace is assigned to two values")
    if any(not 0 <= c < len(cells) for c in used):
        raise InvalidAssignment("cell position out of range")
    if not is_partial_spread([cells[c] for c in used], n):
        raise PreconditionViolation("assigned cells do not form a partial spread")
    idx = np.zeros(1 << n, dtype=np.int64)
    for g, cs in asg.cells.items():
        gi = group.index(g)
        for c in cs:
            pts = cells[c]
            idx[pts[pts != 0]] = gi
    if variant == "II":
        idx[0] = group.index(asg.tilde)
    return GroupFunction.from_indices(n, group, idx)


# ---------- functions constant on the Gamma partitions

def default_pi(field, k):
    """Index i -> subfield element with coordinates bits(i) in the subfield basis."""
    return subfield_basis(field, k).span()


def _label_index(field, k, pi):
    subfield = sorted(set(field.trace_table(k).tolist()))
    pi = [int(g) for g in pi]
    if sorted(pi) != subfield:
        raise InvalidArgument("pi is not a bijection onto the subfield")
    inv = np.zeros(field.order, dtype=np.int64)
    for i, g in enumerate(pi):
        inv[g] = i
    return inv


def partition_bent(field, k, variant="fA", pi=None, group=None, u_label=0):
    """f_A = i on A(gamma_i) (resp. f_B on B(gamma_i)); U (resp. V) maps to u_label."""
    check_gamma_params(field, k)
    if group is None:
        group = GroupSpec.cyclic(k)
    if group.size != 1 << k:
        raise InvalidArgument(f"group order {group.size} != 2^{k}")
    if pi is None:
        pi = default_pi(field, k)
    inv = _label_index(field, k, pi)
    which = {"fA": "gamma1", "fB": "gamma2"}.get(variant)
    if which is None:
        raise InvalidArgument(f"unknown variant {variant!r}")
    lab = gamma_labels(field, k, which)
    u_idx = group.index(group.coerce(u_label))
    idx = np.where(lab == HYPER, u_idx, inv[np.where(lab == HYPER, 0, lab)])
    return GroupFunction.from_indices(2 * field.m, group, idx)


def psap(field, k, subset, include_hyper=False, variant="I"):
    """Boolean function supported on the union of 2^(k-1) sets A(gamma) (resp. B(gamma))."""
    check_gamma_params(field, k)
    subset = sorted({int(g) for g in subset})
    if len(subset) != 1 << (k - 1):
        raise InvalidArgument(f"need exactly {1 << (k - 1)} distinct labels, got {len(subset)}")
    if not all(field.in_subfield(g, k) for g in subset):
        raise InvalidArgument("labels must lie in the subfield GF(2^k)")
    which = {"I": "gamma1", "II": "gamma2"}.get(variant)
    if which is None:
        raise InvalidArgument(f"unknown variant {variant!r}")
    lab = gamma_labels(field, k, which)
    support = np.isin(lab, subset)
    if include_hyper:
        support |= lab == HYPER
    return TruthTable(support, 2 * field.m)


# ---------- Maiorana-McFarland pieces

def mm(field, beta, exponent):
    """Tr(beta x y^exponent)."""
    if gcd(exponent % field.group_order, field.group_order) != 1:
        raise InvalidArgument(f"gcd({exponent}, 2^{field.m}-1) != 1")
    field.check(beta)
    if beta == 0:
        raise InvalidArgument("beta must be nonzero")
    x, y = grid(field)
    return TruthTable(_trace_form(field, beta, x, field.power_table(exponent)[y]), 2 * field.m)


def mm_dual_form(field, beta, e):
    """Tr(beta^-e x^e y), the dual of Tr(beta x y^d) under the trace pairing."""
    x, y = grid(field)
    return TruthTable(_trace_form(field, field.pow(beta, -e), field.power_table(e)[x], y), 2 * field.m)


def carlet(field, k, betas, which="g"):
    """Majority combination T0 T1 + T0 T2 + T1 T2 of three Maiorana-McFarland tables.

    which="g" uses T_i = Tr(b_i^-e x^e y); which="g_star" uses T_i = Tr(b_i x y^d).
    """
    ep = exponent_pair(field.m, k)
    betas = [int(b) for b in betas]
    if len(betas) != 3:
        raise InvalidArgument("exactly three betas required")
    for b in betas:
        if b == 0 or not field.in_subfield(b, k):
            raise InvalidArgument(f"{b} is not a nonzero element of GF(2^{k})")
    if which == "g":
        t = [mm_dual_form(field, b, ep.e).bits for b in betas]
    elif which == "g_star":
        t = [mm(field, b, ep.d).bits for b in betas]
    else:
        raise InvalidArgument(f"unknown variant {which!r}")
    return TruthTable((t[0] & t[1]) ^ (t[0] & t[2]) ^ (t[1] & t[2]), 2 * field.m)
