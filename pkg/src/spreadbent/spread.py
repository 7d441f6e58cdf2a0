"""Spreads and spread-like partitions of GF(2^m) x GF(2^m).

Points use the xy layout: index(x, y) = x * 2^m + y.  The distinguished
cells are labelled "U" = {(0, y)} and "V" = {(x, 0)}; the origin always
lives in the distinguished cell.
"""

from math import gcd

import numpy as np

from .boolfun import TruthTable
from .errors import InvalidArgument, PreconditionViolation
from .gf import gf2_rank, inverse_mod

HYPER = -1


class Partition:
    """Labelled disjoint cover of {0, ..., 2^n - 1} by nonempty cells."""

    __slots__ = ("n", "cells", "labels")

    def __init__(self, n, cells, labels=None):
        cells = [np.unique(np.asarray(c, dtype=np.int64)) for c in cells]
        if labels is None:
            labels = list(range(len(cells)))
        labels = list(labels)
        if len(labels) != len(cells):
            raise InvalidArgument("one label per cell required")
        if any(c.size == 0 for c in cells):
            raise InvalidArgument("empty cell")
        allpts = np.concatenate(cells) if cells else np.zeros(0, dtype=np.int64)
        if allpts.size != 1 << n or not np.array_equal(np.sort(allpts), np.arange(1 << n)):
            raise InvalidArgument("cells are not a disjoint cover of V_n")
        self.n = n
        self.cells = cells
        self.labels = labels

    @classmethod
    def from_labels(cls, n, point_labels, order=None):
        """One cell per distinct value of the per-point label array."""
        point_labels = np.asarray(point_labels)
        values = np.unique(point_labels) if order is None else order
        cells = [np.flatnonzero(point_labels == v) for v in values]
        keep = [i for i, c in enumerate(cells) if c.size]
        return cls(n, [cells[i] for i in keep], [_plain(values[i]) for i in keep])

    def __len__(self):
        return len(self.cells)

    def sizes(self):
        return [int(c.size) for c in self.cells]

    def cell(self, label):
        return self.cells[self.labels.index(label)]

    def point_cells(self):
        """Cell position of every point."""
        out = np.empty(1 << self.n, dtype=np.int64)
        for i, c in enumerate(self.cells):
            out[c] = i
        return out

    def canonical(self):
        return frozenset(tuple(c.tolist()) for c in self.cells)

    def same_cells(self, other):
        return self.n == other.n and self.canonical() == other.canonical()

    def label_correspondence(self, other):
        """Map own labels to the other's labels cell by cell; None if cells differ."""
        if not self.same_cells(other):
            return None
        theirs = {tuple(c.tolist()): lab for c, lab in zip(other.cells, other.labels)}
        return {lab: theirs[tuple(c.tolist())] for c, lab in zip(self.cells, self.labels)}

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.label_correspondence(other) is not None and all(
            k == v for k, v in self.label_correspondence(other).items())

    def __repr__(self):
        return f"Partition(n={self.n}, cells={len(self.cells)})"


def _plain(v):
    return v.item() if isinstance(v, np.generic) else v


def grid(field):
    """(x, y) coordinate arrays for every point of the xy layout."""
    pts = np.arange(1 << (2 * field.m), dtype=np.int64)
    return pts >> field.m, pts & (field.order - 1)


def desarguesian(field):
    """U = {(0,y)} plus U_s^* = {(x, sx) : x != 0}; 2^m + 1 cells."""
    x, y = grid(field)
    s = field.mul_vec(y, field.power_table(-1)[x])
    lab = np.where(x == 0, HYPER, s)
    order = [HYPER] + list(range(field.order))
    part = Partition.from_labels(2 * field.m, lab, order)
    part.labels[0] = "U"
    return part


def check_gamma_params(field, k):
    m = field.m
    if k < 1 or m % k:
        raise PreconditionViolation(f"k={k} does not divide m={m}")
    q = field.group_order
    if gcd(q, (1 << k) + 1) != 1:
        raise PreconditionViolation(f"gcd(2^{m}-1, 2^{k}+1) = {gcd(q, (1 << k) + 1)} != 1")


def gamma_exponents(m, k):
    """(e, d) with e = 2^m - 2^k - 2 reduced mod 2^m - 1 and e*d = 1."""
    q = (1 << m) - 1
    e = ((1 << m) - (1 << k) - 2) % q
    return e, inverse_mod(e, q)


def gamma_labels(field, k, which):
    """Per-point label: Tr^m_k(s) of the U_s (resp. V_s) through the point, HYPER on U (resp. V).

    For Gamma1 a point (x, y), x != 0, lies on U_s with s = y x^e, since
    U_s = {(x, s x^(2^k+1))} and -e = 2^k + 1.  For Gamma2 a point with
    y != 0 lies on V_s = {(y^-d s, y)} with s = x y^d.
    """
    check_gamma_params(field, k)
    e, d = gamma_exponents(field.m, k)
    x, y = grid(field)
    rel = field.trace_table(k)
    if which in ("gamma1", 1, "I", "A"):
        s = field.mul_vec(y, field.power_table(e)[x])
        return np.where(x == 0, HYPER, rel[s])
    if which in ("gamma2", 2, "II", "B"):
        s = field.mul_vec(x, field.power_table(d)[y])
        return np.where(y == 0, HYPER, rel[s])
    raise InvalidArgument(f"unknown partition {which!r}")


def _subfield_order(field, k):
    rel = field.trace_table(k)
    return sorted(set(rel.tolist()))


def gamma_partition(field, k, which, split_hyper=False):
    """Gamma1 = {A(0) u U, A(gamma)} or Gamma2 = {B(0) u V, B(gamma)}.

    With split_hyper the U (resp. V) cell is kept apart, labelled "U"/"V",
    giving 2^k + 1 cells.
    """
    lab = gamma_labels(field, k, which)
    gammas = _subfield_order(field, k)
    n = 2 * field.m
    name = "U" if which in ("gamma1", 1, "I", "A") else "V"
    if split_hyper:
        part = Partition.from_labels(n, lab, [HYPER] + gammas)
        part.labels[0] = name
        return part
    return Partition.from_labels(n, np.where(lab == HYPER, 0, lab), gammas)


def preimage_partition(f):
    """One cell per attained value, labelled by the value."""
    if isinstance(f, TruthTable):
        return Partition.from_labels(f.n, f.bits.astype(np.int64))
    idx = f.indices()
    part = Partition.from_labels(f.n, idx)
    part.labels = [f.group.element(i) for i in part.labels]
    return part


def is_partial_spread(cells, n):
    """Each cell plus 0 is an (n/2)-dim subspace and distinct cells meet only in 0."""
    if n % 2:
        return False
    if isinstance(cells, Partition):
        cells = cells.cells
    half = n // 2
    seen = []
    for c in cells:
        pts = np.unique(np.asarray(c, dtype=np.int64))
        pts = pts[pts != 0]
        if pts.size + 1 != 1 << half or gf2_rank(pts.tolist()) != half:
            return False
        seen.append(pts)
    if not seen:
        return True
    allpts = np.concatenate(seen)
    return np.unique(allpts).size == allpts.size
