import numpy as np
import pytest

from spreadbent.construct import theorem_main
from spreadbent.errors import InvalidArgument, PreconditionViolation
from spreadbent.gf import make_field
from spreadbent.groupfun import GroupFunction
from spreadbent.spread import (HYPER, Partition, desarguesian, gamma_exponents, gamma_labels, gamma_partition,
                               grid, is_partial_spread, preimage_partition)


def span_cells(field):
    """Oracle: U and the lines {(x, s x)} built point by point, origin dropped."""
    m, q = field.m, field.order
    cells = [sorted(y for y in range(q))]
    for s in range(q):
        cells.append(sorted(x << m | field.mul(s, x) for x in range(1, q)))
    return cells


def test_desarguesian_counts():
    for m in (1, 2, 3, 4):
        field = make_field(m)
        part = desarguesian(field)
        assert len(part) == (1 << m) + 1
        assert sum(part.sizes()) == 1 << (2 * m)
        assert part.labels[0] == "U" and 0 in part.cell("U")
        assert sorted(map(tuple, (c.tolist() for c in part.cells))) == sorted(map(tuple, span_cells(field)))
    assert sorted(desarguesian(make_field(2)).sizes()) == [3, 3, 3, 3, 4]
    assert len(desarguesian(make_field(4))) == 17


def test_desarguesian_is_spread():
    for m in (2, 3, 4):
        part = desarguesian(make_field(m))
        assert is_partial_spread(part, 2 * m)
        cells = [set(c.tolist()) | {0} for c in part.cells]
        for i in range(len(cells)):
            for j in range(i):
                assert cells[i] & cells[j] == {0}


def test_partial_spread_negatives(f64):
    # two overlapping planes of V_4
    assert not is_partial_spread([[1, 2, 3], [1, 4, 5]], 4)
    assert not is_partial_spread([[1, 2, 4]], 4)            # not closed under addition
    assert not is_partial_spread([[1, 2, 3]], 5)
    assert is_partial_spread([[1, 2, 3], [4, 8, 12]], 4)
    assert not is_partial_spread(gamma_partition(f64, 2, "gamma1"), 12)
    assert not is_partial_spread(gamma_partition(f64, 2, "gamma1", split_hyper=True).cells[1:], 12)


def test_partition_validation():
    with pytest.raises(InvalidArgument):
        Partition(2, [[0, 1], [1, 2, 3]])
    with pytest.raises(InvalidArgument):
        Partition(2, [[0, 1], [2]])
    with pytest.raises(InvalidArgument):
        Partition(2, [[0, 1, 2, 3], []])
    p = Partition(2, [[3, 0], [1, 2]], ["a", "b"])
    assert p.cell("a").tolist() == [0, 3]
    assert list(p.point_cells()) == [0, 1, 1, 0]


def test_gamma_counts(f64):
    for which in ("gamma1", "gamma2"):
        part = gamma_partition(f64, 2, which)
        assert len(part) == 4
        assert part.labels[0] == 0 and 0 in part.cell(0)
        assert part.sizes() == [1072, 1008, 1008, 1008]
        split = gamma_partition(f64, 2, which, split_hyper=True)
        assert len(split) == 5 and split.sizes()[0] == 64


def test_gamma_precondition():
    with pytest.raises(PreconditionViolation):
        gamma_partition(make_field(4), 2, "gamma1")
    with pytest.raises(PreconditionViolation):
        gamma_partition(make_field(6), 4, "gamma1")


def test_gamma_exponents():
    assert gamma_exponents(6, 2) == (58, 25)
    assert gamma_exponents(5, 5) == (29, 15)      # k = m: e = -2
    assert (58 * 25) % 63 == 1


@pytest.mark.parametrize("m,k", [(3, 1), (6, 2), (5, 1), (6, 6)])
def test_gamma_cells_are_unions_of_curves(m, k):
    # U_s^* = {(x, s x^(2^k+1)) : x != 0} lies in the cell labelled Tr^m_k(s)
    field = make_field(m)
    lab1 = gamma_labels(field, k, "gamma1")
    lab2 = gamma_labels(field, k, "gamma2")
    e, d = gamma_exponents(m, k)
    q = field.order
    for s in range(q):
        g = field.trace(s, k)
        for x in range(1, q):
            assert lab1[x << m | field.mul(s, field.pow(x, (1 << k) + 1))] == g
            # V_s^* = {(y^-d s, y)}
            assert lab2[field.mul(field.pow(x, -d), s) << m | x] == g
    x, y = grid(field)
    assert np.all((lab1 == HYPER) == (x == 0))
    assert np.all((lab2 == HYPER) == (y == 0))


def test_gamma2_via_curves_u(f64):
    # points off U and V: the Gamma2 label is Tr^m_k(s^d) for the U_s through the point
    e, d = gamma_exponents(6, 2)
    lab2 = gamma_labels(f64, 2, "gamma2")
    x, y = grid(f64)
    s = f64.mul_vec(y, f64.power_table(e)[x])
    alt = f64.trace_table(2)[f64.power_table(d)[s]]
    inner = (x != 0) & (y != 0)
    assert np.array_equal(lab2[inner], alt[inner])
    assert np.all(lab2[(x == 0) & (y != 0)] == 0)


def test_k_equals_m_gives_a_spread():
    for m in (2, 3, 4, 5):
        field = make_field(m)
        part = gamma_partition(field, m, "gamma1", split_hyper=True)
        assert len(part) == (1 << m) + 1
        assert is_partial_spread(part, 2 * m)
        merged = gamma_partition(field, m, "gamma1")
        assert len(merged) == 1 << m
        assert merged.sizes()[0] == (1 << m) + (1 << m) - 1


def test_preimage_partitions(f64, main_pair):
    f1, f2 = main_pair
    assert preimage_partition(GroupFunction.cyclic(4, 2, np.full(16, 3))).labels == [(3,)]
    g1, g2 = gamma_partition(f64, 2, "gamma1"), gamma_partition(f64, 2, "gamma2")
    assert preimage_partition(f2).same_cells(g1)
    assert preimage_partition(f1).same_cells(g2)
    corr = preimage_partition(f2).label_correspondence(g1)
    assert len(set(corr.values())) == 4 and corr[(0,)] == 0
    assert preimage_partition(f1).label_correspondence(g1) is None


def test_partition_equality():
    a = Partition(2, [[0, 1], [2, 3]], ["x", "y"])
    b = Partition(2, [[2, 3], [1, 0]], ["y", "x"])
    c = Partition(2, [[2, 3], [1, 0]], ["x", "y"])
    assert a == b and a != c and a.same_cells(c)


def test_spread_case_of_theorem_main():
    # k = m: f1 is constant on the Gamma2 curves, which then form a spread
    for m in (2, 3, 4):
        field = make_field(m)
        f1 = theorem_main(field, m, "f1")
        cells = gamma_partition(field, m, "gamma2", split_hyper=True)
        assert is_partial_spread(cells, 2 * m)
        vals = f1.cyclic_values
        assert all(np.all(vals[c[c != 0]] == vals[c[c != 0][0]]) for c in cells.cells)
