import itertools
from fractions import Fraction

import pytest

from alcovefold.characters import (
    OracleError,
    freudenthal,
    orbit_weighted_dimension,
    support_check,
    weyl_dim,
)
from alcovefold.convexity import dominance_leq
from alcovefold.root_system import construct


def test_a2_adjoint():
    rs = construct("A2")
    t = freudenthal(rs, (1, 1))
    assert t.entries == {(1, 1): 1, (0, 0): 2}
    assert weyl_dim(rs, (1, 1)) == 8
    assert orbit_weighted_dimension(rs, t) == 8


def test_a1():
    rs = construct("A1")
    assert freudenthal(rs, (1,)).entries == {(1,): 1, (0,): 1}
    assert weyl_dim(rs, (1,)) == 3
    # labels (2,) give the same highest weight alpha1
    assert rs.from_dynkin_labels((2,)) == (1,)


def test_dimensions():
    assert weyl_dim(construct("A2"), (0, 0)) == 1
    assert weyl_dim(construct("A2"), (3, 3)) == 64
    g2 = construct("G2")
    assert weyl_dim(g2, g2.highest_root) == 14
    f4 = construct("F4")
    t = freudenthal(f4, f4.highest_root)
    assert weyl_dim(f4, f4.highest_root) == 52 and t[(0, 0, 0, 0)] == 4


def test_support_examples():
    assert support_check(construct("A2"), (0, 0))
    assert support_check(construct("A2"), (1, 1))
    g2 = construct("G2")
    assert support_check(g2, g2.highest_root)


def test_errors():
    rs = construct("A2")
    with pytest.raises(OracleError):
        freudenthal(rs, (1, 0))
    with pytest.raises(OracleError):
        weyl_dim(rs, (-1, -1))


@pytest.mark.parametrize("kind,height", [("A1", 4), ("A2", 4), ("B2", 4), ("C2", 4), ("G2", 3), ("A3", 2), ("B3", 2)])
def test_table_invariants(kind, height):
    rs = construct(kind)
    for lab in itertools.product(range(height + 1), repeat=rs.rank):
        lam = rs.from_dynkin_labels(lab)
        if sum(lab) > height or any(Fraction(c).denominator != 1 for c in lam):
            continue
        t = freudenthal(rs, lam)
        assert t[lam] == 1
        assert all(m > 0 and isinstance(m, int) for m in t.entries.values())
        assert all(dominance_leq(rs, nu, lam) for nu in t)
        assert orbit_weighted_dimension(rs, t) == weyl_dim(rs, lam)
        assert support_check(rs, lam)


def test_known_a2_multiplicities():
    # V(2,2) of sl3 (dim 27): weights (2,2):1, (1,1):2, (0,0):3 in root coordinates
    rs = construct("A2")
    t = freudenthal(rs, (2, 2))
    assert t.entries == {(2, 2): 1, (2, 1): 1, (1, 2): 1, (1, 1): 2, (0, 0): 3}
    assert weyl_dim(rs, (2, 2)) == 27
