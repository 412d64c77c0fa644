from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alcovefold.affine_coxeter import minimal_gallery
from alcovefold.convexity import (
    DominanceError,
    a_type_set,
    dconv_hull,
    dominance_leq,
    dominant_below,
    hull_discrepancies,
    in_orbit_hull,
    in_positive_cone,
    lattice_points,
    mu_coords,
    wconv_membership,
)
from alcovefold.root_system import construct


def test_mu_coords():
    rs = construct("A2")
    assert mu_coords(rs, (1, 0)) == (1, 0)
    assert mu_coords(rs, rs.fundamental_coweights[0]) == (Fraction(2, 3), Fraction(1, 3))
    assert mu_coords(rs, (0, 0)) == (0, 0)


def test_positive_cone():
    rs = construct("A2")
    assert in_positive_cone(rs, (1, 1))
    assert in_positive_cone(rs, (0, 0))
    # x - y in the counterexample
    assert not in_positive_cone(rs, (-1, 1))


def test_dominance():
    rs = construct("A2")
    assert dominance_leq(rs, (1, 1), (1, 1))
    assert dominance_leq(rs, (0, 0), (1, 1))
    assert not dominance_leq(rs, (4, 2), (3, 3))
    with pytest.raises(DominanceError):
        dominance_leq(rs, (1, 0), (1, 1))


def test_a_type_set_examples():
    assert a_type_set(construct("A1"), (1,)) == {(-1,), (0,), (1,)}
    rs = construct("A2")
    assert a_type_set(rs, (1, 1)) == rs.weyl_orbit((1, 1)) | {(0, 0)}
    assert a_type_set(construct("G2"), (0, 0)) == {(0, 0)}
    # W-invariant and symmetric under negation
    A = a_type_set(rs, (3, 3))
    assert len(A) == 37
    assert all(rs.weyl_orbit(v) <= A for v in A)
    with pytest.raises(DominanceError):
        a_type_set(rs, rs.fundamental_coweights[0])


def test_dominant_below_includes_zero():
    # a downward walk through dominant intermediates would miss 0 below alpha1 + alpha2
    assert dominant_below(construct("A2"), (1, 1)) == [(1, 1), (0, 0)]


def test_hull_membership_examples():
    rs = construct("A2")
    x = (3, 3)
    hull = dconv_hull(rs, x)
    assert x in hull
    assert (4, 2) not in hull
    assert (0, 0) in hull
    assert hull.lower == (-3, -3) and hull.upper == (3, 3)


def test_wconv_examples():
    rs = construct("A2")
    x = (3, 3)
    assert wconv_membership(rs, x, (4, 2))
    assert all(wconv_membership(rs, x, v) for v in rs.weyl_orbit(x))
    assert not wconv_membership(rs, x, (7, 0))


def test_literal_box_is_larger_than_the_set():
    # the coordinate box is not W-stable; a_type_set is, and agrees with its W-saturation
    rs = construct("A2")
    d = hull_discrepancies(rs, (1, 1))
    assert d["set_only"] == []
    assert (1, -1) in d["box_only"]
    assert not in_orbit_hull(rs, (1, 1), (1, -1))


@pytest.mark.parametrize("kind,height", [("A2", 4), ("B2", 4), ("G2", 3), ("A3", 2)])
def test_set_is_the_saturated_box(kind, height):
    import itertools

    rs = construct(kind)
    for lab in itertools.product(range(height + 1), repeat=rs.rank):
        x = rs.from_dynkin_labels(lab)
        if sum(lab) > height or any(Fraction(c).denominator != 1 for c in x):
            continue
        A = a_type_set(rs, x)
        box = lattice_points(rs, dconv_hull(rs, x), x)
        assert A == {v for v in box if in_orbit_hull(rs, x, v)}
        assert hull_discrepancies(rs, x)["set_only"] == []


@settings(max_examples=40, deadline=None)
@given(kind=st.sampled_from(["A2", "B2", "G2"]), a=st.integers(-3, 3), b=st.integers(-3, 3))
def test_a_type_set_is_w_invariant(kind, a, b):
    rs = construct(kind)
    A = a_type_set(rs, (a, b))
    assert A == a_type_set(rs, rs.dominant_rep((a, b))[0])
    for v in A:
        assert rs.weyl_orbit(v) <= A
        assert wconv_membership(rs, (a, b), v)
