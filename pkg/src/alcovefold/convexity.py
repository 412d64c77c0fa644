"""Dual convexity: simple-root coordinates, dominance, and the hull of a Weyl orbit.

The dual hyperplanes are level sets of the simple-root coefficient functionals
``mu_i``.  Because vectors are stored in simple-root coordinates, ``mu_i(x)`` is
just ``x[i]``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, List, Tuple

from .affine_coxeter import complex_of
from .root_system import RootSystem, Vector, _normalize, sub


class DominanceError(ValueError):
    pass


def mu_coords(rs: RootSystem, x: Vector) -> Tuple:
    return _normalize(x)


def in_positive_cone(rs: RootSystem, x: Vector) -> bool:
    return all(a >= 0 for a in mu_coords(rs, x))


def _in_root_lattice(x) -> bool:
    return all(Fraction(a).denominator == 1 for a in x)


def dominance_leq(rs: RootSystem, nu: Vector, lam: Vector) -> bool:
    """``nu <= lam``: ``lam - nu`` is a nonnegative integral sum of simple roots."""
    for v in (nu, lam):
        if not rs.is_dominant(v):
            raise DominanceError(f"{tuple(v)} is not dominant")
    d = sub(lam, nu)
    return _in_root_lattice(d) and in_positive_cone(rs, d)


def dominant_below(rs: RootSystem, lam: Vector) -> List[Vector]:
    """Dominant ``nu <= lam``, highest first.

    A dominant vector has nonnegative simple-root coordinates, so
    ``nu = lam - k`` with ``0 <= k_i <= lam_i``.
    """
    lam = _normalize(lam)
    if not rs.is_dominant(lam):
        raise DominanceError(f"{lam} is not dominant")
    ranges = [range(int(Fraction(a) // 1) + 1) for a in lam]
    out = []
    for k in itertools.product(*ranges):
        nu = _normalize(a - b for a, b in zip(lam, k))
        if rs.is_dominant(nu):
            out.append(nu)
    return sorted(out, key=lambda v: (-sum(v), tuple(-a for a in v)))


def a_type_set(rs: RootSystem, x: Vector) -> FrozenSet[Vector]:
    """Vertices ``y`` of the type of ``x`` with ``x^+ - y^+`` in ``Cp`` and the root lattice."""
    x = _normalize(x)
    if not _in_root_lattice(x):
        raise DominanceError(f"{x} is not in the root lattice")
    top, _ = rs.dominant_rep(x)
    out = set()
    for nu in dominant_below(rs, top):
        out |= rs.weyl_orbit(nu)
    return frozenset(out)


@dataclass(frozen=True)
class HullDescription:
    lower: Tuple
    upper: Tuple
    orbit: FrozenSet[Vector]

    def __contains__(self, y) -> bool:
        return all(lo <= a <= hi for lo, a, hi in zip(self.lower, y, self.upper))


def dconv_hull(rs: RootSystem, x: Vector) -> HullDescription:
    """Bounds of each ``mu_i`` over the orbit ``W.x``."""
    orbit = rs.weyl_orbit(x)
    lower = tuple(min(v[i] for v in orbit) for i in range(rs.rank))
    upper = tuple(max(v[i] for v in orbit) for i in range(rs.rank))
    return HullDescription(lower, upper, orbit)


def in_orbit_hull(rs: RootSystem, x: Vector, y: Vector) -> bool:
    """Membership in the W-saturated dual hull: every ``w(y)`` obeys the orbit bounds."""
    hull = dconv_hull(rs, x)
    return all(v in hull for v in rs.weyl_orbit(y))


def lattice_points(rs: RootSystem, hull: HullDescription, base: Vector) -> List[Vector]:
    """Points of ``base + Q`` inside the coordinate box of ``hull``."""
    ranges = [
        [b + k for k in range(math.ceil(lo - b), math.floor(hi - b) + 1)]
        for lo, hi, b in zip(hull.lower, hull.upper, base)
    ]
    return [_normalize(p) for p in itertools.product(*ranges)]


def hull_discrepancies(rs: RootSystem, x: Vector) -> dict:
    """Compare the literal coordinate box with :func:`a_type_set` on ``x + Q``.

    Returns the lattice points that lie in the box but not in the set
    (``box_only``) and the converse (``set_only``; expected empty).
    """
    hull = dconv_hull(rs, x)
    A = a_type_set(rs, x)
    box = set(lattice_points(rs, hull, x))
    return {"box_only": sorted(box - A), "set_only": sorted(A - box)}


def wconv_membership(rs: RootSystem, x: Vector, y: Vector) -> bool:
    """Whether ``y`` lies in every root half-apartment containing ``W.x``."""
    cx = complex_of(rs)
    orbit = rs.weyl_orbit(x)
    for b in range(cx.nroots):
        vals = [cx.pair(v, b) for v in orbit]
        if not min(vals) <= cx.pair(y, b) <= max(vals):
            return False
    return True
