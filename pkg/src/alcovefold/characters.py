"""Weight multiplicities of irreducible highest-weight modules.

Freudenthal's recursion and Weyl's dimension formula, both in exact
arithmetic.  They serve as an oracle for the support of a character that is
independent of any gallery or convex-hull computation.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict

from .convexity import dominance_leq
from .root_system import RootSystem, Vector, _normalize


class OracleError(ArithmeticError):
    pass


@dataclass(frozen=True)
class MultiplicityTable:
    highest: Vector
    entries: Dict[Vector, int] = field(hash=False)

    def __getitem__(self, nu):
        return self.entries.get(_normalize(nu), 0)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


def freudenthal(rs: RootSystem, lam: Vector) -> MultiplicityTable:
    """Multiplicities of the dominant weights of ``V(lam)``.

    Candidates ``nu - beta`` (``beta`` a positive root) are processed from
    the top down by height; only candidates with positive multiplicity are
    kept and expanded further.
    """
    lam = _normalize(lam)
    if not rs.is_dominant(lam):
        raise OracleError(f"{lam} is not dominant")
    rho = rs.weyl_vector
    roots = rs.positive_roots
    shifted = tuple(a + b for a, b in zip(lam, rho))
    top = rs.form(shifted, shifted)

    mult: Dict[Vector, int] = {lam: 1}
    heap = []
    queued = {lam}

    def push_below(nu):
        for beta in roots:
            cand = _normalize(a - b for a, b in zip(nu, beta))
            if cand not in queued and rs.is_dominant(cand):
                queued.add(cand)
                heapq.heappush(heap, (-sum(cand), cand))

    def lookup(v):
        return mult.get(rs.dominant_rep(v)[0], 0)

    push_below(lam)
    while heap:
        _, nu = heapq.heappop(heap)
        total = Fraction(0)
        for beta in roots:
            k = 1
            while True:
                v = tuple(a + k * b for a, b in zip(nu, beta))
                m = lookup(v)
                if not m:
                    break
                total += m * rs.form(v, beta)
                k += 1
        s = tuple(a + b for a, b in zip(nu, rho))
        denom = top - rs.form(s, s)
        if denom == 0:
            raise OracleError(f"vanishing Freudenthal denominator at {nu}")
        m = 2 * total / denom
        if m.denominator != 1:
            raise OracleError(f"non-integral multiplicity {m} at {nu}")
        if m > 0:
            mult[nu] = int(m)
            push_below(nu)
    return MultiplicityTable(lam, dict(sorted(mult.items(), key=lambda kv: (-sum(kv[0]), kv[0]))))


def weyl_dim(rs: RootSystem, lam: Vector) -> int:
    lam = _normalize(lam)
    if not rs.is_dominant(lam):
        raise OracleError(f"{lam} is not dominant")
    rho = rs.weyl_vector
    shifted = tuple(a + b for a, b in zip(lam, rho))
    d = Fraction(1)
    for beta in rs.positive_roots:
        d *= rs.form(shifted, beta) / rs.form(rho, beta)
    if d.denominator != 1:
        raise OracleError(f"non-integral dimension {d}")
    return int(d)


def orbit_weighted_dimension(rs: RootSystem, table: MultiplicityTable) -> int:
    """``sum m(nu) |W.nu|`` over the dominant weights of the table."""
    return sum(m * len(rs.weyl_orbit(nu)) for nu, m in table.entries.items())


def support_check(rs: RootSystem, lam: Vector) -> bool:
    """Positive multiplicities occur exactly at the dominant ``nu <= lam``."""
    from .convexity import a_type_set, dominant_below

    lam = _normalize(lam)
    support = set(freudenthal(rs, lam).entries)
    below = {nu for nu in dominant_below(rs, lam) if dominance_leq(rs, nu, lam)}
    dominant_part = {v for v in a_type_set(rs, lam) if rs.is_dominant(v)}
    return support == below == dominant_part
