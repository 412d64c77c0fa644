"""
Weight multiplicities as an independent check
=============================================

Freudenthal's recursion gives the dominant weights of V(lambda) with their
multiplicities.  Its support should be exactly the dominant part of the
dual hull, and the multiplicities weighted by orbit size should add up to
Weyl's dimension.
"""

from alcovefold.characters import freudenthal, orbit_weighted_dimension, weyl_dim
from alcovefold.convexity import a_type_set
from alcovefold.root_system import construct

for kind, lam in [("A2", (1, 1)), ("A2", (3, 3)), ("G2", (3, 2)), ("B3", (1, 2, 2))]:
    rs = construct(kind)
    table = freudenthal(rs, lam)
    dominant = {v for v in a_type_set(rs, lam) if rs.is_dominant(v)}
    print(f"{kind} lambda={lam}: dim {weyl_dim(rs, lam)}, "
          f"sum m|W.nu| = {orbit_weighted_dimension(rs, table)}, "
          f"support matches hull: {set(table.entries) == dominant}")
    for nu, m in table.entries.items():
        print("    ", nu, m)
