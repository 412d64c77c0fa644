"""
Endpoints of folded galleries fill the dual hull
================================================

For each dominant lambda of a small grid, enumerate the positively folded
galleries of the type of a minimal gallery 0 -> lambda and compare their
endpoints with the lattice points of the dual hull.  Each gallery is also
unfolded to a minimal one and folded back.
"""

import time

from alcovefold.affine_coxeter import minimal_gallery, minimal_gallery_types
from alcovefold.cli import grid
from alcovefold.convexity import a_type_set
from alcovefold.galleries import (
    GalleryType,
    apply_fold_script,
    endpoints,
    enumerate_positively_folded,
    gallery_type,
    unfold,
)
from alcovefold.root_system import construct

for kind, height in [("A2", 4), ("B2", 3), ("G2", 2)]:
    rs = construct(kind)
    for labels, lam in grid(rs, height):
        start = time.perf_counter()
        t = gallery_type(minimal_gallery(rs, lam))
        gals = enumerate_positively_folded(rs, t)
        ends = endpoints(gals)
        same = ends == a_type_set(rs, lam)
        # other minimal types give the same endpoint set
        others = minimal_gallery_types(rs, lam, 3)
        stable = all(endpoints(enumerate_positively_folded(rs, GalleryType(0, o, 0))) == ends for o in others)
        refold = all(apply_fold_script(*unfold(g)) == g for g in gals)
        print(f"{kind} {labels}: {len(gals):4d} galleries, {len(ends):3d} endpoints, "
              f"match={same} types={len(others)} stable={stable} refold={refold} "
              f"({time.perf_counter() - start:.2f}s)")
