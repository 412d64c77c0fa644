"""
Pictures of rank-2 complexes
============================

Writes SVG files next to this script: the A2 counterexample with one folded
gallery drawn, and the G2 complex for the short dominant weight.
"""

from pathlib import Path

from alcovefold.affine_coxeter import minimal_gallery
from alcovefold.galleries import endpoints, enumerate_positively_folded, gallery_type
from alcovefold.render import render_svg
from alcovefold.root_system import construct

here = Path(__file__).parent

rs = construct("A2")
gals = enumerate_positively_folded(rs, gallery_type(minimal_gallery(rs, (3, 3))))
folded = [g for g in gals if g.stutters][0]
(here / "a2_counterexample.svg").write_text(render_svg(rs, (3, 3), endpoints(gals), folded, marks=[(4, 2)]))

g2 = construct("G2")
lam = g2.from_dynkin_labels((1, 0))
gals = enumerate_positively_folded(g2, gallery_type(minimal_gallery(g2, lam)))
(here / "g2.svg").write_text(render_svg(g2, lam, endpoints(gals)))
print("wrote", sorted(p.name for p in here.glob("*.svg")))
