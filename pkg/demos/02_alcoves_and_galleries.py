"""
Alcoves, panels and folded galleries in rank one
================================================

The A1 complex is a line cut at the half-integers (in root coordinates).
A gallery of type (0,) from the origin either crosses its one panel or
stutters there; the stutter is allowed only when the wall separates the
alcove from the antidominant side.
"""

from alcovefold.affine_coxeter import alcove_vertices, fundamental_alcove, minimal_gallery
from alcovefold.galleries import enumerate_positively_folded, format_gallery, gallery_type, unfold
from alcovefold.root_system import construct

rs = construct("A1")
fa = fundamental_alcove(rs)
print("fundamental alcove vertices:", alcove_vertices(rs, fa))

# a shortest gallery from 0 to alpha1 passes two alcoves
g = minimal_gallery(rs, (1,))
print("minimal gallery:", [a.levels for a in g.alcoves], "type", gallery_type(g))

# all positively folded galleries of that type
for h in enumerate_positively_folded(rs, gallery_type(g)):
    u, script = unfold(h)
    print(format_gallery(h), "   unfolds to end", u.target, "script", list(script))

# the same in A2: seven endpoints, the orbit of alpha1+alpha2 plus the origin
a2 = construct("A2")
t = gallery_type(minimal_gallery(a2, (1, 1)))
ends = sorted({h.target for h in enumerate_positively_folded(a2, t)})
print("A2 endpoints:", ends)
