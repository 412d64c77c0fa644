"""
Two hulls of one orbit
======================

In A2 take x = 3a1 + 3a2 and y = 4a1 + 2a2.  The point y lies between the
root hyperplanes bounding the orbit W.x, yet it is farther from the origin
than x in gallery distance, so no folding of galleries of the type of x can
reach it.  The dual hull, cut out by the simple-root coordinates, excludes it.
"""

from alcovefold.affine_coxeter import gallery_distance
from alcovefold.convexity import a_type_set, dconv_hull, in_positive_cone, wconv_membership
from alcovefold.root_system import construct

rs = construct("A2")
x, y = (3, 3), (4, 2)

print("delta(0, x) =", gallery_distance(rs, (0, 0), x))
print("delta(0, y) =", gallery_distance(rs, (0, 0), y))
print("y in the root-hyperplane hull of W.x:", wconv_membership(rs, x, y))

hull = dconv_hull(rs, x)
print("dual hull box:", hull.lower, "..", hull.upper, " y inside:", y in hull)
print("x - y in the positive cone:", in_positive_cone(rs, (x[0] - y[0], x[1] - y[1])))
print("y among the type-0 points of the dual hull:", y in a_type_set(rs, x))
