"""
Root systems in exact arithmetic
================================

Vectors are tuples of simple-root coefficients.  Everything below is
integers and fractions; nothing is rounded.
"""

from alcovefold.root_system import construct

# A2: Cartan matrix, positive roots, and the highest root
rs = construct("A2")
print("A2 Cartan matrix:", rs.cartan)
print("positive roots:", rs.positive_roots)
print("highest root:", rs.highest_root)

# fundamental coweights are dual to the simple coroots
for i, om in enumerate(rs.fundamental_coweights, start=1):
    print(f"omega_{i} =", om, " labels:", rs.dynkin_labels(om))

# the Weyl group is enumerated by closing the simple reflections
for kind in ["A2", "B2", "G2", "A3", "F4"]:
    print(kind, "has", len(construct(kind).weyl_group()), "Weyl group elements")

# orbits and dominant representatives
print("orbit of alpha1+alpha2:", sorted(rs.weyl_orbit((1, 1))))
v, w = rs.dominant_rep((-1, -1))
print("dominant rep of -(alpha1+alpha2):", v, "via the word", w.word)

# in B2 and G2 the affine wall uses the highest short root
for kind in ["B2", "G2"]:
    r = construct(kind)
    print(kind, "highest root", r.highest_root, "highest short root", r.affine_root)
