"""Positively folded galleries and dual convexity in affine Coxeter complexes."""
from .affine_coxeter import (
    AffineHyperplane,
    Alcove,
    Panel,
    alcoves_containing,
    cross,
    fundamental_alcove,
    gallery_distance,
    minimal_gallery,
    minimal_gallery_types,
    panel_of,
    separates,
    vertex_type,
)
from .characters import MultiplicityTable, freudenthal, support_check, weyl_dim
from .convexity import (
    a_type_set,
    dconv_hull,
    dominance_leq,
    in_positive_cone,
    mu_coords,
    wconv_membership,
)
from .galleries import (
    FoldScript,
    Gallery,
    GalleryType,
    apply_fold_script,
    endpoints,
    enumerate_positively_folded,
    gallery_type,
    is_positively_folded,
    unfold,
)
from .root_system import RootSystem, RootSystemKind, WeylElement, construct

__version__ = "0.1.0"
