"""Mirror Hodge diamonds of toric Fano threefolds computed from reflexive 3-polytopes."""

from .config import BatchConfig, CorpusConfig
from .faces import DualPair, Face, FaceLattice, dual_face, enumerate_faces, minimal_face_containing
from .hodge import (
    BlowupLedger,
    ToricHodgeData,
    base_locus_ledger,
    h11_resolution,
    h11_Z_closed,
    h21_Z,
    ks_lemma_check,
    ph,
    pic_toric_fiber,
    picard_sum_relation,
    toric_hodge_data,
)
from .lattice import FacetInequality, LatticePolytope, convex_hull, is_reflexive, lattice_points, polar_dual
from .mirror import (
    HodgeDiamond,
    VerificationRecord,
    assemble_f_diamond,
    check_extremal,
    toric_hodge_diamond,
    verify_mirror,
)
from .sphere import SimplicialSurface, boundary_complex, smith_normal_form, sphere_check, triangulate_facet

__version__ = "0.1.0"
