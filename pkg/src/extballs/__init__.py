"""Extended Hamming balls in F_q^3: cardinalities, intersections, short coverings."""
from .certificate import CoveringCertificate
from .covering import (
    BoundsRow,
    bounds_table,
    builtin_cover,
    counting_lower_bound,
    is_short_covering,
    necessary_conditions_check,
)
from .errors import ExtBallsError
from .gf import FieldSpec, field_of_order, make_field
from .hamming import (
    Vec3,
    VecSet,
    ball,
    domain_Aq,
    domain_Dq,
    extended_ball,
    hamming_distance,
    restricted_ball,
    restricted_extended_ball,
    tilde_E_cardinality_formula,
    vec,
)
from .intersections import Family, rho, rho_min, theta
from .search import exhaustive_c
from .symmetry import GroupElement, act, canonical_form, make_group, metodo_certificate, orbit, orbits

__version__ = "0.1.0"
