"""Exact combinatorics of root posets, dominant Shi regions, and their rings.

The package builds positive root systems of any finite Dynkin type from
Cartan data, enumerates antichains of the root order together with the
ideal-containment order on them, computes the attached Catalan numbers and
q-analogs, materializes the ring of locally-constant integer functions on
the dominant Shi regions in its idempotent and step-function bases, builds
the isomorphic ring presented by generators and relations, and classifies
or constructs exact rational points of the regions.
"""

from .antichains import (
    Antichain,
    AntichainPoset,
    UpperIdeal,
    antichain_leq,
    enumerate_antichains,
    ideal_of,
    minimal_elements,
    mobius_matrix,
    zeta_matrix,
)
from .catalan import (
    QPolynomial,
    catalan_number,
    dyck_area_polynomial,
    graded_distribution,
    q_catalan,
)
from .errors import (
    BoundaryError,
    ChamberError,
    InvalidTypeError,
    InvariantError,
    NotAntichainError,
    ShiringError,
)
from .heaviside import (
    FiltrationReport,
    RingElement,
    delta_element,
    filtration_rank,
    filtration_report,
    format_element,
    h_antichain,
    h_root,
    multiply,
    one,
    to_delta_basis,
    to_h_basis,
)
from .presented import (
    UElement,
    UMonomial,
    graded_product,
    monomial_product,
    monomial_times,
    multiplication_table,
    reduce_multiset,
    rho_map,
    rho_matrix,
    u_monomial,
    u_multiply,
)
from .regions import (
    RationalPoint,
    SignVector,
    classify_point,
    format_point,
    parse_point,
    point_slack,
    region_report,
    root_value,
    sign_vector,
    witness_point,
)
from .root_system import (
    DynkinType,
    Root,
    RootSystem,
    build_root_system,
    exponents_from_heights,
    root_leq,
)

__version__ = "0.1.0"

__all__ = [
    "Antichain",
    "AntichainPoset",
    "BoundaryError",
    "ChamberError",
    "DynkinType",
    "FiltrationReport",
    "InvalidTypeError",
    "InvariantError",
    "NotAntichainError",
    "QPolynomial",
    "RationalPoint",
    "RingElement",
    "Root",
    "RootSystem",
    "ShiringError",
    "SignVector",
    "UElement",
    "UMonomial",
    "UpperIdeal",
    "antichain_leq",
    "build_root_system",
    "catalan_number",
    "classify_point",
    "delta_element",
    "dyck_area_polynomial",
    "enumerate_antichains",
    "exponents_from_heights",
    "filtration_rank",
    "filtration_report",
    "format_element",
    "format_point",
    "graded_distribution",
    "graded_product",
    "h_antichain",
    "h_root",
    "ideal_of",
    "minimal_elements",
    "mobius_matrix",
    "monomial_product",
    "monomial_times",
    "multiplication_table",
    "multiply",
    "one",
    "parse_point",
    "point_slack",
    "q_catalan",
    "reduce_multiset",
    "region_report",
    "rho_map",
    "rho_matrix",
    "root_leq",
    "root_value",
    "sign_vector",
    "to_delta_basis",
    "to_h_basis",
    "u_monomial",
    "u_multiply",
    "witness_point",
    "zeta_matrix",
]
