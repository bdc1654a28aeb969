"""Exact twisted homology of the subspace flag complex of F_q^n.

The package builds the order complex of proper nonzero subspaces of
F_q^n, computes its homology with coefficients in exterior powers of the
smallest-subspace local system, materializes the explicit cycle families
(apartment cycles, pushed octahedron cycles, relation cycles, circuit
cycles), and searches for minimum-support nonzero cycles, with closed-form
dimension values available as independent cross-checks.
"""

__version__ = "0.1.0"

from .complexes import (
    AbstractComplex,
    BuildingComplex,
    FlagMap,
    FlagSimplex,
    apartment,
    barycentric_subdivision,
    coned_octahedron,
    octahedral_sphere,
    subdivided_octahedron,
    tail_sequences,
)
from .cycles import (
    apartment_cycle,
    building_cycle,
    circuit_cycle,
    d1_basis,
    dn1_basis,
    enumerate_frames,
    octahedron_cycle,
    push_forward,
    relation_cycle,
)
from .exterior import (
    WedgeVector,
    grade_form,
    star,
    unit_perp,
    wedge,
    wedge_basis_of_subspace,
    wedge_power_subspace,
)
from .fields import Field, make_field
from .formulas import (
    dim_report,
    q_identity_checks,
    twisted_dim_alternating,
    twisted_dim_product_sum,
)
from .grassmann import (
    Subspace,
    enumerate_grassmannian,
    full_space,
    gauss_binomial,
    span_of,
    zero_space,
)
from .homology import (
    AmbientLocalSystem,
    TwistedChain,
    TwistedComplex,
    boundary_matrix,
    homology_dim,
    lusztig_system,
    simplex_intersection_system,
    twisted_complex,
    untwisted_system,
    verify_cycle,
)
from .mincycle import SearchReport, code_params, min_support_cycle

__all__ = [
    "__version__",
    "Field",
    "make_field",
    "Subspace",
    "span_of",
    "zero_space",
    "full_space",
    "enumerate_grassmannian",
    "gauss_binomial",
    "WedgeVector",
    "wedge",
    "grade_form",
    "star",
    "unit_perp",
    "wedge_basis_of_subspace",
    "wedge_power_subspace",
    "AbstractComplex",
    "BuildingComplex",
    "FlagMap",
    "FlagSimplex",
    "apartment",
    "barycentric_subdivision",
    "coned_octahedron",
    "octahedral_sphere",
    "subdivided_octahedron",
    "tail_sequences",
    "AmbientLocalSystem",
    "TwistedChain",
    "TwistedComplex",
    "twisted_complex",
    "boundary_matrix",
    "homology_dim",
    "lusztig_system",
    "untwisted_system",
    "simplex_intersection_system",
    "verify_cycle",
    "apartment_cycle",
    "octahedron_cycle",
    "building_cycle",
    "push_forward",
    "d1_basis",
    "dn1_basis",
    "relation_cycle",
    "circuit_cycle",
    "enumerate_frames",
    "SearchReport",
    "min_support_cycle",
    "code_params",
    "twisted_dim_product_sum",
    "twisted_dim_alternating",
    "dim_report",
    "q_identity_checks",
]
