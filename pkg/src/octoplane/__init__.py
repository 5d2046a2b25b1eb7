"""Cayley-Dickson algebras, the projective plane they carry, and its topology."""

from .algebra import (
    CDNumber,
    LevelMismatchError,
    MultiplicationTable,
    TableSizeError,
    ZeroDivisorWarning,
    basis_element,
    build_table,
    cd_from_json,
    cd_to_json,
    embed,
    inner_product,
)
from .properties import (
    PropertyReport,
    associator,
    check_alternative,
    check_associative,
    check_commutative,
    check_flexible,
    check_norm_multiplicative,
    check_two_generated_associativity,
    expected_verdict,
    find_zero_divisors,
    random_exact,
)
from .projective import (
    Functional,
    InvariantSextuple,
    LinePoint,
    MembershipError,
    OutsideChartError,
    SeparationError,
    TriplePoint,
    attaching_map,
    chart_backward,
    chart_forward,
    disk_extension,
    equivalent,
    eval_functional,
    invariants_of,
    line_equivalent,
    line_include,
    line_to_sphere,
    separating_functional,
    sphere_to_line,
)
from .topology import (
    INTEGERS,
    RATIONALS,
    AbelianGroup,
    CoefficientSpec,
    CWDescription,
    GeometryError,
    InconsistencyError,
    builtin_cw,
    cohomology,
    cohomology_profile,
    gauss_linking_number,
    homology,
    invariant_factors,
    linking_hopf_invariant,
    multiplication_bidegree,
    ring_consistency_op3,
    smith_normal_form,
)

__version__ = "0.1.0"
