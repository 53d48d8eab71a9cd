"""Exact construction and verification of Z2 x Z2-graded matrix Lie
algebras: the six classical families, their graded brackets under both
sign rules, graded transposes, dimension profiles, structure constants,
and the parafermion generators living inside the odd orthogonal family.

All arithmetic is exact over Q(sqrt 2).
"""

from . import kernels
from .axioms import (
    AXIOM_NAMES,
    CheckReport,
    SpanEscapeError,
    StructureConstants,
    cartan_diagonal,
    check_axioms,
    check_family_closure,
    check_four_identities,
    check_generation,
    check_identities_sample,
    check_permutation_stability,
    structure_constants,
)
from .exactnum import ExactMatrix, ONE, SQRT2, Scalar, ZERO, nullspace, rank, rref, span_dim
from .families import (
    AlgebraFamily,
    Block,
    BlockTemplate,
    DefiningForm,
    DimensionProfile,
    FamilyConstructionError,
    FamilyKind,
    GradedBasis,
    Membership,
    block_template,
    build_basis,
    classical_counterpart_dims,
    defining_form,
    dimension_profile,
    dimension_profile_measured,
    family_signature,
    is_member,
    satisfies_template,
    so_odd_signature_readings,
    template_instances,
)
from .grading import (
    D00,
    D01,
    D10,
    D11,
    DEGREES,
    Degree,
    GradedMatrix,
    GradingSignature,
    SignRule,
    degree_permutations,
    degree_sign,
    graded_bracket,
    graded_product,
    graded_transpose,
    permute_grading,
)
from .parafermions import (
    ParafermionSystem,
    build_system,
    check_pf,
    check_pfrel,
    identify_subspaces,
)

__version__ = "0.1.0"
