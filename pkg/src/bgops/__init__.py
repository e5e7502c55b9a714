"""Higher string topology operations on mod-2 homology of classifying spaces.

The library computes the rank-k operations on H_*(BG; F2) for G an
elementary abelian 2-group, a dihedral group of order 2 mod 4, a torus,
SU(2), or a finite product of these; the weight-graded operations
indexed by homology classes of symmetric groups; independent chain-level
oracles (orbit sums, bar-resolution transfers, an equivariant 3-torus
complex); and nonvanishing certificates for homology classes of
holomorphs and automorphism groups of free groups and of affine groups.
"""

from .f2core import F2Matrix, binom_parity, f2_rank_kernel, f2_solve, multinomial_parity
from .gradedalg import (
    DPClass,
    GeneratorSet,
    SU2Class,
    beta_push,
    dp_coproduct,
    dp_multiply,
    linear_push,
    su2_act,
)
from .symhomology import (
    AdmissibleIndex,
    CircWord,
    SymClass,
    chain_to_dl,
    count_admissible,
    count_basis,
    dl_to_chain,
    iota_push,
    juxta_multiply,
)
from .operations import (
    A_count,
    CoefficientClass,
    Dihedral,
    GroupHypothesisError,
    OperationShape,
    ProductGroup,
    SU2,
    Torus,
    UnsupportedOperationError,
    WitnessResult,
    Z2Power,
    alpha,
    alpha_z2power_bruteforce,
    coefficient_basis,
    composite_op,
    format_group,
    group_dim,
    make_product,
    nontrivial_witness,
    parse_group,
    phi_sigma,
)
from .oracle import (
    FiniteAction,
    FiniteGroupTable,
    action_orbits,
    bar_homology,
    cayley_action,
    compsum_alpha,
    transfer_map,
)
from .t3 import T3Report, t3_verify
from .certify import (
    Certificate,
    CertificateBundle,
    FailureReport,
    StabilityInfo,
    Target,
    build_certificate,
    example_family,
    stable_image,
)

__all__ = [
    "A_count",
    "AdmissibleIndex",
    "Certificate",
    "CertificateBundle",
    "CircWord",
    "CoefficientClass",
    "DPClass",
    "Dihedral",
    "F2Matrix",
    "FailureReport",
    "FiniteAction",
    "FiniteGroupTable",
    "GeneratorSet",
    "GroupHypothesisError",
    "OperationShape",
    "ProductGroup",
    "SU2",
    "SU2Class",
    "StabilityInfo",
    "SymClass",
    "T3Report",
    "Target",
    "Torus",
    "UnsupportedOperationError",
    "WitnessResult",
    "Z2Power",
    "action_orbits",
    "alpha",
    "alpha_z2power_bruteforce",
    "bar_homology",
    "beta_push",
    "binom_parity",
    "build_certificate",
    "cayley_action",
    "chain_to_dl",
    "coefficient_basis",
    "composite_op",
    "compsum_alpha",
    "count_admissible",
    "count_basis",
    "dl_to_chain",
    "dp_coproduct",
    "dp_multiply",
    "example_family",
    "f2_rank_kernel",
    "f2_solve",
    "format_group",
    "group_dim",
    "iota_push",
    "juxta_multiply",
    "linear_push",
    "make_product",
    "multinomial_parity",
    "nontrivial_witness",
    "parse_group",
    "phi_sigma",
    "stable_image",
    "su2_act",
    "t3_verify",
    "transfer_map",
]
