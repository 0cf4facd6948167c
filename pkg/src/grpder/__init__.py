"""Exact computation of twisted derivations of group rings of finite groups.

The package computes (sigma, tau)-derivation spaces, inner subspaces and
first Hochschild cohomology dimensions over Q and prime fields, decides
innerness over Z by Smith normal form and by a gcd divisibility test, and
builds the commutative closed form and product-tower constructions.
"""

from .constructions import (
    TruncationBundle,
    build_truncation,
    class_preserving_check,
    commutative_derivation_form,
    find_unit_difference,
    inner_witness_with_support,
)
from .derivations import (
    DerivationMap,
    DerivationSpace,
    derivation_from_images,
    derivation_space,
    extend_scalars,
    gcd_criterion,
    h1_dimension,
    inner_derivation,
    inner_space,
    inner_witness,
    inner_witness_integer,
    is_derivation,
    twisted_centralizer,
    zc2_congruence_check,
)
from .errors import (
    AbelianBase,
    AlgebraError,
    Cancelled,
    CentralChoice,
    DifferenceNotAUnit,
    MixedGroups,
    MixedRings,
    NotAbelian,
    NotADerivation,
    NotAField,
    NotAGroup,
    NotAHomomorphism,
    NotAnAutomorphism,
    NotAUnit,
    NotAWitness,
    NotCentral,
    NotClassPreserving,
    NotMultiplicative,
    OrderCapExceeded,
    UnknownGroupName,
)
from .group_ring import (
    GroupRingElement,
    RingEndomorphism,
    augmentation,
    center_basis,
    commutator_subspace,
    conjugation_endo,
    endo_from_group_map,
    endo_from_images,
    identity_endo,
    invert,
    is_central_endo,
    multiply,
)
from .groups import (
    FiniteGroup,
    Subset,
    center,
    center_transversal,
    conjugacy_classes,
    direct_product,
    make_from_table,
    standard_group,
)
from .linalg import (
    ExactMatrix,
    LinearSystem,
    SNFDecomposition,
    determinant,
    gcd_list,
    integer_solve,
    kernel_basis,
    smith_normal_form,
    solve,
)
from .rings import GF, QQ, ZZ, Ring
from .util import CancelToken

__version__ = "0.1.0"

__all__ = [
    "AbelianBase",
    "AlgebraError",
    "Cancelled",
    "CancelToken",
    "CentralChoice",
    "DerivationMap",
    "DerivationSpace",
    "DifferenceNotAUnit",
    "ExactMatrix",
    "FiniteGroup",
    "GF",
    "GroupRingElement",
    "LinearSystem",
    "MixedGroups",
    "MixedRings",
    "NotAbelian",
    "NotADerivation",
    "NotAField",
    "NotAGroup",
    "NotAHomomorphism",
    "NotAnAutomorphism",
    "NotAUnit",
    "NotAWitness",
    "NotCentral",
    "NotClassPreserving",
    "NotMultiplicative",
    "OrderCapExceeded",
    "QQ",
    "Ring",
    "RingEndomorphism",
    "SNFDecomposition",
    "Subset",
    "TruncationBundle",
    "UnknownGroupName",
    "ZZ",
    "augmentation",
    "build_truncation",
    "center",
    "center_basis",
    "center_transversal",
    "class_preserving_check",
    "commutative_derivation_form",
    "commutator_subspace",
    "conjugacy_classes",
    "conjugation_endo",
    "derivation_from_images",
    "derivation_space",
    "determinant",
    "direct_product",
    "endo_from_group_map",
    "endo_from_images",
    "extend_scalars",
    "find_unit_difference",
    "gcd_criterion",
    "gcd_list",
    "h1_dimension",
    "identity_endo",
    "inner_derivation",
    "inner_space",
    "inner_witness",
    "inner_witness_integer",
    "inner_witness_with_support",
    "integer_solve",
    "invert",
    "is_central_endo",
    "is_derivation",
    "kernel_basis",
    "make_from_table",
    "multiply",
    "smith_normal_form",
    "solve",
    "standard_group",
    "twisted_centralizer",
    "zc2_congruence_check",
]
