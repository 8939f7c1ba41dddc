"""Executable algebra of parabolic sheaves on logarithmic schemes.

Finitely presented commutative monoids with a decided word problem, Kummer
homomorphisms and their fundamental domains, Kato charts into explicit rings,
graded root-stack coordinate algebras, parabolic sheaves in chart form, and
the constructive equivalence between the latter and graded modules.
"""

from .bounds import Bounds, DEFAULT_BOUNDS
from .chart import (
    KatoChart,
    RationalPoint,
    algebra_grading,
    chart_kernel,
    df_quotient,
    make_chart,
    stalk_df,
)
from .equivalence import (
    GradedPresentation,
    free_presentation,
    graded_hom_dimension,
    monoidal_compat_check,
    phi,
    psi,
    roundtrip_check,
    tensor_presentations,
    zero_presentation,
)
from .errors import (
    InputError,
    LogrootError,
    ResourceError,
    UnsupportedOperationError,
    ValidationError,
)
from .fields import GF, QQ
from .kummer import (
    DenominatorSystem,
    induced_kernel,
    is_kummer,
    lift_degree,
    make_denominator_system,
)
from .lattice import FgAbelianGroup, LatticeMap, PresentedGroup, cokernel_group, membership, smith_normal_form
from .linalg import Matrix
from .monoid import (
    FpMonoid,
    MonoidHom,
    SubmonoidGens,
    cokernel_analyze,
    hom_cokernel,
    kernel,
    kernel_closure,
    quotient,
    submonoid_contains,
)
from .parabolic import (
    ParabolicMorphism,
    ParabolicSheaf,
    RModule,
    WeightCategory,
    direct_sum,
    hom_dimension,
    make_parabolic,
    parabolic_hom,
    parabolic_tensor,
    twist,
    unit_sheaf,
    weight_arrow,
    zero_sheaf,
)
from .poly import BaseRing, RingElement, parse_element, ring_from_literal
from .rootalg import GradedRootAlgebra, build_root_algebra, classify_stack

__all__ = [
    "Bounds",
    "DEFAULT_BOUNDS",
    "BaseRing",
    "DenominatorSystem",
    "FgAbelianGroup",
    "FpMonoid",
    "GF",
    "GradedPresentation",
    "GradedRootAlgebra",
    "InputError",
    "KatoChart",
    "LatticeMap",
    "LogrootError",
    "Matrix",
    "MonoidHom",
    "ParabolicMorphism",
    "ParabolicSheaf",
    "PresentedGroup",
    "QQ",
    "RModule",
    "RationalPoint",
    "ResourceError",
    "RingElement",
    "SubmonoidGens",
    "UnsupportedOperationError",
    "ValidationError",
    "WeightCategory",
    "algebra_grading",
    "build_root_algebra",
    "chart_kernel",
    "classify_stack",
    "cokernel_analyze",
    "cokernel_group",
    "df_quotient",
    "direct_sum",
    "free_presentation",
    "graded_hom_dimension",
    "hom_cokernel",
    "hom_dimension",
    "induced_kernel",
    "is_kummer",
    "kernel",
    "kernel_closure",
    "lift_degree",
    "make_chart",
    "make_denominator_system",
    "make_parabolic",
    "membership",
    "monoidal_compat_check",
    "parabolic_hom",
    "parabolic_tensor",
    "parse_element",
    "phi",
    "psi",
    "quotient",
    "ring_from_literal",
    "roundtrip_check",
    "smith_normal_form",
    "stalk_df",
    "submonoid_contains",
    "tensor_presentations",
    "twist",
    "unit_sheaf",
    "weight_arrow",
    "zero_presentation",
    "zero_sheaf",
]
