"""Exact graded supercommutative algebras over finite abelian groups,
homogeneous decomposition by group averaging, graded morphisms, and
graded coverings of superdomains and supermanifold atlases."""

from .cyclotomic import Cyclotomic, cyclotomic_polynomial, euler_phi, root_of_unity
from .errors import (
    CoveringError,
    ExprSyntaxError,
    GradedError,
    MorphismValidationError,
    NotInvertibleError,
    SignatureMismatchError,
)
from .groups import (
    Character,
    FiniteAbelianGroup,
    GroupElement,
    ParityMap,
    character_table,
    make_group,
    parse_group_spec,
    parse_parity_spec,
)
from .algebra import (
    GradedSignature,
    SuperMonomial,
    SuperPolynomial,
    SuperRational,
    SuperSignature,
    decompose_oracle,
)
from .morphisms import GradedMorphism, SuperMorphism, compose, identity_morphism
from .covering import (
    Atlas,
    CocycleFailure,
    CocycleReport,
    check_cocycle,
    covering_map,
    covering_signature,
    graded_copy_name,
    lift_atlas,
    lift_mixed,
    lift_super,
)
from .expressions import format_expression, parse_expression

__all__ = [
    "Atlas",
    "Character",
    "CocycleFailure",
    "CocycleReport",
    "CoveringError",
    "Cyclotomic",
    "ExprSyntaxError",
    "FiniteAbelianGroup",
    "GradedError",
    "GradedMorphism",
    "GradedSignature",
    "GroupElement",
    "MorphismValidationError",
    "NotInvertibleError",
    "ParityMap",
    "SignatureMismatchError",
    "SuperMonomial",
    "SuperMorphism",
    "SuperPolynomial",
    "SuperRational",
    "SuperSignature",
    "character_table",
    "check_cocycle",
    "compose",
    "covering_map",
    "covering_signature",
    "cyclotomic_polynomial",
    "decompose_oracle",
    "euler_phi",
    "format_expression",
    "graded_copy_name",
    "identity_morphism",
    "lift_atlas",
    "lift_mixed",
    "lift_super",
    "make_group",
    "parse_expression",
    "parse_group_spec",
    "parse_parity_spec",
    "root_of_unity",
]

__version__ = "0.1.0"
