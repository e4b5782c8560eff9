"""Exact weight, alcove and translation-character combinatorics for
simple Lie algebras at rational shifted level.

All computations are exact (integers and ``fractions.Fraction``); floats
are rejected at the type boundary.
"""

from .affine import (
    AffineWeylElement,
    Level,
    LeveledWeight,
    affine_apply,
    alcove_rep,
    compose_affine,
    dominant_orbit,
    enumerate_dominant,
    finite_element,
    identity_element,
    in_fundamental_alcove,
    inverse_affine,
    is_regular,
    linked,
    theta_wall_reflection,
    translation_element,
)
from .annihilator import (
    SubmoduleLabels,
    admissible_list,
    make_labels,
    singular_generator_label,
    transport,
)
from .errors import (
    AfftransError,
    DatumInvalidError,
    DimensionCapError,
    DomainError,
    InternalInconsistencyError,
    InvalidRootSystemError,
    IterationLimitError,
)
from .finchar import (
    DEFAULT_CAP,
    dimension,
    tensor_decompose,
    tensor_oracle,
    weight_multiplicities,
)
from .rootsys import (
    RootSystem,
    RootSystemSpec,
    Weight,
    bilinear,
    build_root_system,
    coroot_pairings,
    pairing,
    root_coords,
    root_system,
)
from .translate import (
    LinkageCharacter,
    TranslationDatum,
    check_datum,
    kl_weyl_filtration,
    make_character,
    project_linkage,
    round_trip_check,
    translate_character,
    translate_verma,
    translate_weyl,
    translation_weight,
    verify_weight_geometry,
    verma_filtration,
)
from .weyl import (
    WeylElement,
    bar_involution,
    dominant_rep,
    enumerate_elements,
    longest_element,
    orbit,
    reflection_in_root,
)

__version__ = "0.1.0"

__all__ = [
    "AffineWeylElement",
    "AfftransError",
    "DEFAULT_CAP",
    "DatumInvalidError",
    "DimensionCapError",
    "DomainError",
    "InternalInconsistencyError",
    "InvalidRootSystemError",
    "IterationLimitError",
    "Level",
    "LeveledWeight",
    "LinkageCharacter",
    "RootSystem",
    "RootSystemSpec",
    "SubmoduleLabels",
    "TranslationDatum",
    "Weight",
    "WeylElement",
    "admissible_list",
    "affine_apply",
    "alcove_rep",
    "bar_involution",
    "bilinear",
    "build_root_system",
    "check_datum",
    "compose_affine",
    "coroot_pairings",
    "dimension",
    "dominant_orbit",
    "dominant_rep",
    "enumerate_dominant",
    "enumerate_elements",
    "finite_element",
    "identity_element",
    "in_fundamental_alcove",
    "inverse_affine",
    "is_regular",
    "kl_weyl_filtration",
    "linked",
    "longest_element",
    "make_character",
    "make_labels",
    "orbit",
    "pairing",
    "project_linkage",
    "reflection_in_root",
    "root_coords",
    "root_system",
    "round_trip_check",
    "singular_generator_label",
    "tensor_decompose",
    "tensor_oracle",
    "theta_wall_reflection",
    "translate_character",
    "translate_verma",
    "translate_weyl",
    "translation_element",
    "translation_weight",
    "transport",
    "verify_weight_geometry",
    "verma_filtration",
    "weight_multiplicities",
]
