"""Admissible weights and transport of submodule labels between classes.

Submodules of a Weyl module are tracked only through the labels of their
singular generators: affine Weyl group elements whose dot image of the base
weight is dominant.  Transport re-bases a label set along the translation
functor, generator by generator, re-deriving each image through the
filtration check.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import affine, translate
from .affine import AffineWeylElement, Level, LeveledWeight
from .errors import DomainError
from .rootsys import RootSystem, Weight


@dataclass(frozen=True)
class SubmoduleLabels:
    """Generators of a submodule of the Weyl module over ``base``."""

    base: Weight
    level: Level
    generators: frozenset


def make_labels(rs: RootSystem, base, generators, level: Level) -> SubmoduleLabels:
    """Validated label set: non-identity generators with dominant images."""
    base = base if isinstance(base, Weight) else Weight(base)
    if not affine.in_fundamental_alcove(rs, LeveledWeight(base, level)):
        raise DomainError(
            f"base {base} is not strictly inside the fundamental alcove "
            f"at level {level}")
    gens = frozenset(generators)
    for g in gens:
        if g.is_identity:
            raise DomainError("the identity labels the whole module, "
                              "not a proper submodule")
        image = affine.affine_apply(rs, g, base, level)
        if not image.is_dominant:
            raise DomainError(f"generator {g} sends {base} to {image}, "
                              "outside the dominant cone")
    return SubmoduleLabels(base=base, level=level, generators=gens)


def admissible_list(rs: RootSystem, level: Level,
                    integral_only: bool = True) -> list:
    """Integral weights in the dominant alcove that are regular at ``level``.

    These label the admissible simple quotients.  Only the integral family
    is enumerated here; the non-integral admissibles form a larger set that
    this library does not model.
    """
    if not integral_only:
        raise NotImplementedError(
            "non-integral admissible weights are not modelled")
    return [w for w in affine.enumerate_dominant(rs, level)
            if affine.is_regular(rs, w, level)]


def singular_generator_label(rs: RootSystem, level: Level) -> AffineWeylElement:
    """Label of the singular vector generating the maximal submodule at 0.

    This is the affine reflection through the wall ``(x, theta) = p`` of the
    shifted chamber; its dot action sends 0 to ``(p - (rho, theta)) theta``.
    Requires the zero weight to be regular at ``level``.
    """
    zero = Weight.zero(rs.rank)
    if not affine.is_regular(rs, zero, level):
        raise DomainError(f"weight 0 is singular at level {level}")
    return affine.theta_wall_reflection(rs, level)


def transport(rs: RootSystem, labels: SubmoduleLabels, lam) -> SubmoduleLabels:
    """Re-base a label set from 0 to ``lam`` along the translation functor.

    Every generator is pushed through :func:`translate.translate_weyl`, so
    each image is certified by the single-survivor filtration check; a
    failure there propagates as an internal-inconsistency error.  The
    generator set itself is carried over unchanged, so inclusions of label
    sets are preserved verbatim.
    """
    zero = Weight.zero(rs.rank)
    if labels.base != zero:
        raise DomainError(f"transport starts from base 0, not {labels.base}")
    lam = lam if isinstance(lam, Weight) else Weight(lam)
    for g in labels.generators:
        translate.translate_weyl(rs, g, zero, lam, labels.level)
    return SubmoduleLabels(base=lam, level=labels.level,
                           generators=labels.generators)
