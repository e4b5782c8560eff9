"""Translation between linkage classes, on labels and on characters.

A translation step is encoded combinatorially: tensor with the module whose
extreme weight is the dominant representative of ``lam - mu``, then project
onto the linkage class of the target.  On labels this sends ``g . mu`` to
``g . lam``; every public operation that claims this re-derives it through
the filtration and refuses to answer if the survivor is not unique.

Characters over a linkage class are stored in the Weyl basis: a base weight
strictly inside the fundamental alcove plus integer coefficients keyed by
canonical affine Weyl group elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import affine, finchar, weyl
from .affine import AffineWeylElement, Level, LeveledWeight
from .errors import DatumInvalidError, DomainError, InternalInconsistencyError
from .rootsys import RootSystem, Weight, root_coords


def _as_weight(rs: RootSystem, wt, what: str) -> Weight:
    w = wt if isinstance(wt, Weight) else Weight(wt)
    if len(w) != rs.rank:
        raise DomainError(f"{what} {w} has wrong rank for {rs.spec}")
    return w


def _require_regular_alcove(rs: RootSystem, wt, level: Level, what: str) -> Weight:
    """Weight strictly inside the fundamental alcove and off every wall."""
    w = _as_weight(rs, wt, what)
    if not w.is_integral:
        raise DomainError(f"{what} {w} is not integral")
    if not affine.in_fundamental_alcove(rs, LeveledWeight(w, level)):
        raise DomainError(
            f"{what} {w} is not strictly inside the fundamental alcove "
            f"at level {level}")
    if not affine.is_regular(rs, w, level):
        raise DomainError(f"{what} {w} is singular at level {level}")
    return w


def _in_dominant_alcove(rs: RootSystem, w: Weight, level: Level) -> bool:
    """Membership in P^+_k: dominant integral with (w + rho, theta) < p."""
    if not (w.is_integral and w.is_dominant):
        return False
    height = sum(r * (c + 1) for r, c in zip(rs.coroot_rows[-1], w))
    return height < level.p


@dataclass(frozen=True)
class TranslationDatum:
    """A validated translation triple at a fixed level."""

    lam_left: Weight
    lam_right: Weight
    lam: Weight
    level: Level


def check_datum(rs: RootSystem, lam_left, lam_right, lam,
                level: Level) -> TranslationDatum:
    """Validate a translation triple; raise a diagnostic naming what failed.

    Requires all three weights in the dominant alcove P^+_k and the
    difference ``lam_left - lam`` in the plain Weyl orbit of ``lam_right``.
    """
    named = [("lam_left", _as_weight(rs, lam_left, "lam_left")),
             ("lam_right", _as_weight(rs, lam_right, "lam_right")),
             ("lam", _as_weight(rs, lam, "lam"))]
    for what, w in named:
        if not _in_dominant_alcove(rs, w, level):
            raise DatumInvalidError(
                f"{what} {w} is not in the dominant alcove at level {level}")
    left, right, base = (w for _, w in named)
    diff = left - base
    rep, _, _ = weyl.dominant_rep(rs, diff)
    if rep != right:
        raise DatumInvalidError(
            f"difference {diff} is not in the Weyl orbit of lam_right {right}")
    return TranslationDatum(left, right, base, level)


def translation_weight(rs: RootSystem, lam, mu) -> Weight:
    """Dominant representative of ``lam - mu`` under the plain action."""
    diff = _as_weight(rs, lam, "lam") - _as_weight(rs, mu, "mu")
    if not diff.is_integral:
        raise DomainError(f"difference {diff} is not integral")
    rep, _, _ = weyl.dominant_rep(rs, diff)
    return rep


def kl_weyl_filtration(rs: RootSystem, lam, mu, *,
                       cap: int = finchar.DEFAULT_CAP) -> dict:
    """Weyl-factor multiplicities of the truncated tensor product.

    By the level-independence of the filtration multiplicities this is the
    finite tensor decomposition, and it must agree with it exactly.
    """
    return finchar.tensor_decompose(rs, lam, mu, cap=cap)


def project_linkage(rs: RootSystem, parts: dict, target, level: Level) -> dict:
    """Keep exactly the keys linked to ``target``; multiplicities unchanged."""
    tgt = _as_weight(rs, target, "target")
    if not affine.in_fundamental_alcove(rs, LeveledWeight(tgt, level)):
        raise DomainError(
            f"target {tgt} is not strictly inside the fundamental alcove "
            f"at level {level}")
    return {nu: m for nu, m in parts.items()
            if affine.linked(rs, nu, tgt, level)}


def translate_weyl(rs: RootSystem, g: AffineWeylElement, mu, lam,
                   level: Level, *, cap: int = finchar.DEFAULT_CAP) -> Weight:
    """Image of the Weyl-module label ``g . mu`` under translation to ``lam``.

    Returns ``g . lam`` only after re-deriving it: the projection of the
    tensor filtration onto the target class must contain exactly that label,
    with multiplicity one.
    """
    mu = _require_regular_alcove(rs, mu, level, "mu")
    lam = _require_regular_alcove(rs, lam, level, "lam")
    start = affine.affine_apply(rs, g, mu, level)
    if not start.is_dominant:
        raise DomainError(f"g.mu = {start} is not dominant")
    expected = affine.affine_apply(rs, g, lam, level)
    tau = translation_weight(rs, lam, mu)
    survivors = project_linkage(
        rs, kl_weyl_filtration(rs, tau, start, cap=cap), lam, level)
    if survivors != {expected: 1}:
        raise InternalInconsistencyError(
            f"translation of {start} to the class of {lam} has survivors "
            f"{{{', '.join(f'{k}:{v}' for k, v in survivors.items())}}}, "
            f"expected {{{expected}:1}}")
    return expected


def verify_weight_geometry(rs: RootSystem, lam, mu, g: AffineWeylElement,
                           level: Level, bound) -> bool:
    """Exhaustively confirm that ``g . lam`` is reached only the trivial way.

    Sweeps every factorisation ``w1 . lam = g . mu + nu`` with ``w1`` in the
    affine Weyl group and ``nu`` a weight of the translation module: since
    ``w1 = (t_beta, w)`` forces ``beta = (g . mu + nu) - w . lam``, checking
    every finite ``w`` against the translation lattice covers all of them.
    Returns True iff every solution has ``w1 = g`` and ``nu`` in the plain
    orbit of the translation weight.
    """
    lam = _require_regular_alcove(rs, lam, level, "lam")
    mu = _require_regular_alcove(rs, mu, level, "mu")
    start = affine.affine_apply(rs, g, mu, level)
    if not start.is_dominant:
        raise DomainError(f"g.mu = {start} is not dominant")
    height = sum(r * (c + 1) for r, c in zip(rs.coroot_rows[-1], start))
    if height > bound:
        raise DomainError(
            f"bound {bound} does not cover g.mu = {start} (height {height})")
    tau = translation_weight(rs, lam, mu)
    support = finchar.weight_multiplicities(rs, tau)
    p = level.p
    found = False
    ok = True
    for w in weyl.enumerate_elements(rs):
        w_lam = weyl.apply(rs, w, lam, shifted=True)
        for nu in support:
            beta = start + nu - w_lam
            if any(c % p for c in root_coords(rs, beta)):
                continue  # not a p-scaled root-lattice translation
            w1 = AffineWeylElement(beta, w)
            found = True
            rep, _, _ = weyl.dominant_rep(rs, nu)
            if w1 != g or rep != tau:
                ok = False
    return found and ok


@dataclass
class LinkageCharacter:
    """Integer Weyl-basis character over one linkage class.

    ``coeffs`` maps canonical affine Weyl group elements g (as produced by
    the alcove walk) to integers; a key g stands for the Weyl module with
    highest weight ``g . base``.  Keys whose image leaves the dominant cone
    are never stored.
    """

    level: Level
    base: Weight
    coeffs: dict = field(default_factory=dict)


def _element_sort_key(rs: RootSystem, g: AffineWeylElement):
    return (root_coords(rs, g.translation), g.finite.word)


def make_character(rs: RootSystem, base, coeffs, level: Level) -> LinkageCharacter:
    """Validated, canonically ordered character over the class of ``base``."""
    base = _as_weight(rs, base, "base")
    if not affine.in_fundamental_alcove(rs, LeveledWeight(base, level)):
        raise DomainError(
            f"base {base} is not strictly inside the fundamental alcove "
            f"at level {level}")
    cleaned = {}
    for g, c in coeffs.items():
        if c == 0:
            continue
        image = affine.affine_apply(rs, g, base, level)
        if not image.is_dominant:
            raise DomainError(f"key {g} sends {base} to {image}, "
                              "outside the dominant cone")
        _, canonical, _ = affine.alcove_rep(rs, image, level)
        if canonical != g:
            raise DomainError(f"key {g} is not the canonical element "
                              f"for its image {image}")
        cleaned[g] = c
    ordered = dict(sorted(cleaned.items(),
                          key=lambda item: _element_sort_key(rs, item[0])))
    return LinkageCharacter(level=level, base=base, coeffs=ordered)


def translate_character(rs: RootSystem, chi: LinkageCharacter,
                        lam) -> LinkageCharacter:
    """Re-key a Weyl-basis character to the linkage class of ``lam``.

    Coefficients ride along unchanged; a key is dropped only if its image at
    the new base leaves the dominant cone (for regular bases none do).
    """
    mu = _require_regular_alcove(rs, chi.base, chi.level, "base")
    lam = _require_regular_alcove(rs, lam, chi.level, "lam")
    kept = {}
    for g, c in chi.coeffs.items():
        if affine.affine_apply(rs, g, lam, chi.level).is_dominant:
            kept[g] = c
    ordered = dict(sorted(kept.items(),
                          key=lambda item: _element_sort_key(rs, item[0])))
    return LinkageCharacter(level=chi.level, base=lam, coeffs=ordered)


def round_trip_check(rs: RootSystem, chi: LinkageCharacter, lam) -> bool:
    """Translate to ``lam`` and back; must reproduce ``chi`` exactly."""
    there = translate_character(rs, chi, lam)
    back = translate_character(rs, there, chi.base)
    return back == chi


def verma_filtration(rs: RootSystem, lam, mu, *,
                     cap: int = finchar.DEFAULT_CAP) -> dict:
    """Verma-factor multiplicities of (module with extreme weight lam) x M_mu.

    Key ``nu`` carries ``dim V_lam[nu - mu]``; keys need not be dominant.
    """
    lam = finchar._check_dominant(rs, lam)
    mu = _as_weight(rs, mu, "mu")
    if not mu.is_integral:
        raise DomainError(f"mu {mu} is not integral")
    parts = {mu + nu: m
             for nu, m in finchar.weight_multiplicities(rs, lam, cap=cap).items()}
    return dict(sorted(parts.items()))


def translate_verma(rs: RootSystem, g: AffineWeylElement, mu, lam,
                    level: Level, *, cap: int = finchar.DEFAULT_CAP) -> Weight:
    """Image of the Verma label ``g . mu`` under translation to ``lam``.

    Unlike :func:`translate_weyl` there is no dominance requirement on
    ``g . mu``; the survivor search intersects the Verma filtration with the
    full dot orbit of ``lam``.
    """
    mu = _require_regular_alcove(rs, mu, level, "mu")
    lam = _require_regular_alcove(rs, lam, level, "lam")
    start = affine.affine_apply(rs, g, mu, level)
    expected = affine.affine_apply(rs, g, lam, level)
    tau = translation_weight(rs, lam, mu)
    parts = verma_filtration(rs, tau, start, cap=cap)
    survivors = {nu: m for nu, m in parts.items()
                 if affine.linked(rs, nu, lam, level)}
    if survivors != {expected: 1}:
        raise InternalInconsistencyError(
            f"Verma translation of {start} to the class of {lam} has "
            f"survivors "
            f"{{{', '.join(f'{k}:{v}' for k, v in survivors.items())}}}, "
            f"expected {{{expected}:1}}")
    return expected
