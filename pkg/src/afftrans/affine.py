"""Affine Weyl group at rational shifted level, alcoves and linkage.

The group is the semidirect product of translations by p times the root
lattice with the finite Weyl group; it acts on weights through the dot
action ``(t_beta, w) . lam = w . lam + beta``.  The shifted level t = p/q
represents k + (dual Coxeter number); the fundamental alcove is cut out by
``lam + rho`` dominant and ``0 < (lam + rho, theta) < p``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import weyl
from .errors import DomainError, IterationLimitError
from .rootsys import RootSystem, Weight, bilinear, root_coords
from .weyl import IDENTITY, WeylElement

_ALCOVE_WALK_CAP = 10 ** 6


@dataclass(frozen=True)
class Level:
    """Shifted level t = p/q > 0 in lowest terms (t = k + dual Coxeter)."""

    p: int
    q: int

    def __post_init__(self):
        if not (isinstance(self.p, int) and isinstance(self.q, int)):
            raise DomainError(f"level must have integer p, q, got {self.p}/{self.q}")
        if self.p <= 0 or self.q <= 0:
            raise DomainError(f"shifted level must be positive, got {self.p}/{self.q}")
        if gcd(self.p, self.q) != 1:
            raise DomainError(f"level {self.p}/{self.q} is not in lowest terms")

    @property
    def t(self) -> Fraction:
        return Fraction(self.p, self.q)

    @classmethod
    def from_shifted(cls, t) -> "Level":
        t = Fraction(t)
        return cls(t.numerator, t.denominator)

    def k(self, rs: RootSystem) -> Fraction:
        """The unshifted level k = t - (dual Coxeter number)."""
        return self.t - rs.dual_coxeter

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


@dataclass(frozen=True)
class LeveledWeight:
    """A weight together with the level it lives at."""

    weight: Weight
    level: Level


@dataclass(frozen=True)
class AffineWeylElement:
    """(t_beta, w): translation part beta (a weight in p times the root
    lattice) and finite part w.  The pair is the canonical form."""

    translation: Weight
    finite: WeylElement

    @property
    def is_identity(self) -> bool:
        return self.finite.is_identity and not any(self.translation)


def identity_element(rank: int) -> AffineWeylElement:
    return AffineWeylElement(Weight.zero(rank), IDENTITY)


def finite_element(rs: RootSystem, w: WeylElement) -> AffineWeylElement:
    return AffineWeylElement(Weight.zero(rs.rank), w)


def translation_element(rs: RootSystem, beta) -> AffineWeylElement:
    return AffineWeylElement(Weight(beta), IDENTITY)


def compose_affine(rs: RootSystem, g: AffineWeylElement, h: AffineWeylElement) -> AffineWeylElement:
    """(t_beta, w)(t_gamma, v) = (t_{beta + w(gamma)}, w v)."""
    moved = weyl.apply(rs, g.finite, h.translation)
    return AffineWeylElement(g.translation + moved, weyl.compose(rs, g.finite, h.finite))


def inverse_affine(rs: RootSystem, g: AffineWeylElement) -> AffineWeylElement:
    winv = weyl.inverse(rs, g.finite)
    return AffineWeylElement(-weyl.apply(rs, winv, g.translation), winv)


def translation_lattice_coords(rs: RootSystem, g: AffineWeylElement, level: Level) -> tuple[int, ...]:
    """Root-basis coordinates of the translation part; must lie in p Q."""
    rc = root_coords(rs, g.translation)
    p = level.p
    out = []
    for c in rc:
        if not isinstance(c, int) or c % p != 0:
            raise DomainError(
                f"translation {g.translation} is not in {p}Q (root coords {rc})")
        out.append(c)
    return tuple(out)


def affine_apply(rs: RootSystem, g: AffineWeylElement, lam, level: Level) -> Weight:
    """Dot action (t_beta, w) . lam = w . lam + beta (finite dot, then shift)."""
    translation_lattice_coords(rs, g, level)
    return weyl.apply(rs, g.finite, lam, shifted=True) + g.translation


def theta_wall_reflection(rs: RootSystem, level: Level) -> AffineWeylElement:
    """The affine reflection through the wall (lam + rho, theta) = p."""
    return AffineWeylElement(level.p * rs.theta, _theta_reflection(rs))


@functools.lru_cache(maxsize=None)
def _theta_reflection(rs: RootSystem) -> WeylElement:
    return weyl.reflection_in_root(rs, rs.theta)


def _theta_height(rs: RootSystem, coords):
    """(x, theta) = <x, theta^vee> since theta is long."""
    row = rs.coroot_rows[-1]
    return sum(c * x for c, x in zip(row, coords) if c)


def in_fundamental_alcove(rs: RootSystem, lw: LeveledWeight, *, strict: bool = True) -> bool:
    """Membership of the (closed or open) fundamental alcove."""
    return _alcove_test(rs, lw.weight, lw.level, strict)


def _alcove_test(rs: RootSystem, wt, level: Level, strict: bool) -> bool:
    shifted = [c + 1 for c in wt]
    if strict:
        if any(c <= 0 for c in shifted):
            return False
        return 0 < _theta_height(rs, shifted) < level.p
    if any(c < 0 for c in shifted):
        return False
    return 0 <= _theta_height(rs, shifted) <= level.p


def is_regular(rs: RootSystem, lam, level: Level) -> bool:
    """No wall of the affine arrangement through lam: <lam+rho, alpha^vee>
    is not a multiple of p for any positive root alpha."""
    shifted = [c + 1 for c in lam]
    p = level.p
    for row in rs.coroot_rows:
        val = sum(c * x for c, x in zip(row, shifted) if c)
        if val % p == 0:
            return False
    return True


@functools.lru_cache(maxsize=200_000)
def _alcove_rep_coords(rs: RootSystem, coords: tuple, p: int) -> tuple:
    """Representative of coords under the alcove walk, without group tracking."""
    x = weyl._dominant_tuple(rs, [c + 1 for c in coords])
    for _ in range(_ALCOVE_WALK_CAP):
        h = _theta_height(rs, x)
        if h <= p:
            return tuple(c - 1 for c in x)
        excess = h - p
        theta = rs.theta
        x = weyl._dominant_tuple(rs, [c - excess * t for c, t in zip(x, theta)])
    raise IterationLimitError("alcove walk did not terminate within the cap")


def alcove_rep(rs: RootSystem, lam, level: Level):
    """Alcove representative with group element and regularity flag.

    Returns ``(rep, g, regular)`` where ``rep`` lies in the closed fundamental
    alcove and ``affine_apply(rs, g, rep, level) == lam``.  The walk
    alternates the finite dominant-representative step with the reflection
    through the wall ``(mu, theta) = p`` applied to ``mu = lam + rho``.
    """
    lam = Weight(lam)
    if not lam.is_integral:
        raise DomainError(f"alcove representative needs an integral weight, got {lam}")
    p = level.p
    x = Weight(c + 1 for c in lam)
    acc = identity_element(rs.rank)  # maps the original lam + rho to the current x
    wall = theta_wall_reflection(rs, level)
    for _ in range(_ALCOVE_WALK_CAP):
        x, w, _ = weyl.dominant_rep(rs, x)
        acc = compose_affine(rs, finite_element(rs, w), acc)
        h = _theta_height(rs, x)
        if h <= p:
            break
        excess = h - p
        x = Weight(c - excess * t for c, t in zip(x, rs.theta))
        acc = compose_affine(rs, wall, acc)
    else:
        raise IterationLimitError("alcove walk did not terminate within the cap")
    rep_wt = Weight(c - 1 for c in x)
    g = inverse_affine(rs, acc)
    return rep_wt, g, is_regular(rs, rep_wt, level)


def linked(rs: RootSystem, lam, mu, level: Level) -> bool:
    """Same orbit under the dot action of the affine Weyl group at this level:
    equal alcove representatives."""
    lam, mu = Weight(lam), Weight(mu)
    if not (lam.is_integral and mu.is_integral):
        raise DomainError("linkage is defined for integral weights")
    return (_alcove_rep_coords(rs, tuple(lam), level.p)
            == _alcove_rep_coords(rs, tuple(mu), level.p))


@functools.lru_cache(maxsize=4096)
def enumerate_dominant(rs: RootSystem, level: Level) -> tuple[Weight, ...]:
    """All dominant integral weights in the open fundamental alcove, sorted
    lexicographically.  Empty when p is at most the dual Coxeter number."""
    import itertools

    theta_row = rs.coroot_rows[-1]  # dual marks <omega_i, theta^vee>
    p = level.p
    ranges = []
    for m in theta_row:
        # (lam+rho, theta) = sum (a_i + 1) m_i < p
        top = (p - rs.dual_coxeter + 1) // m if m else p
        ranges.append(range(max(top, 0) + 1))
    out = []
    base = sum(theta_row)
    for coords in itertools.product(*ranges):
        if base + sum(a * m for a, m in zip(coords, theta_row)) < p:
            out.append(Weight(coords))
    return tuple(sorted(out))


def dominant_orbit(rs: RootSystem, lam, level: Level, bound=None):
    """Dominant integral weights in the dot orbit of lam with
    (weight + rho, theta) <= bound, each with its canonical group element.

    Returns a list of (element, weight) pairs sorted by weight.  The default
    bound is (lam + rho, theta) + 4p.
    """
    import itertools

    lam = Weight(lam)
    if not lam.is_integral:
        raise DomainError(f"dominant orbit needs an integral weight, got {lam}")
    if not _alcove_test(rs, lam, level, strict=True):
        raise DomainError(f"{lam} is not strictly inside the fundamental alcove")
    p = level.p
    if bound is None:
        bound = _theta_height(rs, [c + 1 for c in lam]) + 4 * p
    theta_row = rs.coroot_rows[-1]
    base = sum(theta_row)
    ranges = [range(max((bound - base) // m, -1) + 1) if m else range(1) for m in theta_row]
    out = []
    lam_t = tuple(lam)
    for coords in itertools.product(*ranges):
        if base + sum(a * m for a, m in zip(coords, theta_row)) > bound:
            continue
        if _alcove_rep_coords(rs, coords, p) == lam_t:
            nu = Weight(coords)
            _, g, _ = alcove_rep(rs, nu, level)
            out.append((g, nu))
    out.sort(key=lambda pair: pair[1])
    return out
