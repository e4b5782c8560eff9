"""Exact root-system data for the simple Lie types A-G.

All weights live in the fundamental-weight basis and all arithmetic is done
with ``fractions.Fraction`` (integer entries are normalised to ``int``); no
floating point is used anywhere.  Nodes are numbered as in Bourbaki and the
invariant bilinear form is normalised so that long roots have squared length 2.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError, InvalidRootSystemError

Scalar = "int | Fraction"


def _exact(value) -> int | Fraction:
    # Floats are rejected outright: exactness is a hard invariant of Weight.
    if isinstance(value, float):
        raise TypeError(f"floating point coordinate {value!r} is not allowed")
    f = Fraction(value)
    return int(f) if f.denominator == 1 else f


class Weight(tuple):
    """A weight vector in fundamental-weight coordinates with exact entries.

    Supports vector addition/subtraction, negation and scalar multiplication
    by integers or Fractions.  Instances are immutable and hashable, and
    compare/sort lexicographically like plain tuples.
    """

    __slots__ = ()

    def __new__(cls, coords):
        return super().__new__(cls, (_exact(c) for c in coords))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    def __add__(self, other):
        return Weight(a + b for a, b in zip(self, other, strict=True))

    def __sub__(self, other):
        return Weight(a - b for a, b in zip(self, other, strict=True))

    def __neg__(self):
        return Weight(-a for a in self)

    def __mul__(self, scalar):
        scalar = _exact(scalar)
        return Weight(scalar * a for a in self)

    __rmul__ = __mul__

    @property
    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self)

    @property
    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self)

    def __str__(self) -> str:
        return "[" + ",".join(str(c) for c in self) + "]"

    def __repr__(self) -> str:
        return f"Weight({str(self)!r})"


# Minimal ranks per series; C2 and D3 are admitted (they are valid simple
# Cartan data, isomorphic to B2 and A3 respectively).
_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

_TYPE_RE = re.compile(r"^([A-G])([0-9]+)$")


@dataclass(frozen=True)
class RootSystemSpec:
    """A simple type identifier such as A2 or E8; validated at construction."""

    series: str
    rank: int

    def __post_init__(self):
        lo_hi = _RANK_RANGE.get(self.series)
        if lo_hi is None or not isinstance(self.rank, int):
            raise InvalidRootSystemError(f"invalid root system type {self.series}{self.rank}")
        lo, hi = lo_hi
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise InvalidRootSystemError(f"invalid root system type {self.series}{self.rank}")

    @classmethod
    def parse(cls, text: str) -> "RootSystemSpec":
        m = _TYPE_RE.match(text.strip())
        if m is None:
            raise InvalidRootSystemError(f"unknown type {text}")
        try:
            return cls(m.group(1), int(m.group(2)))
        except InvalidRootSystemError:
            raise InvalidRootSystemError(f"unknown type {text}") from None

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"


def _cartan_matrix(series: str, rank: int) -> list[list[int]]:
    """Cartan matrix with entry [i][j] = <alpha_j, alpha_i^vee> (Bourbaki numbering)."""
    n = rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def edge(i, j):
        a[i][j] = a[j][i] = -1

    if series in ("A", "B", "C"):
        for i in range(n - 1):
            edge(i, i + 1)
        if series == "B" and n >= 2:
            a[n - 1][n - 2] = -2  # alpha_n short
        if series == "C" and n >= 2:
            a[n - 2][n - 1] = -2  # alpha_n long
    elif series == "D":
        for i in range(n - 2):
            edge(i, i + 1)
        edge(n - 3, n - 1)
    elif series == "E":
        chain = [0] + list(range(2, n))
        for i, j in zip(chain, chain[1:]):
            edge(i, j)
        edge(1, 3)
    elif series == "F":
        for i in range(3):
            edge(i, i + 1)
        a[2][1] = -2  # alpha_1, alpha_2 long; alpha_3, alpha_4 short
    elif series == "G":
        a[0][1] = -3  # alpha_1 short, alpha_2 long
        a[1][0] = -1
    return a


def _symmetrizer(cartan: list[list[int]]) -> list[Fraction]:
    """d_i = (alpha_i, alpha_i)/2 with d_i a_ij = d_j a_ji, normalised to max 1."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                stack.append(j)
    top = max(d)  # type: ignore[type-var]
    return [x / top for x in d]  # type: ignore[operator]


def _invert(matrix: list[list[int]]) -> list[list[Fraction]]:
    """Exact inverse by Gauss-Jordan elimination over the rationals."""
    n = len(matrix)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[pivot] = m[pivot], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


@dataclass(frozen=True)
class RootSystem:
    """Immutable root-system data; build with :func:`build_root_system`.

    ``cartan[i][j]`` is the pairing of the j-th simple root against the i-th
    simple coroot, so the columns of ``cartan`` are the simple roots in
    fundamental-weight coordinates.  ``form`` is the matrix of the invariant
    bilinear form on those coordinates, normalised so ``(theta, theta) = 2``.
    """

    spec: RootSystemSpec
    cartan: tuple[tuple[int, ...], ...]
    simple_roots: tuple[Weight, ...]
    fundamental_weights: tuple[Weight, ...]
    positive_roots: tuple[Weight, ...]
    rho: Weight
    theta: Weight
    dual_coxeter: int
    form: tuple[tuple[Fraction, ...], ...]
    # Derived lookup tables (same data, different shapes), kept for speed.
    inv_cartan: tuple[tuple[Fraction, ...], ...] = field(repr=False)
    coroot_rows: tuple[tuple[int, ...], ...] = field(repr=False)
    root_index: dict = field(repr=False, hash=False, compare=False)
    negative_root_set: frozenset = field(repr=False, hash=False, compare=False)

    @property
    def rank(self) -> int:
        return self.spec.rank

    @property
    def is_simply_laced(self) -> bool:
        return self.spec.series in ("A", "D", "E")

    def __str__(self) -> str:
        return str(self.spec)

    def __hash__(self) -> int:
        # The spec determines every derived field, and instances are cached
        # singletons; hashing the spec keeps lru_cache lookups cheap.
        return hash(self.spec)


def _positive_root_closure(cartan: list[list[int]], rank: int) -> list[tuple[Weight, tuple[int, ...]]]:
    """All positive roots as (fundamental coords, root-basis coords), by height."""
    cols = [Weight(cartan[i][j] for i in range(rank)) for j in range(rank)]
    unit = [tuple(int(i == j) for i in range(rank)) for j in range(rank)]
    roots: dict[Weight, tuple[int, ...]] = {cols[j]: unit[j] for j in range(rank)}
    frontier = list(roots)
    while frontier:
        new = []
        for alpha in frontier:
            rc = roots[alpha]
            for i in range(rank):
                # alpha + alpha_i is a root iff p - <alpha, alpha_i^vee> > 0,
                # where p is the number of root steps below alpha in direction i.
                p = 0
                down = alpha
                while True:
                    down = down - cols[i]
                    if down in roots:
                        p += 1
                    else:
                        break
                if alpha == cols[i]:
                    continue
                if p - alpha[i] > 0:
                    up = alpha + cols[i]
                    if up not in roots:
                        roots[up] = tuple(a + int(k == i) for k, a in enumerate(rc))
                        new.append(up)
        frontier = new
    items = sorted(roots.items(), key=lambda kv: (sum(kv[1]), kv[0]))
    return items


@functools.lru_cache(maxsize=None)
def build_root_system(spec: RootSystemSpec) -> RootSystem:
    """Construct (and cache) the full root-system data for a valid type."""
    n = spec.rank
    cartan = _cartan_matrix(spec.series, spec.rank)
    d = _symmetrizer(cartan)
    inv = _invert(cartan)
    # form[i][j] = (omega_i, omega_j) = inv_cartan[j][i] * d_j
    form = [[inv[j][i] * d[j] for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i):
            assert form[i][j] == form[j][i]

    pos = _positive_root_closure(cartan, n)
    theta, theta_rc = pos[-1]
    assert theta.is_dominant and sum(theta_rc) == max(sum(rc) for _, rc in pos)

    # Coroot of alpha = sum_j (r_j d_j / d_alpha) alpha_j^vee; always integral.
    coroot_rows = []
    for alpha, rc in pos:
        d_alpha = sum(Fraction(rc[j]) * d[j] * cartan[j][k] * rc[k]
                      for j in range(n) for k in range(n)) / 2
        row = []
        for j in range(n):
            c = Fraction(rc[j]) * d[j] / d_alpha
            assert c.denominator == 1
            row.append(int(c))
        coroot_rows.append(tuple(row))

    rho = Weight((1,) * n)
    dual_coxeter = 1 + sum(coroot_rows[-1])

    root_index = {}
    for idx, (alpha, _) in enumerate(pos):
        root_index[alpha] = idx
        root_index[-alpha] = ~idx  # bitwise-not marks the negative root
    negative_root_set = frozenset(-alpha for alpha, _ in pos)

    return RootSystem(
        spec=spec,
        cartan=tuple(tuple(row) for row in cartan),
        simple_roots=tuple(Weight(cartan[i][j] for i in range(n)) for j in range(n)),
        fundamental_weights=tuple(Weight(int(i == j) for i in range(n)) for j in range(n)),
        positive_roots=tuple(alpha for alpha, _ in pos),
        rho=rho,
        theta=theta,
        dual_coxeter=dual_coxeter,
        form=tuple(tuple(row) for row in form),
        inv_cartan=tuple(tuple(row) for row in inv),
        coroot_rows=tuple(coroot_rows),
        root_index=root_index,
        negative_root_set=negative_root_set,
    )


def root_system(text: str) -> RootSystem:
    """Convenience wrapper: ``root_system("A2")``."""
    return build_root_system(RootSystemSpec.parse(text))


def bilinear(rs: RootSystem, lam, mu) -> int | Fraction:
    """Invariant bilinear form (lam, mu) in fundamental coordinates."""
    form = rs.form
    total = Fraction(0)
    for i, a in enumerate(lam):
        if a:
            row = form[i]
            total += a * sum(b * row[j] for j, b in enumerate(mu) if b)
    return int(total) if total.denominator == 1 else total


def root_coords(rs: RootSystem, wt) -> tuple:
    """Coordinates of ``wt`` in the simple-root basis (exact rationals)."""
    inv = rs.inv_cartan
    out = []
    for i in range(rs.rank):
        c = sum(inv[i][j] * wt[j] for j in range(rs.rank) if wt[j])
        c = Fraction(c)
        out.append(int(c) if c.denominator == 1 else c)
    return tuple(out)


def pairing(rs: RootSystem, lam, alpha) -> int | Fraction:
    """Coroot pairing <lam, alpha^vee> = 2(lam, alpha)/(alpha, alpha).

    ``alpha`` must be a root of the system; anything else is an error.
    """
    idx = rs.root_index.get(Weight(alpha) if not isinstance(alpha, Weight) else alpha)
    if idx is None:
        raise DomainError(f"{Weight(alpha)} is not a root of {rs.spec}")
    sign = 1
    if idx < 0:
        idx, sign = ~idx, -1
    row = rs.coroot_rows[idx]
    val = sign * sum(c * x for c, x in zip(row, lam) if c)
    val = Fraction(val)
    return int(val) if val.denominator == 1 else val


def coroot_pairings(rs: RootSystem, lam) -> list:
    """<lam, alpha^vee> for every positive root alpha, in root order."""
    out = []
    for row in rs.coroot_rows:
        val = Fraction(sum(c * x for c, x in zip(row, lam) if c))
        out.append(int(val) if val.denominator == 1 else val)
    return out
