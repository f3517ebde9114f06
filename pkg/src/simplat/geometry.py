"""Exact geometry of lattice simplices.

Vertices live in Z^d, membership questions are answered through barycentric
coordinates computed by exact Gauss-Jordan elimination over Fraction, and
pairwise intersection structure is decided by exact rational linear
programming. No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from . import exactlp
from .errors import InputError, ValidationError

LatticePoint = tuple[int, ...]
RationalPoint = tuple[Fraction, ...]


def _is_int(value: object) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def as_lattice_point(value: object, dim: int | None = None) -> LatticePoint:
    """Coerce a sequence of true ints into a LatticePoint tuple."""
    if not isinstance(value, (tuple, list)):
        raise InputError(f"lattice point must be a sequence, got {type(value).__name__}")
    pt = tuple(value)
    if not pt:
        raise InputError("lattice point must have at least one coordinate")
    for c in pt:
        if not _is_int(c):
            raise InputError(f"lattice coordinates must be integers, got {c!r}")
    if dim is not None and len(pt) != dim:
        raise InputError(f"expected a point in dimension {dim}, got {len(pt)} coordinates")
    return pt


def as_rational_point(value: object, dim: int | None = None) -> RationalPoint:
    """Coerce a sequence of ints/Fractions into exact rational coordinates.

    Floats are rejected: all arithmetic in this package is exact.
    """
    if not isinstance(value, (tuple, list)):
        raise InputError(f"point must be a sequence, got {type(value).__name__}")
    out = []
    for c in value:
        if isinstance(c, Fraction):
            out.append(c)
        elif _is_int(c):
            out.append(Fraction(c))
        else:
            raise InputError(f"coordinates must be int or Fraction, got {type(c).__name__}")
    if not out:
        raise InputError("point must have at least one coordinate")
    if dim is not None and len(out) != dim:
        raise InputError(f"expected a point in dimension {dim}, got {len(out)} coordinates")
    return tuple(out)


@lru_cache(maxsize=None)
def _affine_data(vertices: tuple[LatticePoint, ...]):
    """Row-reduce the affine system of a vertex tuple.

    Returns (bary_rows, hull_rows) of Fraction tuples such that with
    b = (1, x_1, ..., x_d):

        lambda_j       = bary_rows[j] . b
        x in aff hull  iff  hull_rows[r] . b == 0 for every r

    or None when the vertices are affinely dependent.  Works by reducing
    [A | I] where A maps barycentric weights to (1, x).
    """
    k = len(vertices)
    d = len(vertices[0])
    rows = d + 1
    mat: list[list[Fraction]] = []
    for r in range(rows):
        if r == 0:
            left = [Fraction(1)] * k
        else:
            left = [Fraction(v[r - 1]) for v in vertices]
        right = [Fraction(0)] * rows
        right[r] = Fraction(1)
        mat.append(left + right)
    pivot_row = 0
    for col in range(k):
        pr = next((r for r in range(pivot_row, rows) if mat[r][col]), None)
        if pr is None:
            return None
        mat[pivot_row], mat[pr] = mat[pr], mat[pivot_row]
        piv = mat[pivot_row][col]
        mat[pivot_row] = [v / piv for v in mat[pivot_row]]
        for r in range(rows):
            if r != pivot_row and mat[r][col]:
                f = mat[r][col]
                prow = mat[pivot_row]
                mat[r] = [a - f * b for a, b in zip(mat[r], prow)]
        pivot_row += 1
    bary = tuple(tuple(row[k:]) for row in mat[:k])
    hull = tuple(tuple(row[k:]) for row in mat[k:])
    return bary, hull


@dataclass(frozen=True)
class Simplex:
    """A geometric simplex: an ordered tuple of affinely independent lattice
    vertices in Z^d.  Intrinsic dimension m = len(vertices) - 1 may be lower
    than the ambient dimension d."""

    vertices: tuple[LatticePoint, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.vertices, tuple) or not self.vertices:
            raise InputError("a simplex needs a nonempty tuple of vertices")
        dim = None
        cleaned = []
        for v in self.vertices:
            pt = as_lattice_point(v, dim)
            dim = len(pt)
            cleaned.append(pt)
        object.__setattr__(self, "vertices", tuple(cleaned))
        if len(self.vertices) > dim + 1:
            raise ValidationError(
                f"{len(self.vertices)} vertices cannot be affinely independent in Z^{dim}")
        if _affine_data(self.vertices) is None:
            raise ValidationError(f"vertices are affinely dependent: {self.vertices}")

    @property
    def ambient_dim(self) -> int:
        return len(self.vertices[0])

    @property
    def intrinsic_dim(self) -> int:
        return len(self.vertices) - 1


def bounding_box(s: Simplex) -> tuple[LatticePoint, LatticePoint]:
    """Inclusive coordinate-wise (min, max) corners of the simplex."""
    d = s.ambient_dim
    lo = tuple(min(v[i] for v in s.vertices) for i in range(d))
    hi = tuple(max(v[i] for v in s.vertices) for i in range(d))
    return lo, hi


def barycentric_coordinates(s: Simplex, x) -> tuple[Fraction, ...] | None:
    """Exact barycentric coordinates of x with respect to s, or None when x
    lies outside the affine hull of s."""
    pt = as_rational_point(x, s.ambient_dim)
    bary, hull = _affine_data(s.vertices)
    b = (Fraction(1),) + pt
    for row in hull:
        if sum(c * v for c, v in zip(row, b)):
            return None
    return tuple(sum(c * v for c, v in zip(row, b)) for row in bary)


def contains_point(s: Simplex, x) -> bool:
    """Whether x lies in the closed simplex s."""
    coords = barycentric_coordinates(s, x)
    return coords is not None and all(c >= 0 for c in coords)


def dilate(s: Simplex, t: int) -> Simplex:
    """The dilated simplex t*s (every vertex scaled by the integer t >= 1)."""
    if not _is_int(t) or t < 1:
        raise InputError(f"dilation factor must be an integer >= 1, got {t!r}")
    return Simplex(tuple(tuple(c * t for c in v) for v in s.vertices))


@lru_cache(maxsize=None)
def _certificate(vertices: tuple[LatticePoint, ...]):
    bary, hull = _affine_data(vertices)

    def scale(rows):
        out = []
        for row in rows:
            mult = lcm(*(f.denominator for f in row))
            ints = tuple(int(f * mult) for f in row)
            out.append((ints[0], ints[1:]))
        return tuple(out)

    return scale(bary), scale(hull)


def membership_certificate(s: Simplex):
    """Integer-scaled membership rows for fast exact point tests.

    Returns (bary_rows, hull_rows); each row is (c0, coeffs) representing
    y = c0 + coeffs . x.  A lattice point x lies in s iff every hull row
    evaluates to 0 and every barycentric row evaluates >= 0; it lies in the
    relative interior iff the barycentric rows are all > 0.
    """
    return _certificate(s.vertices)


def _common_face_lp(a: Simplex, b: Simplex, shared: set[LatticePoint]) -> bool:
    """True when no point of a∩b puts positive barycentric weight (w.r.t. a)
    on a vertex of a outside the shared set."""
    ka, kb = len(a.vertices), len(b.vertices)
    d = a.ambient_dim
    free = [j for j, v in enumerate(a.vertices) if v not in shared]
    if not free:
        return True
    rows = [[Fraction(1)] * ka + [Fraction(0)] * kb,
            [Fraction(0)] * ka + [Fraction(1)] * kb]
    rhs = [Fraction(1), Fraction(1)]
    for c in range(d):
        rows.append([Fraction(av[c]) for av in a.vertices]
                    + [Fraction(-bv[c]) for bv in b.vertices])
        rhs.append(Fraction(0))
    # One LP suffices: with lambda >= 0, max of the sum over non-shared
    # vertices is positive iff max of some single coordinate is.
    objective = [Fraction(0)] * (ka + kb)
    for j in free:
        objective[j] = Fraction(1)
    result = exactlp.maximize(objective, rows, rhs)
    if result is None:
        return True  # empty intersection, and then no shared vertices either
    return result[0] == 0


def intersection_is_common_face(s1: Simplex, s2: Simplex) -> bool:
    """Whether s1 ∩ s2 equals the convex hull of the shared vertex points
    (the empty set counts as a common face)."""
    if s1.ambient_dim != s2.ambient_dim:
        raise InputError("simplices live in different ambient dimensions")
    lo1, hi1 = bounding_box(s1)
    lo2, hi2 = bounding_box(s2)
    if any(hi1[i] < lo2[i] or hi2[i] < lo1[i] for i in range(s1.ambient_dim)):
        return True  # disjoint boxes: empty intersection, empty shared set
    shared = set(s1.vertices) & set(s2.vertices)
    return _common_face_lp(s1, s2, shared) and _common_face_lp(s2, s1, shared)
