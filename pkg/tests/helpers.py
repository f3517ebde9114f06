"""Independent oracles and fixtures shared by the test modules.

The oracles here deliberately avoid the library's own code paths: membership
comes from orientation predicates or sympy's solver, volumes from sympy
determinants, counts from handwritten inequality scans.
"""

from __future__ import annotations

import random
from fractions import Fraction

import sympy

from simplat import Simplex
from simplat.errors import SimplatError

# ---------------------------------------------------------------------------
# document fixtures

UNIT_SEGMENT_DOC = {
    "ambient_dim": 1,
    "vertices": [[0], [1]],
    "maximal_simplices": [[0, 1]],
}

UNIT_SQUARE_DOC = {
    "ambient_dim": 2,
    "vertices": [[0, 0], [1, 0], [0, 1], [1, 1]],
    "maximal_simplices": [[0, 1, 2], [1, 2, 3]],
}

# Three unit squares in an L, each cut along its main diagonal: 6 triangles,
# outline a hexagon with corners (0,0),(2,0),(2,1),(1,1),(1,2),(0,2).
L_SHAPE_DOC = {
    "ambient_dim": 2,
    "vertices": [[0, 0], [1, 0], [2, 0], [0, 1], [1, 1], [2, 1], [0, 2], [1, 2]],
    "maximal_simplices": [
        [0, 1, 4], [0, 3, 4],
        [1, 2, 5], [1, 4, 5],
        [3, 4, 7], [3, 6, 7],
    ],
}

HOLLOW_TRIANGLE_DOC = {
    "ambient_dim": 2,
    "vertices": [[0, 0], [1, 0], [0, 1]],
    "maximal_simplices": [[0, 1], [1, 2], [0, 2]],
}


# ---------------------------------------------------------------------------
# membership oracles

def orient(a, b, c) -> Fraction:
    """Signed area predicate (exact cross product)."""
    ax, ay = Fraction(a[0]), Fraction(a[1])
    return ((Fraction(b[0]) - ax) * (Fraction(c[1]) - ay)
            - (Fraction(b[1]) - ay) * (Fraction(c[0]) - ax))


def triangle_contains(tri, p) -> bool:
    """Point-in-closed-triangle by orientation signs; 2D only."""
    d1 = orient(tri[0], tri[1], p)
    d2 = orient(tri[1], tri[2], p)
    d3 = orient(tri[2], tri[0], p)
    has_neg = d1 < 0 or d2 < 0 or d3 < 0
    has_pos = d1 > 0 or d2 > 0 or d3 > 0
    return not (has_neg and has_pos)


def sympy_barycentric(vertices, point):
    """Barycentric coordinates via sympy's solver, or None off the hull."""
    k = len(vertices)
    d = len(vertices[0])
    rows = [[sympy.Integer(1)] * k]
    for c in range(d):
        rows.append([sympy.Rational(v[c]) for v in vertices])
    rhs = [sympy.Integer(1)]
    for x in point:
        f = Fraction(x) if not isinstance(x, Fraction) else x
        rhs.append(sympy.Rational(f.numerator, f.denominator))
    A = sympy.Matrix(rows)
    b = sympy.Matrix(rhs)
    try:
        sol, params = A.gauss_jordan_solve(b)
    except ValueError:
        return None
    assert not params, "affinely independent vertices give a unique solution"
    return tuple(Fraction(int(v.p), int(v.q)) for v in sol)


def sympy_contains(vertices, point) -> bool:
    coords = sympy_barycentric(vertices, point)
    return coords is not None and all(c >= 0 for c in coords)


def normalized_volume(s: Simplex) -> int:
    """|det| of the edge matrix of a full-dimensional simplex (sympy)."""
    v0 = s.vertices[0]
    rows = [[v[i] - v0[i] for i in range(s.ambient_dim)] for v in s.vertices[1:]]
    return abs(int(sympy.Matrix(rows).det()))


# ---------------------------------------------------------------------------
# region-count oracles (inequality scans, no library code)

def l_shape_count(t: int) -> int:
    """Lattice points of the dilated L: [0,2t]x[0,t] ∪ [0,t]x[t,2t]."""
    count = 0
    for x in range(0, 2 * t + 1):
        for y in range(0, 2 * t + 1):
            if (y <= t and x <= 2 * t) or (x <= t and t <= y <= 2 * t):
                count += 1
    return count


def square_count(t: int) -> int:
    return (t + 1) ** 2


def hollow_triangle_count(t: int) -> int:
    """Boundary points of the dilated unit right triangle."""
    count = 0
    for x in range(0, t + 1):
        for y in range(0, t + 1):
            if x + y <= t and (x == 0 or y == 0 or x + y == t):
                count += 1
    return count


# ---------------------------------------------------------------------------
# random generation

def random_simplex(rng: random.Random, ambient: int, coord_max: int = 3,
                   intrinsic: int | None = None) -> Simplex:
    """Seeded random lattice simplex with coordinates in [0, coord_max]."""
    m = rng.randint(0, ambient) if intrinsic is None else intrinsic
    while True:
        pts = tuple(tuple(rng.randint(0, coord_max) for _ in range(ambient))
                    for _ in range(m + 1))
        try:
            return Simplex(pts)
        except SimplatError:
            continue
