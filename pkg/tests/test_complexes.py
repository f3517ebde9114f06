"""Complexes: closure, f-vectors, Euler characteristic, validation, generator."""

from __future__ import annotations

from fractions import Fraction

import pytest

from simplat import (SimplicialComplex, close_under_faces, euler_characteristic,
                     generate_complex, summarize, validate)
from simplat.errors import InputError, ValidationError

from helpers import HOLLOW_TRIANGLE_DOC, L_SHAPE_DOC, UNIT_SQUARE_DOC


def from_doc(doc):
    return close_under_faces(doc["maximal_simplices"], doc["vertices"],
                             ambient_dim=doc["ambient_dim"])


class TestClosure:
    def test_square_f_vector(self):
        c = from_doc(UNIT_SQUARE_DOC)
        assert c.f_vector() == (4, 5, 2)
        assert euler_characteristic(c) == 1
        assert c.dim == 1 + 1  # two triangles glued along an edge

    def test_square_maximal_faces(self):
        c = from_doc(UNIT_SQUARE_DOC)
        assert c.maximal_faces == ((0, 1, 2), (1, 2, 3))

    def test_l_shape(self):
        # 6 triangles tiling an L: 13 distinct edges by direct count
        c = from_doc(L_SHAPE_DOC)
        assert c.f_vector() == (8, 13, 6)
        assert euler_characteristic(c) == 1

    def test_hollow_triangle(self):
        c = from_doc(HOLLOW_TRIANGLE_DOC)
        assert c.f_vector() == (3, 3)
        assert euler_characteristic(c) == 0

    def test_summary_dict(self):
        d = summarize(from_doc(UNIT_SQUARE_DOC)).as_dict()
        assert d == {"f_vector": [4, 5, 2], "euler_characteristic": 1}

    def test_nested_input_faces_deduplicate(self):
        c = close_under_faces([[0, 1], [0], [0, 1]], [(0,), (1,)])
        assert c.maximal_faces == ((0, 1),)
        assert c.f_vector() == (2, 1)

    def test_isolated_vertex_stays_maximal(self):
        c = close_under_faces([[0, 1], [2]], [(0, 0), (1, 0), (5, 5)])
        assert c.maximal_faces == ((0, 1), (2,))
        assert c.f_vector() == (3, 1)

    def test_empty(self):
        c = close_under_faces([], [], ambient_dim=2)
        assert c.f_vector() == ()
        assert euler_characteristic(c) == 0
        assert c.dim == -1

    def test_out_of_range_index(self):
        with pytest.raises(InputError):
            close_under_faces([[0, 7]], [(0, 0), (1, 0)])

    def test_negative_index(self):
        with pytest.raises(InputError):
            close_under_faces([[0, -1]], [(0, 0), (1, 0)])

    def test_degenerate_face(self):
        with pytest.raises(ValidationError):
            close_under_faces([[0, 1, 2]], [(0, 0), (1, 1), (2, 2)])

    def test_simplex_accessor(self):
        c = from_doc(UNIT_SQUARE_DOC)
        s = c.simplex((2, 1, 0))
        assert s.vertices == ((0, 0), (1, 0), (0, 1))


class TestValidate:
    def test_valid_complex_passes(self):
        report = validate(from_doc(L_SHAPE_DOC))
        assert report.passed
        assert report.describe() == "valid simplicial complex"

    def test_missing_subset(self):
        faces = frozenset({frozenset({0, 1, 2}), frozenset({0, 1}),
                           frozenset({0, 2}), frozenset({0}), frozenset({1}),
                           frozenset({2})})  # {1, 2} left out
        c = SimplicialComplex(2, ((0, 0), (1, 0), (0, 1)), faces)
        report = validate(c)
        assert not report.passed
        assert ((0, 1, 2), (1, 2)) in report.closure_failures
        assert "subset" in report.describe()

    def test_duplicate_vertices(self):
        c = close_under_faces([[0], [1]], [(0, 0), (0, 0)])
        report = validate(c)
        assert report.duplicate_vertices == ((0, 1),)
        assert not report.passed

    def test_degenerate_face_reported(self):
        faces = frozenset({frozenset({0, 1, 2}), frozenset({0, 1}),
                           frozenset({0, 2}), frozenset({1, 2}), frozenset({0}),
                           frozenset({1}), frozenset({2})})
        c = SimplicialComplex(2, ((0, 0), (1, 1), (2, 2)), faces)
        report = validate(c)
        assert report.affine_failures == ((0, 1, 2),)

    def test_improper_overlap(self):
        c = close_under_faces([[0, 1, 2], [0, 1, 3]],
                              [(0, 0), (2, 0), (0, 2), (1, 1)])
        report = validate(c)
        assert report.overlap_failures == (((0, 1, 2), (0, 1, 3)),)
        assert not report.passed
        assert report.as_dict()["overlap_failures"] == [[[0, 1, 2], [0, 1, 3]]]

    def test_proper_gluing_has_no_overlap_failures(self):
        report = validate(from_doc(UNIT_SQUARE_DOC))
        assert report.overlap_failures == ()


class TestGenerator:
    def test_square_full_keep(self):
        c = generate_complex(2, 1, 1, seed=0)
        assert c.f_vector() == (4, 5, 2)
        assert euler_characteristic(c) == 1
        assert c.vertices == ((0, 0), (0, 1), (1, 0), (1, 1))

    def test_cube_full_keep(self):
        # 12 cube edges + 6 face diagonals + 1 body diagonal = 19 edges
        c = generate_complex(3, 1, 1, seed=0)
        assert c.f_vector() == (8, 19, 18, 6)
        assert euler_characteristic(c) == 1

    def test_path_full_keep(self):
        c = generate_complex(1, 2, 1, seed=0)
        assert c.f_vector() == (3, 2)
        assert c.maximal_faces == ((0, 1), (1, 2))

    def test_grid_two(self):
        c = generate_complex(2, 2, 1, seed=0)
        assert c.f_vector()[0] == 9
        assert c.f_vector()[2] == 8  # 4 cells, 2 triangles each
        assert euler_characteristic(c) == 1

    def test_full_keep_ignores_seed(self):
        assert generate_complex(2, 2, 1, seed=1) == generate_complex(2, 2, 1, seed=99)

    def test_deterministic_per_seed(self):
        a = generate_complex(3, 2, Fraction(1, 2), seed=42)
        b = generate_complex(3, 2, Fraction(1, 2), seed=42)
        assert a == b

    def test_seed_varies_output(self):
        outputs = {generate_complex(3, 2, Fraction(1, 2), seed=s).faces
                   for s in range(6)}
        assert len(outputs) > 1

    def test_keep_zero_is_empty(self):
        c = generate_complex(2, 2, 0, seed=9)
        assert c.f_vector() == ()

    def test_generated_complexes_validate(self):
        for seed in range(8):
            for dim, grid in ((1, 2), (2, 2), (3, 1)):
                c = generate_complex(dim, grid, Fraction(3, 4), seed=seed)
                assert validate(c).passed, (dim, seed)

    def test_closure_invariant(self):
        c = generate_complex(2, 2, Fraction(1, 2), seed=17)
        rebuilt = close_under_faces(c.maximal_faces, c.vertices,
                                    ambient_dim=c.ambient_dim)
        assert rebuilt.faces == c.faces

    def test_rejects_bad_arguments(self):
        for args in [(0, 1, 1, 0), (5, 1, 1, 0), (2, 0, 1, 0),
                     (2, 1, 2, 0), (2, 1, -1, 0), (2, 1, Fraction(5, 4), 0)]:
            with pytest.raises(InputError):
                generate_complex(*args)

    def test_rejects_float_keep(self):
        with pytest.raises(InputError):
            generate_complex(2, 1, 0.5, seed=0)
