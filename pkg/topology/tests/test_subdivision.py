from django.test import SimpleTestCase

from topology.coloring import Coloring, is_balanced
from topology.core import (
    SimplicialComplex,
    are_isomorphic,
    cross_polytope_boundary,
    simplex,
    simplex_boundary,
)
from topology.exceptions import (
    ColoringError,
    InapplicableMoveError,
    LabelCollisionError,
    PreconditionError,
)
from topology.subdivision import (
    SubdivisionLog,
    default_flag,
    diamond,
    flag_subdivide,
    replay_with_origins,
    stellar_subdivide,
    stellar_weld,
    weld_candidates,
)


class StellarMoveTests(SimpleTestCase):
    def test_subdividing_a_triangle(self):
        complex_ = simplex_boundary(3)
        subdivided = stellar_subdivide(complex_, ['x0', 'x1', 'x2'], 'c')
        self.assertEqual(len(subdivided), 6)
        self.assertEqual(subdivided.link(['c']), SimplicialComplex.simplex_boundary(['x0', 'x1', 'x2']))

    def test_subdividing_a_vertex_is_the_identity(self):
        complex_ = simplex_boundary(3)
        with self.assertLogs('topology.subdivision', level='WARNING'):
            self.assertEqual(stellar_subdivide(complex_, ['x0'], 'c'), complex_)

    def test_apex_must_be_new(self):
        with self.assertRaises(LabelCollisionError):
            stellar_subdivide(simplex_boundary(3), ['x0', 'x1'], 'x2')

    def test_weld_undoes_subdivision(self):
        complex_ = simplex_boundary(3)
        subdivided = stellar_subdivide(complex_, ['x0', 'x1'], 'c')
        self.assertEqual(stellar_weld(subdivided, 'c'), complex_)

    def test_ambiguous_weld_needs_the_face(self):
        octahedron = cross_polytope_boundary(2)
        self.assertEqual(len(weld_candidates(octahedron, 'x0')), 2)
        with self.assertRaises(InapplicableMoveError):
            stellar_weld(octahedron, 'x0')
        welded = stellar_weld(octahedron, 'x0', face=['x1', 'y1'])
        self.assertEqual(len(welded), 6)
        self.assertIn(frozenset(['x1', 'y1']), welded)


class SubdivisionLogTests(SimpleTestCase):
    def test_replay_and_undo(self):
        complex_ = simplex_boundary(3)
        log = SubdivisionLog([(('x0', 'x1', 'x2'), 'c'), (('x0', 'c'), 'e')])
        subdivided = log.replay(complex_)
        self.assertEqual(len(subdivided), 8)
        self.assertEqual(log.undo(subdivided), complex_)
        self.assertEqual(log.apexes, ['c', 'e'])

    def test_origins_cover_every_new_facet(self):
        complex_ = simplex(3)
        log = SubdivisionLog([(('x0', 'x1'), 'c')])
        subdivided, origin = replay_with_origins(complex_, log)
        self.assertEqual(set(origin), set(subdivided.facets))
        self.assertEqual(set(origin.values()), {('x0', 'x1', 'x2', 'x3')})


class FlagSubdivisionTests(SimpleTestCase):
    def test_default_flag(self):
        self.assertEqual(default_flag(3), [('x2', 'x3'), ('x1', 'x2', 'x3')])

    def test_flag_subdivision_of_a_simplex_boundary_is_a_cross_polytope(self):
        for d in range(1, 4):
            with self.subTest(d=d):
                subdivided, log = flag_subdivide(simplex_boundary(d + 1), default_flag(d + 1))
                self.assertEqual(len(log), d)
                self.assertTrue(are_isomorphic(subdivided, cross_polytope_boundary(d)))

    def test_apex_labels_follow_the_flag(self):
        _, log = flag_subdivide(simplex_boundary(3), default_flag(3))
        self.assertEqual([step.apex for step in log], ['y0', 'y1'])

    def test_flag_must_be_nested(self):
        with self.assertRaises(PreconditionError):
            flag_subdivide(simplex_boundary(3), [('x0', 'x1'), ('x1', 'x2', 'x3')])


class DiamondTests(SimpleTestCase):
    def colored_simplex(self, d):
        return simplex(d + 1), Coloring({f'x{i}': i for i in range(d + 2)})

    def test_piece_counts_for_the_tetrahedron(self):
        result = diamond(*self.colored_simplex(2))
        counts = sorted(len(pieces) for pieces in result.pieces.values())
        self.assertEqual(counts, [1, 1, 2, 4])
        self.assertTrue(is_balanced(result.complex, result.coloring))

    def test_diamond_of_a_simplex_is_a_cross_polytope(self):
        for d in range(1, 4):
            with self.subTest(d=d):
                result = diamond(*self.colored_simplex(d))
                self.assertTrue(are_isomorphic(result.complex, cross_polytope_boundary(d)))
                self.assertEqual(result.cell_boundary(tuple(f'x{i}' for i in range(d + 2))), result.complex)

    def test_image_of_all_faces_is_the_whole_complex(self):
        result = diamond(*self.colored_simplex(2))
        self.assertEqual(result.image(result.pieces), result.complex)

    def test_improper_coloring_is_rejected(self):
        with self.assertRaises(ColoringError):
            diamond(simplex(2), Coloring({'x0': 0, 'x1': 0, 'x2': 1}))
