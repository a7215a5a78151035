import random
import sys

from django.test import SimpleTestCase

from topology.coloring import (
    Coloring,
    RelativeComplex,
    balanced_barycentric,
    extend_coloring,
    find_proper_coloring,
    generate_colored,
    improper_edges,
    is_balanced,
    is_dull,
    is_proper,
)
from topology.core import (
    SimplicialComplex,
    bipyramid,
    cross_polytope_boundary,
    face_key,
    make_face,
    simplex_boundary,
)
from topology.exceptions import ColoringError, SubcomplexError


class ColoringBasicsTests(SimpleTestCase):
    def test_color_outside_palette(self):
        with self.assertRaises(ColoringError):
            Coloring({'a': 3}, 2)

    def test_missing_vertex(self):
        with self.assertRaises(ColoringError):
            Coloring({'a': 0})['b']

    def test_restrict_and_extend(self):
        coloring = Coloring({'a': 0, 'b': 1}, 2)
        self.assertEqual(coloring.restrict(['a']).as_dict(), {'a': 0})
        self.assertEqual(coloring.extend({'c': 4}).palette, 5)

    def test_improper_edges_are_reported(self):
        complex_ = SimplicialComplex([['a', 'b'], ['b', 'c']])
        coloring = Coloring({'a': 0, 'b': 0, 'c': 1})
        self.assertEqual(improper_edges(complex_, coloring), [('a', 'b')])
        self.assertFalse(is_proper(complex_, coloring))


class NaturalColoringTests(SimpleTestCase):
    def test_generators_with_balanced_colorings(self):
        cases = [('cross-polytope', 2), ('cross-polytope', 3), ('simplex-boundary', 3), ('bipyramid', 6)]
        for kind, n in cases:
            with self.subTest(kind=kind, n=n):
                complex_, coloring = generate_colored(kind, n=n)
                self.assertTrue(is_balanced(complex_, coloring))

    def test_odd_bipyramid_has_no_natural_coloring(self):
        self.assertIsNone(generate_colored('bipyramid', n=5)[1])

    def test_torus_has_no_natural_coloring(self):
        self.assertIsNone(generate_colored('torus')[1])

    def test_barycentric_subdivision_is_balanced(self):
        complex_, coloring = balanced_barycentric(simplex_boundary(3))
        self.assertEqual(len(complex_), 24)
        self.assertTrue(is_balanced(complex_, coloring))


class ProperColoringSearchTests(SimpleTestCase):
    def test_tetrahedron_boundary_needs_four_colors(self):
        complex_ = simplex_boundary(3)
        self.assertIsNone(find_proper_coloring(complex_, 3))
        self.assertTrue(is_proper(complex_, find_proper_coloring(complex_, 4)))

    def test_odd_bipyramid_is_not_three_colorable(self):
        self.assertIsNone(find_proper_coloring(bipyramid(5), 3))

    def test_octahedron_three_coloring(self):
        complex_ = cross_polytope_boundary(2)
        self.assertTrue(is_balanced(complex_, find_proper_coloring(complex_, 3)))


class ColoringExtensionTests(SimpleTestCase):
    def test_is_dull(self):
        self.assertTrue(is_dull(('a', 'b'), {'a': 0, 'b': 0}))
        self.assertFalse(is_dull(('a', 'b'), {'a': 0, 'b': 1}))
        self.assertFalse(is_dull(('a',), {'a': 0}))

    def test_subcomplex_is_required(self):
        with self.assertRaises(SubcomplexError):
            RelativeComplex(SimplicialComplex([['a', 'b']]), SimplicialComplex([['c']]))

    def test_equally_colored_endpoints_are_separated(self):
        L = SimplicialComplex([['a', 'b', 'c']])
        K = SimplicialComplex([['a'], ['b']])
        extension = extend_coloring(RelativeComplex(L, K), Coloring({'a': 0, 'b': 0}), 3)
        self.assertTrue(is_proper(extension.complex, extension.coloring))
        self.assertEqual(extension.coloring['a'], 0)
        self.assertEqual(extension.coloring['b'], 0)
        self.assertNotIn(('a', 'b'), extension.complex.edges)
        self.assertEqual(extension.log[0].phase, 'edge')
        counts = extension.dull_counts
        self.assertTrue(all(later < earlier for earlier, later in zip(counts, counts[1:])))
        self.assertEqual(counts[-1], 0)
        new_colors = {extension.coloring[v] for v in extension.complex.vertices if v not in ('a', 'b')}
        self.assertTrue(new_colors <= {0, 1, 2})

    def test_subcomplex_is_never_subdivided(self):
        L = simplex_boundary(3).cone('apex')
        K = simplex_boundary(3)
        coloring = Coloring({'x0': 0, 'x1': 1, 'x2': 2, 'x3': 3})
        extension = extend_coloring(RelativeComplex(L, K), coloring, 4)
        self.assertTrue(K.is_subcomplex_of(extension.complex))
        self.assertTrue(is_proper(extension.complex, extension.coloring))
        for v in K.vertices:
            self.assertEqual(extension.coloring[v], coloring[v])
        self.assertEqual(extension.complex.boundary(), K)

    def test_cone_with_free_apex_color_needs_no_subdivision(self):
        octahedron, coloring = generate_colored('cross-polytope', n=2)
        cone = octahedron.cone('apex')
        anchored = octahedron.union(SimplicialComplex([['apex']]))
        extension = extend_coloring(RelativeComplex(cone, anchored), coloring.extend({'apex': 3}, 4), 4)
        self.assertEqual(extension.complex, cone)
        self.assertEqual(extension.log, [])
        self.assertTrue(is_balanced(extension.complex, extension.coloring))


class DottedLabelTests(SimpleTestCase):
    def test_barycentric_coloring_ignores_the_shape_of_labels(self):
        source = SimplicialComplex.simplex_boundary(['v.1', 'v.2', 'v.3'])
        complex_, coloring = generate_colored('barycentric', source=source)
        self.assertTrue(is_balanced(complex_, coloring))
        subdivided, same = balanced_barycentric(source)
        self.assertEqual(subdivided, complex_)
        self.assertEqual(same, coloring)

    def test_clashing_barycenter_labels_are_kept_apart(self):
        source = SimplicialComplex([['a.b', 'c'], ['a', 'b.c']])
        complex_, coloring = balanced_barycentric(source)
        self.assertEqual(len(complex_.vertices), 6)
        self.assertEqual(len(complex_), 4)
        self.assertTrue(is_balanced(complex_, coloring))

    def test_second_barycentric_subdivision(self):
        once, _ = balanced_barycentric(simplex_boundary(2))
        twice, coloring = balanced_barycentric(once)
        self.assertEqual(len(twice), 12)
        self.assertTrue(is_balanced(twice, coloring))


def random_relative_complex(rng):
    """L on at most 10 vertices with dim <= 3, K generated by a few faces of L."""
    vertices = [f'v{i}' for i in range(rng.randint(3, 10))]
    dimension = rng.randint(1, 3)
    facets = [
        rng.sample(vertices, rng.randint(2, min(dimension + 1, len(vertices))))
        for _ in range(rng.randint(1, 6))
    ]
    L = SimplicialComplex(facets)
    faces = sorted((make_face(f) for f in L.faces if f), key=face_key)
    K = SimplicialComplex(rng.sample(faces, rng.randint(1, min(4, len(faces)))))
    return RelativeComplex(L, K)


class RandomColoringExtensionTests(SimpleTestCase):
    def test_random_relative_complexes(self):
        rng = random.Random(20240601)
        trials = 0
        while trials < 200:
            relative = random_relative_complex(rng)
            m = rng.randint(1, 5)
            base = find_proper_coloring(relative.K, m)
            if base is None:
                continue
            trials += 1
            shuffle = rng.sample(range(m), m)
            coloring = Coloring({v: shuffle[c] for v, c in base.assignment.items()}, m)
            with self.subTest(trial=trials, L=relative.L.facets, K=relative.K.facets, m=m):
                extension = extend_coloring(relative, coloring, m)
                self.assertTrue(is_proper(extension.complex, extension.coloring))
                self.assertTrue(relative.K.is_subcomplex_of(extension.complex))
                for v in relative.K.vertices:
                    self.assertEqual(extension.coloring[v], coloring[v])
                top = relative.dim if relative.dim is not None else 0
                added = {
                    extension.coloring[v] for v in extension.complex.vertices
                    if v not in relative.K.vertex_set
                }
                self.assertTrue(added <= set(range(top + 1)))
                counts = extension.dull_counts
                self.assertTrue(all(later < earlier for earlier, later in zip(counts, counts[1:])))
                self.assertEqual(counts[-1], 0)


class LongPathTests(SimpleTestCase):
    def setUp(self):
        self.addCleanup(sys.setrecursionlimit, sys.getrecursionlimit())
        sys.setrecursionlimit(300)

    def test_two_coloring_a_path_longer_than_the_recursion_limit(self):
        path = SimplicialComplex([[f'p{i}', f'p{i + 1}'] for i in range(500)])
        coloring = find_proper_coloring(path, 2)
        self.assertTrue(is_proper(path, coloring))
        self.assertEqual(coloring['p0'], coloring['p2'])
