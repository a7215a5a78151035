import random

from django.test import SimpleTestCase

from topology.coloring import Coloring, balanced_barycentric, generate_colored, is_balanced
from topology.core import (
    Isomorphism,
    LabelFactory,
    SimplicialComplex,
    bipyramid,
    classify,
    find_induced_embeddings,
    simplex_boundary,
    torus,
)
from topology.exceptions import ColoringError, InapplicableMoveError, PreconditionError
from topology.flips import (
    CrossFlipMove,
    FlipMove,
    apply_bistellar_flip,
    apply_cross_flip,
    available_bistellar_flips,
    available_cross_flips,
    enumerate_cross_flip_templates,
    make_template,
)
from topology.shelling import is_shellable


class BistellarFlipTests(SimpleTestCase):
    def test_simplex_boundary_has_four_flips(self):
        moves = available_bistellar_flips(simplex_boundary(3))
        self.assertEqual(len(moves), 4)
        self.assertEqual({move.kind for move in moves}, {'1-3'})

    def test_flip_and_inverse(self):
        complex_ = bipyramid(5)
        for move in available_bistellar_flips(complex_):
            with self.subTest(move=str(move)):
                flipped = apply_bistellar_flip(complex_, move)
                self.assertTrue(classify(flipped).sphere)
                self.assertEqual(apply_bistellar_flip(flipped, move.inverse()), complex_)

    def test_flips_preserve_euler_characteristic_on_the_torus(self):
        complex_ = torus()
        for move in available_bistellar_flips(complex_)[:10]:
            flipped = apply_bistellar_flip(complex_, move)
            self.assertEqual(flipped.f_vector.euler_characteristic, 0)
            self.assertTrue(classify(flipped).surface)

    def test_weld_of_a_degree_three_vertex(self):
        complex_ = bipyramid(3)
        flipped = apply_bistellar_flip(complex_, FlipMove(['a0'], ['e0', 'e1', 'e2']))
        self.assertEqual(len(flipped), 4)

    def test_inapplicable_flips(self):
        complex_ = simplex_boundary(3)
        with self.assertRaises(InapplicableMoveError):
            apply_bistellar_flip(complex_, FlipMove(['x0'], ['x1', 'x2', 'x3']))
        with self.assertRaises(InapplicableMoveError):
            apply_bistellar_flip(complex_, FlipMove(['x0', 'x1'], ['x2', 'x3']))

    def test_non_manifolds_are_rejected(self):
        with self.assertRaises(PreconditionError):
            available_bistellar_flips(SimplicialComplex([['a', 'b', 'c']]))


class TemplateCatalogTests(SimpleTestCase):
    def test_one_dimensional_catalog(self):
        shapes = [t.shape for t in enumerate_cross_flip_templates(1)]
        self.assertEqual(sorted(shapes), [(1, 3), (2, 2), (3, 1)])

    def test_two_dimensional_catalog(self):
        catalog = enumerate_cross_flip_templates(2)
        shapes = {t.shape for t in catalog}
        for pair in [(1, 7), (2, 6), (3, 5), (4, 4)]:
            self.assertIn(pair, shapes)
        for template in catalog:
            self.assertEqual(sum(template.shape), 8)
            self.assertTrue(is_shellable(template.D))
            self.assertTrue(is_shellable(template.complement))

    def test_basic_templates_are_general_templates(self):
        general = {t.key for t in enumerate_cross_flip_templates(2, 'general')}
        basic = enumerate_cross_flip_templates(2, 'basic')
        self.assertTrue(basic)
        self.assertTrue({t.key for t in basic} <= general)
        self.assertTrue(all(t.provenance == 'basic' for t in basic))

    def test_template_must_live_in_the_cross_polytope(self):
        with self.assertRaises(PreconditionError):
            make_template(SimplicialComplex([['x0', 'y0', 'x1']]))

    def test_unknown_mode(self):
        with self.assertRaises(PreconditionError):
            enumerate_cross_flip_templates(2, 'minimal')

    def test_general_mode_stops_at_dimension_three(self):
        with self.assertRaises(PreconditionError):
            enumerate_cross_flip_templates(4)
        with self.assertRaises(PreconditionError):
            enumerate_cross_flip_templates(0)

    def test_one_template_per_isomorphism_class_of_D(self):
        for d in (1, 2):
            with self.subTest(d=d):
                catalog = enumerate_cross_flip_templates(d)
                self.assertEqual(len({t.key[0] for t in catalog}), len(catalog))


class ThreeDimensionalCatalogTests(SimpleTestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.catalog = enumerate_cross_flip_templates(3)

    def test_every_template_splits_the_cross_polytope(self):
        self.assertTrue(self.catalog)
        for template in self.catalog:
            with self.subTest(shape=template.shape):
                self.assertEqual(template.d, 3)
                self.assertEqual(sum(template.shape), 16)
                self.assertTrue(is_shellable(template.D))
                self.assertTrue(is_shellable(template.complement))

    def test_keys_are_unique_in_D(self):
        self.assertEqual(len({t.key[0] for t in self.catalog}), len(self.catalog))
        shapes = {t.shape for t in self.catalog}
        self.assertIn((1, 15), shapes)
        self.assertIn((15, 1), shapes)

    def test_basic_templates_are_general_templates(self):
        basic = enumerate_cross_flip_templates(3, 'basic')
        self.assertTrue(basic)
        self.assertTrue({t.key for t in basic} <= {t.key for t in self.catalog})


class CrossFlipTests(SimpleTestCase):
    def setUp(self):
        self.octahedron, self.coloring = generate_colored('cross-polytope', n=2)
        catalog = enumerate_cross_flip_templates(2)
        self.single = next(t for t in catalog if t.shape == (1, 7))
        self.catalog = catalog

    def test_replacing_one_facet_by_seven(self):
        embedding = find_induced_embeddings(self.single.D, self.octahedron, limit=1)[0]
        result = apply_cross_flip(self.octahedron, CrossFlipMove(self.single, embedding), coloring=self.coloring)
        self.assertEqual(len(result.complex), 14)
        self.assertEqual(len(result.complex.vertices), 9)
        self.assertTrue(classify(result.complex).sphere)
        self.assertTrue(is_balanced(result.complex, result.coloring))
        undone = apply_cross_flip(result.complex, result.inverse, coloring=result.coloring)
        self.assertEqual(undone.complex, self.octahedron)
        self.assertEqual(undone.coloring, self.coloring)

    def test_image_must_be_induced(self):
        host = bipyramid(3)
        embedding = Isomorphism(dict(zip(self.single.D.vertices, ['e0', 'e1', 'e2'])))
        with self.assertRaises(InapplicableMoveError):
            apply_cross_flip(host, CrossFlipMove(self.single, embedding))

    def test_template_dimension_must_match(self):
        embedding = Isomorphism(dict(zip(self.single.D.vertices, ['x0', 'x1', 'x2'])))
        with self.assertRaises(InapplicableMoveError):
            apply_cross_flip(simplex_boundary(2), CrossFlipMove(self.single, embedding))

    def test_available_moves_all_apply(self):
        moves = available_cross_flips(self.octahedron, self.catalog, limit=2)
        self.assertTrue(moves)
        for move in moves:
            with self.subTest(move=str(move)):
                result = apply_cross_flip(self.octahedron, move, coloring=self.coloring)
                self.assertTrue(is_balanced(result.complex, result.coloring))
                self.assertEqual(result.complex.f_vector.euler_characteristic, 2)

    def test_host_must_be_a_closed_surface(self):
        copy = self.octahedron.relabel({v: f'c{v}' for v in self.octahedron.vertices if v != 'x0'})
        pinched = self.octahedron.union(copy)
        self.assertFalse(classify(pinched).surface)
        embedding = find_induced_embeddings(self.single.D, pinched, limit=1)[0]
        with self.assertRaises(PreconditionError):
            apply_cross_flip(pinched, CrossFlipMove(self.single, embedding))

    def test_improper_host_coloring_is_rejected_before_flipping(self):
        embedding = find_induced_embeddings(self.single.D, self.octahedron, limit=1)[0]
        flat = Coloring({v: 0 for v in self.octahedron.vertices}, 3)
        with self.assertRaises(ColoringError):
            apply_cross_flip(self.octahedron, CrossFlipMove(self.single, embedding), coloring=flat)


class RandomRoundtripTests(SimpleTestCase):
    def roundtrip(self, complex_, move):
        flipped = apply_bistellar_flip(complex_, move)
        self.assertEqual(flipped.f_vector.euler_characteristic, complex_.f_vector.euler_characteristic)
        self.assertTrue(classify(flipped).surface)
        self.assertEqual(apply_bistellar_flip(flipped, move.inverse()), complex_)
        return flipped

    def test_random_walks_on_spheres(self):
        rng = random.Random(11)
        done = 0
        while done < 700:
            current = bipyramid(rng.randint(3, 6))
            labels = LabelFactory(current.vertex_set)
            for _ in range(20):
                moves = available_bistellar_flips(current, labels=labels)
                if len(current.vertices) >= 12:
                    moves = [move for move in moves if move.kind != '1-3']
                if not moves:
                    break
                move = rng.choice(moves)
                with self.subTest(step=done, move=str(move)):
                    current = self.roundtrip(current, move)
                    self.assertTrue(classify(current).sphere)
                done += 1

    def test_random_flips_on_tori(self):
        rng = random.Random(13)
        for surface in (torus(), balanced_barycentric(torus())[0]):
            moves = available_bistellar_flips(surface)
            for move in rng.sample(moves, min(150, len(moves))):
                with self.subTest(surface=surface.name, move=str(move)):
                    flipped = self.roundtrip(surface, move)
                    self.assertEqual(flipped.f_vector.euler_characteristic, 0)
                    self.assertFalse(classify(flipped).sphere)

    def test_cross_flips_on_a_balanced_torus(self):
        surface, coloring = balanced_barycentric(torus())
        moves = available_cross_flips(surface, enumerate_cross_flip_templates(2), limit=3)
        self.assertTrue(moves)
        for move in moves:
            with self.subTest(move=str(move)):
                result = apply_cross_flip(surface, move, coloring=coloring)
                self.assertEqual(result.complex.f_vector.euler_characteristic, 0)
                self.assertTrue(classify(result.complex).surface)
                self.assertTrue(is_balanced(result.complex, result.coloring))
                undone = apply_cross_flip(result.complex, result.inverse, coloring=result.coloring)
                self.assertEqual(undone.complex, surface)
                self.assertEqual(undone.coloring, coloring)
