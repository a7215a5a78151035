import random
from itertools import combinations

from django.test import SimpleTestCase

from topology.coloring import Coloring
from topology.core import (
    LabelFactory,
    SimplicialComplex,
    are_isomorphic,
    bipyramid,
    cross_polytope_boundary,
    simplex,
    simplex_boundary,
)
from topology.exceptions import ColoringError, PosetError, PreconditionError, ShellingError
from topology.flips import apply_bistellar_flip, available_bistellar_flips
from topology.poset import (
    PosetElement,
    SimplicialPoset,
    attach_cell,
    compose,
    decompose,
    disjoint_ends_cobordism,
    element_id,
    elementary_cobordism,
    eliminate_all_vertices,
    eliminate_face,
    extend_poset_coloring,
    find_bidirectional_shelling,
    subdivide_cobordism,
)
from topology.subdivision import stellar_subdivide


def digon():
    return SimplicialPoset([
        PosetElement('{}', (), ()),
        PosetElement('{a}', ('a',), ('{}',)),
        PosetElement('{b}', ('b',), ('{}',)),
        PosetElement('{a,b}', ('a', 'b'), ('{a}', '{b}')),
        PosetElement('{a,b}#1', ('a', 'b'), ('{a}', '{b}')),
    ])


class SimplicialPosetTests(SimpleTestCase):
    def test_face_poset_of_a_triangle_boundary(self):
        poset = SimplicialPoset.from_complex(simplex_boundary(2))
        self.assertEqual(len(poset), 7)
        self.assertEqual(poset.bottom, '{}')
        self.assertEqual(poset.dim, 1)
        self.assertTrue(poset.is_simplicial_complex)
        self.assertEqual(poset.to_complex(), simplex_boundary(2))

    def test_element_ids(self):
        self.assertEqual(element_id(['b', 'a']), '{a,b}')
        self.assertEqual(element_id(['a', 'b'], taken={'{a,b}', '{a,b}#1'}), '{a,b}#2')

    def test_parallel_edges(self):
        poset = digon()
        self.assertFalse(poset.is_simplicial_complex)
        with self.assertRaises(PosetError):
            poset.to_complex()
        with self.assertRaises(PosetError):
            poset.id_of(['a', 'b'])

    def test_invalid_posets(self):
        with self.assertRaises(PosetError):
            SimplicialPoset([PosetElement('{}', (), ()), PosetElement('{a}', ('a',), ('missing',))])
        with self.assertRaises(PosetError):
            SimplicialPoset([
                PosetElement('{}', (), ()),
                PosetElement('{a}', ('a',), ('{}',)),
                PosetElement('{b}', ('b',), ('{}',)),
                PosetElement('{a,b}', ('a', 'b'), ('{a}',)),
            ])
        with self.assertRaises(PosetError):
            SimplicialPoset([PosetElement('{a}', ('a',), ())])

    def test_attach_cell_creates_a_parallel_edge(self):
        poset = SimplicialPoset.from_complex(simplex_boundary(2))
        glued = attach_cell(poset, ['x0', 'x1'], [poset.id_of(['x0']), poset.id_of(['x1'])])
        self.assertEqual(len(glued), 8)
        self.assertIn('{x0,x1}#1', glued)
        self.assertFalse(glued.is_simplicial_complex)


class CobordismTests(SimpleTestCase):
    def setUp(self):
        self.sphere = simplex_boundary(3)
        self.move = available_bistellar_flips(self.sphere)[0]

    def test_elementary_cobordism_decomposes_into_its_flip(self):
        cobordism = elementary_cobordism(self.sphere, self.move)
        self.assertEqual(len(cobordism.top_cells), 1)
        self.assertEqual(cobordism.left_complex(), self.sphere)
        decomposition = decompose(cobordism)
        self.assertEqual(decomposition.moves, [self.move])
        self.assertEqual(decomposition.complexes[-1], cobordism.right_complex())

    def test_composing_a_flip_with_its_inverse(self):
        first = elementary_cobordism(self.sphere, self.move)
        second = elementary_cobordism(first.right_complex(), self.move.inverse())
        composite = compose(first, second)
        self.assertEqual(composite.left_complex(), self.sphere)
        self.assertEqual(composite.right_complex(), self.sphere)
        self.assertEqual(len(composite.top_cells), 2)
        self.assertEqual(decompose(composite).moves, [self.move, self.move.inverse()])

    def test_compose_needs_matching_ends(self):
        first = elementary_cobordism(self.sphere, self.move)
        with self.assertRaises(PosetError):
            compose(first, first)

    def test_eliminating_a_vertex(self):
        start = bipyramid(4)
        eliminated, cobordism = eliminate_face(start, ['a0'])
        self.assertNotIn('a0', eliminated.vertices)
        self.assertTrue(are_isomorphic(eliminated, start))
        self.assertEqual(cobordism.right_complex(), eliminated)
        decomposition = decompose(cobordism)
        self.assertEqual(len(decomposition.moves), 4)
        self.assertEqual(decomposition.complexes[-1], eliminated)

    def test_eliminate_rejects_a_ball_with_the_wrong_boundary(self):
        with self.assertRaises(PreconditionError):
            eliminate_face(bipyramid(4), ['a0'], K=SimplicialComplex([['p', 'q', 'r']]))

    def test_decompose_rejects_a_bad_order(self):
        start = bipyramid(4)
        eliminated, cobordism = eliminate_face(start, ['a0'])
        (apex,) = set(eliminated.vertices) - set(start.vertices)
        cells = {frozenset(cobordism.poset[t].vertices): t for t in cobordism.top_cells}
        first = cells[frozenset({'a0', apex, 'e0', 'e1'})]
        second = cells[frozenset({'a0', apex, 'e2', 'e3'})]
        rest = [t for t in cobordism.top_cells if t not in (first, second)]
        with self.assertRaises(ShellingError):
            decompose(cobordism, [first, second] + rest)

    def test_disjoint_ends(self):
        start = simplex_boundary(2)
        cobordism = disjoint_ends_cobordism(start)
        self.assertEqual(cobordism.left_complex(), start)
        end = cobordism.right_complex()
        self.assertTrue(set(end.vertices).isdisjoint(start.vertices))
        self.assertTrue(are_isomorphic(end, start))
        self.assertEqual(decompose(cobordism).complexes[-1], end)

    def test_eliminating_every_vertex(self):
        for start in (simplex_boundary(2), simplex_boundary(3), cross_polytope_boundary(2)):
            with self.subTest(start=start.name):
                end, cobordism = eliminate_all_vertices(start)
                self.assertEqual(cobordism.left_complex(), start)
                self.assertEqual(cobordism.right_complex(), end)
                self.assertTrue(set(end.vertices).isdisjoint(start.vertices))
                self.assertEqual(cobordism.left & cobordism.right, {cobordism.poset.bottom})
                self.assertIsNotNone(find_bidirectional_shelling(cobordism))
                self.assertEqual(decompose(cobordism).complexes[-1], end)

    def test_subdividing_the_top_cell(self):
        cobordism = elementary_cobordism(self.sphere, self.move)
        subdivided = subdivide_cobordism(cobordism, cobordism.top_cells[0], apex='z')
        self.assertEqual(len(subdivided.top_cells), 4)
        self.assertEqual(subdivided.left_complex(), self.sphere)
        self.assertEqual(subdivided.right_complex(), cobordism.right_complex())
        self.assertIsNotNone(find_bidirectional_shelling(subdivided))
        self.assertEqual(len(decompose(subdivided).moves), 4)

    def test_subdividing_every_face_of_a_two_two_flip(self):
        sphere = cross_polytope_boundary(2)
        move = next(m for m in available_bistellar_flips(sphere) if m.kind == '2-2')
        flipped = apply_bistellar_flip(sphere, move)
        cobordism = elementary_cobordism(sphere, move)
        cell = move.A + move.B
        for size in range(2, 5):
            for sigma in combinations(cell, size):
                with self.subTest(sigma=sigma):
                    subdivided = subdivide_cobordism(cobordism, list(sigma), apex='z')
                    self.assertEqual(len(subdivided.top_cells), size)
                    ends = ((subdivided.left_complex(), sphere), (subdivided.right_complex(), flipped))
                    for end, before in ends:
                        expected = stellar_subdivide(before, sigma, 'z') if before.contains(sigma) else before
                        self.assertEqual(end, expected)
                    decomposition = decompose(subdivided)
                    self.assertEqual(decomposition.complexes[0], subdivided.left_complex())
                    self.assertEqual(decomposition.complexes[-1], subdivided.right_complex())


class PosetColoringTests(SimpleTestCase):
    def test_dull_elements_are_subdivided_away(self):
        poset = SimplicialPoset.from_complex(simplex(2))
        base = [poset.id_of(['x0', 'x1'])]
        extension = extend_poset_coloring(poset, base, Coloring({'x0': 0, 'x1': 1}), 3)
        self.assertEqual(extension.dull_counts, [2, 1, 0])
        self.assertEqual(len(extension.log), 2)
        colors = extension.coloring
        for element in extension.poset:
            if element.rank >= 2:
                self.assertEqual(len({colors[v] for v in element.vertices}), element.rank)
        self.assertEqual(colors['x0'], 0)
        self.assertEqual(colors['x1'], 1)

    def test_improper_base_is_rejected(self):
        poset = SimplicialPoset.from_complex(simplex(2))
        with self.assertRaises(ColoringError):
            extend_poset_coloring(poset, [poset.id_of(['x0', 'x1'])], Coloring({'x0': 0, 'x1': 0}), 3)


def random_flip_sequence(rng, start, length):
    labels = LabelFactory(start.vertex_set)
    current, moves = start, []
    for _ in range(length):
        move = rng.choice(available_bistellar_flips(current, labels=labels))
        moves.append(move)
        current = apply_bistellar_flip(current, move)
    return moves


class RandomCompositionTests(SimpleTestCase):
    def test_decompose_recovers_random_flip_sequences(self):
        rng = random.Random(8)
        for trial in range(100):
            start = rng.choice([simplex_boundary(3), bipyramid(3), bipyramid(4)])
            moves = random_flip_sequence(rng, start, rng.randint(1, 8))
            with self.subTest(trial=trial, moves=[str(m) for m in moves]):
                cobordism = elementary_cobordism(start, moves[0])
                for move in moves[1:]:
                    cobordism = compose(cobordism, elementary_cobordism(cobordism.right_complex(), move))
                decomposition = decompose(cobordism)
                self.assertEqual(decomposition.moves, moves)
                states = decomposition.complexes
                self.assertEqual(states[0], start)
                for before, after, move in zip(states, states[1:], moves):
                    self.assertFalse(set(move.A) & set(move.B))
                    self.assertTrue(before.contains(move.A))
                    self.assertFalse(after.contains(move.A))
                    self.assertEqual(before.link(move.A), SimplicialComplex.simplex_boundary(move.B))
                    self.assertEqual(apply_bistellar_flip(before, move), after)
