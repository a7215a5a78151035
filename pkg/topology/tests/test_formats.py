from django.test import SimpleTestCase

from topology.coloring import Coloring, generate_colored
from topology.core import cross_polytope_boundary, simplex_boundary
from topology.exceptions import ParseError
from topology.flips import available_bistellar_flips, enumerate_cross_flip_templates
from topology.formats import (
    dump_cobordism,
    dump_complex,
    dump_moves,
    dump_report,
    dump_templates,
    load_cobordism,
    load_complex_payload,
    load_moves,
    load_report,
    load_templates,
    parse_coloring,
    parse_facets,
    parse_json,
    serialize_coloring,
    serialize_facets,
)
from topology.pipeline import reduce_balanced_2sphere, replay
from topology.poset import decompose, elementary_cobordism


class FacetTextTests(SimpleTestCase):
    def test_comments_and_blank_lines_are_skipped(self):
        text = '# a triangle boundary\n\nx1 x0\n  x2 x1  \n# done\nx0 x2\n'
        self.assertEqual(parse_facets(text), simplex_boundary(2))

    def test_canonical_text(self):
        octahedron = cross_polytope_boundary(2)
        text = serialize_facets(octahedron)
        self.assertEqual(len(text.splitlines()), 8)
        self.assertEqual(text.splitlines()[0], 'x0 x1 x2')
        self.assertEqual(parse_facets(text), octahedron)
        self.assertEqual(serialize_facets(parse_facets(text)), text)

    def test_repeated_vertex_reports_the_line(self):
        with self.assertRaises(ParseError) as caught:
            parse_facets('a b c\na a b\n')
        self.assertEqual(caught.exception.details['line'], 2)
        self.assertTrue(caught.exception.message.startswith('line 2:'))
        self.assertEqual(caught.exception.as_record()['code'], 'parse_error')


class ColoringTextTests(SimpleTestCase):
    def test_header_and_entries(self):
        coloring = parse_coloring('# colors\nm 4\nx0 0\nx1 3\n')
        self.assertEqual(coloring.palette, 4)
        self.assertEqual(coloring.as_dict(), {'x0': 0, 'x1': 3})
        self.assertEqual(serialize_coloring(coloring), 'm 4\nx0 0\nx1 3\n')

    def test_palette_defaults_to_the_largest_color(self):
        self.assertEqual(parse_coloring('a 0\nb 2\n').palette, 3)

    def test_vertex_named_m(self):
        self.assertEqual(parse_coloring('m 1\n').assignment, {'m': 1})
        coloring = parse_coloring('a 0\nm 1\n')
        self.assertEqual(coloring.assignment, {'a': 0, 'm': 1})
        self.assertEqual(coloring.palette, 2)

    def test_malformed_colorings(self):
        cases = {
            'a 0 1\n': 1,
            'a zero\n': 1,
            'a 0\na 1\n': 2,
            'm 2\na 0\nb 2\n': 3,
            'a -1\n': 1,
        }
        for text, line in cases.items():
            with self.subTest(text=text):
                with self.assertRaises(ParseError) as caught:
                    parse_coloring(text)
                self.assertEqual(caught.exception.details['line'], line)


class StructuredFormatTests(SimpleTestCase):
    def test_complex_with_coloring(self):
        octahedron, coloring = generate_colored('cross-polytope', n=2)
        complex_, loaded = load_complex_payload(parse_json(dump_complex(octahedron, coloring)))
        self.assertEqual(complex_, octahedron)
        self.assertEqual(loaded, coloring)

    def test_complex_without_coloring(self):
        complex_, loaded = load_complex_payload(parse_json(dump_complex(simplex_boundary(2))))
        self.assertEqual(complex_, simplex_boundary(2))
        self.assertIsNone(loaded)

    def test_uncolored_vertices_are_rejected(self):
        payload = {'facets': [['a', 'b'], ['b', 'c']], 'colors': {'a': 0, 'b': 1}}
        with self.assertRaises(ParseError):
            load_complex_payload(payload)

    def test_invalid_json(self):
        with self.assertRaises(ParseError):
            parse_json('{"facets": [')

    def test_templates(self):
        catalog = enumerate_cross_flip_templates(1)
        loaded = load_templates(parse_json(dump_templates(catalog)))
        self.assertEqual([t.shape for t in loaded], [t.shape for t in catalog])
        self.assertEqual([t.key for t in loaded], [t.key for t in catalog])

    def test_moves(self):
        moves = available_bistellar_flips(simplex_boundary(3))
        self.assertEqual(load_moves(parse_json(dump_moves(moves))), moves)

    def test_bistellar_move_sides_must_be_disjoint(self):
        with self.assertRaises(ParseError):
            load_moves([{'type': 'bistellar', 'A': ['a', 'b'], 'B': ['b', 'c']}])

    def test_report_replays_after_loading(self):
        sphere, coloring = generate_colored('bipyramid', n=4)
        report = reduce_balanced_2sphere(sphere, coloring)
        loaded = load_report(parse_json(dump_report(report)))
        self.assertEqual(loaded.start, report.start)
        self.assertEqual(loaded.end, report.end)
        self.assertEqual(
            [m.as_record() for m in loaded.moves], [m.as_record() for m in report.moves])
        end, end_coloring = replay(loaded)
        self.assertEqual(end, report.end)
        self.assertEqual(end_coloring, report.end_coloring)

    def test_cobordism(self):
        sphere = simplex_boundary(3)
        move = available_bistellar_flips(sphere)[0]
        cobordism = elementary_cobordism(sphere, move)
        loaded = load_cobordism(parse_json(dump_cobordism(cobordism)))
        self.assertEqual(loaded.left, cobordism.left)
        self.assertEqual(loaded.witness, cobordism.witness)
        self.assertEqual(decompose(loaded).moves, [move])

    def test_coloring_objects_compare_by_palette(self):
        self.assertNotEqual(Coloring({'a': 0}, 1), Coloring({'a': 0}, 2))
