from ...coloring import find_proper_coloring
from ...exceptions import PreconditionError
from ...formats import dump_report, load_templates, read_structured, serialize_facets
from ...pipeline import bistellar_reduce, heuristic_reduce, reduce_balanced_2sphere
from ..base import TopologyCommand


class Command(TopologyCommand):
    help = 'Reduce a complex by cross-flips (balanced 2-spheres, heuristic) or bistellar flips'
    randomized = True

    def add_command_arguments(self, parser):
        parser.add_argument('path', metavar='input', help='Facet file')
        parser.add_argument('--coloring', default=None, help='Coloring file (found automatically if omitted)')
        modes = parser.add_mutually_exclusive_group()
        modes.add_argument('--balanced', dest='mode', action='store_const', const='balanced')
        modes.add_argument('--heuristic', dest='mode', action='store_const', const='heuristic')
        modes.add_argument('--bistellar', dest='mode', action='store_const', const='bistellar')
        parser.add_argument('--catalog', default=None, help='Structured template catalog for --heuristic')
        parser.add_argument('--temperature', type=float, default=None)
        parser.add_argument('--decay', type=float, default=None)

    def run(self, path, coloring, mode, catalog, temperature, decay, seed, budget, **options):
        mode = mode or 'balanced'
        complex_, colors = self.load(path, coloring)
        if mode != 'bistellar' and colors is None:
            colors = find_proper_coloring(complex_, (complex_.dim or 0) + 1)
            if colors is None:
                raise PreconditionError(f'{complex_!r} is not balanced')
        if mode == 'balanced':
            report = reduce_balanced_2sphere(complex_, colors, budget=budget)
            report.seed = seed
        elif mode == 'heuristic':
            templates = load_templates(read_structured(catalog)) if catalog else None
            report = heuristic_reduce(
                complex_, colors, catalog=templates, budget=budget, seed=seed,
                temperature=temperature, decay=decay)
        else:
            report = bistellar_reduce(
                complex_, budget=budget, seed=seed, temperature=temperature, decay=decay)
        self.emit_report(report)

    def emit_report(self, report):
        if self.structured:
            self.emit(dump_report(report))
            return
        header = [
            f'# mode: {report.mode}',
            f'# steps: {len(report.moves)}',
            f'# success: {str(report.success).lower()}',
            f'# seed: {report.seed}',
        ]
        self.emit('\n'.join(header) + '\n' + serialize_facets(report.end))
