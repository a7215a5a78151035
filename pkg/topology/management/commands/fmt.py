from ...formats import dump_complex, serialize_coloring, serialize_facets
from ..base import TopologyCommand


class Command(TopologyCommand):
    help = 'Rewrite a facet file (and coloring) canonically, or convert between text and structured'

    def add_command_arguments(self, parser):
        parser.add_argument('path', metavar='input', help='Facet file')
        parser.add_argument('--coloring', default=None)
        parser.add_argument('--coloring-output', default=None)

    def run(self, path, coloring, coloring_output, **options):
        complex_, colors = self.load(path, coloring)
        if self.structured:
            self.emit(dump_complex(complex_, colors))
            return
        self.emit(serialize_facets(complex_))
        if colors is not None and coloring_output:
            self.emit(serialize_coloring(colors.restrict(complex_.vertices)), path=coloring_output)
