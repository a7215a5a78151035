from ...coloring import generate_colored
from ...core import GENERATOR_KINDS, normalize_kind
from ...formats import dump_complex, serialize_coloring, serialize_facets
from ..base import TopologyCommand


class Command(TopologyCommand):
    help = 'Generate a standard complex together with its natural coloring'

    def add_command_arguments(self, parser):
        parser.add_argument('kind', help=f'One of {", ".join(GENERATOR_KINDS)}')
        parser.add_argument('-d', '--dimension', type=int, default=None)
        parser.add_argument('-n', '--size', type=int, default=None, help='Equator vertices of a bipyramid')
        parser.add_argument('--source', default=None, help='Facet file to subdivide (barycentric)')
        parser.add_argument('--coloring-output', default=None, help='Write the coloring file here')

    def run(self, kind, dimension, size, source, coloring_output, **options):
        kind = normalize_kind(kind)
        n = size if kind == 'bipyramid' else dimension
        origin = self.load(source)[0] if source else None
        complex_, coloring = generate_colored(kind, n=n, source=origin)
        if self.structured:
            self.emit(dump_complex(complex_, coloring))
            return
        self.emit(serialize_facets(complex_))
        if coloring is not None and coloring_output:
            self.emit(serialize_coloring(coloring), path=coloring_output)
