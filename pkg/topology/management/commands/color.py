import logging

from ...coloring import RelativeComplex, extend_coloring, find_proper_coloring
from ...exceptions import ColoringError, PreconditionError
from ...formats import render_json, serialize_coloring, serialize_facets
from ...serializers import ColoringSerializer, ComplexSerializer
from ..base import TopologyCommand

logger = logging.getLogger(__name__)


class Command(TopologyCommand):
    help = 'Find a proper m-coloring, or extend a coloring of a subcomplex by stellar subdivisions'

    def add_command_arguments(self, parser):
        parser.add_argument('path', metavar='input', help='Facet file')
        parser.add_argument('-m', '--palette', type=int, default=None, help='Number of colors (default d+1)')
        parser.add_argument('--subcomplex', default=None, help='Facet file of the colored subcomplex K')
        parser.add_argument('--coloring', default=None, help='Coloring of K')
        parser.add_argument('--complex-output', default=None, help='Write the subdivided complex here')

    def run(self, path, palette, subcomplex, coloring, complex_output, **options):
        complex_, given = self.load(path, coloring)
        m = palette or (complex_.dim or 0) + 1
        if subcomplex is None:
            found = find_proper_coloring(complex_, m)
            if found is None:
                raise ColoringError(f'{complex_!r} has no proper {m}-coloring', m=m)
            if self.structured:
                self.emit(render_json(ColoringSerializer(found).data))
            else:
                self.emit(serialize_coloring(found))
            return

        if given is None:
            raise PreconditionError('Extending a coloring needs --coloring for the subcomplex')
        K = self.load(subcomplex)[0]
        extension = extend_coloring(RelativeComplex(complex_, K), given.restrict(K.vertices), m)
        if self.structured:
            self.emit(render_json({
                'complex': ComplexSerializer(extension.complex, context={'coloring': extension.coloring}).data,
                'log': [step.as_record() for step in extension.log],
                'dull_counts': list(extension.dull_counts),
            }))
            return
        self.emit(serialize_coloring(extension.coloring))
        if complex_output:
            self.emit(serialize_facets(extension.complex), path=complex_output)
        elif extension.log:
            logger.warning(
                f'The complex was subdivided {len(extension.log)} times; pass --complex-output to keep it')
