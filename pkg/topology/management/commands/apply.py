import logging

from ...core import LabelFactory
from ...flips import apply_move
from ...formats import dump_complex, load_moves, read_structured, serialize_coloring, serialize_facets
from ..base import TopologyCommand

logger = logging.getLogger(__name__)


class Command(TopologyCommand):
    help = 'Apply a structured move list to a complex, carrying a coloring through cross-flips'

    def add_command_arguments(self, parser):
        parser.add_argument('path', metavar='input', help='Facet file')
        parser.add_argument('moves', help='Structured move list')
        parser.add_argument('--coloring', default=None, help='Coloring file of the input')
        parser.add_argument('--coloring-output', default=None, help='Write the carried coloring here')

    def run(self, path, moves, coloring, coloring_output, **options):
        complex_, colors = self.load(path, coloring)
        labels = LabelFactory(complex_.vertex_set)
        for position, move in enumerate(load_moves(read_structured(moves)), start=1):
            complex_, carried = apply_move(complex_, move, coloring=colors, labels=labels)
            if colors is not None and carried is None:
                logger.warning(f'Move {position} is a bistellar flip; the coloring is dropped')
            colors = carried
        if self.structured:
            self.emit(dump_complex(complex_, colors))
            return
        self.emit(serialize_facets(complex_))
        if colors is not None and coloring_output:
            self.emit(serialize_coloring(colors), path=coloring_output)
