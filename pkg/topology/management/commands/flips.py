from ...flips import (
    available_bistellar_flips,
    available_cross_flips,
    enumerate_cross_flip_templates,
)
from ...formats import dump_moves, load_templates, read_structured
from ..base import TopologyCommand


class Command(TopologyCommand):
    help = 'List the bistellar flips (or cross-flips) available on a closed pseudomanifold'

    def add_command_arguments(self, parser):
        parser.add_argument('path', metavar='input', help='Facet file')
        parser.add_argument('--cross', action='store_true', help='List cross-flips instead of bistellar flips')
        parser.add_argument('--catalog', default=None, help='Structured template catalog to use')
        parser.add_argument('--mode', choices=['general', 'basic'], default='general')
        parser.add_argument('--limit', type=int, default=None, help='Embeddings per template')

    def run(self, path, cross, catalog, mode, limit, budget, **options):
        complex_ = self.load(path)[0]
        if cross:
            if catalog:
                templates = load_templates(read_structured(catalog))
            else:
                templates = enumerate_cross_flip_templates(complex_.dim, mode, budget=budget)
            moves = available_cross_flips(complex_, templates, limit=limit)
        else:
            moves = available_bistellar_flips(complex_)
        if self.structured:
            self.emit(dump_moves(moves))
        else:
            self.emit(''.join(f'{move}\n' for move in moves))
