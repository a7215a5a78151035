from ...core import LabelFactory
from ...exceptions import PreconditionError, ShellingError
from ...formats import dump_cobordism, dump_moves, load_cobordism, read_structured
from ...poset import (
    compose_with_renaming,
    decompose,
    disjoint_ends_cobordism,
    eliminate_face,
    find_bidirectional_shelling,
    subdivide_cobordism,
    verify_bidirectional,
)
from ..base import TopologyCommand


class Command(TopologyCommand):
    help = 'Verify, compose, decompose, build and subdivide shellable pseudo-cobordisms'

    def add_command_arguments(self, parser):
        actions = parser.add_subparsers(dest='action', required=True)

        verify = actions.add_parser('verify', help='Check degrees and find or check a bidirectional shelling')
        verify.add_argument('cobordism')
        verify.add_argument('--order', nargs='+', default=None, help='Top-cell ids to check as the shelling')

        compose = actions.add_parser('compose', help='Glue the left end of the second onto the right end of the first')
        compose.add_argument('first')
        compose.add_argument('second')
        compose.add_argument(
            '--identify', nargs='+', default=(), metavar='SECOND=FIRST',
            help='Vertex identifications between the glued ends')

        decomposition = actions.add_parser('decompose', help='Read the flip sequence off a bidirectional shelling')
        decomposition.add_argument('cobordism')

        eliminate = actions.add_parser('eliminate', help='Cobordism with face-disjoint ends, or one face eliminated')
        eliminate.add_argument('source', metavar='complex')
        eliminate.add_argument('--face', nargs='+', default=None, help='Eliminate only this face')

        subdivide = actions.add_parser('subdivide', help='Stellar subdivision at an element')
        subdivide.add_argument('cobordism')
        subdivide.add_argument('element', help='Element id, or vertex labels joined by commas')
        subdivide.add_argument('--apex', default=None)

    def run(self, action, budget, **options):
        getattr(self, f'run_{action}')(budget=budget, **options)

    def run_verify(self, cobordism, order, budget, **options):
        target = load_cobordism(read_structured(cobordism))
        if order:
            shelling = verify_bidirectional(target, order)
        else:
            shelling = find_bidirectional_shelling(target, budget=budget)
        if shelling is None:
            raise ShellingError('No bidirectional shelling', order=order)
        record = {
            'dimension': target.d,
            'top_cells': len(target.top_cells),
            'order': list(shelling.order),
            'shelling': shelling.as_records(),
        }
        self.emit_record(record, 'valid\norder: ' + ' '.join(shelling.order))

    def run_compose(self, first, second, identify, **options):
        mapping = {}
        for pair in identify:
            if '=' not in pair:
                raise PreconditionError(f'Identification {pair!r} is not of the form SECOND=FIRST')
            source, target = pair.split('=', 1)
            mapping[source] = target
        composite, _ = compose_with_renaming(
            load_cobordism(read_structured(first)), load_cobordism(read_structured(second)), mapping)
        self.emit(dump_cobordism(composite))

    def run_decompose(self, cobordism, **options):
        result = decompose(load_cobordism(read_structured(cobordism)))
        if self.structured:
            self.emit(dump_moves(result.moves))
        else:
            self.emit(''.join(f'{move}\n' for move in result.moves))

    def run_eliminate(self, source, face, budget, **options):
        source = self.load(source)[0]
        if face:
            _, result = eliminate_face(source, face, budget=budget)
        else:
            result = disjoint_ends_cobordism(source, labels=LabelFactory(source.vertex_set), budget=budget)
        self.emit(dump_cobordism(result))

    def run_subdivide(self, cobordism, element, apex, budget, **options):
        target = load_cobordism(read_structured(cobordism))
        if element not in target.poset:
            element = element.split(',')
        self.emit(dump_cobordism(subdivide_cobordism(target, element, apex=apex, budget=budget)))
