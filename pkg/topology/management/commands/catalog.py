from ...core import format_face
from ...flips import enumerate_cross_flip_templates
from ...formats import dump_templates
from ..base import TopologyCommand


class Command(TopologyCommand):
    help = 'Enumerate the cross-flip templates of dimension d'

    def add_command_arguments(self, parser):
        parser.add_argument('-d', '--dimension', type=int, required=True)
        parser.add_argument('--mode', choices=['general', 'basic'], default='general')

    def run(self, dimension, mode, budget, **options):
        catalog = enumerate_cross_flip_templates(dimension, mode, budget=budget)
        if self.structured:
            self.emit(dump_templates(catalog))
            return
        lines = []
        for template in catalog:
            removed = ' '.join(format_face(f) for f in template.D.facets)
            added = ' '.join(format_face(f) for f in template.complement.facets)
            lines.append(f'{template.shape[0]}-{template.shape[1]} {template.provenance}: {removed} | {added}\n')
        self.emit(''.join(lines))
