from ...coloring import is_balanced, is_proper
from ...core import classify
from ..base import TopologyCommand


class Command(TopologyCommand):
    help = 'Classify a complex: f-vector, χ, manifold and sphere checks, coloring properness'

    def add_command_arguments(self, parser):
        parser.add_argument('path', metavar='input', help='Facet file')
        parser.add_argument('--coloring', default=None, help='Coloring file to check')

    def run(self, path, coloring, **options):
        complex_, colors = self.load(path, coloring)
        record = classify(complex_).as_dict()
        if colors is not None:
            colors = colors.restrict(complex_.vertices)
            record['proper'] = is_proper(complex_, colors)
            record['balanced'] = is_balanced(complex_, colors)
        text = '\n'.join(f'{key}: {_text(value)}' for key, value in record.items())
        self.emit_record(record, text)


def _text(value):
    if isinstance(value, (list, tuple)):
        return ' '.join(str(v) for v in value)
    if value is None:
        return 'unknown'
    return str(value).lower() if isinstance(value, bool) else str(value)
