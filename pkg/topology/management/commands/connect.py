from ...coloring import find_proper_coloring
from ...exceptions import PreconditionError
from ...pipeline import colored_connect, connect_balanced
from .reduce import Command as ReduceCommand


class Command(ReduceCommand):
    help = 'Connect two balanced surfaces by cross-flips, or two colored 2-spheres by color-preserving flips'

    def add_command_arguments(self, parser):
        parser.add_argument('first', help='Facet file of the start complex')
        parser.add_argument('second', help='Facet file of the target complex')
        parser.add_argument('--first-coloring', default=None)
        parser.add_argument('--second-coloring', default=None)
        parser.add_argument('--colored', action='store_true', help='Use color-preserving bistellar flips')
        parser.add_argument('-m', '--palette', type=int, default=None, help='Palette size for --colored')

    def run(self, first, second, first_coloring, second_coloring, colored, palette, seed, budget, **options):
        start, start_colors = self.load(first, first_coloring)
        target, target_colors = self.load(second, second_coloring)
        m = (palette or 4) if colored else 3
        start_colors = start_colors or _coloring(start, m)
        target_colors = target_colors or _coloring(target, m)
        if colored:
            report = colored_connect(start, start_colors, target, target_colors, m=m, budget=budget)
            report.seed = seed
        else:
            report = connect_balanced(start, start_colors, target, target_colors, budget=budget, seed=seed)
        self.emit_report(report)


def _coloring(complex_, m):
    found = find_proper_coloring(complex_, m)
    if found is None:
        raise PreconditionError(f'{complex_!r} has no proper {m}-coloring', m=m)
    return found
