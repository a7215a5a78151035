# base.py - shared plumbing for the topology management commands
import json
import logging
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from ..conf import setting
from ..exceptions import TopologyError
from ..formats import read_complex, render_json

logger = logging.getLogger(__name__)


class TopologyCommand(BaseCommand):
    """
    Base for every toolkit command.

    Adds the global flags (--seed, --budget, --format, --quiet, --output) and turns
    domain errors into a JSON error record on stderr with exit status 1.
    """
    requires_system_checks = []
    randomized = False

    def add_arguments(self, parser):
        parser.add_argument('--seed', type=int, default=None, help='Seed for randomized searches')
        parser.add_argument('--budget', type=int, default=None, help='Search budget')
        parser.add_argument(
            '--format', dest='output_format', choices=['text', 'structured'], default='text',
            help='text files or structured JSON')
        parser.add_argument('--quiet', action='store_true', help='Only log warnings and errors')
        parser.add_argument('--output', '-o', default=None, help='Write the result to this path')
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def handle(self, *args, **options):
        package_logger = logging.getLogger('topology')
        previous = package_logger.level
        if options['quiet']:
            package_logger.setLevel(logging.WARNING)
        if self.randomized and options['seed'] is None:
            options['seed'] = setting('TOPOLOGY_DEFAULT_SEED')
        self.options = options
        try:
            self.run(**options)
        except TopologyError as exc:
            logger.error(f'{self.__module__.rsplit(".", 1)[-1]} failed: {exc.message}')
            raise CommandError(json.dumps(exc.as_record(), sort_keys=True), returncode=1) from exc
        except OSError as exc:
            logger.error(f'File error: {exc}')
            record = {'success': False, 'error': str(exc), 'code': 'io_error'}
            raise CommandError(json.dumps(record, sort_keys=True), returncode=1) from exc
        finally:
            package_logger.setLevel(previous)

    def run(self, **options):
        raise NotImplementedError('subclasses of TopologyCommand must provide a run() method')

    # ------------------------------------------------------------------
    # helpers
    # ------------------------------------------------------------------
    @property
    def structured(self):
        return self.options['output_format'] == 'structured'

    def load(self, path, coloring_path=None):
        return read_complex(path, coloring_path)

    def emit(self, content, path=None):
        """Write text or bytes to ``path``, --output, or stdout, in that order of preference."""
        target = path or self.options.get('output')
        if isinstance(content, bytes):
            content = content.decode('utf-8')
        if target:
            Path(target).write_text(content, encoding='utf-8')
            logger.info(f'Wrote {target}')
        else:
            self.stdout.write(content, ending='')

    def emit_record(self, record, text):
        """Structured runs print the record as JSON, text runs print ``text``."""
        if self.structured:
            self.emit(render_json(dict({'success': True}, **record)))
        else:
            self.emit(text if text.endswith('\n') else text + '\n')
