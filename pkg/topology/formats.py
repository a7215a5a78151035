# formats.py - text and structured (JSON) file formats for complexes, colorings and reports
import io
import logging
from pathlib import Path

from rest_framework.exceptions import ParseError as DRFParseError
from rest_framework.parsers import JSONParser
from rest_framework.renderers import JSONRenderer

from .coloring import Coloring
from .core import SimplicialComplex, label_key
from .exceptions import MalformedFaceError, ParseError, TopologyError
from .serializers import (
    CobordismSerializer,
    ComplexSerializer,
    MoveSerializer,
    PosetSerializer,
    ReportSerializer,
    TemplateSerializer,
)

logger = logging.getLogger(__name__)


# ============================================================================
# FACET LISTS
# ============================================================================

def _content_lines(text):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        yield number, line


def parse_facets(text, name=None):
    """One facet per line, labels separated by whitespace; '#' lines and blank lines are skipped."""
    facets = []
    for number, line in _content_lines(text):
        labels = line.split()
        if len(set(labels)) != len(labels):
            raise ParseError(f'facet repeats a vertex: {line}', line=number)
        facets.append(labels)
    try:
        return SimplicialComplex(facets, name=name)
    except MalformedFaceError as exc:
        raise ParseError(exc.message) from exc


def serialize_facets(complex_):
    """Canonical text: labels sorted within facets, facets sorted."""
    return ''.join(' '.join(facet) + '\n' for facet in complex_.facets)


# ============================================================================
# COLORINGS
# ============================================================================

def parse_coloring(text):
    """
    Optional header ``m <int>`` followed by ``vertex color`` lines.

    The header is only recognized on the first content line of a file with more
    lines after it, so a vertex named ``m`` must not come first in a headerless file.
    """
    palette = None
    assignment = {}
    lines = list(_content_lines(text))
    for index, (number, line) in enumerate(lines):
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f'expected two fields, got {len(tokens)}', line=number)
        first, second = tokens
        try:
            value = int(second)
        except ValueError:
            raise ParseError(f'{second!r} is not an integer', line=number) from None
        if value < 0:
            raise ParseError('colors must be non-negative', line=number)
        if first == 'm' and index == 0 and len(lines) > 1:
            palette = value
            continue
        if first in assignment:
            raise ParseError(f'vertex {first} is colored twice', line=number)
        if palette is not None and value >= palette:
            raise ParseError(f'color {value} is outside the palette of size {palette}', line=number)
        assignment[first] = value
    return Coloring(assignment, palette)


def serialize_coloring(coloring):
    lines = [f'm {coloring.palette}\n']
    lines.extend(f'{v} {coloring[v]}\n' for v in sorted(coloring.assignment, key=label_key))
    return ''.join(lines)


# ============================================================================
# STRUCTURED FORMAT
# ============================================================================

def render_json(data):
    """Stable JSON bytes through the configured DRF renderer, newline-terminated."""
    return JSONRenderer().render(data) + b'\n'


def parse_json(content):
    if isinstance(content, str):
        content = content.encode('utf-8')
    try:
        return JSONParser().parse(io.BytesIO(content))
    except DRFParseError as exc:
        raise ParseError(f'invalid JSON: {exc.detail}') from exc


def _load(serializer_class, data, many=False, **kwargs):
    serializer = serializer_class(data=data, many=many, **kwargs)
    if not serializer.is_valid():
        logger.error(f'Invalid {serializer_class.__name__} payload: {serializer.errors}')
        raise ParseError(f'invalid {serializer_class.__name__} payload', errors=serializer.errors)
    try:
        return serializer, serializer.save()
    except TopologyError:
        raise
    except Exception as exc:
        raise ParseError(f'invalid {serializer_class.__name__} payload: {exc}') from exc


def load_complex_payload(data):
    """Complex and coloring (or None) from a structured payload."""
    serializer, complex_ = _load(ComplexSerializer, data)
    return complex_, serializer.coloring()


def dump_complex(complex_, coloring=None):
    return render_json(ComplexSerializer(complex_, context={'coloring': coloring}).data)


def load_templates(data):
    return _load(TemplateSerializer, data, many=True)[1]


def dump_templates(catalog):
    return render_json(TemplateSerializer(catalog, many=True).data)


def load_moves(data):
    return _load(MoveSerializer, data, many=True)[1]


def dump_moves(moves):
    return render_json([move.as_record() for move in moves])


def load_poset(data):
    return _load(PosetSerializer, data)[1]


def dump_poset(poset):
    return render_json(PosetSerializer(poset).data)


def load_cobordism(data):
    return _load(CobordismSerializer, data)[1]


def dump_cobordism(cobordism):
    return render_json(CobordismSerializer(cobordism).data)


def load_report(data):
    return _load(ReportSerializer, data)[1]


def dump_report(report):
    return render_json(ReportSerializer(report).data)


# ============================================================================
# FILES
# ============================================================================

def is_structured(path, content):
    return Path(path).suffix.lower() == '.json' or content.lstrip().startswith(('{', '['))


def read_complex(path, coloring_path=None):
    """
    Read a facet file (text or JSON) and an optional coloring file.

    Returns (complex, coloring or None); a JSON payload may carry its own colors.
    """
    path = Path(path)
    content = path.read_text(encoding='utf-8')
    if is_structured(path, content):
        complex_, coloring = load_complex_payload(parse_json(content))
    else:
        complex_, coloring = parse_facets(content, name=path.stem), None
    if coloring_path is not None:
        coloring = read_coloring(coloring_path)
    return complex_, coloring


def read_coloring(path):
    path = Path(path)
    content = path.read_text(encoding='utf-8')
    if is_structured(path, content):
        data = parse_json(content)
        if not isinstance(data, dict) or 'colors' not in data:
            raise ParseError('a structured coloring needs a "colors" object')
        return Coloring(data['colors'], data.get('palette'))
    return parse_coloring(content)


def read_structured(path):
    return parse_json(Path(path).read_bytes())
