# exceptions.py - domain errors shared by the library and the CLI


class TopologyError(Exception):
    """
    Base class for every failure raised by the topology library.

    Carries a human message, a stable machine code and a dict of details so the
    CLI can emit the same ``{'success': False, 'error': ...}`` records everywhere.
    """
    code = 'topology_error'

    def __init__(self, message, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def as_record(self):
        record = {
            'success': False,
            'error': self.message,
            'code': self.code,
        }
        if self.details:
            record['details'] = {key: _plain(value) for key, value in self.details.items()}
        return record


class MalformedFaceError(TopologyError):
    code = 'malformed_face'


class FaceNotFoundError(TopologyError):
    code = 'face_not_found'


class LabelCollisionError(TopologyError):
    code = 'label_collision'


class SubcomplexError(TopologyError):
    code = 'not_a_subcomplex'


class PreconditionError(TopologyError):
    code = 'precondition_failed'


class InapplicableMoveError(TopologyError):
    code = 'inapplicable_move'


class ColoringError(TopologyError):
    code = 'coloring_error'


class ShellingError(TopologyError):
    code = 'shelling_error'


class PosetError(TopologyError):
    code = 'poset_error'


class BudgetExhaustedError(TopologyError):
    code = 'budget_exhausted'


class ConsistencyError(TopologyError):
    """An internal invariant failed; always a bug, never bad input."""
    code = 'internal_consistency'


class ParseError(TopologyError):
    code = 'parse_error'

    def __init__(self, message, line=None, **details):
        if line is not None:
            message = f'line {line}: {message}'
        super().__init__(message, line=line, **details)
        self.line = line


def _plain(value):
    if isinstance(value, (frozenset, set)):
        return sorted((_plain(v) for v in value), key=str)
    if isinstance(value, (tuple, list)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if value is None or isinstance(value, (int, float, bool)):
        return value
    return str(value)
