# subdivision.py - stellar subdivisions, welds and the diamond operator
import logging
from dataclasses import dataclass, field
from itertools import combinations

from .coloring import Coloring, is_proper
from .core import (
    LabelFactory,
    SimplicialComplex,
    face_key,
    format_face,
    label_key,
    make_face,
)
from .exceptions import (
    ColoringError,
    ConsistencyError,
    FaceNotFoundError,
    InapplicableMoveError,
    LabelCollisionError,
    PreconditionError,
)

logger = logging.getLogger(__name__)


# ============================================================================
# STELLAR MOVES
# ============================================================================

def stellar_subdivide(complex_, face, apex):
    """
    sd_F(Δ) = (Δ ∖ F) ∪ (apex * ∂F̄ * lk F).

    Subdividing at a vertex is the identity (a warning is logged).
    """
    target = complex_._require_face(face)
    if len(target) <= 1:
        logger.warning(f'Subdividing at vertex {format_face(target)} leaves the complex unchanged')
        return complex_
    apex = str(apex)
    if apex in complex_.vertex_set:
        raise LabelCollisionError(f'Apex {apex} is already a vertex', label=apex)
    pieces = []
    for facet in complex_.facet_sets:
        if target <= facet:
            pieces.extend((facet - {v}) | {apex} for v in target)
        else:
            pieces.append(facet)
    return SimplicialComplex._from_maximal(pieces)


def _weld_complement(link, face):
    """Γ with link = ∂F̄ * Γ, or None when the link does not split that way."""
    target = frozenset(face)
    if len(target) < 2 or not target <= link.vertex_set or target in link:
        return None
    if not all(target - {v} in link for v in target):
        return None
    first = min(target, key=label_key)
    gamma = link.link(target - {first})
    if gamma.vertex_set & target:
        return None
    if SimplicialComplex.simplex_boundary(target).join(gamma) != link:
        return None
    return gamma


def _weld_candidates(link):
    vertices = link.vertices
    faces = link.faces
    top = (link.dim if link.dim is not None else 0) + 2
    found = []
    for size in range(2, min(top, len(vertices)) + 1):
        for combo in combinations(vertices, size):
            subset = frozenset(combo)
            if subset in faces:
                continue
            if all(subset - {v} in faces for v in subset):
                found.append(combo)
    return found


def weld_candidates(complex_, apex):
    """Every face F for which ``apex`` could be the subdivision vertex of F."""
    if apex not in complex_.vertex_set:
        raise FaceNotFoundError(f'{apex} is not a vertex of the complex', face=[apex])
    link = complex_.link([apex])
    admissible = []
    for candidate in _weld_candidates(link):
        if frozenset(candidate) in complex_:
            continue
        if _weld_complement(link, candidate) is not None:
            admissible.append(candidate)
    return admissible


def stellar_weld(complex_, apex, face=None):
    """
    Inverse of ``stellar_subdivide``: remove ``apex`` and restore the face it subdivided.

    When several faces qualify (an octahedron vertex is the apex of two different
    edge subdivisions) the face must be given explicitly.
    """
    if apex not in complex_.vertex_set:
        raise FaceNotFoundError(f'{apex} is not a vertex of the complex', face=[apex])
    link = complex_.link([apex])
    if face is not None:
        candidates = [make_face(face)]
    else:
        candidates = weld_candidates(complex_, apex)
    admissible = []
    for candidate in candidates:
        if frozenset(candidate) in complex_:
            continue
        gamma = _weld_complement(link, candidate)
        if gamma is not None:
            admissible.append((candidate, gamma))
    if not admissible:
        raise InapplicableMoveError(
            f'{apex} is not the subdivision vertex of any face', apex=apex)
    if len(admissible) > 1:
        raise InapplicableMoveError(
            f'Welding {apex} is ambiguous; pass the face explicitly',
            apex=apex, candidates=[list(c) for c, _ in admissible])
    restored, gamma = admissible[0]
    restored = frozenset(restored)
    pieces = [facet for facet in complex_.facet_sets if apex not in facet]
    pieces.extend(restored | g for g in gamma.facet_sets)
    return SimplicialComplex(pieces)


@dataclass(frozen=True)
class SubdivisionStep:
    face: tuple
    apex: str

    def as_record(self):
        return {'face': list(self.face), 'apex': self.apex}


class SubdivisionLog:
    """Ordered record of stellar subdivisions that can be replayed or undone."""

    def __init__(self, steps=()):
        self.steps = [
            step if isinstance(step, SubdivisionStep) else SubdivisionStep(make_face(step[0]), str(step[1]))
            for step in steps
        ]

    def append(self, face, apex):
        self.steps.append(SubdivisionStep(make_face(face), str(apex)))

    def __iter__(self):
        return iter(self.steps)

    def __len__(self):
        return len(self.steps)

    @property
    def apexes(self):
        return [step.apex for step in self.steps]

    def replay(self, complex_):
        for step in self.steps:
            complex_ = stellar_subdivide(complex_, step.face, step.apex)
        return complex_

    def undo(self, complex_):
        for step in reversed(self.steps):
            complex_ = stellar_weld(complex_, step.apex, face=step.face)
        return complex_

    def as_records(self):
        return [step.as_record() for step in self.steps]


def replay_with_origins(complex_, log):
    """
    Replay ``log`` and track, for each resulting facet, the original facet it lies in.

    Returns (subdivided complex, {result facet tuple: original facet tuple}).
    """
    origin = {facet: facet for facet in complex_.facet_sets}
    current = complex_
    for step in log:
        target = frozenset(step.face)
        if len(target) <= 1:
            continue
        updated = {}
        for facet, source in origin.items():
            if target <= facet:
                for v in target:
                    updated[(facet - {v}) | {step.apex}] = source
            else:
                updated[facet] = source
        origin = updated
        current = stellar_subdivide(current, step.face, step.apex)
    if set(origin) != set(current.facet_sets):
        raise ConsistencyError('Origin tracking lost facets during replay')
    return current, {make_face(f): make_face(s) for f, s in origin.items()}


# ============================================================================
# FLAG SUBDIVISION
# ============================================================================

def default_flag(n):
    """F_i = {x_{n-i}, ..., x_n} for i = 1..n-1, a full flag in ∂σ^n."""
    return [tuple(f'x{j}' for j in range(n - i, n + 1)) for i in range(1, n)]


def flag_subdivide(complex_, flag, apexes=None, labels=None):
    """
    Subdivide along a flag F_1 ⊂ ... ⊂ F_d (dim F_i = i), largest face first.

    F_i gets apex y_{d-i} unless that label is taken, in which case a fresh one.
    Returns the complex and its SubdivisionLog.
    """
    flag = [make_face(face) for face in flag]
    for position, face in enumerate(flag, start=1):
        if len(face) != position + 1:
            raise PreconditionError(
                f'Flag member {format_face(face)} should have dimension {position}',
                face=face)
        if position > 1 and not frozenset(flag[position - 2]) < frozenset(face):
            raise PreconditionError('Flag members must be nested', flag=flag)
        complex_._require_face(face)
    labels = labels or LabelFactory(complex_.vertex_set)
    labels.reserve(complex_.vertex_set)
    depth = len(flag)
    log = SubdivisionLog()
    current = complex_
    for position in range(depth, 0, -1):
        face = flag[position - 1]
        if apexes is not None:
            apex = labels.claim(apexes[position - 1])
        else:
            wanted = f'y{depth - position}'
            apex = wanted if wanted not in labels.taken else labels.fresh()
            labels.reserve([apex])
        current = stellar_subdivide(current, face, apex)
        log.append(face, apex)
    return current, log


# ============================================================================
# DIAMOND OPERATOR
# ============================================================================

@dataclass
class DiamondResult:
    """
    Output of the diamond operator.

    ``complex`` is the subdivided d-skeleton; ``pieces`` maps every original
    d-face to the result facets inside it and ``cells`` maps every original
    (d+1)-face to the facets of its subdivided boundary.
    """
    complex: SimplicialComplex
    coloring: Coloring
    pieces: dict = field(default_factory=dict)
    cells: dict = field(default_factory=dict)
    carriers: dict = field(default_factory=dict)
    log: SubdivisionLog = field(default_factory=SubdivisionLog)

    def image(self, faces):
        """Union of the pieces of the given original d-faces."""
        collected = []
        for face in faces:
            key = make_face(face)
            if key not in self.pieces:
                raise FaceNotFoundError(f'{format_face(key)} is not a d-face of the source', face=key)
            collected.extend(frozenset(piece) for piece in self.pieces[key])
        return SimplicialComplex._from_maximal(collected)

    def cell_boundary(self, facet):
        key = make_face(facet)
        if key not in self.cells:
            raise FaceNotFoundError(f'{format_face(key)} is not a facet of the source', face=key)
        return SimplicialComplex._from_maximal([frozenset(p) for p in self.cells[key]])


def diamond_label(face, prefix='d:'):
    return prefix + '.'.join(make_face(face))


def diamond(complex_, coloring, prefix='d:'):
    """
    ♦(Δ) for a pure (d+1)-complex with a proper coloring in {0..d+1}.

    On the d-skeleton, for k = d down to 1, every original k-face colored exactly
    {d+1-k, ..., d+1} is starred; its apex takes color d-k. Color d+1 folds onto d,
    so the result is balanced with colors {0..d}.
    """
    if complex_.is_empty or not complex_.is_pure or complex_.dim is None or complex_.dim < 1:
        raise PreconditionError('The diamond operator needs a pure complex of dimension at least 1')
    top = complex_.dim
    d = top - 1
    colors = coloring.restrict(complex_.vertices)
    if not is_proper(complex_, colors):
        raise ColoringError('The coloring is not proper')
    if any(c > d + 1 for c in colors.assignment.values()):
        raise ColoringError(f'Colors must lie in 0..{d + 1}', palette=colors.palette)

    current = complex_.skeleton(d)
    carrier = {v: frozenset([v]) for v in complex_.vertices}
    new_colors = {v: min(c, d) for v, c in colors.assignment.items()}
    log = SubdivisionLog()
    original_faces = complex_.faces
    for k in range(d, 0, -1):
        wanted = set(range(d + 1 - k, d + 2))
        targets = sorted(
            (make_face(f) for f in original_faces
             if len(f) == k + 1 and {colors[v] for v in f} == wanted),
            key=face_key)
        for face in targets:
            apex = diamond_label(face, prefix)
            if apex in current.vertex_set:
                raise LabelCollisionError(f'Diamond label {apex} is already a vertex', label=apex)
            current = stellar_subdivide(current, face, apex)
            log.append(face, apex)
            carrier[apex] = frozenset(face)
            new_colors[apex] = d - k

    pieces = {make_face(f): [] for f in original_faces if len(f) == d + 1}
    for facet in current.facet_sets:
        support = frozenset().union(*(carrier[v] for v in facet))
        key = make_face(support)
        if key not in pieces:
            raise ConsistencyError(f'Facet {format_face(facet)} is not carried by a d-face')
        pieces[key].append(make_face(facet))
    pieces = {key: sorted(value, key=face_key) for key, value in pieces.items()}

    cells = {}
    for facet in complex_.facets:
        members = []
        for v in facet:
            members.extend(pieces[make_face(frozenset(facet) - {v})])
        cells[facet] = sorted(members, key=face_key)

    result_coloring = Coloring({v: new_colors[v] for v in current.vertices}, d + 1)
    if not is_proper(current, result_coloring):
        raise ConsistencyError('Diamond coloring is not proper')
    logger.info(f'Diamond of {complex_!r}: {len(log)} subdivisions, {len(current)} facets')
    return DiamondResult(current, result_coloring, pieces, cells, carrier, log)
