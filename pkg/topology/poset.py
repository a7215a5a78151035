# poset.py - simplicial posets, relative shellings and pseudo-cobordisms
import logging
from collections import Counter
from dataclasses import dataclass, field, replace
from functools import cached_property

from .coloring import Coloring, is_dull
from .conf import resolve
from .core import (
    LabelFactory,
    SimplicialComplex,
    face_key,
    format_face,
    label_key,
    make_face,
)
from .exceptions import (
    BudgetExhaustedError,
    ColoringError,
    ConsistencyError,
    FaceNotFoundError,
    InapplicableMoveError,
    LabelCollisionError,
    PosetError,
    PreconditionError,
    ShellingError,
)
from .flips import FlipMove, apply_bistellar_flip
from .shelling import ShellingOrder, find_shelling

logger = logging.getLogger(__name__)


def element_id(vertices, taken=()):
    """'{a,b}' for a new element, '{a,b}#k' when a parallel element already has that id."""
    base = '{' + ','.join(make_face(vertices)) + '}'
    if base not in taken:
        return base
    counter = 1
    while f'{base}#{counter}' in taken:
        counter += 1
    return f'{base}#{counter}'


@dataclass(frozen=True)
class PosetElement:
    id: str
    vertices: tuple
    covers: tuple = ()

    @property
    def rank(self):
        return len(self.vertices)

    def as_record(self):
        return {
            'id': self.id,
            'rank': self.rank,
            'vertices': list(self.vertices),
            'covers': list(self.covers),
        }


def _element_order(element):
    return element.rank, face_key(element.vertices), element.id


class SimplicialPoset:
    """
    A ranked poset with bottom element whose lower intervals are Boolean lattices.

    Elements carry their vertex labels and lower covers. Two elements may share a
    vertex set (parallel faces); vertices themselves are identified by label.
    """

    def __init__(self, elements, validate=True):
        self.elements = {}
        for element in elements:
            if element.id in self.elements:
                raise PosetError(f'Duplicate element id {element.id}', id=element.id)
            self.elements[element.id] = element
        self._upper = {eid: [] for eid in self.elements}
        for element in self.elements.values():
            for cover in element.covers:
                if cover not in self.elements:
                    raise PosetError(
                        f'{element.id} covers unknown element {cover}', id=element.id, cover=cover)
                self._upper[cover].append(element.id)
        self._down = {}
        if validate:
            self.validate()

    # ------------------------------------------------------------------
    # access
    # ------------------------------------------------------------------
    def __getitem__(self, eid):
        try:
            return self.elements[eid]
        except KeyError:
            raise FaceNotFoundError(f'No element {eid} in the poset', id=eid) from None

    def __contains__(self, eid):
        return eid in self.elements

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(sorted(self.elements.values(), key=_element_order))

    def __repr__(self):
        return f'<SimplicialPoset elements={len(self)} dim={self.dim}>'

    @cached_property
    def bottom(self):
        return next(e.id for e in self.elements.values() if e.rank == 0)

    @cached_property
    def dim(self):
        return max((e.rank for e in self.elements.values()), default=0) - 1

    @cached_property
    def vertex_elements(self):
        return {e.vertices[0]: e.id for e in self.elements.values() if e.rank == 1}

    @property
    def vertex_labels(self):
        return set(self.vertex_elements)

    @cached_property
    def by_vertices(self):
        index = {}
        for element in self:
            index.setdefault(frozenset(element.vertices), []).append(element.id)
        return index

    def upper_covers(self, eid):
        return list(self._upper[eid])

    def degree(self, eid):
        return len(self._upper[eid])

    def down_map(self, eid):
        """{vertex set: element id} over the interval [∅, eid]."""
        if eid not in self._down:
            element = self[eid]
            mapping = {}
            for cover in element.covers:
                mapping.update(self.down_map(cover))
            mapping[frozenset(element.vertices)] = eid
            self._down[eid] = mapping
        return self._down[eid]

    def down_set(self, eid):
        return set(self.down_map(eid).values())

    def up_set(self, eid):
        seen = {eid}
        frontier = [eid]
        while frontier:
            current = frontier.pop()
            for upper in self._upper[current]:
                if upper not in seen:
                    seen.add(upper)
                    frontier.append(upper)
        return seen

    def face_of(self, eid, vertices):
        """The unique element below ``eid`` with the given vertex set."""
        try:
            return self.down_map(eid)[frozenset(vertices)]
        except KeyError:
            raise FaceNotFoundError(
                f'{format_face(vertices)} is not below {eid}', id=eid) from None

    @property
    def maximal_elements(self):
        return [e.id for e in self if not self._upper[e.id]]

    def ideal(self, ids):
        closed = set()
        for eid in ids:
            closed |= self.down_set(eid)
        return closed

    def id_of(self, vertices):
        ids = self.by_vertices.get(frozenset(make_face(vertices)), [])
        if not ids:
            raise FaceNotFoundError(f'No element with vertices {format_face(vertices)}')
        if len(ids) > 1:
            raise PosetError(f'Vertex set {format_face(vertices)} is not unique', ids=ids)
        return ids[0]

    def ideal_of_complex(self, complex_):
        return frozenset(self.id_of(face) for face in complex_.faces)

    @property
    def is_simplicial_complex(self):
        return all(len(ids) == 1 for ids in self.by_vertices.values())

    def complex_of(self, ids):
        """The simplicial complex spanned by an ideal without parallel elements."""
        seen = {}
        for eid in ids:
            key = frozenset(self[eid].vertices)
            if key in seen and seen[key] != eid:
                raise PosetError(
                    f'Elements {seen[key]} and {eid} are parallel', ids=[seen[key], eid])
            seen[key] = eid
        if not seen:
            return SimplicialComplex([])
        return SimplicialComplex(list(seen))

    def to_complex(self):
        return self.complex_of(self.elements)

    # ------------------------------------------------------------------
    # construction
    # ------------------------------------------------------------------
    @classmethod
    def from_complex(cls, complex_):
        elements = []
        for face in complex_.faces:
            vertices = make_face(face)
            covers = tuple(element_id(frozenset(face) - {v}) for v in vertices)
            elements.append(PosetElement(element_id(vertices), vertices, covers if vertices else ()))
        return cls(elements)

    def validate(self):
        bottoms = [e for e in self.elements.values() if e.rank == 0]
        if len(bottoms) != 1 or bottoms[0].covers:
            raise PosetError('A simplicial poset needs exactly one bottom element')
        labels = {}
        for element in self:
            if element.rank == 0:
                continue
            if len(set(element.vertices)) != element.rank:
                raise PosetError(f'{element.id} repeats a vertex', id=element.id)
            if len(element.covers) != element.rank:
                raise PosetError(
                    f'{element.id} has {len(element.covers)} lower covers, expected {element.rank}',
                    id=element.id)
            own = frozenset(element.vertices)
            cover_sets = set()
            for cover in element.covers:
                lower = self[cover]
                below = frozenset(lower.vertices)
                if lower.rank != element.rank - 1 or not below < own:
                    raise PosetError(f'{cover} cannot be a lower cover of {element.id}', id=element.id)
                cover_sets.add(below)
            if len(cover_sets) != element.rank:
                raise PosetError(f'Lower covers of {element.id} are not distinct facets', id=element.id)
            if element.rank == 1:
                label = element.vertices[0]
                if label in labels:
                    raise PosetError(f'Vertex label {label} is used twice', ids=[labels[label], element.id])
                labels[label] = element.id
                continue
            covers = list(element.covers)
            for i, first in enumerate(covers):
                for second in covers[i + 1:]:
                    common = frozenset(self[first].vertices) & frozenset(self[second].vertices)
                    if self.down_map(first).get(common) != self.down_map(second).get(common):
                        raise PosetError(f'Interval below {element.id} is not Boolean', id=element.id)
            if len(self.down_map(element.id)) != 2 ** element.rank:
                raise PosetError(f'Interval below {element.id} is not Boolean', id=element.id)
        return self

    def with_elements(self, extra):
        return SimplicialPoset(list(self.elements.values()) + list(extra))

    def as_records(self):
        return [element.as_record() for element in self]


def attach_cell(poset, vertices, attach, cell_id=None):
    """
    Glue a new simplex on ``vertices`` along the elements listed in ``attach``.

    Faces below an attaching element are reused; vertices outside the attaching
    region are matched by label; every other face of the new simplex is created.
    """
    cell_vertices = make_face(vertices)
    full = frozenset(cell_vertices)
    attached = [poset[eid] for eid in attach]
    for element in attached:
        below = frozenset(element.vertices)
        if element.rank != len(cell_vertices) - 1 or not below < full:
            raise PosetError(
                f'{element.id} is not a facet of the boundary of {format_face(cell_vertices)}',
                id=element.id)
    if len({frozenset(e.vertices) for e in attached}) != len(attached):
        raise PosetError('Attaching map is not injective')

    taken = set(poset.elements)
    assignment = {}
    created = []
    subsets = sorted(
        (frozenset(s) for s in _proper_subsets(cell_vertices)),
        key=lambda s: (len(s), face_key(make_face(s))))
    for subset in subsets:
        owners = {poset.face_of(e.id, subset) for e in attached if subset <= frozenset(e.vertices)}
        if len(owners) > 1:
            raise PosetError(
                f'Attaching elements disagree on the face {format_face(subset)}', ids=sorted(owners))
        if owners:
            assignment[subset] = owners.pop()
            continue
        if not subset:
            assignment[subset] = poset.bottom
            continue
        if len(subset) == 1:
            (label,) = subset
            if label in poset.vertex_elements:
                assignment[subset] = poset.vertex_elements[label]
                continue
        face = make_face(subset)
        new_id = element_id(face, taken)
        taken.add(new_id)
        covers = tuple(assignment[subset - {v}] for v in face) if len(face) > 1 else (poset.bottom,)
        created.append(PosetElement(new_id, face, covers))
        assignment[subset] = new_id

    top_id = cell_id or element_id(cell_vertices, taken)
    if top_id in taken:
        raise LabelCollisionError(f'Element id {top_id} is already in use', id=top_id)
    created.append(PosetElement(
        top_id, cell_vertices, tuple(assignment[full - {v}] for v in cell_vertices)))
    logger.debug(f'Attached {top_id} along {len(attached)} elements, {len(created)} new elements')
    return poset.with_elements(created)


def _proper_subsets(face):
    face = list(face)
    for mask in range((1 << len(face)) - 1):
        yield [face[i] for i in range(len(face)) if mask >> i & 1]


def poset_subdivide(poset, eid, apex):
    """
    Stellar subdivision of a simplicial poset at ``eid``.

    Elements above ``eid`` are removed and every element ρ of the closed star not
    above ``eid`` gains a cone a∗ρ. Returns (poset, {ρ: a∗ρ}, removed ids).
    """
    target = poset[eid]
    if target.rank < 2:
        logger.warning(f'Subdividing the vertex {eid} leaves the poset unchanged')
        return poset, {}, frozenset()
    if apex in poset.vertex_labels:
        raise LabelCollisionError(f'Apex {apex} is already a vertex', label=apex)
    above = poset.up_set(eid)
    closure = poset.ideal(above)
    rim = sorted((poset[i] for i in closure - above), key=_element_order)
    taken = set(poset.elements)
    joined = {}
    created = []
    for rho in rim:
        vertices = make_face(rho.vertices + (apex,))
        new_id = element_id(vertices, taken)
        taken.add(new_id)
        covers = (rho.id,) + tuple(joined[c] for c in rho.covers)
        created.append(PosetElement(new_id, vertices, covers))
        joined[rho.id] = new_id
    kept = [e for e in poset.elements.values() if e.id not in above]
    return SimplicialPoset(kept + created), joined, frozenset(above)


# ============================================================================
# RELATIVE SHELLINGS
# ============================================================================

def _restriction(poset, eid, region):
    down = poset.down_map(eid)
    own = frozenset(poset[eid].vertices)
    restricted = frozenset(v for v in own if down[own - {v}] in region)
    for subset, sid in down.items():
        if (sid in region) == (restricted <= subset):
            return None
    return restricted


def _relative_check(poset, base, order):
    base = poset.ideal(base)
    expected = sorted(eid for eid in poset.maximal_elements if eid not in base)
    if sorted(order) != expected:
        raise PreconditionError(
            'The order must list every facet of the pair exactly once',
            expected=expected, given=list(order))
    region = set(base)
    restrictions = []
    for position, eid in enumerate(order):
        restricted = _restriction(poset, eid, region)
        if restricted is None:
            return restrictions, position
        restrictions.append(restricted)
        region |= poset.down_set(eid)
    return restrictions, None


def relative_shelling_verify(poset, base, order):
    """Restriction faces when ``order`` shells (P, Q), else None."""
    restrictions, violation = _relative_check(poset, base, list(order))
    if violation is not None:
        return None
    return ShellingOrder(tuple(order), tuple(restrictions))


def relative_shelling_violation(poset, base, order):
    _, violation = _relative_check(poset, base, list(order))
    return violation


# ============================================================================
# PSEUDO-COBORDISMS
# ============================================================================

@dataclass(frozen=True)
class PseudoCobordism:
    """
    A (d+1)-dimensional simplicial poset with two marked d-dimensional ends.

    ``witness`` is a known bidirectional shelling order of the top cells, or None.
    """
    poset: SimplicialPoset
    left: frozenset
    right: frozenset
    d: int
    witness: tuple = None

    def left_complex(self):
        return self.poset.complex_of(self.left)

    def right_complex(self):
        return self.poset.complex_of(self.right)

    @property
    def top_cells(self):
        return sorted(
            (e.id for e in self.poset if e.rank == self.d + 2),
            key=lambda eid: _element_order(self.poset[eid]))

    def degrees(self):
        return {e.id: self.poset.degree(e.id) for e in self.poset if e.rank == self.d + 1}

    def reversed(self):
        witness = None if self.witness is None else tuple(reversed(self.witness))
        return PseudoCobordism(self.poset, self.right, self.left, self.d, witness)

    def verify(self):
        """Check the degree conditions on d-faces; raises PosetError, returns self."""
        P = self.poset
        for name, end in (('left', self.left), ('right', self.right)):
            unknown = [eid for eid in end if eid not in P]
            if unknown:
                raise PosetError(f'The {name} end lists unknown elements', ids=unknown)
            if P.ideal(end) != set(end):
                raise PosetError(f'The {name} end is not an order ideal')
            ends = P.complex_of(end)
            if not ends.is_empty and (ends.dim != self.d or not ends.is_pure):
                raise PosetError(f'The {name} end is not a pure {self.d}-complex')
        tall = [e.id for e in P if e.rank > self.d + 2]
        if tall:
            raise PosetError(f'Elements above dimension {self.d + 1}', ids=tall)
        covered = set(self.left) | set(self.right) | P.ideal(self.top_cells)
        stray = set(P.elements) - covered
        if stray:
            raise PosetError('Elements lie outside both ends and every top cell', ids=stray)
        for eid, degree in self.degrees().items():
            if degree > 2:
                raise PosetError(f'{eid} lies in {degree} top cells', id=eid, degree=degree)
            in_left, in_right = eid in self.left, eid in self.right
            if (degree <= 1) != (in_left or in_right):
                raise PosetError(f'{eid} breaks the pseudoboundary condition', id=eid, degree=degree)
            if (in_left and in_right) != (degree == 0):
                raise PosetError(f'{eid} lies in both ends but has degree {degree}', id=eid)
        return self

    def as_record(self):
        return {
            'dimension': self.d,
            'elements': self.poset.as_records(),
            'left': sorted(self.left),
            'right': sorted(self.right),
            'witness': None if self.witness is None else list(self.witness),
        }


def elementary_cobordism(complex_, move):
    """Δ with the simplex on A ∪ B glued on top along Ā * ∂B̄."""
    flipped = apply_bistellar_flip(complex_, move)
    base = SimplicialPoset.from_complex(complex_)
    A, B = frozenset(move.A), frozenset(move.B)
    attach = [base.id_of((A | B) - {b}) for b in sorted(B, key=label_key)]
    omega = attach_cell(base, A | B, attach)
    top = omega.id_of(A | B)
    cobordism = PseudoCobordism(
        omega, frozenset(base.elements), omega.ideal_of_complex(flipped), complex_.dim, (top,))
    return cobordism.verify()


def compose_with_renaming(first, second, identification=None):
    """
    Glue the left end of ``second`` onto the right end of ``first``.

    ``identification`` maps labels of second's left end to labels of first's right
    end (identity when omitted). Labels of ``second`` outside its left end that
    clash with ``first`` are renamed; the renaming is returned with the result.
    """
    if first.d != second.d:
        raise PosetError('Cobordisms of different dimensions cannot be composed')
    mapping = dict(identification or {})
    left2 = second.left_complex()
    if left2.relabel(mapping) != first.right_complex():
        raise PosetError('The identification is not an isomorphism of the glued ends')

    P1, P2 = first.poset, second.poset
    labels = LabelFactory(P1.vertex_labels | P2.vertex_labels | set(mapping.values()))
    renaming = {}
    used = set()
    for label in sorted(left2.vertex_set, key=label_key):
        renaming[label] = mapping.get(label, label)
        used.add(renaming[label])
    for label in sorted(P2.vertex_labels - left2.vertex_set, key=label_key):
        if label in P1.vertex_labels or label in used:
            renaming[label] = labels.fresh()
        else:
            renaming[label] = label
        used.add(renaming[label])

    middle = {frozenset(P1[eid].vertices): eid for eid in first.right}
    taken = set(P1.elements)
    id_map = {}
    created = []
    for element in P2:
        vertices = make_face(renaming[v] for v in element.vertices)
        if element.id in second.left:
            id_map[element.id] = middle[frozenset(vertices)]
            continue
        new_id = element_id(vertices, taken)
        taken.add(new_id)
        id_map[element.id] = new_id
        created.append(PosetElement(new_id, vertices, tuple(id_map[c] for c in element.covers)))
    poset = P1.with_elements(created)

    glued = {id_map[eid]: eid for eid in second.left}
    sources = {new: old for old, new in id_map.items() if old not in second.left}
    for element in poset:
        if element.rank != first.d + 1:
            continue
        eid = element.id
        if eid in glued:
            expected = P1.degree(eid) + P2.degree(glued[eid])
        elif eid in P1:
            expected = P1.degree(eid)
        else:
            expected = P2.degree(sources[eid])
        if poset.degree(eid) != expected:
            raise ConsistencyError(f'Degree of {eid} changed while gluing', id=eid)

    witness = None
    if first.witness is not None and second.witness is not None:
        witness = tuple(first.witness) + tuple(id_map[eid] for eid in second.witness)
    composite = PseudoCobordism(
        poset, first.left, frozenset(id_map[eid] for eid in second.right), first.d, witness)
    return composite.verify(), {k: v for k, v in renaming.items() if k != v}


def compose(first, second, identification=None):
    composite, _ = compose_with_renaming(first, second, identification)
    return composite


@dataclass(frozen=True)
class BidirectionalShelling:
    order: tuple
    forward: tuple
    backward: tuple

    def __len__(self):
        return len(self.order)

    def as_records(self):
        return [
            {'cell': eid, 'B': list(make_face(b)), 'A': list(make_face(a))}
            for eid, b, a in zip(self.order, self.forward, self.backward)
        ]


def verify_bidirectional(cobordism, order):
    """BidirectionalShelling when ``order`` shells from the left end and its reverse from the right."""
    order = list(order)
    P = cobordism.poset
    forward, violation = _relative_check(P, cobordism.left, order)
    if violation is not None:
        return None
    backward, violation = _relative_check(P, cobordism.right, list(reversed(order)))
    if violation is not None:
        return None
    return BidirectionalShelling(tuple(order), tuple(forward), tuple(reversed(backward)))


def find_bidirectional_shelling(cobordism, budget=None):
    """
    Exact search for an order of the top cells shelling both ways; None if none exists.

    A recorded witness is checked first.
    """
    if cobordism.witness is not None:
        found = verify_bidirectional(cobordism, cobordism.witness)
        if found is not None:
            return found
        logger.warning('Recorded witness does not shell the cobordism; searching')
    budget = resolve(budget, 'TOPOLOGY_SHELLING_BUDGET')
    P = cobordism.poset
    tops = cobordism.top_cells
    downs = {eid: P.down_set(eid) for eid in tops}
    forward = Counter({eid: 1 for eid in cobordism.left})
    backward = Counter({eid: 1 for eid in cobordism.right})
    for eid in tops:
        backward.update(downs[eid])
    order, forward_r, backward_r = [], [], []
    failed = set()
    nodes = 0

    def shift(counter, ids, step):
        for eid in ids:
            counter[eid] += step
            if counter[eid] <= 0:
                del counter[eid]

    def open_frame(placed):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExhaustedError(f'Bidirectional shelling search exceeded {budget} nodes', budget=budget)
        return [placed, 0, None]

    # frames are [placed, next position in tops, cell currently placed by the frame]
    complete = not tops
    stack = [] if complete else [open_frame(frozenset())]
    while stack and not complete:
        frame = stack[-1]
        placed, position, current = frame
        if current is not None:
            order.pop()
            forward_r.pop()
            backward_r.pop()
            shift(forward, downs[current], -1)
            shift(backward, downs[current], 1)
            frame[2] = None
        while position < len(tops):
            eid = tops[position]
            position += 1
            if eid in placed:
                continue
            shift(backward, downs[eid], -1)
            a = _restriction(P, eid, backward)
            b = _restriction(P, eid, forward) if a is not None else None
            if a is not None and b is not None:
                shift(forward, downs[eid], 1)
                order.append(eid)
                forward_r.append(b)
                backward_r.append(a)
                break
            shift(backward, downs[eid], 1)
        else:
            failed.add(placed)
            stack.pop()
            continue
        frame[1] = position
        frame[2] = eid
        child = placed | {eid}
        if len(child) == len(tops):
            complete = True
        elif child not in failed:
            stack.append(open_frame(child))

    if not complete:
        logger.info(f'No bidirectional shelling ({nodes} nodes explored)')
        return None
    return BidirectionalShelling(tuple(order), tuple(forward_r), tuple(backward_r))


@dataclass
class Decomposition:
    moves: list = field(default_factory=list)
    complexes: list = field(default_factory=list)


def decompose(cobordism, shelling=None):
    """
    Read a flip sequence Δ_0 → ... → Δ_t off a bidirectional shelling.

    Each step asserts A_j ∩ B_j = ∅, A_j ∪ B_j = F_j, A_j ∈ Δ_{j-1} and
    lk(A_j) = ∂B̄_j; any failure is an internal error.
    """
    if shelling is None:
        shelling = find_bidirectional_shelling(cobordism)
        if shelling is None:
            raise ShellingError('The cobordism has no bidirectional shelling')
    elif not isinstance(shelling, BidirectionalShelling):
        checked = verify_bidirectional(cobordism, shelling)
        if checked is None:
            raise ShellingError('The order is not a bidirectional shelling')
        shelling = checked
    P = cobordism.poset
    current_ids = set(cobordism.left)
    current = cobordism.left_complex()
    result = Decomposition([], [current])
    for position, (eid, B, A) in enumerate(zip(shelling.order, shelling.forward, shelling.backward)):
        cell = frozenset(P[eid].vertices)
        if not A or not B or A & B or (A | B) != cell:
            raise ConsistencyError(f'A and B do not split cell {eid}', position=position)
        down = P.down_map(eid)
        if down[A] not in current_ids:
            raise ConsistencyError(f'{format_face(A)} is not in the current complex', position=position)
        if current.link(A) != SimplicialComplex.simplex_boundary(B):
            raise ConsistencyError(f'Link of {format_face(A)} is not ∂{format_face(B)}', position=position)
        removed = {sid for subset, sid in down.items() if A <= subset}
        added = {sid for subset, sid in down.items() if B <= subset and sid != eid}
        next_ids = (current_ids - removed) | added
        try:
            next_complex = P.complex_of(next_ids)
        except PosetError as exc:
            raise ConsistencyError(f'Step {position} produced parallel faces') from exc
        move = FlipMove(A, B)
        try:
            flipped = apply_bistellar_flip(current, move)
        except InapplicableMoveError as exc:
            raise ConsistencyError(f'Step {position} is not a flip: {exc.message}') from exc
        if flipped != next_complex:
            raise ConsistencyError(f'Step {position} disagrees with the flip', position=position)
        result.moves.append(move)
        result.complexes.append(next_complex)
        current_ids, current = next_ids, next_complex
    if current_ids != set(cobordism.right):
        raise ConsistencyError('Decomposition did not reach the right end')
    return result


# ============================================================================
# FACE ELIMINATION
# ============================================================================

def eliminate_face(complex_, face, K=None, labels=None, budget=None):
    """
    Replace st(τ) by ∂τ̄ * K for a shellable ball K with ∂K = lk(τ).

    Returns (Δ′, Ω) with Ω = Δ ∪ τ̄ * K. The default K is the cone over the link
    with a fresh apex.
    """
    tau = complex_._require_face(face)
    if not tau:
        raise PreconditionError('The empty face cannot be eliminated')
    link = complex_.link(tau)
    labels = labels or LabelFactory(complex_.vertex_set)
    labels.reserve(complex_.vertex_set)
    if K is None:
        K = link.cone(labels.fresh())
    else:
        if K.boundary() != link:
            raise PreconditionError('∂K is not the link of the face')
        if not K.is_induced_subcomplex(K.boundary()):
            raise PreconditionError('∂K is not induced in K')
        inner = K.vertex_set - link.vertex_set
        if inner & complex_.vertex_set:
            raise LabelCollisionError('Interior vertices of K clash with the complex', labels=inner)
        labels.reserve(K.vertex_set)
    shelling = find_shelling(K, budget=budget)
    if shelling is None:
        raise ShellingError('K is not shellable')
    ball = SimplicialComplex.simplex(tau).join(K)
    omega_complex = complex_.union(ball)
    eliminated = complex_.delete(tau).union(SimplicialComplex.simplex_boundary(tau).join(K))
    if tau in eliminated:
        raise ConsistencyError(f'{format_face(tau)} survived its elimination')
    poset = SimplicialPoset.from_complex(omega_complex)
    witness = tuple(poset.id_of(tau | frozenset(h)) for h in reversed(shelling.facets))
    cobordism = PseudoCobordism(
        poset, poset.ideal_of_complex(complex_), poset.ideal_of_complex(eliminated),
        complex_.dim, witness).verify()
    if verify_bidirectional(cobordism, witness) is None:
        raise ConsistencyError('Constructed elimination order does not shell both ways')
    logger.info(f'Eliminated {format_face(tau)} through {len(witness)} cells')
    return eliminated, cobordism


def eliminate_all_vertices(complex_, labels=None, budget=None):
    """Eliminate every original vertex in label order; returns (Δ′, composite Ω)."""
    labels = labels or LabelFactory(complex_.vertex_set)
    labels.reserve(complex_.vertex_set)
    current = complex_
    cobordism = None
    for vertex in complex_.vertices:
        current, step = eliminate_face(current, [vertex], labels=labels, budget=budget)
        cobordism = step if cobordism is None else compose(cobordism, step)
    if cobordism.right_complex() != current:
        raise ConsistencyError('Vertex elimination renamed labels unexpectedly')
    return current, cobordism


def disjoint_ends_cobordism(complex_, flip_path=(), labels=None, budget=None):
    """Cobordism from Δ to the end of ``flip_path`` whose ends share only ∅."""
    labels = labels or LabelFactory(complex_.vertex_set)
    current, cobordism = eliminate_all_vertices(complex_, labels=labels, budget=budget)
    renaming = {}
    for move in flip_path:
        move = move.relabel(renaming)
        step = elementary_cobordism(current, move)
        cobordism, renamed = compose_with_renaming(cobordism, step)
        renaming.update(renamed)
        current = cobordism.right_complex()
    shared = cobordism.left & cobordism.right
    if shared != {cobordism.poset.bottom}:
        raise ConsistencyError('Ends share a nonempty face', ids=shared)
    return cobordism


def subdivide_cobordism(cobordism, element, apex=None, labels=None, budget=None):
    """
    Stellar subdivision of Ω at an element; the ends are subdivided when they contain it.

    A fresh bidirectional shelling of the result is searched for.
    """
    P = cobordism.poset
    if isinstance(element, str) and element in P:
        eid = element
    else:
        eid = P.id_of(element)
    labels = labels or LabelFactory(P.vertex_labels)
    labels.reserve(P.vertex_labels)
    apex = labels.claim(apex) if apex is not None else labels.fresh()
    poset, joined, above = poset_subdivide(P, eid, apex)
    if not above:
        return cobordism

    def subdivided(end):
        touched = above & end
        if not touched:
            return frozenset(end)
        closure = P.ideal(touched)
        return frozenset((set(end) - above) | {joined[r] for r in closure if r in joined})

    result = PseudoCobordism(
        poset, subdivided(cobordism.left), subdivided(cobordism.right), cobordism.d).verify()
    found = find_bidirectional_shelling(result, budget=budget)
    if found is None:
        raise ShellingError(f'No bidirectional shelling after subdividing {eid}')
    return replace(result, witness=found.order)


# ============================================================================
# COLORINGS
# ============================================================================

@dataclass
class PosetColoringExtension:
    poset: SimplicialPoset
    coloring: Coloring
    log: list = field(default_factory=list)
    dull_counts: list = field(default_factory=list)


def extend_poset_coloring(poset, base, coloring, m, labels=None):
    """
    The dull-face loop of ``extend_coloring`` run on a simplicial poset.

    ``base`` is an order ideal whose vertices carry a proper coloring; it is never
    subdivided.
    """
    base = frozenset(poset.ideal(base))
    base_labels = {poset[eid].vertices[0] for eid in base if poset[eid].rank == 1}
    colors = {v: coloring[v] for v in base_labels}
    for eid in base:
        element = poset[eid]
        if element.rank >= 2 and len({colors[v] for v in element.vertices}) != element.rank:
            raise ColoringError(f'The coloring is not proper on {eid}', id=eid)
    if any(c >= m for c in colors.values()):
        raise ColoringError(f'The base coloring does not fit the palette of size {m}', m=m)
    labels = labels or LabelFactory(poset.vertex_labels)
    labels.reserve(poset.vertex_labels)
    log = []

    targets = [
        e.id for e in poset
        if e.rank == 2 and e.id not in base
        and all(v in base_labels for v in e.vertices)
        and colors[e.vertices[0]] == colors[e.vertices[1]]
    ]
    for eid in targets:
        apex = labels.fresh()
        poset, _, _ = poset_subdivide(poset, eid, apex)
        log.append((eid, apex, 0))

    for label in poset.vertex_labels:
        colors.setdefault(label, 0)

    dull_counts = []
    while True:
        dull = [e.id for e in poset if is_dull(e.vertices, colors)]
        dull_counts.append(len(dull))
        if len(dull_counts) > 1 and dull_counts[-1] >= dull_counts[-2]:
            raise ConsistencyError('Dull-element count did not decrease', counts=dull_counts)
        if not dull:
            break
        dull_set = set(dull)
        maximal = [eid for eid in dull if not (poset.up_set(eid) - {eid}) & dull_set]
        target = min(maximal, key=lambda eid: _element_order(poset[eid])[1:])
        rank = poset[target].rank
        apex = labels.fresh()
        poset, _, _ = poset_subdivide(poset, target, apex)
        colors[apex] = rank - 1
        log.append((target, apex, rank - 1))

    dimension = max((poset[e].rank for e in poset.elements if e not in base), default=0) - 1
    extended = Coloring(
        {v: colors[v] for v in poset.vertex_labels}, max(m, dimension + 1))
    return PosetColoringExtension(poset, extended, log, dull_counts)
