# shelling.py - shelling verification, search and boundary flip paths
import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .conf import resolve
from .core import SimplicialComplex, cross_polytope_boundary, format_face, make_face
from .exceptions import (
    BudgetExhaustedError,
    ConsistencyError,
    InapplicableMoveError,
    PreconditionError,
    ShellingError,
)

logger = logging.getLogger(__name__)


@lru_cache(maxsize=65536)
def _subsets(facet):
    ordered = sorted(facet)
    return tuple(
        frozenset(c) for size in range(len(ordered) + 1) for c in combinations(ordered, size))


class _Region:
    """Down-closure of the facets placed so far, with counts so placement can be undone."""

    def __init__(self, base=None):
        self.counts = Counter()
        if base is not None:
            for face in base.faces:
                self.counts[face] += 1

    def __contains__(self, face):
        return face in self.counts

    def __bool__(self):
        return bool(self.counts)

    def add(self, facet):
        for face in _subsets(facet):
            self.counts[face] += 1

    def remove(self, facet):
        for face in _subsets(facet):
            self.counts[face] -= 1
            if not self.counts[face]:
                del self.counts[face]


def restriction(facet, region):
    """
    r(F) = {v : F ∖ v already placed}, or None when F does not attach along a
    pure codimension-one subcomplex of its boundary.
    """
    facet = frozenset(facet)
    restricted = frozenset(v for v in facet if facet - {v} in region)
    for face in _subsets(facet):
        if (face in region) == (restricted <= face):
            return None
    return restricted


@dataclass(frozen=True)
class ShellingOrder:
    facets: tuple
    restrictions: tuple

    def __len__(self):
        return len(self.facets)

    def __iter__(self):
        return iter(self.facets)

    def as_records(self):
        return [
            {'facet': list(f), 'restriction': list(make_face(r))}
            for f, r in zip(self.facets, self.restrictions)
        ]


def _relative_facets(complex_, base):
    if base is None:
        return list(complex_.facets)
    return [f for f in complex_.facets if frozenset(f) not in base]


def _check_order(complex_, order, base=None):
    facets = _relative_facets(complex_, base)
    order = [make_face(f) for f in order]
    if sorted(order) != sorted(facets):
        raise PreconditionError(
            'The order must list every facet exactly once', expected=len(facets), given=len(order))
    region = _Region(base)
    restrictions = []
    for position, facet in enumerate(order):
        restricted = restriction(facet, region)
        if restricted is None:
            return restrictions, position
        restrictions.append(restricted)
        region.add(frozenset(facet))
    return restrictions, None


def verify_shelling(complex_, order, base=None):
    """ShellingOrder when ``order`` shells Δ (relative to ``base`` if given), else None."""
    restrictions, violation = _check_order(complex_, order, base)
    if violation is not None:
        return None
    return ShellingOrder(tuple(make_face(f) for f in order), tuple(restrictions))


def shelling_violation(complex_, order, base=None):
    """Index of the first facet that breaks the shelling condition, or None."""
    _, violation = _check_order(complex_, order, base)
    return violation


def find_shelling(complex_, prefix=None, budget=None, base=None):
    """
    Depth-first search for a shelling; None when none exists.

    Failed sets of placed facets are memoized, and candidates attaching along more
    of their boundary are tried first. Running out of ``budget`` raises
    BudgetExhaustedError, which is not the same answer as None.
    """
    if not complex_.is_pure:
        raise PreconditionError('Only pure complexes can be shelled')
    budget = resolve(budget, 'TOPOLOGY_SHELLING_BUDGET')
    facets = [frozenset(f) for f in _relative_facets(complex_, base)]
    region = _Region(base)
    order = []
    restrictions = []
    used = frozenset()
    for facet in prefix or ():
        facet = frozenset(make_face(facet))
        if facet not in facets or facet in used:
            raise ShellingError(f'Prefix facet {format_face(facet)} is not an unused facet')
        restricted = restriction(facet, region)
        if restricted is None:
            raise ShellingError(f'Prefix is not a partial shelling at {format_face(facet)}')
        region.add(facet)
        order.append(facet)
        restrictions.append(restricted)
        used |= {facets.index(facet)}

    failed = set()
    nodes = 0

    def open_frame(placed):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExhaustedError(f'Shelling search exceeded {budget} nodes', budget=budget)
        candidates = []
        for index, facet in enumerate(facets):
            if index in placed:
                continue
            restricted = restriction(facet, region)
            if restricted is not None:
                candidates.append((-len(restricted), index, restricted))
        candidates.sort(key=lambda item: (item[0], item[1]))
        return [placed, candidates, 0]

    # frames are [placed, candidates, next position]; the facet tried last by a
    # frame stays in region/order until the frame moves on
    complete = len(used) == len(facets)
    stack = [] if complete else [open_frame(used)]
    while stack and not complete:
        frame = stack[-1]
        placed, candidates, position = frame
        if position:
            region.remove(facets[candidates[position - 1][1]])
            order.pop()
            restrictions.pop()
        if position == len(candidates):
            failed.add(placed)
            stack.pop()
            continue
        _, index, restricted = candidates[position]
        frame[2] = position + 1
        facet = facets[index]
        region.add(facet)
        order.append(facet)
        restrictions.append(restricted)
        child = placed | {index}
        if len(child) == len(facets):
            complete = True
        elif child not in failed:
            stack.append(open_frame(child))

    if not complete:
        logger.info(f'{complex_!r} has no shelling ({nodes} nodes explored)')
        return None
    logger.debug(f'Shelling of {complex_!r} found after {nodes} nodes')
    return ShellingOrder(tuple(make_face(f) for f in order), tuple(restrictions))


def shell_in_blocks(complex_, blocks, budget=None, base=None):
    """
    Shell block by block: each block is shelled relative to everything placed before it.

    Used for subdivided cones, where each block holds the facets coming from one
    facet of the unsubdivided complex.
    """
    placed = [] if base is None else list(base.facet_sets)
    facets = []
    restrictions = []
    for block in blocks:
        piece = SimplicialComplex(block)
        below = SimplicialComplex(placed) if placed else None
        found = find_shelling(piece, budget=budget, base=below)
        if found is None:
            return None
        facets.extend(found.facets)
        restrictions.extend(found.restrictions)
        placed.extend(frozenset(f) for f in found.facets)
    result = ShellingOrder(tuple(facets), tuple(restrictions))
    if verify_shelling(complex_, result.facets, base=base) is None:
        raise ConsistencyError('Block-wise order is not a shelling of the whole complex')
    return result


def is_shellable(complex_, budget=None):
    return find_shelling(complex_, budget=budget) is not None


def is_co_shellable(subcomplex, ambient=None, budget=None):
    """True iff the facets of ``ambient`` not in ``subcomplex`` form a shellable complex."""
    if subcomplex.is_empty or subcomplex.dim is None:
        raise PreconditionError('Co-shellability needs a nonempty pure complex')
    ambient = ambient or cross_polytope_boundary(subcomplex.dim)
    if not subcomplex.is_pure or subcomplex.dim != ambient.dim:
        raise PreconditionError('Subcomplex must be pure of the ambient dimension')
    if not subcomplex.facet_sets <= ambient.facet_sets:
        raise PreconditionError('Subcomplex facets must be facets of the ambient complex')
    rest = ambient.facet_sets - subcomplex.facet_sets
    if not rest:
        raise PreconditionError('Subcomplex must be a proper subset of the ambient facets')
    return find_shelling(SimplicialComplex._from_maximal(rest), budget=budget) is not None


# ============================================================================
# SHELLING PATHS
# ============================================================================

def shelling_step_boundary(ball, facet):
    """
    Add ``facet`` to a shelled ball and return (new ball, flip on the boundary).

    With r = r(F) the move is A = F ∖ r, B = r; it is checked against the
    boundaries before and after.
    """
    from .flips import FlipMove, apply_bistellar_flip

    facet = make_face(facet)
    target = frozenset(facet)
    if ball.is_empty:
        raise ShellingError('The first facet of a shelling has no boundary step')
    if target in ball:
        raise ShellingError(f'{format_face(facet)} is already in the ball')
    if len(facet) != ball.dim + 1:
        raise ShellingError(f'{format_face(facet)} has the wrong dimension')
    restricted = restriction(target, _Region(ball))
    if restricted is None or not restricted:
        raise ShellingError(
            f'{format_face(facet)} does not attach along a pure codimension-one piece')
    if restricted == target:
        raise ShellingError(f'{format_face(facet)} attaches along its whole boundary')
    move = FlipMove(target - restricted, restricted)
    grown = SimplicialComplex._from_maximal(list(ball.facet_sets) + [target])
    try:
        flipped = apply_bistellar_flip(ball.boundary(), move)
    except InapplicableMoveError as exc:
        raise ShellingError(f'Boundary step at {format_face(facet)} is not a flip: {exc.message}') from exc
    if flipped != grown.boundary():
        raise ConsistencyError(f'Boundary flip at {format_face(facet)} disagrees with ∂Ω')
    return grown, move


@dataclass
class ShellingPath:
    """Boundaries ∂Ω_1, ..., ∂Ω_t of a shelled ball and the flips between them."""
    order: ShellingOrder
    boundaries: list = field(default_factory=list)
    moves: list = field(default_factory=list)


def shelling_path(ball, order=None, budget=None):
    if order is None:
        order = find_shelling(ball, budget=budget)
        if order is None:
            raise ShellingError(f'{ball!r} is not shellable')
    elif not isinstance(order, ShellingOrder):
        checked = verify_shelling(ball, order)
        if checked is None:
            raise ShellingError('Order is not a shelling')
        order = checked
    first = frozenset(order.facets[0])
    current = SimplicialComplex._from_maximal([first])
    path = ShellingPath(order, [current.boundary()])
    for facet in order.facets[1:]:
        current, move = shelling_step_boundary(current, facet)
        path.boundaries.append(current.boundary())
        path.moves.append(move)
    if current != ball:
        raise ConsistencyError('Shelling path did not rebuild the ball')
    return path


def reverse_shells_boundary(ball, order):
    """True iff the reverse of ``order`` shells the pair (ball, ∂ball)."""
    return verify_shelling(ball, list(reversed(list(order))), base=ball.boundary()) is not None
