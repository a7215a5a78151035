# flips.py - bistellar flips, cross-flip templates and cross-flip application
import logging
from dataclasses import dataclass, field
from itertools import combinations, permutations, product

import networkx as nx

from .coloring import Coloring, is_proper
from .conf import resolve
from .core import (
    Isomorphism,
    LabelFactory,
    SimplicialComplex,
    canonical_form,
    classify,
    cross_polytope_boundary,
    cross_polytope_partner,
    find_induced_embeddings,
    find_isomorphism,
    format_face,
    is_closed_pseudomanifold,
    label_key,
    make_face,
    simplex,
)
from .exceptions import (
    ColoringError,
    ConsistencyError,
    InapplicableMoveError,
    LabelCollisionError,
    PreconditionError,
)
from .shelling import find_shelling
from .subdivision import diamond

logger = logging.getLogger(__name__)


# ============================================================================
# BISTELLAR FLIPS
# ============================================================================

@dataclass(frozen=True)
class FlipMove:
    """
    Bistellar flip replacing Ā * ∂B̄ by ∂Ā * B̄.

    ``kind`` reads facets removed -> facets added, e.g. '1-3' subdivides a triangle.
    """
    A: tuple
    B: tuple

    def __post_init__(self):
        object.__setattr__(self, 'A', make_face(self.A))
        object.__setattr__(self, 'B', make_face(self.B))

    @property
    def kind(self):
        return f'{len(self.B)}-{len(self.A)}'

    def inverse(self):
        return FlipMove(self.B, self.A)

    def relabel(self, mapping):
        return FlipMove([mapping.get(v, v) for v in self.A], [mapping.get(v, v) for v in self.B])

    def as_record(self):
        return {'type': 'bistellar', 'A': list(self.A), 'B': list(self.B), 'kind': self.kind}

    def __str__(self):
        return f'flip {format_face(self.A)} -> {format_face(self.B)}'


def _require_closed_manifold(complex_, quiet=False):
    if not is_closed_pseudomanifold(complex_):
        raise PreconditionError(f'{complex_!r} is not a closed pseudomanifold')
    if complex_.dim == 2 and not classify(complex_).surface:
        raise PreconditionError(f'{complex_!r} is not a closed surface')
    if complex_.dim >= 3 and not quiet:
        logger.warning('Manifold check above dimension 2 only covers the pseudomanifold condition')


def available_bistellar_flips(complex_, labels=None):
    """Every flip applicable to a closed combinatorial manifold, in face order."""
    _require_closed_manifold(complex_)
    dimension = complex_.dim
    labels = labels or LabelFactory(complex_.vertex_set)
    labels.reserve(complex_.vertex_set)
    new_vertex = None
    moves = []
    for face in sorted((make_face(f) for f in complex_.faces if f), key=lambda f: (len(f), f)):
        link = complex_.link(face)
        if not link.vertices:
            if new_vertex is None:
                new_vertex = labels.fresh()
            moves.append(FlipMove(face, (new_vertex,)))
            continue
        opposite = link.vertex_set
        if len(face) + len(opposite) != dimension + 2 or opposite in complex_:
            continue
        if link == SimplicialComplex.simplex_boundary(opposite):
            moves.append(FlipMove(face, tuple(opposite)))
    return moves


def apply_bistellar_flip(complex_, move):
    A, B = frozenset(move.A), frozenset(move.B)
    if not A or not B:
        raise InapplicableMoveError('Both sides of a flip must be nonempty', move=move.as_record())
    if A & B:
        raise InapplicableMoveError('A and B must be disjoint', move=move.as_record())
    if A not in complex_:
        raise InapplicableMoveError(f'{format_face(A)} is not a face', move=move.as_record())
    if B in complex_:
        raise InapplicableMoveError(f'{format_face(B)} is already a face', move=move.as_record())
    if complex_.link(A) != SimplicialComplex.simplex_boundary(B):
        raise InapplicableMoveError(
            f'The link of {format_face(A)} is not the boundary of {format_face(B)}',
            move=move.as_record())
    pieces = [facet for facet in complex_.facet_sets if not A <= facet]
    pieces.extend((A | B) - {a} for a in A)
    return SimplicialComplex(pieces)


# ============================================================================
# CROSS-FLIP TEMPLATES
# ============================================================================

@dataclass(frozen=True)
class CrossFlipTemplate:
    """A shellable, co-shellable D ⊂ C_d and its complement C."""
    d: int
    D: SimplicialComplex
    complement: SimplicialComplex
    key: tuple = field(compare=False)
    provenance: str = 'general'

    @property
    def shape(self):
        return len(self.D), len(self.complement)

    @property
    def interior_vertices(self):
        """Vertices of the complement that D does not have; they get fresh labels."""
        return sorted(self.complement.vertex_set - self.D.vertex_set, key=label_key)

    @property
    def removed_vertices(self):
        return sorted(self.D.vertex_set - self.complement.vertex_set, key=label_key)

    def swapped(self):
        return CrossFlipTemplate(
            self.d, self.complement, self.D, (self.key[1], self.key[0]), self.provenance)

    def as_record(self):
        return {
            'dimension': self.d,
            'D': [list(f) for f in self.D.facets],
            'complement': [list(f) for f in self.complement.facets],
            'shape': list(self.shape),
            'provenance': self.provenance,
        }


def make_template(D, complement=None, provenance='general', budget=None, check=True):
    """Build a template from D ⊂ C_d; with ``check`` both sides must be shellable."""
    d = D.dim
    cross = cross_polytope_boundary(d)
    if complement is None:
        complement = SimplicialComplex._from_maximal(cross.facet_sets - D.facet_sets)
    if D.facet_sets | complement.facet_sets != cross.facet_sets or D.facet_sets & complement.facet_sets:
        raise PreconditionError('D and its complement must split the facets of C_d')
    if check:
        if find_shelling(D, budget=budget) is None:
            raise PreconditionError('D is not shellable')
        if find_shelling(complement, budget=budget) is None:
            raise PreconditionError('The complement of D is not shellable')
    key = (canonical_form(D), canonical_form(complement))
    return CrossFlipTemplate(d, D, complement, key, provenance)


def _hyperoctahedral_actions(d, facets):
    index = {frozenset(f): i for i, f in enumerate(facets)}
    actions = []
    for order in permutations(range(d + 1)):
        for signs in product((0, 1), repeat=d + 1):
            images = {}
            for i in range(d + 1):
                same, other = ('x', 'y') if not signs[i] else ('y', 'x')
                images[f'x{i}'] = f'{same}{order[i]}'
                images[f'y{i}'] = f'{other}{order[i]}'
            actions.append(tuple(
                index[frozenset(images[v] for v in facet)] for facet in facets))
    return actions


def _act(action, mask):
    image = 0
    position = 0
    while mask:
        if mask & 1:
            image |= 1 << action[position]
        mask >>= 1
        position += 1
    return image


def _strongly_connected(facet_sets):
    dual = nx.Graph()
    dual.add_nodes_from(range(len(facet_sets)))
    for i, j in combinations(range(len(facet_sets)), 2):
        if len(facet_sets[i] & facet_sets[j]) == len(facet_sets[i]) - 1:
            dual.add_edge(i, j)
    return nx.is_connected(dual)


def enumerate_cross_flip_templates(d, mode='general', budget=None):
    """
    Cross-flip catalog for dimension d, one template per isomorphism class of D.

    ``general`` enumerates facet subsets of C_d up to its symmetry group and keeps
    those where D and its complement are both shellable. ``basic`` takes the
    pieces of the diamond of a colored (d+1)-simplex.
    """
    if d < 1:
        raise PreconditionError(f'Templates need d >= 1, got {d}', d=d)
    if mode == 'general' and d > 3:
        raise PreconditionError(f'General templates are enumerated for d <= 3 only, got {d}', d=d)
    if mode == 'basic':
        return _basic_templates(d, budget)
    if mode != 'general':
        raise PreconditionError(f'Unknown template mode {mode}', mode=mode)

    cross = cross_polytope_boundary(d)
    facets = [frozenset(f) for f in cross.facets]
    total = len(facets)
    actions = _hyperoctahedral_actions(d, cross.facets)
    seen = bytearray(1 << total)
    by_key = {}
    for mask in range(1, (1 << total) - 1):
        if seen[mask]:
            continue
        for action in actions:
            seen[_act(action, mask)] = 1
        chosen = [facets[i] for i in range(total) if mask >> i & 1]
        rest = [facets[i] for i in range(total) if not mask >> i & 1]
        if not _strongly_connected(chosen) or not _strongly_connected(rest):
            continue
        D = SimplicialComplex._from_maximal(chosen)
        complement = SimplicialComplex._from_maximal(rest)
        if find_shelling(D, budget=budget) is None or find_shelling(complement, budget=budget) is None:
            continue
        template = make_template(D, complement, 'general', check=False)
        known = by_key.get(template.key[0])
        if known is None:
            by_key[template.key[0]] = template
        elif known.key[1] != template.key[1]:
            raise ConsistencyError(
                f'Isomorphic D with non-isomorphic complements (shape {template.shape})', shape=template.shape)
    catalog = sorted(by_key.values(), key=lambda t: (t.shape, repr(t.key)))
    logger.info(f'Enumerated {len(catalog)} general cross-flip templates for d={d}')
    return catalog


def _basic_templates(d, budget=None):
    sigma = simplex(d + 1)
    coloring = Coloring({f'x{i}': i for i in range(d + 2)}, d + 2)
    result = diamond(sigma, coloring)
    cross = cross_polytope_boundary(d)
    iso = find_isomorphism(result.complex, cross)
    if iso is None:
        raise ConsistencyError('Diamond of a simplex boundary is not a cross-polytope boundary')
    faces = sorted(result.pieces)
    catalog = {}
    for size in range(1, len(faces)):
        for chosen in combinations(faces, size):
            rest = [f for f in faces if f not in chosen]
            D = result.image(chosen).relabel(iso.vertex_map)
            complement = result.image(rest).relabel(iso.vertex_map)
            try:
                template = make_template(D, complement, 'basic', budget=budget)
            except PreconditionError as exc:
                raise ConsistencyError(f'Basic template fails the general test: {exc.message}') from exc
            catalog.setdefault(template.key, template)
    ordered = sorted(catalog.values(), key=lambda t: (t.shape, repr(t.key)))
    logger.info(f'Built {len(ordered)} basic cross-flip templates for d={d}')
    return ordered


# ============================================================================
# CROSS-FLIPS
# ============================================================================

@dataclass(frozen=True)
class CrossFlipMove:
    """
    A template placed in a complex.

    ``embedding`` maps the vertices of D to host labels; ``fresh`` optionally fixes
    the labels given to the interior vertices of the complement.
    """
    template: CrossFlipTemplate
    embedding: Isomorphism
    fresh: Isomorphism = field(default_factory=Isomorphism)

    @property
    def kind(self):
        removed, added = self.template.shape
        return f'cross {removed}-{added}'

    def image(self):
        return self.template.D.relabel(self.embedding.vertex_map)

    def inverse(self):
        """The move undoing this one; ``fresh`` must cover every interior vertex."""
        template = self.template
        missing = [v for v in template.interior_vertices if v not in self.fresh.vertex_map]
        if missing:
            raise PreconditionError('Inverse needs the fresh labels of every interior vertex', missing=missing)
        placed = {}
        for v in template.complement.vertices:
            placed[v] = self.fresh.vertex_map[v] if v in self.fresh.vertex_map else self.embedding.vertex_map[v]
        restored = {v: self.embedding.vertex_map[v] for v in template.removed_vertices}
        return CrossFlipMove(template.swapped(), Isomorphism(placed), Isomorphism(restored))

    def relabel(self, mapping):
        return CrossFlipMove(
            self.template,
            Isomorphism({k: mapping.get(v, v) for k, v in self.embedding.vertex_map.items()}),
            Isomorphism({k: mapping.get(v, v) for k, v in self.fresh.vertex_map.items()}),
        )

    def as_record(self):
        return {
            'type': 'cross',
            'kind': self.kind,
            'template': self.template.as_record(),
            'embedding': dict(self.embedding.items()),
            'fresh': dict(self.fresh.items()),
        }

    def __str__(self):
        return f'{self.kind} on {sorted(self.embedding.vertex_map.values(), key=label_key)}'


@dataclass
class CrossFlipResult:
    complex: SimplicialComplex
    coloring: object
    vertex_map: dict
    move: CrossFlipMove
    inverse: CrossFlipMove


def apply_cross_flip(complex_, move, coloring=None, labels=None):
    """
    Replace the image of D by a copy of its complement glued along ∂D.

    A coloring is carried along: a new vertex w takes the color of the host image
    of w's antipode in C_d, which D always contains.
    """
    template = move.template
    embedding = move.embedding.vertex_map
    if set(embedding) != template.D.vertex_set:
        raise InapplicableMoveError('The embedding must be defined exactly on the vertices of D')
    if complex_.dim != template.d:
        raise InapplicableMoveError(
            f'Template of dimension {template.d} cannot act on {complex_!r}')
    _require_closed_manifold(complex_, quiet=True)
    if coloring is not None and not is_proper(complex_, coloring):
        raise ColoringError('The coloring of the host complex is not proper')
    image = template.D.relabel(embedding)
    if not complex_.is_induced_subcomplex(image):
        raise InapplicableMoveError('The image of D is not an induced subcomplex', move=move.as_record())
    if not image.facet_sets <= complex_.facet_sets:
        raise InapplicableMoveError('The image of D is not made of facets', move=move.as_record())

    labels = labels or LabelFactory(complex_.vertex_set)
    labels.reserve(complex_.vertex_set)
    fresh = dict(move.fresh.vertex_map)
    for v in template.interior_vertices:
        if v not in fresh:
            fresh[v] = labels.fresh()
        elif fresh[v] in complex_.vertex_set:
            raise LabelCollisionError(f'Fresh label {fresh[v]} is already a vertex', label=fresh[v])
        else:
            labels.reserve([fresh[v]])
    placed = {v: fresh[v] if v in fresh else embedding[v] for v in template.complement.vertices}
    glued = template.complement.relabel(placed)
    result = SimplicialComplex._from_maximal(
        list(complex_.facet_sets - image.facet_sets) + list(glued.facet_sets))

    carried = None
    if coloring is not None:
        colors = {v: coloring[v] for v in result.vertices if v in complex_.vertex_set}
        for v in template.interior_vertices:
            partner = cross_polytope_partner(v)
            if partner not in embedding:
                raise ConsistencyError(f'Antipode of {v} is missing from D')
            colors[fresh[v]] = coloring[embedding[partner]]
        carried = Coloring(colors, coloring.palette)
        if not is_proper(result, carried):
            raise ConsistencyError('Transported coloring is not proper')

    applied = CrossFlipMove(template, move.embedding, Isomorphism({v: fresh[v] for v in template.interior_vertices}))
    return CrossFlipResult(result, carried, placed, applied, applied.inverse())


def available_cross_flips(complex_, catalog, limit=None):
    """Every (template, embedding) pair with an induced image, up to ``limit`` per template."""
    _require_closed_manifold(complex_)
    limit = resolve(limit, 'TOPOLOGY_EMBEDDING_LIMIT')
    moves = []
    for template in catalog:
        if template.d != complex_.dim:
            continue
        for embedding in find_induced_embeddings(template.D, complex_, limit=limit):
            moves.append(CrossFlipMove(template, embedding))
    return moves


def apply_move(complex_, move, coloring=None, labels=None):
    """Apply either kind of move; returns (complex, coloring or None)."""
    if isinstance(move, CrossFlipMove):
        result = apply_cross_flip(complex_, move, coloring=coloring, labels=labels)
        return result.complex, result.coloring
    return apply_bistellar_flip(complex_, move), None
