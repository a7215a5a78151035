# coloring.py - proper colorings, balancedness and the coloring-extension algorithm
import logging
from dataclasses import dataclass, field
from functools import cached_property

from .core import (
    LabelFactory,
    SimplicialComplex,
    barycenter_labels,
    barycentric_subdivision,
    face_key,
    format_face,
    label_key,
    make_face,
    normalize_kind,
    generate,
)
from .exceptions import ColoringError, ConsistencyError, PreconditionError, SubcomplexError

logger = logging.getLogger(__name__)


class Coloring:
    """
    Vertex colors in {0..palette-1}.

    Properness is a predicate checked against a complex, never a construction invariant.
    """

    def __init__(self, assignment, palette=None):
        self.assignment = {str(v): int(c) for v, c in assignment.items()}
        if any(c < 0 for c in self.assignment.values()):
            raise ColoringError('Colors must be non-negative', assignment=self.assignment)
        highest = max(self.assignment.values(), default=-1)
        self.palette = highest + 1 if palette is None else int(palette)
        if highest >= self.palette:
            raise ColoringError(
                f'Color {highest} is outside the palette of size {self.palette}',
                palette=self.palette)

    def __getitem__(self, vertex):
        try:
            return self.assignment[vertex]
        except KeyError:
            raise ColoringError(f'Vertex {vertex} is not colored', vertex=vertex) from None

    def __contains__(self, vertex):
        return vertex in self.assignment

    def __len__(self):
        return len(self.assignment)

    def __eq__(self, other):
        if not isinstance(other, Coloring):
            return NotImplemented
        return self.assignment == other.assignment and self.palette == other.palette

    def __repr__(self):
        return f'<Coloring vertices={len(self)} palette={self.palette}>'

    def get(self, vertex, default=None):
        return self.assignment.get(vertex, default)

    @property
    def vertices(self):
        return sorted(self.assignment, key=label_key)

    @property
    def colors_used(self):
        return sorted(set(self.assignment.values()))

    def restrict(self, vertices):
        """Coloring of ``vertices`` only; every one of them must be colored."""
        return Coloring({v: self[v] for v in vertices}, self.palette)

    def extend(self, assignment, palette=None):
        merged = dict(self.assignment)
        merged.update(assignment)
        wanted = self.palette if palette is None else palette
        return Coloring(merged, max(wanted, max(merged.values(), default=-1) + 1))

    def relabel(self, mapping):
        return Coloring({mapping.get(v, v): c for v, c in self.assignment.items()}, self.palette)

    def as_dict(self):
        return {v: self.assignment[v] for v in self.vertices}


# ============================================================================
# PROPERNESS
# ============================================================================

def improper_edges(complex_, coloring):
    for v in complex_.vertices:
        if v not in coloring:
            raise ColoringError(f'Vertex {v} is not colored', vertex=v)
    return [edge for edge in complex_.edges if coloring[edge[0]] == coloring[edge[1]]]


def is_proper(complex_, coloring):
    """True iff no edge of the complex is monochromatic."""
    for v in complex_.vertices:
        if v not in coloring:
            raise ColoringError(f'Vertex {v} is not colored', vertex=v)
    for facet in complex_.facet_sets:
        if len({coloring[v] for v in facet}) != len(facet):
            return False
    return True


def is_balanced(complex_, coloring):
    """A proper coloring using at most dim + 1 colors."""
    if complex_.dim is None:
        return True
    used = {coloring[v] for v in complex_.vertices}
    return is_proper(complex_, coloring) and len(used) <= complex_.dim + 1


def _coloring_order(graph):
    """Highest degree first, then the vertex with most already-ordered neighbours."""
    remaining = set(graph.nodes)
    placed = {v: 0 for v in graph.nodes}
    order = []
    while remaining:
        vertex = min(
            remaining,
            key=lambda v: (-placed[v], -graph.degree(v), label_key(v)))
        remaining.discard(vertex)
        order.append(vertex)
        for neighbour in graph[vertex]:
            placed[neighbour] += 1
    return order


def find_proper_coloring(complex_, m):
    """
    Exact backtracking search for a proper m-coloring; None when none exists.

    A vertex may only open the next unused color, which removes color permutations.
    """
    if m < 1:
        raise PreconditionError(f'Palette size must be positive, got {m}', m=m)
    graph = complex_.graph()
    order = _coloring_order(graph)
    assignment = {}
    next_color = [0] * len(order)
    # highest color used by the vertices before each position
    highest = [-1] * (len(order) + 1)
    position = 0
    while 0 <= position < len(order):
        vertex = order[position]
        assignment.pop(vertex, None)
        forbidden = {assignment[w] for w in graph[vertex] if w in assignment}
        limit = min(m, highest[position] + 2)
        color = next_color[position]
        while color < limit and color in forbidden:
            color += 1
        if color >= limit:
            next_color[position] = 0
            position -= 1
            continue
        assignment[vertex] = color
        next_color[position] = color + 1
        highest[position + 1] = max(highest[position], color)
        position += 1

    if position < 0:
        logger.info(f'No proper {m}-coloring exists for {complex_!r}')
        return None
    return Coloring(assignment, m)


def natural_coloring(kind, n=None, source=None, complex_=None):
    """The coloring each generator documents, or None when the kind has none."""
    kind = normalize_kind(kind)
    complex_ = complex_ or generate(kind, n=n, source=source)
    if kind in ('simplex', 'simplex-boundary'):
        return Coloring({f'x{i}': i for i in range(n + 1)}, n + 1)
    if kind == 'cross-polytope':
        return Coloring(
            {f'{side}{i}': i for i in range(n + 1) for side in 'xy'}, n + 1)
    if kind == 'bipyramid':
        if n % 2:
            return None
        assignment = {f'e{i}': i % 2 for i in range(n)}
        assignment.update({'a0': 2, 'a1': 2})
        return Coloring(assignment, 3)
    if kind == 'barycentric':
        if source is None:
            raise PreconditionError('barycentric needs a source complex')
        return barycentric_coloring(source)
    return None


def generate_colored(kind, n=None, source=None):
    """``generate`` plus its natural coloring (None for the torus and odd bipyramids)."""
    complex_ = generate(kind, n=n, source=source)
    return complex_, natural_coloring(kind, n=n, source=source, complex_=complex_)


# ============================================================================
# COLORING EXTENSION
# ============================================================================

@dataclass(frozen=True)
class RelativeComplex:
    """A pair (L, K) with K a subcomplex of L."""
    L: SimplicialComplex
    K: SimplicialComplex

    def __post_init__(self):
        if not self.K.is_subcomplex_of(self.L):
            raise SubcomplexError('K is not a subcomplex of L')

    @cached_property
    def relative_faces(self):
        return self.L.faces - self.K.faces

    @cached_property
    def dim(self):
        """max dim over faces of L not in K; None when L = K."""
        if not self.relative_faces:
            return None
        return max(len(f) for f in self.relative_faces) - 1


@dataclass(frozen=True)
class ColoringStep:
    face: tuple
    apex: str
    color: int
    phase: str

    def as_record(self):
        return {'face': list(self.face), 'apex': self.apex, 'color': self.color, 'phase': self.phase}


@dataclass
class ColoringExtension:
    complex: SimplicialComplex
    coloring: Coloring
    log: list = field(default_factory=list)
    dull_counts: list = field(default_factory=list)

    def subdivision_log(self):
        from .subdivision import SubdivisionLog
        return SubdivisionLog([(step.face, step.apex) for step in self.log])


def is_dull(face, colors):
    """κ(v) < dim F for every vertex of F."""
    dimension = len(face) - 1
    return dimension >= 1 and all(colors[v] < dimension for v in face)


def extend_coloring(relative, coloring, m, labels=None):
    """
    Extend a proper coloring of K to a proper coloring of a subdivision of L.

    Edges of L outside K whose endpoints are equally colored K-vertices are
    subdivided first; every vertex outside K starts at color 0; then each round
    stars the lexicographically smallest inclusion-maximal dull face and colors
    the apex dim F. Faces of K are never subdivided.
    """
    from .subdivision import stellar_subdivide

    L, K = relative.L, relative.K
    if m < 1:
        raise PreconditionError(f'Palette size must be positive, got {m}', m=m)
    base = coloring.restrict(K.vertices)
    if not is_proper(K, base):
        raise ColoringError('The coloring is not proper on K')
    if any(c >= m for c in base.assignment.values()):
        raise ColoringError(f'The coloring of K does not fit the palette of size {m}', m=m)

    dimension = relative.dim
    labels = labels or LabelFactory(L.vertex_set)
    labels.reserve(L.vertex_set)
    k_faces = K.faces
    k_vertices = K.vertex_set
    colors = dict(base.assignment)
    current = L
    log = []

    for edge in L.edges:
        if frozenset(edge) in k_faces:
            continue
        a, b = edge
        if a in k_vertices and b in k_vertices and colors[a] == colors[b]:
            apex = labels.fresh()
            current = stellar_subdivide(current, edge, apex)
            log.append(ColoringStep(edge, apex, 0, 'edge'))

    for v in current.vertices:
        if v not in k_vertices:
            colors[v] = 0

    dull_counts = []
    while True:
        dull = [f for f in current.faces if is_dull(f, colors)]
        dull_counts.append(len(dull))
        if len(dull_counts) > 1 and dull_counts[-1] >= dull_counts[-2]:
            raise ConsistencyError(
                'Dull-face count did not decrease', counts=dull_counts)
        if not dull:
            break
        dull_set = set(dull)
        maximal = [f for f in dull if not any(f < g for g in dull_set)]
        target = min((make_face(f) for f in maximal), key=face_key)
        if frozenset(target) in k_faces:
            raise ConsistencyError(f'Dull face {format_face(target)} lies in K')
        apex = labels.fresh()
        current = stellar_subdivide(current, target, apex)
        colors[apex] = len(target) - 1
        log.append(ColoringStep(target, apex, len(target) - 1, 'dull'))
        logger.debug(f'Starred dull face {format_face(target)} at {apex} (color {len(target) - 1})')

    palette = max(m, (dimension if dimension is not None else -1) + 1)
    extended = Coloring({v: colors[v] for v in current.vertices}, palette)
    if not is_proper(current, extended):
        raise ConsistencyError('Extended coloring is not proper')
    logger.info(
        f'Extended coloring with {len(log)} subdivisions; dull counts {dull_counts}')
    return ColoringExtension(current, extended, log, dull_counts)


def barycentric_coloring(source):
    """Colors the barycenter of each face F of ``source`` by dim F."""
    labels = barycenter_labels(source)
    return Coloring({label: len(face) - 1 for face, label in labels.items()}, (source.dim or 0) + 1)


def balanced_barycentric(complex_):
    """Barycentric subdivision with its dimension coloring."""
    return barycentric_subdivision(complex_), barycentric_coloring(complex_)
