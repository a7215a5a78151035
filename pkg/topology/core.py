# core.py - simplicial complexes, standard constructions and isomorphism search
import hashlib
import logging
import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, permutations, product
from math import comb

import networkx as nx
from networkx.algorithms import isomorphism

from .conf import resolve
from .exceptions import (
    BudgetExhaustedError,
    FaceNotFoundError,
    LabelCollisionError,
    MalformedFaceError,
    PreconditionError,
    SubcomplexError,
)

logger = logging.getLogger(__name__)

_DIGITS = re.compile(r'(\d+)')


# ============================================================================
# LABELS AND FACES
# ============================================================================

def label_key(label):
    """Natural sort key: 'x2' < 'x10', ties broken by the raw label."""
    parts = _DIGITS.split(label)
    return tuple(int(part) if i % 2 else part for i, part in enumerate(parts)), label


def face_key(face):
    return tuple(label_key(v) for v in face)


def make_face(vertices):
    """Return the sorted, duplicate-free tuple of labels for a face."""
    labels = [str(v) for v in vertices]
    if len(set(labels)) != len(labels):
        raise MalformedFaceError(
            f'Face {labels} repeats a vertex', face=labels)
    for label in labels:
        if not label or any(ch.isspace() for ch in label):
            raise MalformedFaceError(
                f'Invalid vertex label {label!r}', face=labels)
    return tuple(sorted(labels, key=label_key))


def sort_faces(faces):
    return sorted((make_face(f) for f in faces), key=face_key)


def format_face(face):
    return '{' + ','.join(make_face(face)) + '}'


class LabelFactory:
    """
    Hands out fresh vertex labels ``<prefix><counter>``.

    The counter only moves forward and labels already taken are skipped, so a
    factory shared by several construction steps never reuses a label.
    """

    def __init__(self, taken=(), prefix=None):
        self.prefix = resolve(prefix, 'TOPOLOGY_FRESH_PREFIX')
        self.counter = 0
        self.taken = set(taken)

    def reserve(self, labels):
        self.taken.update(labels)

    def fresh(self):
        while True:
            label = f'{self.prefix}{self.counter}'
            self.counter += 1
            if label not in self.taken:
                self.taken.add(label)
                return label

    def claim(self, label):
        """Reserve an explicit label, refusing one that is already in use."""
        if label in self.taken:
            raise LabelCollisionError(f'Label {label} is already in use', label=label)
        self.taken.add(label)
        return label


# ============================================================================
# SIMPLICIAL COMPLEX
# ============================================================================

@dataclass(frozen=True)
class FVector:
    """Face numbers f_{-1}, f_0, ..., f_d."""
    counts: tuple

    @property
    def dim(self):
        return len(self.counts) - 2

    @property
    def euler_characteristic(self):
        return sum((-1) ** i * count for i, count in enumerate(self.counts[1:]))

    def __getitem__(self, dimension):
        return self.counts[dimension + 1]

    def as_list(self):
        return list(self.counts)


class SimplicialComplex:
    """
    A finite simplicial complex stored by its facets.

    Faces are tuples of vertex labels sorted by ``label_key``. Any iterable of
    faces is accepted; dominated faces and duplicates are absorbed. ``[]`` is the
    empty (void) complex and ``[()]`` is the complex whose only face is the empty face.
    Instances are immutable.
    """

    def __init__(self, faces=(), name=None):
        candidates = {frozenset(make_face(f)) for f in faces}
        kept = []
        for candidate in sorted(candidates, key=len, reverse=True):
            if not any(candidate <= other for other in kept):
                kept.append(candidate)
        self._facet_sets = frozenset(kept)
        self.name = name

    @classmethod
    def _from_maximal(cls, facet_sets, name=None):
        instance = cls.__new__(cls)
        instance._facet_sets = frozenset(facet_sets)
        instance.name = name
        return instance

    @classmethod
    def simplex(cls, face):
        """The closed simplex on ``face``."""
        return cls([face])

    @classmethod
    def simplex_boundary(cls, face, name=None):
        """The boundary of the simplex on ``face``; the boundary of a vertex is {∅}."""
        face = make_face(face)
        if not face:
            return cls([], name=name)
        return cls([tuple(v for v in face if v != w) for w in face], name=name)

    # ------------------------------------------------------------------
    # basic structure
    # ------------------------------------------------------------------
    @property
    def facet_sets(self):
        return self._facet_sets

    @cached_property
    def facets(self):
        return tuple(sorted((make_face(f) for f in self._facet_sets), key=face_key))

    @cached_property
    def vertex_set(self):
        return frozenset().union(*self._facet_sets) if self._facet_sets else frozenset()

    @cached_property
    def vertices(self):
        return tuple(sorted(self.vertex_set, key=label_key))

    @property
    def is_empty(self):
        return not self._facet_sets

    @cached_property
    def dim(self):
        """Dimension, or None for the empty complex."""
        if not self._facet_sets:
            return None
        return max(len(f) for f in self._facet_sets) - 1

    @property
    def dimension_label(self):
        return 'empty' if self.dim is None else str(self.dim)

    @cached_property
    def is_pure(self):
        return len({len(f) for f in self._facet_sets}) <= 1

    @cached_property
    def faces(self):
        """All faces as frozensets, the empty face included."""
        found = set()
        for facet in self._facet_sets:
            members = sorted(facet)
            for size in range(len(members) + 1):
                for subset in combinations(members, size):
                    found.add(frozenset(subset))
        return frozenset(found)

    def faces_of_dim(self, dimension):
        return sorted((make_face(f) for f in self.faces if len(f) == dimension + 1), key=face_key)

    @cached_property
    def edges(self):
        return self.faces_of_dim(1)

    @cached_property
    def f_vector(self):
        if self.dim is None:
            return FVector(())
        counts = [0] * (self.dim + 2)
        for face in self.faces:
            counts[len(face)] += 1
        return FVector(tuple(counts))

    def __contains__(self, face):
        face = frozenset(face)
        return any(face <= facet for facet in self._facet_sets)

    def contains(self, face):
        return frozenset(make_face(face)) in self

    def _require_face(self, face):
        face = make_face(face)
        if frozenset(face) not in self:
            raise FaceNotFoundError(f'{format_face(face)} is not a face of the complex', face=face)
        return frozenset(face)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._facet_sets == other._facet_sets

    def __hash__(self):
        return hash(self._facet_sets)

    def __len__(self):
        return len(self._facet_sets)

    def __iter__(self):
        return iter(self.facets)

    def __repr__(self):
        name = f' {self.name}' if self.name else ''
        return f'<SimplicialComplex{name} dim={self.dimension_label} facets={len(self)}>'

    # ------------------------------------------------------------------
    # local structure
    # ------------------------------------------------------------------
    def link(self, face):
        """lk(F) = {G in st(F) : F ∩ G = ∅}."""
        target = self._require_face(face)
        return SimplicialComplex(
            [facet - target for facet in self._facet_sets if target <= facet])

    def star(self, face):
        """Closed star: every facet containing F, with all their faces."""
        target = self._require_face(face)
        return SimplicialComplex._from_maximal(
            [facet for facet in self._facet_sets if target <= facet])

    def delete(self, face):
        """Deletion {G ∈ Δ : F ⊄ G}; deleting a non-face is the identity."""
        target = frozenset(make_face(face))
        pieces = []
        for facet in self._facet_sets:
            if target <= facet:
                pieces.extend(facet - {v} for v in target)
            else:
                pieces.append(facet)
        return SimplicialComplex(pieces)

    def induced(self, vertices):
        """The induced subcomplex Δ_W on a vertex subset W ⊆ V(Δ)."""
        subset = frozenset(vertices)
        missing = subset - self.vertex_set
        if missing:
            raise SubcomplexError(
                f'Vertices {sorted(missing, key=label_key)} are not in the complex',
                vertices=missing)
        if self.is_empty:
            return SimplicialComplex([])
        return SimplicialComplex([facet & subset for facet in self._facet_sets])

    def is_subcomplex_of(self, other):
        return all(facet in other for facet in self._facet_sets)

    def is_induced_subcomplex(self, sub):
        """True iff ``sub`` is a subcomplex with sub = Δ_{V(sub)}."""
        if not sub.is_subcomplex_of(self):
            return False
        if sub.is_empty:
            return True
        return self.induced(sub.vertex_set) == sub

    # ------------------------------------------------------------------
    # global constructions
    # ------------------------------------------------------------------
    def relabel(self, mapping):
        """Rename vertices through ``mapping``; unmapped vertices keep their label."""
        images = [mapping.get(v, v) for v in self.vertices]
        if len(set(images)) != len(images):
            raise LabelCollisionError('Relabeling is not injective on the vertices', mapping=mapping)
        return SimplicialComplex._from_maximal(
            [frozenset(mapping.get(v, v) for v in facet) for facet in self._facet_sets],
            name=self.name)

    def join(self, other, relabel=False, labels=None):
        """Join Δ * Γ; overlapping labels are an error unless ``relabel`` is set."""
        overlap = self.vertex_set & other.vertex_set
        if overlap:
            if not relabel:
                raise LabelCollisionError(
                    f'Join operands share vertices {sorted(overlap, key=label_key)}',
                    vertices=overlap)
            labels = labels or LabelFactory(self.vertex_set | other.vertex_set)
            other = other.relabel({v: labels.fresh() for v in sorted(overlap, key=label_key)})
        return SimplicialComplex._from_maximal(
            [a | b for a in self._facet_sets for b in other._facet_sets])

    def cone(self, apex):
        if apex in self.vertex_set:
            raise LabelCollisionError(f'Cone apex {apex} is already a vertex', label=apex)
        return self.join(SimplicialComplex([[apex]]))

    def union(self, other):
        return SimplicialComplex(list(self._facet_sets) + list(other._facet_sets))

    def boundary(self):
        """Complex generated by the codimension-one faces lying in exactly one facet."""
        counts = {}
        for facet in self._facet_sets:
            for v in facet:
                ridge = facet - {v}
                counts[ridge] = counts.get(ridge, 0) + 1
        return SimplicialComplex([ridge for ridge, count in counts.items() if count == 1])

    def skeleton(self, dimension):
        pieces = []
        for facet in self._facet_sets:
            if len(facet) <= dimension + 1:
                pieces.append(facet)
            else:
                pieces.extend(frozenset(c) for c in combinations(sorted(facet), dimension + 1))
        return SimplicialComplex(pieces)

    def ridge_degrees(self):
        """Number of facets containing each codimension-one face of a pure complex."""
        degrees = {}
        for facet in self._facet_sets:
            for v in facet:
                ridge = facet - {v}
                degrees[ridge] = degrees.get(ridge, 0) + 1
        return degrees

    def graph(self):
        """The 1-skeleton as a networkx graph with nodes inserted in label order."""
        skeleton = nx.Graph()
        skeleton.add_nodes_from(self.vertices)
        skeleton.add_edges_from(self.edges)
        return skeleton


# ============================================================================
# GENERATORS
# ============================================================================

_KIND_ALIASES = {
    'simplex': 'simplex',
    'simplex-boundary': 'simplex-boundary',
    'cross-polytope': 'cross-polytope',
    'cross-polytope-boundary': 'cross-polytope',
    'bipyramid': 'bipyramid',
    'barycentric': 'barycentric',
    'barycentric-subdivision': 'barycentric',
    'torus': 'torus',
}

GENERATOR_KINDS = tuple(sorted(set(_KIND_ALIASES.values())))


def normalize_kind(kind):
    key = kind.replace('_', '-').lower()
    if key not in _KIND_ALIASES:
        raise PreconditionError(
            f'Unknown complex kind {kind!r}. Valid kinds: {list(GENERATOR_KINDS)}', kind=kind)
    return _KIND_ALIASES[key]


def simplex(n):
    """σ^n on x0..xn."""
    _require_positive(n, 'simplex dimension')
    return SimplicialComplex([[f'x{i}' for i in range(n + 1)]], name=f'simplex-{n}')


def simplex_boundary(n):
    """∂σ^n on x0..xn (n + 1 facets)."""
    _require_positive(n, 'simplex dimension')
    return SimplicialComplex.simplex_boundary(
        [f'x{i}' for i in range(n + 1)], name=f'simplex-boundary-{n}')


def cross_polytope_boundary(d):
    """
    C_d on x0..xd, y0..yd: a face never contains a pair {x_i, y_i}.

    The canonical coloring is κ(x_i) = κ(y_i) = i.
    """
    _require_positive(d, 'cross-polytope dimension')
    facets = [
        [f'{side}{i}' for i, side in enumerate(choice)]
        for choice in product('xy', repeat=d + 1)
    ]
    return SimplicialComplex._from_maximal(
        [frozenset(f) for f in facets], name=f'cross-polytope-{d}')


def cross_polytope_partner(label):
    """x_i <-> y_i."""
    side, index = label[0], label[1:]
    return ('y' if side == 'x' else 'x') + index


def bipyramid(k):
    """Suspension of a k-gon: equator e0..e{k-1}, apexes a0 and a1."""
    if k < 3:
        raise PreconditionError(f'A bipyramid needs at least 3 equator vertices, got {k}', k=k)
    facets = [
        [f'e{i}', f'e{(i + 1) % k}', apex]
        for i in range(k) for apex in ('a0', 'a1')
    ]
    return SimplicialComplex(facets, name=f'bipyramid-{k}')


def barycentric_label(face):
    return 'b:' + '.'.join(face)


def barycenter_labels(complex_):
    """
    Label of the barycenter of every nonempty face, keyed by the face.

    Labels read ``b:<F>``; when dotted vertex labels make two of them coincide the
    later face in face order gets a ``#k`` suffix.
    """
    labels = {}
    taken = set()
    for face in sorted((make_face(f) for f in complex_.faces if f), key=face_key):
        label = barycentric_label(face)
        suffix = 1
        while label in taken:
            suffix += 1
            label = f'{barycentric_label(face)}#{suffix}'
        taken.add(label)
        labels[face] = label
    return labels


def barycentric_subdivision(complex_):
    """
    Order complex of the face poset; the barycenter of F is labelled ``b:<F>``.

    Coloring each barycenter by dim F makes the result balanced.
    """
    if complex_.is_empty:
        raise PreconditionError('Cannot subdivide the empty complex')
    labels = barycenter_labels(complex_)
    chains = []
    for facet in complex_.facets:
        for order in permutations(facet):
            chains.append([
                labels[make_face(order[:size])]
                for size in range(1, len(order) + 1)
            ])
    name = f'barycentric-{complex_.name}' if complex_.name else 'barycentric'
    return SimplicialComplex(chains, name=name)


def torus():
    """The 7-vertex torus on t0..t6."""
    facets = []
    for i in range(7):
        facets.append([f't{i}', f't{(i + 1) % 7}', f't{(i + 3) % 7}'])
        facets.append([f't{i}', f't{(i + 2) % 7}', f't{(i + 3) % 7}'])
    return SimplicialComplex(facets, name='torus-7')


def generate(kind, n=None, source=None):
    """
    Build a standard complex.

    ``n`` is the dimension for simplex kinds and C_d, the number of equator
    vertices for bipyramids; ``source`` is the complex to subdivide for
    ``barycentric``.
    """
    kind = normalize_kind(kind)
    if kind == 'simplex':
        return simplex(n)
    if kind == 'simplex-boundary':
        return simplex_boundary(n)
    if kind == 'cross-polytope':
        return cross_polytope_boundary(n)
    if kind == 'bipyramid':
        return bipyramid(n)
    if kind == 'barycentric':
        if source is None:
            raise PreconditionError('barycentric needs a source complex')
        return barycentric_subdivision(source)
    return torus()


def _require_positive(value, what):
    if value is None or int(value) < 1:
        raise PreconditionError(f'{what} must be a positive integer, got {value}', value=value)


# ============================================================================
# CLASSIFICATION
# ============================================================================

@dataclass
class ClassificationReport:
    dimension: object
    f_vector: tuple
    euler_characteristic: object
    pure: bool
    connected: bool
    closed_pseudomanifold: bool
    orientable: object = None
    surface: object = None
    vertex_links_spheres: object = None
    sphere: object = None
    sphere_verdict: str = 'not applicable'

    def as_dict(self):
        return {
            'dimension': self.dimension,
            'f_vector': list(self.f_vector),
            'euler_characteristic': self.euler_characteristic,
            'pure': self.pure,
            'connected': self.connected,
            'closed_pseudomanifold': self.closed_pseudomanifold,
            'orientable': self.orientable,
            'surface': self.surface,
            'vertex_links_spheres': self.vertex_links_spheres,
            'sphere': self.sphere,
            'sphere_verdict': self.sphere_verdict,
        }


def is_connected(complex_):
    if not complex_.vertices:
        return False
    return nx.is_connected(complex_.graph())


def is_closed_pseudomanifold(complex_):
    """Pure, and every ridge lies in exactly two facets."""
    if complex_.is_empty or not complex_.is_pure or complex_.dim < 0:
        return False
    return all(count == 2 for count in complex_.ridge_degrees().values())


def is_cycle(complex_):
    """A connected 1-dimensional complex in which every vertex has degree 2."""
    if complex_.dim != 1 or not complex_.is_pure:
        return False
    skeleton = complex_.graph()
    return nx.is_connected(skeleton) and all(deg == 2 for _, deg in skeleton.degree())


def is_sphere(complex_):
    """
    Exact sphere test up to dimension 2; None (unknown) above.
    """
    dimension = complex_.dim
    if dimension is None:
        return False
    if dimension == -1:
        return True
    if dimension == 0:
        return len(complex_.vertices) == 2
    if dimension == 1:
        return is_cycle(complex_)
    if dimension == 2:
        return (
            is_surface(complex_)
            and is_connected(complex_)
            and complex_.f_vector.euler_characteristic == 2
        )
    return None


def is_surface(complex_):
    """Closed combinatorial surface: pure of dimension 2 and every vertex link a cycle."""
    if complex_.dim != 2 or not complex_.is_pure:
        return False
    return all(is_cycle(complex_.link([v])) for v in complex_.vertices)


def is_orientable(complex_):
    """Coherent facet orientations for a closed pseudomanifold; None otherwise."""
    if not is_closed_pseudomanifold(complex_):
        return None
    facets = complex_.facets
    sides = {}
    for index, facet in enumerate(facets):
        for position, v in enumerate(facet):
            ridge = frozenset(facet) - {v}
            sides.setdefault(ridge, []).append((index, -1 if position % 2 else 1))
    neighbours = {index: [] for index in range(len(facets))}
    for (first, c1), (second, c2) in sides.values():
        # orientations s satisfy s1*c1 = -s2*c2
        neighbours[first].append((second, -c1 * c2))
        neighbours[second].append((first, -c1 * c2))
    sign = {}
    for start in range(len(facets)):
        if start in sign:
            continue
        sign[start] = 1
        stack = [start]
        while stack:
            current = stack.pop()
            for other, relation in neighbours[current]:
                expected = sign[current] * relation
                if other not in sign:
                    sign[other] = expected
                    stack.append(other)
                elif sign[other] != expected:
                    return False
    return True


def classify(complex_):
    """Purity, connectivity, pseudomanifold status and low-dimensional sphere checks."""
    dimension = complex_.dim
    closed = is_closed_pseudomanifold(complex_)
    report = ClassificationReport(
        dimension=dimension if dimension is not None else 'empty',
        f_vector=complex_.f_vector.counts,
        euler_characteristic=complex_.f_vector.euler_characteristic if dimension is not None else None,
        pure=complex_.is_pure,
        connected=is_connected(complex_),
        closed_pseudomanifold=closed,
        orientable=is_orientable(complex_) if closed else None,
    )
    if dimension is not None and dimension <= 1:
        report.sphere = is_sphere(complex_)
        report.sphere_verdict = 'exact'
    elif dimension == 2:
        report.surface = is_surface(complex_)
        report.sphere = is_sphere(complex_)
        report.sphere_verdict = 'exact'
    elif dimension == 3:
        report.vertex_links_spheres = all(
            is_sphere(complex_.link([v])) for v in complex_.vertices)
        report.sphere_verdict = 'heuristic: vertex links checked exactly, global sphere status unknown'
        logger.warning('Sphere recognition in dimension 3 is not implemented; reporting links only')
    elif dimension is not None:
        report.sphere_verdict = 'heuristic: not checked above dimension 3'
    return report


# ============================================================================
# ISOMORPHISM
# ============================================================================

@dataclass(frozen=True)
class Isomorphism:
    """A vertex bijection (or injection, for embeddings) between two complexes."""
    vertex_map: dict = field(default_factory=dict)

    def __call__(self, label):
        return self.vertex_map[label]

    def apply(self, complex_):
        return complex_.relabel(self.vertex_map)

    def image(self, face):
        return make_face(self.vertex_map[v] for v in face)

    def inverse(self):
        return Isomorphism({b: a for a, b in self.vertex_map.items()})

    def items(self):
        return sorted(self.vertex_map.items(), key=lambda item: label_key(item[0]))

    def __hash__(self):
        return hash(tuple(self.items()))


def _refine(cells, facets, incident):
    while True:
        cell_of = {}
        for index, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = index
        refined = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups = {}
            for v in cell:
                signature = tuple(sorted(
                    tuple(sorted(cell_of[w] for w in facets[f] if w != v))
                    for f in incident[v]
                ))
                groups.setdefault(signature, []).append(v)
            refined.extend(groups[signature] for signature in sorted(groups))
        if len(refined) == len(cells):
            return refined
        cells = refined


def _canonical_search(complex_, colors=None, budget=None):
    budget = resolve(budget, 'TOPOLOGY_ISO_NODE_BUDGET')
    labels = complex_.vertices
    index = {v: i for i, v in enumerate(labels)}
    facets = [tuple(index[v] for v in facet) for facet in complex_.facets]
    incident = [[] for _ in labels]
    for f, facet in enumerate(facets):
        for v in facet:
            incident[v].append(f)

    if colors is not None:
        by_color = {}
        for v in labels:
            by_color.setdefault(colors[v], []).append(index[v])
        cells = [by_color[c] for c in sorted(by_color)]
    else:
        cells = [list(range(len(labels)))] if labels else []

    best = None
    nodes = 0
    pending = [cells]
    while pending:
        partition = _refine(pending.pop(), facets, incident)
        nodes += 1
        if nodes > budget:
            raise BudgetExhaustedError(
                f'Canonical form search exceeded {budget} nodes', budget=budget)
        target = None
        for position, cell in enumerate(partition):
            if len(cell) > 1 and (target is None or len(cell) < len(partition[target])):
                target = position
        if target is None:
            order = [cell[0] for cell in partition]
            rank = {v: p for p, v in enumerate(order)}
            form = tuple(sorted(tuple(sorted(rank[v] for v in facet)) for facet in facets))
            if colors is not None:
                form = (tuple(colors[labels[v]] for v in order), form)
            if best is None or form < best[0]:
                best = (form, order)
            continue
        cell = partition[target]
        for v in reversed(cell):
            pending.append(
                partition[:target] + [[v], [w for w in cell if w != v]] + partition[target + 1:])

    form, order = best
    logger.debug(f'Canonical form of {complex_!r} found after {nodes} nodes')
    return (len(labels), form), {labels[v]: position for position, v in enumerate(order)}


def canonical_form(complex_, colors=None, budget=None):
    """
    Canonical key: equal for two complexes iff they are isomorphic.

    Colour refinement on the vertex-facet incidence followed by individualization
    and backtracking over every leaf; exceeding the node budget raises
    BudgetExhaustedError rather than returning a possibly wrong key.
    """
    key, _ = _canonical_search(complex_, colors=colors, budget=budget)
    return key


def canonical_labeling(complex_, colors=None, budget=None):
    """Map from vertex label to its position in the canonical order."""
    _, positions = _canonical_search(complex_, colors=colors, budget=budget)
    return positions


def canonical_digest(complex_, budget=None):
    key = canonical_form(complex_, budget=budget)
    return hashlib.sha256(repr(key).encode()).hexdigest()[:16]


def _incidence_graph(complex_, colors=None):
    incidence = nx.Graph()
    for v in complex_.vertices:
        incidence.add_node(('v', v), kind='vertex', color=None if colors is None else colors[v])
    for i, facet in enumerate(complex_.facets):
        incidence.add_node(('f', i), kind='facet', color=None)
        incidence.add_edges_from((('f', i), ('v', v)) for v in facet)
    return incidence


def find_isomorphism(first, second, colors_first=None, colors_second=None):
    """
    Vertex bijection carrying ``first`` onto ``second``, or None.

    With colorings given, the bijection must also preserve colors.
    """
    if first.f_vector != second.f_vector:
        return None
    if first.is_empty or not first.vertices:
        return Isomorphism({})
    matcher = isomorphism.GraphMatcher(
        _incidence_graph(first, colors_first),
        _incidence_graph(second, colors_second),
        node_match=isomorphism.categorical_node_match(['kind', 'color'], [None, None]),
    )
    if not matcher.is_isomorphic():
        return None
    return Isomorphism({
        a[1]: b[1] for a, b in matcher.mapping.items() if a[0] == 'v'
    })


def are_isomorphic(first, second):
    return find_isomorphism(first, second) is not None


def find_induced_embeddings(pattern, host, limit=None, modulo_automorphisms=False):
    """
    Vertex injections mapping ``pattern`` isomorphically onto an induced subcomplex of ``host``.

    Candidates come from induced-subgraph matching of the 1-skeleta and are kept
    only when the induced subcomplex on the image equals the mapped pattern. With
    ``modulo_automorphisms`` one embedding per image is returned.
    """
    if not pattern.vertices:
        return [Isomorphism({})] if pattern.is_subcomplex_of(host) else []
    if pattern.dim is not None and host.dim is not None and pattern.dim > host.dim:
        return []
    matcher = isomorphism.GraphMatcher(host.graph(), pattern.graph())
    found = []
    seen_images = set()
    for mapping in matcher.subgraph_isomorphisms_iter():
        embedding = {small: big for big, small in mapping.items()}
        image = pattern.relabel(embedding)
        if host.induced(image.vertex_set) != image:
            continue
        if modulo_automorphisms:
            if image.facet_sets in seen_images:
                continue
            seen_images.add(image.facet_sets)
        found.append(Isomorphism(embedding))
        if limit is not None and len(found) >= limit:
            break
    return found


def binomial_f_vector(d):
    """Face numbers of C_d: f_{i-1} = 2^i C(d+1, i)."""
    return tuple(2 ** i * comb(d + 1, i) for i in range(d + 2))
