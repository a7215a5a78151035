# pipeline.py - end-to-end reductions and connections between balanced complexes
import logging
import math
import random
import time
from collections import Counter
from dataclasses import dataclass, field

from .coloring import (
    Coloring,
    RelativeComplex,
    extend_coloring,
    find_proper_coloring,
    is_balanced,
    is_proper,
)
from .conf import resolve
from .core import (
    Isomorphism,
    LabelFactory,
    SimplicialComplex,
    canonical_digest,
    canonical_form,
    classify,
    cross_polytope_boundary,
    find_isomorphism,
    format_face,
    is_closed_pseudomanifold,
    label_key,
    make_face,
)
from .exceptions import (
    BudgetExhaustedError,
    ColoringError,
    ConsistencyError,
    InapplicableMoveError,
    PreconditionError,
    ShellingError,
)
from .flips import (
    CrossFlipMove,
    FlipMove,
    apply_bistellar_flip,
    apply_cross_flip,
    available_bistellar_flips,
    available_cross_flips,
    enumerate_cross_flip_templates,
    make_template,
)
from .shelling import (
    find_shelling,
    shell_in_blocks,
    shelling_path,
    verify_shelling,
)
from .subdivision import diamond, replay_with_origins

logger = logging.getLogger(__name__)


@dataclass
class ReductionReport:
    """
    Moves taking ``start`` to ``end`` with a certificate per move.

    ``intermediates`` holds the canonical digest of every complex along the way,
    start first. Replaying the moves from ``start`` reproduces ``end`` exactly.
    """
    mode: str
    start: SimplicialComplex
    end: SimplicialComplex
    moves: list = field(default_factory=list)
    intermediates: list = field(default_factory=list)
    certificates: list = field(default_factory=list)
    seed: int = None
    success: bool = True
    statistics: dict = field(default_factory=dict)
    start_coloring: Coloring = None
    end_coloring: Coloring = None
    relabeling: dict = field(default_factory=dict)


def _flip_coloring(before, after, coloring, new_colors):
    if coloring is None:
        return None
    colors = {}
    for v in after.vertices:
        if v in before.vertex_set:
            colors[v] = coloring[v]
        elif v in new_colors:
            colors[v] = new_colors[v]
        else:
            raise ColoringError(f'No color recorded for the new vertex {v}', vertex=v)
    return Coloring(colors, coloring.palette)


def apply_report_move(complex_, move, coloring=None, certificate=None):
    """Apply one report move, carrying the coloring along; returns (complex, coloring)."""
    if isinstance(move, CrossFlipMove):
        result = apply_cross_flip(complex_, move, coloring=coloring)
        return result.complex, result.coloring
    after = apply_bistellar_flip(complex_, move)
    new_colors = (certificate or {}).get('new_colors', {})
    carried = _flip_coloring(complex_, after, coloring, new_colors)
    if carried is not None and not is_proper(after, carried):
        raise ConsistencyError(f'Coloring is not proper after {move}')
    return after, carried


def replay(report):
    """Re-apply every move of a report; raises ConsistencyError unless the end matches exactly."""
    current = report.start
    coloring = report.start_coloring
    certificates = report.certificates or [{}] * len(report.moves)
    if len(certificates) != len(report.moves):
        raise ConsistencyError('A report needs one certificate per move')
    for move, certificate in zip(report.moves, certificates):
        current, coloring = apply_report_move(current, move, coloring, certificate)
    if current != report.end:
        raise ConsistencyError('Replaying the report does not reproduce its end complex')
    if report.end_coloring is not None and coloring is not None and coloring != report.end_coloring:
        raise ConsistencyError('Replaying the report does not reproduce its end coloring')
    return current, coloring


def _states(report):
    current = report.start
    coloring = report.start_coloring
    states = [current]
    for move, certificate in zip(report.moves, report.certificates):
        current, coloring = apply_report_move(current, move, coloring, certificate)
        states.append(current)
    return states


# ============================================================================
# BALANCED 2-SPHERES
# ============================================================================

def _require_balanced_sphere(complex_, coloring):
    if complex_.dim != 2 or not classify(complex_).sphere:
        raise PreconditionError(f'{complex_!r} is not a 2-sphere')
    colors = coloring.restrict(complex_.vertices)
    if not is_balanced(complex_, colors):
        raise PreconditionError('The coloring is not a proper 3-coloring')
    return colors


def _ridges(facet):
    facet = frozenset(facet)
    return [make_face(facet - {v}) for v in facet]


def reduce_balanced_2sphere(complex_, coloring, labels=None, budget=None):
    """
    Cross-flips taking a balanced 2-sphere to C_2.

    The cone over Δ is a shellable 3-ball with boundary Δ. Its apex takes color 3,
    so the coloring already covers the cone. Walking a shelling of the diamond of
    the cone, each step replaces the pieces of the faces the new cell attaches
    along by the pieces of its other faces; read backwards this walks Δ to C_2.
    """
    started = time.monotonic()
    colors = _require_balanced_sphere(complex_, coloring)
    used = sorted(set(colors.assignment.values()))
    normal = Coloring({v: used.index(c) for v, c in colors.assignment.items()}, 3)
    labels = labels or LabelFactory(complex_.vertex_set)
    labels.reserve(complex_.vertex_set)

    apex = labels.fresh()
    cone = complex_.cone(apex)
    anchored = complex_.union(SimplicialComplex([[apex]]))
    extension = extend_coloring(RelativeComplex(cone, anchored), normal.extend({apex: 3}, 4), 4, labels)
    if extension.complex != cone:
        raise ConsistencyError('Coloring the cone should not subdivide it')
    sphere_order = find_shelling(complex_, budget=budget)
    if sphere_order is None:
        raise ShellingError(f'{complex_!r} is not shellable')
    order = [make_face(tuple(f) + (apex,)) for f in sphere_order.facets]
    if verify_shelling(cone, order) is None:
        raise ConsistencyError('Coning a shelling did not give a shelling')

    cells = diamond(cone, extension.coloring)
    cross = cross_polytope_boundary(2)
    counts = Counter(_ridges(order[0]))
    current = cells.image(_ridges(order[0]))
    current_colors = cells.coloring.restrict(current.vertices)
    if find_isomorphism(current, cross) is None:
        raise ConsistencyError('The first cell boundary is not a cross-polytope')

    states = [current]
    results = []
    certificates = []
    for step, facet in enumerate(order[1:], start=1):
        ridges = _ridges(facet)
        attached = [r for r in ridges if counts[r] == 1]
        opened = [r for r in ridges if counts[r] == 0]
        boundary = cells.cell_boundary(facet)
        placement = find_isomorphism(cross, boundary)
        if placement is None:
            raise ConsistencyError(f'Cell {format_face(facet)} is not a cross-polytope')
        back = placement.inverse().vertex_map
        removed, added = cells.image(attached), cells.image(opened)
        template = make_template(removed.relabel(back), added.relabel(back), 'basic', budget=budget)
        move = CrossFlipMove(
            template,
            Isomorphism({v: placement(v) for v in template.D.vertices}),
            Isomorphism({v: placement(v) for v in template.interior_vertices}),
        )
        try:
            result = apply_cross_flip(current, move, coloring=current_colors)
        except InapplicableMoveError as exc:
            raise ConsistencyError(f'Step {step} is not a cross-flip: {exc.message}') from exc
        counts.update(ridges)
        expected = cells.image([r for r, c in counts.items() if c == 1])
        if result.complex != expected:
            raise ConsistencyError(f'Step {step} does not reach the next boundary')
        for v in result.complex.vertices:
            if result.coloring[v] != cells.coloring[v]:
                raise ConsistencyError(f'Step {step} transported a wrong color to {v}')
        certificates.append({
            'step': step,
            'shape': list(template.shape),
            'induced': True,
            'shellable': True,
            'co_shellable': True,
            'balanced': is_balanced(result.complex, result.coloring),
            'sphere': bool(classify(result.complex).sphere),
        })
        results.append(result)
        states.append(result.complex)
        current, current_colors = result.complex, result.coloring

    if current != complex_:
        raise ConsistencyError('The diamond walk did not end at the input sphere')
    report = ReductionReport(
        mode='balanced',
        start=complex_,
        end=states[0],
        moves=[result.inverse for result in reversed(results)],
        intermediates=[canonical_digest(state) for state in reversed(states)],
        certificates=[dict(c, step=i) for i, c in enumerate(reversed(certificates), start=1)],
        start_coloring=colors,
    )
    _, report.end_coloring = replay(report)
    report.statistics = {
        'steps': len(report.moves),
        'facets_start': len(complex_),
        'facets_end': len(report.end),
    }
    logger.info(
        f'Reduced {complex_!r} to C_2 with {len(report.moves)} cross-flips '
        f'in {time.monotonic() - started:.2f}s')
    return report


# ============================================================================
# HEURISTIC SEARCH
# ============================================================================

def _require_manifold(complex_):
    if not is_closed_pseudomanifold(complex_):
        raise PreconditionError(f'{complex_!r} is not a closed pseudomanifold')
    if complex_.dim == 2 and not classify(complex_).surface:
        raise PreconditionError(f'{complex_!r} is not a closed surface')
    if complex_.dim >= 3:
        logger.warning('Manifold check above dimension 2 only covers the pseudomanifold condition')


def _matches(current, target):
    return len(current) == len(target) and find_isomorphism(current, target) is not None


def _anneal(complex_, state, propose, apply, certify, target, objective, budget, seed, temperature, decay, mode):
    started = time.monotonic()
    rng = random.Random(seed)
    heat = temperature
    current = complex_
    moves, certificates = [], []
    intermediates = [canonical_digest(complex_)]
    attempts = 0
    while len(moves) < budget and attempts < budget * 10:
        if target is not None and _matches(current, target):
            break
        candidates = propose(current)
        if not candidates:
            logger.info('No moves available; stopping at a local minimum')
            break
        attempts += 1
        move = rng.choice(candidates)
        after, applied, new_state, certificate = apply(current, move, state)
        delta = objective(after) - objective(current)
        if delta <= 0 or rng.random() < math.exp(-delta / heat):
            certify(current, after, new_state, certificate)
            current, state = after, new_state
            moves.append(applied)
            certificate['step'] = len(moves)
            certificates.append(certificate)
            intermediates.append(canonical_digest(current))
        heat = max(heat * decay, 1e-12)
    success = target is not None and _matches(current, target)
    if not success:
        logger.warning(f'{mode} search stopped after {len(moves)} moves without reaching the target')
    statistics = {
        'steps': len(moves),
        'attempts': attempts,
        'facets_start': len(complex_),
        'facets_end': len(current),
    }
    logger.info(
        f'{mode} search: {len(moves)} moves, {attempts} proposals, '
        f'{time.monotonic() - started:.2f}s, success={success}')
    return current, state, moves, certificates, intermediates, success, statistics


def heuristic_reduce(complex_, coloring=None, catalog=None, objective=None, budget=None, seed=None,
                     temperature=None, decay=None, limit=None):
    """
    Simulated annealing over certified cross-flips, minimizing ``objective`` (facet count).

    Succeeds on reaching a complex isomorphic to C_d; otherwise the report holds
    the local minimum reached with ``success`` False.
    """
    _require_manifold(complex_)
    d = complex_.dim
    if coloring is None:
        coloring = find_proper_coloring(complex_, d + 1)
        if coloring is None:
            raise PreconditionError(f'{complex_!r} is not balanced')
    colors = coloring.restrict(complex_.vertices)
    if not is_balanced(complex_, colors):
        raise PreconditionError('The coloring is not balanced')
    catalog = catalog if catalog is not None else enumerate_cross_flip_templates(d, 'general')
    objective = objective or len
    budget = resolve(budget, 'TOPOLOGY_REDUCTION_BUDGET')
    seed = resolve(seed, 'TOPOLOGY_DEFAULT_SEED')
    temperature = resolve(temperature, 'TOPOLOGY_ANNEALING_TEMPERATURE')
    decay = resolve(decay, 'TOPOLOGY_ANNEALING_DECAY')
    labels = LabelFactory(complex_.vertex_set)
    euler = complex_.f_vector.euler_characteristic

    def propose(current):
        return available_cross_flips(current, catalog, limit=limit)

    def apply(current, move, state):
        result = apply_cross_flip(current, move, coloring=state, labels=labels)
        return result.complex, result.move, result.coloring, {'shape': list(move.template.shape)}

    def certify(before, after, state, certificate):
        certificate['euler_characteristic'] = after.f_vector.euler_characteristic
        certificate['balanced'] = is_balanced(after, state)
        if certificate['euler_characteristic'] != euler or not certificate['balanced']:
            raise ConsistencyError('A cross-flip changed χ or broke balancedness')
        if d == 2:
            certificate['surface'] = bool(classify(after).surface)
            if not certificate['surface']:
                raise ConsistencyError('A cross-flip left the class of closed surfaces')

    end, end_colors, moves, certificates, intermediates, success, statistics = _anneal(
        complex_, colors, propose, apply, certify, cross_polytope_boundary(d), objective,
        budget, seed, temperature, decay, 'Cross-flip')
    return ReductionReport(
        mode='heuristic', start=complex_, end=end, moves=moves, intermediates=intermediates,
        certificates=certificates, seed=seed, success=success, statistics=statistics,
        start_coloring=colors, end_coloring=end_colors)


def bistellar_reduce(complex_, budget=None, seed=None, objective=None, temperature=None, decay=None):
    """Simulated annealing over bistellar flips towards the boundary of a simplex."""
    _require_manifold(complex_)
    d = complex_.dim
    objective = objective or len
    budget = resolve(budget, 'TOPOLOGY_REDUCTION_BUDGET')
    seed = resolve(seed, 'TOPOLOGY_DEFAULT_SEED')
    temperature = resolve(temperature, 'TOPOLOGY_ANNEALING_TEMPERATURE')
    decay = resolve(decay, 'TOPOLOGY_ANNEALING_DECAY')
    labels = LabelFactory(complex_.vertex_set)
    euler = complex_.f_vector.euler_characteristic
    target = SimplicialComplex.simplex_boundary([f'x{i}' for i in range(d + 2)])

    def propose(current):
        return available_bistellar_flips(current, labels=labels)

    def apply(current, move, state):
        return apply_bistellar_flip(current, move), move, None, {'kind': move.kind}

    def certify(before, after, state, certificate):
        labels.reserve(after.vertex_set)
        certificate['euler_characteristic'] = after.f_vector.euler_characteristic
        if certificate['euler_characteristic'] != euler:
            raise ConsistencyError('A bistellar flip changed χ')
        if d == 2:
            certificate['surface'] = bool(classify(after).surface)
            if not certificate['surface']:
                raise ConsistencyError('A bistellar flip left the class of closed surfaces')

    end, _, moves, certificates, intermediates, success, statistics = _anneal(
        complex_, None, propose, apply, certify, target, objective, budget, seed, temperature, decay, 'Bistellar')
    return ReductionReport(
        mode='bistellar', start=complex_, end=end, moves=moves, intermediates=intermediates,
        certificates=certificates, seed=seed, success=success, statistics=statistics)


# ============================================================================
# COLOR-PRESERVING FLIPS
# ============================================================================

def _colored_shelling_path(complex_, colors, m, labels, budget=None):
    """Shell a properly m-colored cone over Δ; returns (ShellingPath, ball coloring)."""
    apex = labels.fresh()
    cone = complex_.cone(apex)
    free = [c for c in range(m) if c not in set(colors.assignment.values())]
    if free:
        anchored = complex_.union(SimplicialComplex([[apex]]))
        extension = extend_coloring(
            RelativeComplex(cone, anchored), colors.extend({apex: free[0]}, m), m, labels)
    else:
        extension = extend_coloring(RelativeComplex(cone, complex_), colors, m, labels)
    sphere_order = find_shelling(complex_, budget=budget)
    if sphere_order is None:
        raise ShellingError(f'{complex_!r} is not shellable')
    cone_order = [make_face(tuple(f) + (apex,)) for f in sphere_order.facets]
    if extension.log:
        _, origin = replay_with_origins(cone, extension.subdivision_log())
        blocks = [[f for f, source in origin.items() if source == g] for g in cone_order]
        order = shell_in_blocks(extension.complex, blocks, budget=budget)
        if order is None:
            order = find_shelling(extension.complex, budget=budget)
        if order is None:
            raise ShellingError('The colored cone could not be shelled')
    else:
        order = verify_shelling(cone, cone_order)
        if order is None:
            raise ConsistencyError('Coning a shelling did not give a shelling')
    path = shelling_path(extension.complex, order)
    if path.boundaries[-1] != complex_:
        raise ConsistencyError('The colored cone does not have the sphere as boundary')
    return path, extension.coloring


def _walk(current, move, ball_colors):
    after = apply_bistellar_flip(current, move)
    created = {v: ball_colors[v] for v in after.vertex_set - current.vertex_set}
    return after, created


def align_simplex_boundaries(current, colors, target, target_colors, labels):
    """
    Flips turning one colored simplex boundary into another, labels and colors included.

    Each round subdivides the facet opposite a misplaced vertex with a new vertex of
    the wanted color and label (or a temporary label while that one is taken), then
    welds the misplaced vertex away.
    """
    colors = dict(colors)
    wanted = {target_colors[v]: v for v in target.vertices}
    if len(wanted) != len(target.vertices):
        raise ColoringError('The target coloring is not proper')
    steps = []
    for _ in range(4 * len(target.vertices) + 4):
        if current == target and all(colors[v] == target_colors[v] for v in target.vertices):
            return current, steps
        pending = [v for v in current.vertices if wanted.get(colors[v]) != v]
        plans = []
        for v in pending:
            if colors[v] in wanted:
                color = colors[v]
            else:
                color = min(c for c in wanted if c not in {colors[u] for u in current.vertices})
            plans.append((v, wanted[color], color))
        free = [plan for plan in plans if plan[1] not in current.vertex_set]
        vertex, label, color = free[0] if free else plans[0]
        if label in current.vertex_set:
            label = labels.fresh()
        labels.reserve([label])
        opposite = make_face(current.vertex_set - {vertex})
        grow = FlipMove(opposite, (label,))
        current = apply_bistellar_flip(current, grow)
        colors[label] = color
        steps.append((grow, {label: color}))
        weld = FlipMove((vertex,), opposite)
        current = apply_bistellar_flip(current, weld)
        del colors[vertex]
        steps.append((weld, {}))
    raise ConsistencyError('Aligning simplex boundaries did not converge')


def colored_connect(first, first_coloring, second, second_coloring, m=None, budget=None):
    """
    Color-preserving bistellar flips from one properly m-colored 2-sphere to another (m >= 4).

    New vertices are colored when created and no vertex is ever recolored.
    """
    m = m if m is not None else max(first_coloring.palette, second_coloring.palette, 4)
    if m < 4:
        raise PreconditionError(f'Color-preserving connections need m >= 4, got {m}', m=m)
    coloring_pairs = []
    for complex_, coloring in ((first, first_coloring), (second, second_coloring)):
        if complex_.dim != 2 or not classify(complex_).sphere:
            raise PreconditionError(f'{complex_!r} is not a 2-sphere')
        colors = coloring.restrict(complex_.vertices)
        if not is_proper(complex_, colors) or any(c >= m for c in colors.assignment.values()):
            raise ColoringError(f'The coloring of {complex_!r} is not a proper {m}-coloring')
        coloring_pairs.append(Coloring(colors.assignment, m))
    first_colors, second_colors = coloring_pairs

    labels = LabelFactory(first.vertex_set | second.vertex_set)
    path_in, ball_in = _colored_shelling_path(first, first_colors, m, labels, budget)
    path_out, ball_out = _colored_shelling_path(second, second_colors, m, labels, budget)

    steps = []
    current = first
    for move in reversed(path_in.moves):
        inverse = move.inverse()
        after, created = _walk(current, inverse, ball_in)
        steps.append((inverse, created))
        current = after
    if current != path_in.boundaries[0]:
        raise ConsistencyError('Unshelling did not reach the first cell boundary')
    present = {v: ball_in[v] for v in current.vertices}
    target = path_out.boundaries[0]
    current, aligned = align_simplex_boundaries(
        current, present, target, {v: ball_out[v] for v in target.vertices}, labels)
    steps.extend(aligned)
    for move in path_out.moves:
        after, created = _walk(current, move, ball_out)
        steps.append((move, created))
        current = after
    if current != second:
        raise ConsistencyError('The colored path does not end at the second sphere')

    report = ReductionReport(
        mode='colored', start=first, end=second,
        moves=[move for move, _ in steps],
        certificates=[
            {'step': i, 'kind': move.kind, 'new_colors': created, 'proper': True}
            for i, (move, created) in enumerate(steps, start=1)
        ],
        start_coloring=first_colors, end_coloring=second_colors,
    )
    report.intermediates = [canonical_digest(state) for state in _states(report)]
    replay(report)
    report.statistics = {'steps': len(steps), 'palette': m}
    logger.info(f'Colored connection with {len(steps)} flips (m={m})')
    return report


# ============================================================================
# CONNECTING BALANCED SURFACES
# ============================================================================

def _report_labels(report):
    seen = set()
    for state in _states(report):
        seen |= state.vertex_set
    return seen


def _reverse_moves(report):
    return [move.inverse() for move in reversed(report.moves)]


def splice(first_report, second_report, labels=None):
    """
    Join Δ → X with the reverse of Γ → Y through an isomorphism Y → X.

    Labels of the second path are renamed where they would clash with the first.
    """
    meet, other = first_report.end, second_report.end
    if canonical_form(meet) != canonical_form(other):
        raise ConsistencyError('The two reductions end at different complexes')
    bridge = None
    if first_report.end_coloring is not None and second_report.end_coloring is not None:
        bridge = find_isomorphism(
            other, meet,
            colors_first=second_report.end_coloring.assignment,
            colors_second=first_report.end_coloring.assignment)
        if bridge is None:
            logger.warning('No color-preserving isomorphism between the meeting complexes; splicing uncolored')
    bridge = bridge or find_isomorphism(other, meet)

    taken_first = _report_labels(first_report)
    labels = labels or LabelFactory(taken_first | _report_labels(second_report))
    labels.reserve(taken_first | _report_labels(second_report))
    renaming = dict(bridge.vertex_map)
    images = set(renaming.values())
    for label in sorted(_report_labels(second_report) - set(renaming), key=label_key):
        renaming[label] = labels.fresh() if label in taken_first or label in images else label
        images.add(renaming[label])

    backwards = [move.relabel(renaming) for move in _reverse_moves(second_report)]
    end = second_report.start.relabel(renaming)
    report = ReductionReport(
        mode=f'{first_report.mode}+{second_report.mode}',
        start=first_report.start,
        end=end,
        moves=list(first_report.moves) + backwards,
        certificates=list(first_report.certificates) + [
            dict(c, step=len(first_report.moves) + i)
            for i, c in enumerate(reversed(second_report.certificates), start=1)],
        seed=first_report.seed,
        success=first_report.success and second_report.success,
        start_coloring=first_report.start_coloring,
        relabeling={k: v for k, v in renaming.items() if k in second_report.start.vertex_set and k != v},
    )
    report.intermediates = [canonical_digest(state) for state in _states(report)]
    _, report.end_coloring = replay(report)
    report.statistics = {
        'steps': len(report.moves),
        'first_steps': len(first_report.moves),
        'second_steps': len(second_report.moves),
    }
    return report


def connect_balanced(first, first_coloring, second, second_coloring, budget=None, seed=None):
    """
    Cross-flips from one balanced closed surface to another of the same PL type.

    Spheres go through C_2 constructively; other surfaces meet in the middle with
    two annealing searches, which may fail within the budget.
    """
    reports = []
    for complex_, coloring in ((first, first_coloring), (second, second_coloring)):
        summary = classify(complex_)
        if complex_.dim != 2 or not summary.surface or not summary.connected:
            raise PreconditionError(f'{complex_!r} is not a connected closed surface')
        if not is_balanced(complex_, coloring.restrict(complex_.vertices)):
            raise PreconditionError(f'{complex_!r} is not balanced under the given coloring')
        reports.append(summary)
    if (reports[0].euler_characteristic, reports[0].orientable) != (
            reports[1].euler_characteristic, reports[1].orientable):
        raise PreconditionError(
            'The surfaces have different PL types',
            euler=[r.euler_characteristic for r in reports],
            orientable=[r.orientable for r in reports])

    labels = LabelFactory(first.vertex_set | second.vertex_set)
    if reports[0].sphere:
        there = reduce_balanced_2sphere(first, first_coloring, labels=labels)
        back = reduce_balanced_2sphere(second, second_coloring, labels=labels)
    else:
        seed = resolve(seed, 'TOPOLOGY_DEFAULT_SEED')
        logger.warning('Connecting surfaces other than spheres relies on a heuristic search')
        there = heuristic_reduce(first, first_coloring, budget=budget, seed=seed)
        back = heuristic_reduce(second, second_coloring, budget=budget, seed=seed + 1)
        if canonical_form(there.end) != canonical_form(back.end):
            raise BudgetExhaustedError(
                'The two searches did not meet within the budget',
                first_end=len(there.end), second_end=len(back.end))
    report = splice(there, back, labels=labels)
    report.mode = 'connect'
    report.seed = there.seed
    return report
