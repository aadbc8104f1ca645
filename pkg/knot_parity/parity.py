"""
Parity evaluation and the parity axioms

Homological parity h of a cycle in class G is its transversal passage
count mod 2. A crossing parity P agrees with h when, for every cycle, h
equals the sum of P over the crossings where the cycle rotates; checking
the generating family suffices because both sides are additive.
"""

import logging
from collections import Counter
from typing import Callable, Dict, List, Optional

from .codes import LinkCode, serialize_code
from .cycles import CycleWalk, generating_family, rotation_vertices, transversal_count
from .errors import NotInGError, PreconditionError
from .graph import FramedGraph, unicursal_components, vertex_components
from .interfaces import ParityAssignment, ParityRule
from .moves import Move, MoveKind, apply_move_with_map, move_to_text
from .reports import AxiomReport
from .rules import ComponentParity, GaussianParity


logger = logging.getLogger(__name__)

HomologicalParity = Callable[[FramedGraph, CycleWalk], int]


def gaussian_parity_knot(code: LinkCode) -> ParityAssignment:
    """
    Gaussian parity of a single-circle code.

    Raises:
        NotApplicableError: The code has more than one circle
    """
    return GaussianParity().assign(code)


def component_parity(code: LinkCode) -> ParityAssignment:
    """
    Mixed crossings odd, self-crossings even.

    Raises:
        NotApplicableError: The code has a single circle
    """
    return ComponentParity().assign(code)


def in_class_G(code: LinkCode) -> bool:
    """Every circle carries an even number of mixed-crossing endpoints"""
    circle_of: Dict[int, List[int]] = {}
    for index, circle in enumerate(code.circles):
        for token in circle:
            circle_of.setdefault(token.label, []).append(index)
    endpoints: Counter = Counter()
    for circles in circle_of.values():
        if circles[0] != circles[1]:
            endpoints.update(circles)
    return all(count % 2 == 0 for count in endpoints.values())


def graph_in_class_G(graph: FramedGraph) -> bool:
    """in_class_G for a framed graph, by unicursal components"""
    endpoints: Counter = Counter()
    for i, j in vertex_components(graph, unicursal_components(graph)).values():
        if i != j:
            endpoints.update((i, j))
    return all(count % 2 == 0 for count in endpoints.values())


def transversal_parity(graph: FramedGraph, walk: CycleWalk) -> int:
    """Transversal passages mod 2, defined for every walk"""
    return transversal_count(graph, walk) % 2


def gaussian_homological_parity(graph: FramedGraph, walk: CycleWalk) -> int:
    """
    Gaussian homological parity of a walk.

    Raises:
        NotInGError: Some component meets the others an odd number of times
    """
    if not graph_in_class_G(graph):
        raise NotInGError("gaussian homological parity needs a diagram in class G")
    return transversal_parity(graph, walk)


def rotation_sum(assignment: ParityAssignment, graph: FramedGraph, walk: CycleWalk) -> int:
    return sum(assignment[v] for v in rotation_vertices(graph, walk)) % 2


def disagreements(
    assignment: ParityAssignment,
    graph: FramedGraph,
    h: Optional[HomologicalParity] = None,
) -> List[CycleWalk]:
    """Family members where h differs from the rotation sum of the assignment"""
    h = h or gaussian_homological_parity
    missing = set(graph.vertices) - set(assignment.values)
    if missing:
        raise PreconditionError(f"assignment misses crossings {sorted(missing)}")
    return [
        walk for walk in generating_family(graph)
        if h(graph, walk) != rotation_sum(assignment, graph, walk)
    ]


def agrees(
    assignment: ParityAssignment,
    graph: FramedGraph,
    h: Optional[HomologicalParity] = None,
) -> bool:
    """
    Whether a crossing parity agrees with a homological parity.

    Args:
        assignment: Crossing parity of the diagram
        graph: Its framed graph
        h: Homological parity; Gaussian by default. Errors it raises abort
            the check.
    """
    return not disagreements(assignment, graph, h)


def verify_parity_axioms(
    rule: ParityRule, code: LinkCode, move: Move, strict_r2: Optional[bool] = None
) -> AxiomReport:
    """
    Check the parity axioms for one move.

    Clauses: R1 (the kink crossing is even), R2 (the bigon crossings agree),
    R3-sum (the triangle sums to 0 on both sides), R3-correspondence (each
    triangle crossing keeps its parity), spectator (every other crossing
    keeps its parity).

    Raises:
        InapplicableMoveError: The move does not apply
        NotApplicableError: The rule does not apply before or after
    """
    after, _ = apply_move_with_map(code, move, strict_r2)
    before_values = rule.assign(code).values
    after_values = rule.assign(after).values
    report = AxiomReport(rule=rule.name, code=serialize_code(code), move=move_to_text(move))

    if move.is_addition:
        site = sorted(set(after_values) - set(before_values))
    elif move.kind == MoveKind.SAME:
        site = []
    else:
        site = sorted(move.labels)
    site_text = ",".join(str(label) for label in site)
    values = after_values if move.is_addition else before_values

    if move.kind in (MoveKind.R1_ADD, MoveKind.R1_DEL):
        report.add_check("R1", site_text, _pick(before_values, site), _pick(after_values, site),
                         values[site[0]] == 0)
    elif move.kind in (MoveKind.R2_ADD, MoveKind.R2_DEL):
        report.add_check("R2", site_text, _pick(before_values, site), _pick(after_values, site),
                         values[site[0]] == values[site[1]])
    elif move.kind == MoveKind.R3:
        before_sum = sum(before_values[label] for label in site) % 2
        after_sum = sum(after_values[label] for label in site) % 2
        report.add_check("R3-sum", site_text, _pick(before_values, site), _pick(after_values, site),
                         before_sum == 0 and after_sum == 0)
        report.add_check("R3-correspondence", site_text, _pick(before_values, site),
                         _pick(after_values, site),
                         all(before_values[label] == after_values[label] for label in site))

    spectators = sorted((set(before_values) & set(after_values)) - set(site))
    report.add_check(
        "spectator", "others", _pick(before_values, spectators), _pick(after_values, spectators),
        all(before_values[label] == after_values[label] for label in spectators),
    )
    if not report.passed:
        logger.debug(f"Axiom failure for {rule.name} on {report.code} via {report.move}")
    return report


def _pick(values: Dict[int, int], labels: List[int]) -> Dict[int, int]:
    return {label: values[label] for label in labels if label in values}
