"""
Carrying cycles across a move

Passages at crossings the move does not touch are kept (their halves
follow the position map of the move). Between two kept passages the walk
is re-threaded through the move site of the new diagram: straight ahead
when that reaches the next kept passage, otherwise by the shortest route
through site crossings.
"""

import logging
from collections import deque
from typing import Dict, List, Optional, Set

from .codes import LinkCode
from .cycles import CycleWalk, check_walk
from .errors import NotTransportableError
from .graph import FramedGraph, Passage, to_framed_graph
from .moves import Move, MoveKind, apply_move_with_map, r3_triangle


logger = logging.getLogger(__name__)


def _site_labels(before: LinkCode, after: LinkCode, move: Move) -> Set[int]:
    if move.kind == MoveKind.SAME:
        return set()
    if move.is_addition:
        return set(after.labels) - set(before.labels)
    return set(move.labels)


def _straight(graph: FramedGraph, enter: int, target: int, site: Set[int]) -> Optional[List[Passage]]:
    passages: List[Passage] = []
    for _ in range(len(graph.half_vertex) + 1):
        if enter == target:
            return passages
        if graph.half_vertex[enter] not in site:
            return None
        exit = graph.opposite[enter]
        passages.append((enter, exit))
        enter = graph.mate[exit]
    return None


def _shortest(graph: FramedGraph, enter: int, target: int, site: Set[int]) -> Optional[List[Passage]]:
    if enter == target:
        return []
    queue = deque([enter])
    previous: Dict[int, Optional[Passage]] = {enter: None}
    while queue:
        current = queue.popleft()
        if graph.half_vertex[current] not in site:
            continue
        exits = [graph.opposite[current]] + sorted(
            h for h in graph.halves_at(graph.half_vertex[current])
            if h not in (current, graph.opposite[current])
        )
        for exit in exits:
            following = graph.mate[exit]
            if following in previous:
                continue
            previous[following] = (current, exit)
            if following == target:
                path: List[Passage] = []
                node = following
                while previous[node] is not None:
                    passage = previous[node]
                    path.append(passage)  # type: ignore[arg-type]
                    node = passage[0]  # type: ignore[index]
                return list(reversed(path))
            queue.append(following)
    return None


def _edge_cycle(graph: FramedGraph, edges: List[int]) -> CycleWalk:
    """The closed walk along a set of edges meeting every vertex twice"""
    chosen = set(edges)
    start = graph.edges[edges[0]][1]
    passages: List[Passage] = []
    enter = start
    for _ in range(len(edges)):
        vertex = graph.half_vertex[enter]
        exit = next(
            h for h in graph.halves_at(vertex)
            if h != enter and graph.edge_of[h] in chosen and graph.edge_of[h] != graph.edge_of[enter]
        )
        passages.append((enter, exit))
        enter = graph.mate[exit]
    return CycleWalk(passages=tuple(passages))


def transport_cycle(code_before: LinkCode, move: Move, walk: CycleWalk) -> CycleWalk:
    """
    The walk on apply_move(code_before, move) corresponding to ``walk``.

    Raises:
        InapplicableMoveError: The move does not apply
        NotTransportableError: The walk turns at a deleted crossing, or
            lies inside the site in a way the move does not carry
    """
    before = to_framed_graph(code_before)
    check_walk(before, walk)
    after_code, positions = apply_move_with_map(code_before, move)
    after = to_framed_graph(after_code)
    site = _site_labels(code_before, after_code, move)

    def carry(half: int) -> int:
        return 2 * positions[half // 2] + half % 2

    anchors = [p for p in walk.passages if before.half_vertex[p[0]] not in site]
    if not walk.passages:
        return CycleWalk(origin=walk.origin)

    if not anchors:
        if move.is_deletion and all(before.is_transversal(*p) for p in walk.passages):
            return CycleWalk(origin=walk.origin)
        if move.kind == MoveKind.R3:
            triangle = r3_triangle(code_before, move)
            # edge p is the arc leaving position p; R3 keeps positions in place
            sides = sorted(pair[0] for pair in triangle)
            used = sorted(before.edge_of[exit] for _, exit in walk.passages)
            if used == sides:
                cycle = _edge_cycle(after, sides)
                return CycleWalk(passages=cycle.passages, origin=walk.origin)
        raise NotTransportableError(
            f"walk lies inside the site of {move} and has no counterpart", move=str(move)
        )

    carried: List[Passage] = []
    for index, (enter, exit) in enumerate(anchors):
        carried.append((carry(enter), carry(exit)))
        start = after.mate[carry(exit)]
        target = carry(anchors[(index + 1) % len(anchors)][0])
        segment = _straight(after, start, target, site)
        if segment is None:
            segment = _shortest(after, start, target, site)
        if segment is None:
            raise NotTransportableError(
                f"walk cannot be rerouted across {move} after passage {index}", move=str(move)
            )
        carried.extend(segment)
    result = CycleWalk(passages=tuple(carried), origin=walk.origin)
    check_walk(after, result)
    logger.debug(f"Transported walk of {len(walk)} passages to {len(result)} across {move}")
    return result
