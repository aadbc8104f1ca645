"""
Search over Reidemeister moves

Breadth-first equivalence search with canonical-form states, seeded
random walks for corpus generation, and single-step connection between
two given codes.
"""

import logging
import random
from itertools import permutations
from typing import Dict, Iterable, List, Optional, Tuple

from .codes import LinkCode, canonical_key, same_diagram
from .config import get_settings
from .errors import InapplicableMoveError, PreconditionError
from .moves import (
    Move,
    addition_moves,
    apply_move,
    deletion_moves,
    enumerate_moves,
)
from .sequence import DiagramSequence


logger = logging.getLogger(__name__)

Step = Tuple[Move, LinkCode]


def bfs_equivalence(
    a: LinkCode,
    b: LinkCode,
    max_crossings: int,
    max_depth: int,
    strict_r2: Optional[bool] = None,
) -> Optional[DiagramSequence]:
    """
    Shortest move sequence from a to b within bounds.

    States are canonical forms; each state keeps the concrete code it was
    first reached by, and moves are enumerated on that code. A SAME step
    closes the path when the last code only matches b up to symmetry.

    Frontiers are expanded in discovery order and moves in enumerate_moves
    order, so among shortest paths the one whose move list comes first in
    that order wins.

    Args:
        a: Start code
        b: Target code
        max_crossings: No intermediate diagram exceeds this many crossings
        max_depth: Longest sequence considered (SAME steps not counted)
        strict_r2: Strict unsigned R2 reading; defaults to the settings

    Returns:
        The sequence, or None when nothing is found within bounds

    Raises:
        PreconditionError: An endpoint already exceeds max_crossings
    """
    if max_crossings < max(a.crossings, b.crossings):
        raise PreconditionError(
            f"max_crossings={max_crossings} is below the endpoint crossing counts",
            max_crossings=max_crossings,
        )
    if a == b:
        return DiagramSequence.single(a)
    target = canonical_key(b)
    start = canonical_key(a)
    if start == target:
        return DiagramSequence(codes=[a, b], moves=[Move.same()])

    parents: Dict[tuple, Tuple[Optional[tuple], Optional[Move], LinkCode]] = {start: (None, None, a)}
    frontier = [start]
    for depth in range(1, max_depth + 1):
        following = []
        for key in frontier:
            code = parents[key][2]
            for move, result in enumerate_moves(code, max_crossings, strict_r2):
                found = canonical_key(result)
                if found in parents:
                    continue
                parents[found] = (key, move, result)
                if found == target:
                    logger.info(f"Equivalence found at depth {depth} after {len(parents)} states")
                    return _path(parents, found, b)
                following.append(found)
        frontier = following
        logger.debug(f"Depth {depth}: {len(frontier)} new states")
        if not frontier:
            break
    logger.info(f"No equivalence within bounds ({len(parents)} states explored)")
    return None


def _path(parents: Dict, key: tuple, b: LinkCode) -> DiagramSequence:
    codes: List[LinkCode] = []
    moves: List[Move] = []
    while key is not None:
        parent, move, code = parents[key]
        codes.append(code)
        if move is not None:
            moves.append(move)
        key = parent
    codes.reverse()
    moves.reverse()
    if codes[-1] != b:
        codes.append(b)
        moves.append(Move.same())
    return DiagramSequence(codes=codes, moves=moves)


def random_walk(
    code: LinkCode,
    length: int,
    seed: int,
    max_crossings: Optional[int] = None,
    strict_r2: Optional[bool] = None,
) -> DiagramSequence:
    """
    Seeded walk of ``length`` moves drawn uniformly from enumerate_moves.

    Args:
        max_crossings: Addition cap; defaults to the settings

    Raises:
        PreconditionError: length is negative, or some diagram has no move
            within the cap
    """
    if length < 0:
        raise PreconditionError(f"length must be >= 0, got {length}")
    cap = get_settings().max_crossings if max_crossings is None else max_crossings
    rng = random.Random(seed)
    sequence = DiagramSequence.single(code)
    current = code
    for step in range(length):
        options = enumerate_moves(current, cap, strict_r2)
        if not options:
            raise PreconditionError(f"no move applies at step {step} within {cap} crossings")
        move, current = rng.choice(options)
        sequence = sequence.extended(move, current)
    logger.debug(f"Random walk seed={seed}: {length} moves ending at {current}")
    return sequence


def round_trip_walk(
    code: LinkCode,
    length: int,
    seed: int,
    max_crossings: Optional[int] = None,
    strict_r2: Optional[bool] = None,
) -> DiagramSequence:
    """A seeded walk followed by the same walk undone; both ends are ``code``"""
    forward = random_walk(code, length, seed, max_crossings, strict_r2)
    return forward.concat(forward.reversed(strict_r2))


def _label_orders(before: LinkCode, after: LinkCode) -> List[Optional[Tuple[int, ...]]]:
    fresh = [label for label in after.labels if label not in before.labels]
    if len(fresh) in (1, 2):
        return [tuple(order) for order in permutations(fresh)]
    return [None]


def connect(
    a: LinkCode,
    b: LinkCode,
    families: Optional[Iterable[str]] = None,
    strict_r2: Optional[bool] = None,
) -> Optional[List[Step]]:
    """
    Join two codes by at most one move.

    Tries, in order: equality (no steps), one move landing exactly on b,
    one move landing on b up to symmetry followed by SAME, and SAME alone
    when a and b agree up to symmetry.

    Args:
        a: First code
        b: Second code
        families: Allowed move families among 'R1', 'R2', 'R3'; all by default

    Returns:
        Steps (move, resulting code) ending at b, or None
    """
    if a == b:
        return []
    allowed = set(families) if families is not None else {"R1", "R2", "R3"}
    candidates: List[Move] = [m for m in deletion_moves(a, strict_r2) if m.family in allowed]
    if b.crossings > a.crossings:
        for labels in _label_orders(a, b):
            for move in addition_moves(a, b.crossings, strict_r2, new_labels=labels):
                if move.family in allowed:
                    candidates.append(move)

    near: Optional[Step] = None
    for move in candidates:
        try:
            result = apply_move(a, move, strict_r2)
        except InapplicableMoveError:
            continue
        if result == b:
            return [(move, b)]
        if near is None and result.crossings == b.crossings and same_diagram(result, b):
            near = (move, result)
    if near is not None:
        return [near, (Move.same(), b)]
    if same_diagram(a, b):
        return [(Move.same(), b)]
    return None
