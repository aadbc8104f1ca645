"""
The map f and sequence repair

f deletes every odd crossing (makes it virtual, which a Gauss code does
not record). Iterating f with freshly computed parity reaches a core with
no odd crossings; the number of rounds is the filtration level.

Repair replaces every diagram of a sequence by its core. Consecutive cores
are then equal, equal up to symmetry (a detour at code level), or one move
apart; anything else is reported as a theorem-violation witness.
"""

import logging
from typing import Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from .atoms import orientability
from .codes import CodeKind, LinkCode, serialize_code
from .errors import (
    ConnectifyUnsupportedError,
    InapplicableMoveError,
    NotApplicableError,
    PreconditionError,
    TheoremViolationWitness,
)
from .graph import to_framed_graph, unicursal_components
from .interfaces import ParityAssignment, ParityRule
from .moves import Move, MoveKind, apply_move, move_to_text
from .reports import DiagramFinding, RepairReport, SequenceReport, StepVerdict
from .search import connect
from .sequence import DiagramSequence


logger = logging.getLogger(__name__)


class FiltrationResult(BaseModel):
    """
    Attributes:
        level: Rounds of f until no crossing is odd
        core: The f-stable diagram
        trace: code, f(code), ..., core
    """

    model_config = ConfigDict(frozen=True)

    level: int
    core: LinkCode
    trace: Tuple[LinkCode, ...]

    @model_validator(mode="after")
    def _check_trace(self) -> "FiltrationResult":
        if len(self.trace) != self.level + 1 or self.trace[-1] != self.core:
            raise ValueError("trace must run from the input to the core in level steps")
        return self

    def to_dict(self) -> Dict[str, object]:
        return {
            "level": self.level,
            "core": serialize_code(self.core),
            "trace": [serialize_code(code) for code in self.trace],
        }


# === f and the filtration ===

def map_f(code: LinkCode, assignment: ParityAssignment) -> LinkCode:
    """
    Delete every odd crossing.

    Raises:
        PreconditionError: The assignment does not cover exactly the
            crossings of the code
    """
    if set(assignment.values) != set(code.labels):
        raise PreconditionError(
            "assignment domain differs from the crossings of the code",
            missing=sorted(set(code.labels) - set(assignment.values)),
            extra=sorted(set(assignment.values) - set(code.labels)),
        )
    odd = set(assignment.odd_labels())
    if not odd:
        return code
    return LinkCode.trusted(
        code.kind, [[token for token in circle if token.label not in odd] for circle in code.circles]
    )


def filtration(code: LinkCode, rule: ParityRule) -> FiltrationResult:
    """
    Iterate f until every crossing is even.

    Raises:
        NotApplicableError: The rule stops applying at some iterate; the
            error carries the partial trace
    """
    trace = [code]
    current = code
    while True:
        reason = rule.unsupported_reason(current)
        if reason is not None:
            raise NotApplicableError(
                f"rule '{rule.name}' does not apply at level {len(trace) - 1}: {reason}",
                trace=[serialize_code(c) for c in trace],
            )
        assignment = rule.assign(current)
        if assignment.is_all_even():
            break
        current = map_f(current, assignment)
        trace.append(current)
    return FiltrationResult(level=len(trace) - 1, core=current, trace=tuple(trace))


def is_in_level(code: LinkCode, rule: ParityRule, n: int) -> bool:
    """Membership in A^n: the core is reached within n rounds of f"""
    return filtration(code, rule).level <= n


# === Connectification ===

def _shares_label(code: LinkCode, i: int, j: int) -> bool:
    return bool({t.label for t in code.circles[i]} & {t.label for t in code.circles[j]})


def _strip(code: LinkCode, fresh: set) -> LinkCode:
    return LinkCode.trusted(
        code.kind, [[t for t in circle if t.label not in fresh] for circle in code.circles]
    )


def _anchor_slot(augmented: LinkCode, original: LinkCode, circle: int) -> int:
    """Arc after the first original crossing of a circle, else its end or its empty slot"""
    slots = augmented.arc_slots()
    if original.circles[circle]:
        token = original.circles[circle][0]
        occurrence = original.positions_of(token.label).index(original.circle_starts()[circle])
        return augmented.positions_of(token.label)[occurrence]
    if not augmented.circles[circle]:
        return slots.index((circle, -1))
    return augmented.circle_starts()[circle] + len(augmented.circles[circle]) - 1


def _translate_slot(slot: int, original: LinkCode, augmented: LinkCode) -> int:
    circle, offset = original.arc_slots()[slot]
    if offset != -1:
        token = original.tokens[slot]
        occurrence = original.positions_of(token.label).index(slot)
        return augmented.positions_of(token.label)[occurrence]
    return _anchor_slot(augmented, original, circle)


def _default_labels(code: LinkCode, move: Move) -> Tuple[int, ...]:
    if move.labels:
        return move.labels
    top = max(code.labels, default=0)
    count = 1 if move.kind == MoveKind.R1_ADD else 2
    return tuple(top + k + 1 for k in range(count))


def connectify_sequence(seq: DiagramSequence, strict_r2: Optional[bool] = None) -> DiagramSequence:
    """
    Make every intermediate diagram's intersection graph connected.

    Circle 0 is joined by an R2 pair of fresh labels to every circle it does
    not meet in some diagram. The pairs are added at the start, carried
    through every move, and removed at the end, so the endpoints stay as
    given. Knot sequences and sequences that are already connected come
    back unchanged.

    Raises:
        ConnectifyUnsupportedError: A move of the sequence cannot be carried
            onto the augmented diagram
    """
    circles = len(seq.start.circles)
    needed = [
        k for k in range(1, circles)
        if any(not _shares_label(code, 0, k) for code in seq.codes)
    ]
    if circles == 1 or not needed:
        return seq

    top = max((max(code.labels, default=0) for code in seq.codes), default=0)
    fresh_pairs = [(top + 2 * n + 1, top + 2 * n + 2) for n in range(len(needed))]
    fresh = {label for pair in fresh_pairs for label in pair}
    virtual = {"over_first": True, "sign": "+"} if seq.start.kind == CodeKind.VIRTUAL else {}
    reverse = bool(strict_r2) and seq.start.kind == CodeKind.FREE

    result = DiagramSequence.single(seq.start)
    augmented = seq.start
    for k, pair in zip(needed, fresh_pairs):
        move = Move.r2_add(
            _anchor_slot(augmented, seq.start, 0),
            _anchor_slot(augmented, seq.start, k),
            labels=pair,
            reverse=reverse,
            **virtual,
        )
        augmented = apply_move(augmented, move, strict_r2)
        result = result.extended(move, augmented)

    for index, (before, move, after) in enumerate(seq.steps()):
        translated = _translate_move(move, before, augmented)
        try:
            following = apply_move(augmented, translated, strict_r2)
        except InapplicableMoveError as e:
            raise ConnectifyUnsupportedError(
                f"step {index}: {move_to_text(move)} does not apply next to the R2 template",
                index=index, cause=e.message,
            )
        if _strip(following, fresh) != after:
            raise ConnectifyUnsupportedError(
                f"step {index}: {move_to_text(move)} does not commute with the R2 template",
                index=index,
            )
        result = result.extended(translated, following)
        augmented = following

    for pair in reversed(fresh_pairs):
        move = Move.r2_del(*pair)
        try:
            augmented = apply_move(augmented, move, strict_r2)
        except InapplicableMoveError as e:
            raise ConnectifyUnsupportedError(f"cannot remove template pair {pair}", cause=e.message)
        result = result.extended(move, augmented)
    if augmented != seq.end:
        raise ConnectifyUnsupportedError("template removal does not restore the final diagram")
    logger.info(f"Connectified {len(seq)} steps with {len(fresh_pairs)} R2 pairs")
    return result


def _translate_move(move: Move, before: LinkCode, augmented: LinkCode) -> Move:
    if move.kind == MoveKind.SAME:
        return move
    if not move.is_addition:
        return Move(kind=move.kind, labels=move.labels)
    slots = tuple(_translate_slot(slot, before, augmented) for slot in move.slots)
    return move.model_copy(update={"slots": slots, "labels": _default_labels(before, move)})


# === Repair ===

def _orientable(code: LinkCode) -> bool:
    return orientability(to_framed_graph(code)).orientable


def repair_sequence(
    seq: DiagramSequence, rule: ParityRule, strict_r2: Optional[bool] = None
) -> RepairReport:
    """
    Replace every diagram by its core and re-join consecutive cores.

    Link sequences are connectified first when possible.

    Raises:
        PreconditionError: An endpoint frame is not orientable, or the rule
            does not apply to some diagram
        TheoremViolationWitness: Two consecutive cores are neither equal
            nor one move of the input step's type apart (warning instead for
            experimental rules)
    """
    for name, code in (("first", seq.start), ("last", seq.end)):
        if not _orientable(code):
            raise PreconditionError(f"{name} diagram {serialize_code(code)} is not orientable")

    report = RepairReport(input=seq, rule=rule.name)
    working = seq
    if len(seq.start.circles) > 1:
        try:
            working = connectify_sequence(seq, strict_r2)
        except ConnectifyUnsupportedError as e:
            report.warnings.append(f"connectification skipped: {e.message}")

    results = [filtration(code, rule) for code in working.codes]
    cores = [result.core for result in results]
    report.iterations = max(result.level for result in results)

    def violation(message: str, index: int, pair: Tuple[str, str]) -> None:
        if rule.experimental:
            logger.warning(f"{message} (rule '{rule.name}' is experimental)")
            report.warnings.append(message)
            return
        raise TheoremViolationWitness(message, index=index, pair=pair)

    for label, index in (("first", 0), ("last", len(cores) - 1)):
        if cores[index] != working.codes[index]:
            violation(
                f"{label} diagram is not fixed by f",
                index,
                (serialize_code(working.codes[index]), serialize_code(cores[index])),
            )

    output = DiagramSequence.single(cores[0])
    complete = True
    for index, (before, move, _) in enumerate(working.steps()):
        a, b = cores[index], cores[index + 1]
        verdict = StepVerdict(
            index=index,
            before=serialize_code(a),
            after=serialize_code(b),
            relation="EQUAL",
            input_move=move_to_text(move),
        )
        if a == b:
            output = output.extended(Move.same(), b)
            verdict.moves = ["SAME"]
        else:
            families = None if move.kind == MoveKind.SAME else [move.family]
            steps = connect(a, b, families, strict_r2)
            if steps is None:
                verdict.relation = "VIOLATION"
                report.verdicts.append(verdict)
                complete = False
                violation(f"cores at step {index} are not one move apart", index,
                          (verdict.before, verdict.after))
                continue
            kinds = [m.kind for m, _ in steps]
            if kinds == [MoveKind.SAME]:
                verdict.relation = "SAME"
            else:
                verdict.relation = "MOVE+SAME" if MoveKind.SAME in kinds else "MOVE"
            verdict.moves = [move_to_text(m) for m, _ in steps]
            for m, code in steps:
                output = output.extended(m, code)
        report.verdicts.append(verdict)

    if complete:
        report.output = output
        report.all_orientable = all(_orientable(code) for code in output.codes)
        failures = output.replay_failures(strict_r2)
        for index, reason in failures:
            report.add_error(PreconditionError(reason), context=f"output step {index}")
    logger.info(
        f"Repair with '{rule.name}': {len(seq)} steps, level {report.iterations}, "
        f"all_orientable={report.all_orientable}"
    )
    return report


def verify_sequence(seq: DiagramSequence, strict_r2: Optional[bool] = None) -> SequenceReport:
    """Replay every step and record orientability and component count per diagram"""
    report = SequenceReport()
    for index, reason in seq.replay_failures(strict_r2):
        report.failures.append({"index": index, "reason": reason})
    for index, code in enumerate(seq.codes):
        graph = to_framed_graph(code)
        report.diagrams.append(DiagramFinding(
            index=index,
            code=serialize_code(code),
            components=unicursal_components(graph).count,
            orientable=orientability(graph).orientable,
        ))
    return report
