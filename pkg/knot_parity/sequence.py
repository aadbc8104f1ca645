"""
Move sequences between diagrams

Sequence file format: one code per line, interleaved with move lines,
starting and ending with a code. Blank lines and "#" comments are ignored.

    1 2 3 1 2 3
    R2-:2,3
    1 1
    R1-:1
    *
"""

import logging
from typing import List, Optional, Tuple

from pydantic import BaseModel, model_validator

from .codes import CodeKind, LinkCode, detect_kind, parse_code, same_diagram, serialize_code
from .errors import InapplicableMoveError, ParseError
from .moves import Move, MoveKind, apply_move, inverse_move, move_to_text, parse_move


logger = logging.getLogger(__name__)

_MOVE_PREFIXES = ("R1", "R2", "R3", "SAME")


class DiagramSequence(BaseModel):
    """
    Codes K_1 .. K_n with the move taking each code to the next.

    Attributes:
        codes: Diagrams in order; never empty
        moves: moves[i] turns codes[i] into codes[i + 1]; SAME marks a
            step that changes nothing at code level (detour moves)
    """

    codes: List[LinkCode]
    moves: List[Move] = []

    @model_validator(mode="after")
    def _check_lengths(self) -> "DiagramSequence":
        if not self.codes:
            raise ValueError("a sequence needs at least one diagram")
        if len(self.moves) != len(self.codes) - 1:
            raise ValueError(
                f"{len(self.codes)} diagrams need {len(self.codes) - 1} moves, got {len(self.moves)}"
            )
        return self

    @classmethod
    def single(cls, code: LinkCode) -> "DiagramSequence":
        return cls(codes=[code])

    @property
    def start(self) -> LinkCode:
        return self.codes[0]

    @property
    def end(self) -> LinkCode:
        return self.codes[-1]

    def __len__(self) -> int:
        return len(self.moves)

    def steps(self) -> List[Tuple[LinkCode, Move, LinkCode]]:
        return [(self.codes[i], self.moves[i], self.codes[i + 1]) for i in range(len(self.moves))]

    def extended(self, move: Move, code: LinkCode) -> "DiagramSequence":
        return DiagramSequence(codes=self.codes + [code], moves=self.moves + [move])

    def concat(self, other: "DiagramSequence") -> "DiagramSequence":
        if self.end != other.start:
            raise ValueError("sequences do not meet: end and start differ")
        return DiagramSequence(codes=self.codes + other.codes[1:], moves=self.moves + other.moves)

    def reversed(self, strict_r2: Optional[bool] = None) -> "DiagramSequence":
        """The same path walked backwards, each move replaced by its inverse"""
        moves = [inverse_move(a, m, strict_r2) for a, m, _ in self.steps()]
        return DiagramSequence(codes=list(reversed(self.codes)), moves=list(reversed(moves)))

    def replay_failures(self, strict_r2: Optional[bool] = None) -> List[Tuple[int, str]]:
        """
        Check every step.

        Returns:
            (step index, reason) for each step whose move does not turn
            its code into the next one
        """
        failures = []
        for index, (before, move, after) in enumerate(self.steps()):
            if move.kind == MoveKind.SAME:
                if not same_diagram(before, after):
                    failures.append((index, "SAME step between different diagrams"))
                continue
            try:
                result = apply_move(before, move, strict_r2)
            except InapplicableMoveError as e:
                failures.append((index, f"{move_to_text(move)} inapplicable: {e.message}"))
                continue
            if result != after:
                failures.append(
                    (index, f"{move_to_text(move)} gives {serialize_code(result)}, "
                            f"not {serialize_code(after)}")
                )
        return failures

    def is_replayable(self, strict_r2: Optional[bool] = None) -> bool:
        return not self.replay_failures(strict_r2)

    def to_text(self) -> str:
        lines = [serialize_code(self.codes[0])]
        for move, code in zip(self.moves, self.codes[1:]):
            lines.append(move_to_text(move))
            lines.append(serialize_code(code))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, kind: Optional[CodeKind] = None) -> "DiagramSequence":
        """
        Parse a sequence file.

        Raises:
            ParseError: Bad code or move line, or lines out of alternation
        """
        entries: List[Tuple[int, str]] = []
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if line:
                entries.append((number, line))
        if not entries:
            raise ParseError("empty sequence", 0)
        code_lines = [line for k, (_, line) in enumerate(entries) if k % 2 == 0]
        kind = CodeKind(kind) if kind is not None else detect_kind("\n".join(code_lines))

        codes: List[LinkCode] = []
        moves: List[Move] = []
        for k, (number, line) in enumerate(entries):
            is_move = line.startswith(_MOVE_PREFIXES)
            if k % 2 == 1:
                if not is_move:
                    raise ParseError(f"line {number}: expected a move, got {line!r}", None, line=number)
                try:
                    moves.append(parse_move(line))
                except ParseError as e:
                    raise ParseError(f"line {number}: {e.message}", e.position, line=number)
            else:
                if is_move:
                    raise ParseError(f"line {number}: expected a code, got {line!r}", None, line=number)
                try:
                    codes.append(parse_code(line, kind))
                except ParseError as e:
                    raise ParseError(f"line {number}: {e.message}", e.position, line=number)
        if len(codes) != len(moves) + 1:
            raise ParseError("sequence must end with a code", None)
        logger.debug(f"Parsed sequence of {len(moves)} moves")
        return cls(codes=codes, moves=moves)
