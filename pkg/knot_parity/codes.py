"""
Gauss codes for free and virtual links

A LinkCode lists, circle by circle, the crossings met while walking along
each component. FREE codes carry bare labels; VIRTUAL codes carry an
over/under passage per occurrence and a sign per label. Virtual crossings
never appear: at this level they are non-events.

Text grammar:
    circles separated by ";", tokens by whitespace, "#" starts a comment
    FREE token:     decimal label, e.g. "12"
    VIRTUAL token:  ("O"|"U") label ("+"|"-"), e.g. "O3-"
    empty circle:   "*"
"""

import logging
import re
from collections import Counter
from enum import Enum
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from .errors import ParseError


logger = logging.getLogger(__name__)

_SCAN = re.compile(r"#[^\n]*|;|[^\s;#]+")
_FREE_TOKEN = re.compile(r"^(\d+)$")
_VIRTUAL_TOKEN = re.compile(r"^([OU])(\d+)([+\-−])$")


class CodeKind(str, Enum):
    """Whether a code carries over/under and sign data"""
    FREE = "FREE"
    VIRTUAL = "VIRTUAL"


class Token(NamedTuple):
    """One occurrence of a crossing label on a circle"""
    label: int
    passage: Optional[str] = None  # "O" or "U", VIRTUAL only
    sign: Optional[str] = None  # "+" or "-", VIRTUAL only

    def relabeled(self, label: int) -> "Token":
        return Token(label, self.passage, self.sign)

    def to_text(self) -> str:
        if self.passage is None:
            return str(self.label)
        return f"{self.passage}{self.label}{self.sign}"


Circle = Tuple[Token, ...]
ArcSlot = Tuple[int, int]  # (circle, offset); offset -1 marks an empty circle


class LinkCode(BaseModel):
    """
    Multi-component Gauss code.

    Attributes:
        kind: FREE or VIRTUAL
        circles: One cyclic token sequence per component; may be empty

    Global positions number the tokens of all circles in order, circle 0
    first. Arc slot p is the arc leaving global position p; the empty
    circles get the slots after the last position.
    """

    model_config = ConfigDict(frozen=True)

    kind: CodeKind = CodeKind.FREE
    circles: Tuple[Tuple[Token, ...], ...]

    @model_validator(mode="after")
    def _check_occurrences(self) -> "LinkCode":
        if not self.circles:
            raise ValueError("a code needs at least one circle")
        counts: Counter = Counter()
        passages: Dict[int, List[str]] = {}
        signs: Dict[int, set] = {}
        for circle in self.circles:
            for token in circle:
                if token.label <= 0:
                    raise ValueError(f"label {token.label} is not a positive integer")
                counts[token.label] += 1
                if self.kind == CodeKind.FREE:
                    if token.passage is not None or token.sign is not None:
                        raise ValueError("FREE codes carry no passage or sign data")
                    continue
                if token.passage not in ("O", "U") or token.sign not in ("+", "-"):
                    raise ValueError(f"VIRTUAL token for label {token.label} needs passage and sign")
                passages.setdefault(token.label, []).append(token.passage)
                signs.setdefault(token.label, set()).add(token.sign)
        for label, count in counts.items():
            if count != 2:
                raise ValueError(f"label {label} occurs {count} times (expected 2)")
        for label, seen in passages.items():
            if sorted(seen) != ["O", "U"]:
                raise ValueError(f"label {label} needs one over and one under passage")
            if len(signs[label]) != 1:
                raise ValueError(f"label {label} has conflicting signs")
        return self

    # === Construction helpers ===

    @classmethod
    def free(cls, *circles: Sequence[int]) -> "LinkCode":
        """Build a FREE code from plain label lists: LinkCode.free([1, 2, 1, 2])"""
        return cls(
            kind=CodeKind.FREE,
            circles=tuple(tuple(Token(label) for label in circle) for circle in circles),
        )

    @classmethod
    def trusted(cls, kind: CodeKind, circles: Iterable[Iterable[Token]]) -> "LinkCode":
        """Build without validation; for rewrites that preserve the invariants"""
        return cls.model_construct(kind=kind, circles=tuple(tuple(c) for c in circles))

    # === Views ===

    @property
    def tokens(self) -> Tuple[Token, ...]:
        """All tokens in global position order"""
        return tuple(token for circle in self.circles for token in circle)

    @property
    def labels(self) -> List[int]:
        return sorted({token.label for token in self.tokens})

    @property
    def crossings(self) -> int:
        return sum(len(circle) for circle in self.circles) // 2

    @property
    def is_knot(self) -> bool:
        return len(self.circles) == 1

    def words(self) -> Tuple[Tuple[int, ...], ...]:
        """Label-only view of the circles"""
        return tuple(tuple(token.label for token in circle) for circle in self.circles)

    def circle_starts(self) -> List[int]:
        starts, total = [], 0
        for circle in self.circles:
            starts.append(total)
            total += len(circle)
        return starts

    def locate(self, position: int) -> Tuple[int, int]:
        """Global position -> (circle, offset)"""
        for index, start in enumerate(self.circle_starts()):
            if start <= position < start + len(self.circles[index]):
                return index, position - start
        raise IndexError(f"position {position} out of range")

    def next_position(self, position: int) -> int:
        """Cyclic successor of a global position on its circle"""
        circle, offset = self.locate(position)
        start = self.circle_starts()[circle]
        return start + (offset + 1) % len(self.circles[circle])

    def positions_of(self, label: int) -> Tuple[int, int]:
        found = tuple(p for p, token in enumerate(self.tokens) if token.label == label)
        if len(found) != 2:
            raise KeyError(f"label {label} not in code")
        return found  # type: ignore[return-value]

    def circle_of(self, position: int) -> int:
        return self.locate(position)[0]

    def arc_slots(self) -> List[ArcSlot]:
        """Insertion slots: the arc after each position, then each empty circle"""
        slots: List[ArcSlot] = []
        for index, circle in enumerate(self.circles):
            slots.extend((index, offset) for offset in range(len(circle)))
        slots.extend((index, -1) for index, circle in enumerate(self.circles) if not circle)
        return slots

    def sign_of(self, label: int) -> Optional[str]:
        for token in self.tokens:
            if token.label == label:
                return token.sign
        raise KeyError(f"label {label} not in code")

    def __str__(self) -> str:
        return serialize_code(self)


# === Text front end ===

def detect_kind(text: str) -> CodeKind:
    """VIRTUAL if any token starts with an O/U passage letter"""
    for match in _SCAN.finditer(text):
        token = match.group(0)
        if token.startswith("#") or token == ";":
            continue
        if token[0] in "OU":
            return CodeKind.VIRTUAL
    return CodeKind.FREE


def parse_code(text: str, kind: Optional[CodeKind] = None) -> LinkCode:
    """
    Parse Gauss code text.

    Args:
        text: Code text per the module grammar
        kind: FREE or VIRTUAL; detected from the tokens when omitted

    Returns:
        Validated LinkCode

    Raises:
        ParseError: Malformed token, wrong occurrence counts, or passage
            and sign inconsistencies, with the character position
    """
    kind = CodeKind(kind) if kind is not None else detect_kind(text)
    circles: List[List[Token]] = [[]]
    starred: List[bool] = [False]
    where: Dict[int, List[int]] = {}
    passages: Dict[int, List[str]] = {}
    signs: Dict[int, str] = {}

    for match in _SCAN.finditer(text):
        raw, position = match.group(0), match.start()
        if raw.startswith("#"):
            continue
        if raw == ";":
            circles.append([])
            starred.append(False)
            continue
        if raw == "*":
            if circles[-1] or starred[-1]:
                raise ParseError("'*' must be the only token of its circle", position)
            starred[-1] = True
            continue
        if starred[-1]:
            raise ParseError("'*' must be the only token of its circle", position)
        token = _parse_token(raw, kind, position)
        where.setdefault(token.label, []).append(position)
        if len(where[token.label]) > 2:
            raise ParseError(f"label {token.label} occurs more than twice", position)
        if kind == CodeKind.VIRTUAL:
            previous = passages.setdefault(token.label, [])
            if token.passage in previous:
                raise ParseError(
                    f"label {token.label} has two {'over' if token.passage == 'O' else 'under'} passages",
                    position,
                )
            previous.append(token.passage)  # type: ignore[arg-type]
            if signs.setdefault(token.label, token.sign) != token.sign:  # type: ignore[arg-type]
                raise ParseError(f"label {token.label} has conflicting signs", position)
        circles[-1].append(token)

    if len(circles) == 1 and not circles[0] and not starred[0]:
        raise ParseError("empty code; write '*' for a crossing-free circle", 0)
    for index, (circle, star) in enumerate(zip(circles, starred)):
        if not circle and not star:
            raise ParseError(f"circle {index} is empty; write '*' for a crossing-free circle", len(text))
    for label, seen in where.items():
        if len(seen) != 2:
            raise ParseError(f"label {label} occurs once (expected twice)", seen[0])

    code = LinkCode.trusted(kind, circles)
    logger.debug(f"Parsed {kind.value} code with {len(circles)} circles, {code.crossings} crossings")
    return code


def _parse_token(raw: str, kind: CodeKind, position: int) -> Token:
    if kind == CodeKind.FREE:
        match = _FREE_TOKEN.match(raw)
        if not match or int(match.group(1)) <= 0:
            raise ParseError(f"malformed FREE token {raw!r}", position)
        return Token(int(match.group(1)))
    match = _VIRTUAL_TOKEN.match(raw)
    if not match or int(match.group(2)) <= 0:
        raise ParseError(f"malformed VIRTUAL token {raw!r}", position)
    sign = "+" if match.group(3) == "+" else "-"
    return Token(int(match.group(2)), match.group(1), sign)


def serialize_code(code: LinkCode) -> str:
    """Inverse of parse_code; empty circles are written as '*'"""
    return " ; ".join(
        " ".join(token.to_text() for token in circle) if circle else "*"
        for circle in code.circles
    )


# === Canonical form ===

def _circle_variants(circle: Circle) -> List[Circle]:
    if not circle:
        return [()]
    variants = []
    for sequence in (circle, tuple(reversed(circle))):
        for shift in range(len(sequence)):
            variant = sequence[shift:] + sequence[:shift]
            if variant not in variants:
                variants.append(variant)
    return variants


def _relabel_row(circle: Circle, mapping: Dict[int, int]) -> Tuple[Circle, Dict[int, int]]:
    mapping = dict(mapping)
    row = []
    for token in circle:
        if token.label not in mapping:
            mapping[token.label] = len(mapping) + 1
        row.append(token.relabeled(mapping[token.label]))
    return tuple(row), mapping


def canonical_form(code: LinkCode) -> LinkCode:
    """
    Lexicographically smallest representative over circle rotations,
    circle reversals, circle reorderings and relabelings (labels become
    1..n in first-appearance order). Idempotent.
    """
    variants = [_circle_variants(circle) for circle in code.circles]
    best: Optional[Tuple[Circle, ...]] = None

    def search(prefix: Tuple[Circle, ...], mapping: Dict[int, int], remaining: Tuple[int, ...]) -> None:
        nonlocal best
        if not remaining:
            if best is None or prefix < best:
                best = prefix
            return
        tried = set()
        for index in remaining:
            # identical circles give identical subtrees
            if code.circles[index] in tried:
                continue
            tried.add(code.circles[index])
            rest = tuple(i for i in remaining if i != index)
            for variant in variants[index]:
                row, extended = _relabel_row(variant, mapping)
                candidate = prefix + (row,)
                if best is not None and candidate > best[: len(candidate)]:
                    continue
                search(candidate, extended, rest)

    search((), {}, tuple(range(len(code.circles))))
    assert best is not None
    return LinkCode.trusted(code.kind, best)


def canonical_key(code: LinkCode) -> Tuple[str, Tuple[Circle, ...]]:
    """Hashable key that is equal exactly on symmetry orbits"""
    canonical = canonical_form(code)
    return canonical.kind.value, canonical.circles


def same_diagram(first: LinkCode, second: LinkCode) -> bool:
    """Equal up to the canonical symmetry group"""
    return first == second or canonical_key(first) == canonical_key(second)
