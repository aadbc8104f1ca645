"""
Reidemeister moves on Gauss codes

Moves rewrite codes directly and keep every surviving label. Deletions
name labels; additions name arc slots (see LinkCode.arc_slots) and insert
blocks of tokens after them. Virtual-only moves, the detour move among
them, leave Gauss codes unchanged and appear in sequences as SAME.

Text form:
    R1-:1   R2-:2,3   R3:1,2,3   SAME
    R1+:@p3[/label][:O+]         R2+:@p4,@p9[/a,b][:r][:O+]
The optional ":O+"/":U-" flag gives the passage of the first inserted
token and the sign of the first new label (VIRTUAL codes only); ":r"
makes the second R2 strand cross the new labels in reverse order; ":tK"
(one K per slot) splits a block inserted after the last position of a
circle, keeping K tokens at the end and moving the rest to the front.
"""

import logging
import re
from enum import Enum
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from .codes import CodeKind, LinkCode, Token
from .config import get_settings
from .errors import InapplicableMoveError, ParseError


logger = logging.getLogger(__name__)

PositionMap = Dict[int, int]
Pair = Tuple[int, int]  # (start, following) global positions, cyclically adjacent


class MoveKind(str, Enum):
    R1_ADD = "R1+"
    R1_DEL = "R1-"
    R2_ADD = "R2+"
    R2_DEL = "R2-"
    R3 = "R3"
    SAME = "SAME"


_LABEL_COUNTS = {
    MoveKind.R1_DEL: (1,),
    MoveKind.R2_DEL: (2,),
    MoveKind.R3: (3,),
    MoveKind.R1_ADD: (0, 1),
    MoveKind.R2_ADD: (0, 2),
    MoveKind.SAME: (0,),
}
_SLOT_COUNTS = {
    MoveKind.R1_DEL: (0,),
    MoveKind.R2_DEL: (0,),
    MoveKind.R3: (0, 3),
    MoveKind.R1_ADD: (1,),
    MoveKind.R2_ADD: (2,),
    MoveKind.SAME: (0,),
}


class Move(BaseModel):
    """
    One Reidemeister move, pinned to a site.

    Attributes:
        kind: Move variant
        labels: Deleted labels, R3 triangle labels, or new labels for an
            addition (empty means max label + 1, + 2)
        slots: Arc slots for additions; for R3 the starts of the triangle
            sides (pairs {a,b}, {b,c}, {a,c})
        reverse: R2 addition: second strand meets the new labels reversed
        over_first: VIRTUAL additions: passage of the first inserted token
        sign: VIRTUAL additions: sign of the first new label
        tail: Per slot split point for blocks inserted after the last
            position of a circle; -1 keeps the whole block at the end
    """

    model_config = ConfigDict(frozen=True)

    kind: MoveKind
    labels: Tuple[int, ...] = ()
    slots: Tuple[int, ...] = ()
    reverse: bool = False
    over_first: Optional[bool] = None
    sign: Optional[str] = None
    tail: Tuple[int, ...] = ()

    @model_validator(mode="after")
    def _check_site(self) -> "Move":
        if len(self.labels) not in _LABEL_COUNTS[self.kind]:
            raise ValueError(f"{self.kind.value} takes {_LABEL_COUNTS[self.kind]} labels")
        if len(self.slots) not in _SLOT_COUNTS[self.kind]:
            raise ValueError(f"{self.kind.value} takes {_SLOT_COUNTS[self.kind]} slots")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("move labels must be distinct")
        if self.tail and len(self.tail) != len(self.slots):
            raise ValueError("tail needs one entry per slot")
        if self.sign not in (None, "+", "-"):
            raise ValueError(f"bad sign {self.sign!r}")
        return self

    # === Constructors ===

    @classmethod
    def same(cls) -> "Move":
        return cls(kind=MoveKind.SAME)

    @classmethod
    def r1_del(cls, label: int) -> "Move":
        return cls(kind=MoveKind.R1_DEL, labels=(label,))

    @classmethod
    def r2_del(cls, a: int, b: int) -> "Move":
        return cls(kind=MoveKind.R2_DEL, labels=(a, b))

    @classmethod
    def r3(cls, a: int, b: int, c: int) -> "Move":
        return cls(kind=MoveKind.R3, labels=(a, b, c))

    @classmethod
    def r1_add(cls, slot: int, label: Optional[int] = None, **options) -> "Move":
        return cls(kind=MoveKind.R1_ADD, slots=(slot,), labels=() if label is None else (label,), **options)

    @classmethod
    def r2_add(cls, first: int, second: int, labels: Optional[Tuple[int, int]] = None, **options) -> "Move":
        return cls(kind=MoveKind.R2_ADD, slots=(first, second), labels=tuple(labels or ()), **options)

    @property
    def is_addition(self) -> bool:
        return self.kind in (MoveKind.R1_ADD, MoveKind.R2_ADD)

    @property
    def is_deletion(self) -> bool:
        return self.kind in (MoveKind.R1_DEL, MoveKind.R2_DEL)

    @property
    def family(self) -> str:
        """'R1', 'R2', 'R3' or 'SAME'"""
        return self.kind.value.rstrip("+-")

    def __str__(self) -> str:
        return move_to_text(self)


# === Text form ===

_MOVE = re.compile(r"^(R1\+|R1-|R2\+|R2-|R3|SAME)(?::(.*))?$")


def move_to_text(move: Move) -> str:
    if move.kind == MoveKind.SAME:
        return "SAME"
    if not move.is_addition:
        text = f"{move.kind.value}:" + ",".join(str(label) for label in move.labels)
        if move.slots:
            text += "/" + ",".join(f"@p{slot}" for slot in move.slots)
        return text
    text = f"{move.kind.value}:" + ",".join(f"@p{slot}" for slot in move.slots)
    if move.labels:
        text += "/" + ",".join(str(label) for label in move.labels)
    if move.reverse:
        text += ":r"
    if move.over_first is not None:
        text += ":" + ("O" if move.over_first else "U") + (move.sign or "")
    if move.tail and any(k != -1 for k in move.tail):
        text += ":t" + ",".join(str(k) for k in move.tail)
    return text


def parse_move(text: str) -> Move:
    """
    Parse the move text form.

    Raises:
        ParseError: Unknown move or malformed site
    """
    text = text.strip()
    match = _MOVE.match(text)
    if not match:
        raise ParseError(f"unknown move {text!r}", 0)
    kind = MoveKind(match.group(1))
    rest = match.group(2)
    if kind == MoveKind.SAME:
        if rest:
            raise ParseError("SAME takes no site", 4)
        return Move.same()
    if not rest:
        raise ParseError(f"{kind.value} needs a site", len(text))
    parts = rest.split(":")
    site, flags = parts[0], parts[1:]
    options: Dict[str, object] = {}
    try:
        head, _, tail_part = site.partition("/")
        if kind in (MoveKind.R1_ADD, MoveKind.R2_ADD):
            options["slots"] = _parse_slots(head)
            if tail_part:
                options["labels"] = tuple(int(x) for x in tail_part.split(","))
        else:
            options["labels"] = tuple(int(x) for x in head.split(","))
            if tail_part:
                options["slots"] = _parse_slots(tail_part)
        for flag in flags:
            if flag == "r":
                options["reverse"] = True
            elif re.match(r"^[OU][+-]?$", flag):
                options["over_first"] = flag[0] == "O"
                options["sign"] = flag[1] if len(flag) > 1 else None
            elif re.match(r"^t-?\d+(,-?\d+)*$", flag):
                options["tail"] = tuple(int(x) for x in flag[1:].split(","))
            else:
                raise ValueError(f"unknown flag {flag!r}")
        return Move(kind=kind, **options)
    except ValueError as e:
        raise ParseError(f"malformed move {text!r}: {e}", len(kind.value) + 1)


def _parse_slots(text: str) -> Tuple[int, ...]:
    slots = []
    for item in text.split(","):
        if not item.startswith("@p"):
            raise ValueError(f"slot {item!r} must look like @p<id>")
        slots.append(int(item[2:]))
    return tuple(slots)


# === Site detection ===

def _adjacent_orientations(code: LinkCode, p: int, q: int) -> List[Pair]:
    """Oriented pairs (start, following) made of positions p and q"""
    found = []
    if code.circle_of(p) != code.circle_of(q):
        return found
    if code.next_position(p) == q:
        found.append((p, q))
    if code.next_position(q) == p and (q, p) not in found:
        found.append((q, p))
    return found


def r1_site(code: LinkCode, label: int) -> Optional[Pair]:
    """The adjacent pair of a deletable kink, or None"""
    try:
        p, q = code.positions_of(label)
    except KeyError:
        return None
    orientations = _adjacent_orientations(code, p, q)
    return orientations[0] if orientations else None


def r2_sites(code: LinkCode, a: int, b: int, strict: bool = False) -> List[Tuple[Pair, Pair]]:
    """
    Ways to see labels a, b as a deletable bigon: two disjoint adjacent
    pairs, each holding one occurrence of a and one of b, ordered by start.

    Args:
        strict: FREE codes only; require the strands to meet a and b in
            opposite orders
    """
    try:
        pa, pb = code.positions_of(a), code.positions_of(b)
    except KeyError:
        return []
    tokens = code.tokens
    sites = []
    for first_b, second_b in ((pb[0], pb[1]), (pb[1], pb[0])):
        for one in _adjacent_orientations(code, pa[0], first_b):
            for two in _adjacent_orientations(code, pa[1], second_b):
                site = tuple(sorted((one, two)))
                if site in sites:
                    continue
                if code.kind == CodeKind.VIRTUAL:
                    passages = {
                        tuple(sorted(tokens[p].passage for p in pair)) for pair in (one, two)
                    }
                    if passages != {("O", "O"), ("U", "U")}:
                        continue
                    if tokens[pa[0]].sign == tokens[pb[0]].sign:
                        continue
                elif strict and tokens[one[0]].label == tokens[two[0]].label:
                    continue
                sites.append(site)
    return sorted(sites)  # type: ignore[return-value]


def r3_sites(code: LinkCode, a: int, b: int, c: int) -> List[Tuple[Pair, Pair, Pair]]:
    """
    Triangles on labels a, b, c: three disjoint adjacent pairs with label
    sets {a,b}, {b,c}, {a,c} covering all six occurrences.
    """
    try:
        pa, pb, pc = code.positions_of(a), code.positions_of(b), code.positions_of(c)
    except KeyError:
        return []
    tokens = code.tokens
    sites = []
    for ia in (0, 1):
        for ib in (0, 1):
            for ic in (0, 1):
                for ab in _adjacent_orientations(code, pa[ia], pb[ib]):
                    for bc in _adjacent_orientations(code, pb[1 - ib], pc[ic]):
                        for ac in _adjacent_orientations(code, pa[1 - ia], pc[1 - ic]):
                            if code.kind == CodeKind.VIRTUAL:
                                kinds = sorted(
                                    "".join(sorted(tokens[p].passage for p in pair))  # type: ignore[misc]
                                    for pair in (ab, bc, ac)
                                )
                                if kinds != ["OO", "OU", "UU"]:
                                    continue
                            site = (ab, bc, ac)
                            if site not in sites:
                                sites.append(site)
    return sites


# === Application ===

_Item = Tuple[Token, Optional[int]]  # token with its old global position


def _items(code: LinkCode) -> List[List[_Item]]:
    items, position = [], 0
    for circle in code.circles:
        row = []
        for token in circle:
            row.append((token, position))
            position += 1
        items.append(row)
    return items


def _finish(kind: CodeKind, items: List[List[_Item]]) -> Tuple[LinkCode, PositionMap]:
    mapping: PositionMap = {}
    position = 0
    for row in items:
        for _, old in row:
            if old is not None:
                mapping[old] = position
            position += 1
    return LinkCode.trusted(kind, [[token for token, _ in row] for row in items]), mapping


def _insert_blocks(code: LinkCode, blocks: Sequence[Tuple[int, List[Token], int]]) -> List[List[_Item]]:
    """
    Insert token blocks after arc slots. Blocks sharing a slot are joined
    in order; the tail entry of the first one applies to the joined block.
    """
    slots = code.arc_slots()
    merged: Dict[int, Tuple[List[Token], int]] = {}
    for slot, block, tail in blocks:
        if not 0 <= slot < len(slots):
            raise InapplicableMoveError(f"arc slot @p{slot} out of range", slot=slot)
        if slot in merged:
            merged[slot][0].extend(block)
        else:
            merged[slot] = (list(block), tail)

    items = _items(code)
    for circle_index, row in enumerate(items):
        empty_slot = next(
            (s for s in merged if slots[s] == (circle_index, -1)), None
        )
        if empty_slot is not None:
            block, tail = merged[empty_slot]
            if tail != -1:
                block = block[tail:] + block[:tail]
            items[circle_index] = [(token, None) for token in block]
            continue
        front: List[_Item] = []
        rebuilt: List[_Item] = []
        for offset, item in enumerate(row):
            rebuilt.append(item)
            slot = next((s for s in merged if slots[s] == (circle_index, offset)), None)
            if slot is None:
                continue
            block, tail = merged[slot]
            if offset == len(row) - 1 and tail != -1:
                rebuilt.extend((token, None) for token in block[:tail])
                front = [(token, None) for token in block[tail:]]
            else:
                rebuilt.extend((token, None) for token in block)
        items[circle_index] = front + rebuilt
    return items


def _new_labels(code: LinkCode, move: Move, count: int) -> Tuple[int, ...]:
    if move.labels:
        for label in move.labels:
            if label in code.labels:
                raise InapplicableMoveError(f"label {label} already in code", label=label)
            if label <= 0:
                raise InapplicableMoveError(f"label {label} is not positive", label=label)
        return move.labels
    top = max(code.labels, default=0)
    return tuple(top + k + 1 for k in range(count))


def _tail(move: Move, index: int) -> int:
    return move.tail[index] if move.tail else -1


def _virtual_token(code: LinkCode, label: int, over: bool, sign: str) -> Token:
    if code.kind == CodeKind.FREE:
        return Token(label)
    return Token(label, "O" if over else "U", sign)


def _flip(sign: str) -> str:
    return "-" if sign == "+" else "+"


def apply_move_with_map(
    code: LinkCode, move: Move, strict_r2: Optional[bool] = None
) -> Tuple[LinkCode, PositionMap]:
    """
    Apply a move and report where surviving tokens went.

    Args:
        code: Code to rewrite
        move: Move to apply
        strict_r2: Strict unsigned R2 reading; defaults to the settings

    Returns:
        (new code, old global position -> new global position) for every
        token that survives the move; R3 maps each label occurrence to
        its new position

    Raises:
        InapplicableMoveError: The site does not exist in the code
    """
    strict = get_settings().strict_r2 if strict_r2 is None else strict_r2
    over = True if move.over_first is None else move.over_first
    sign = move.sign or "+"

    if move.kind == MoveKind.SAME:
        return code, {p: p for p in range(len(code.tokens))}

    if move.kind == MoveKind.R1_DEL:
        pair = r1_site(code, move.labels[0])
        if pair is None:
            raise InapplicableMoveError(f"label {move.labels[0]} is not a kink", move=str(move))
        return _delete(code, set(pair))

    if move.kind == MoveKind.R2_DEL:
        if not r2_sites(code, move.labels[0], move.labels[1], strict):
            raise InapplicableMoveError(f"labels {move.labels} do not form a bigon", move=str(move))
        return _delete(code, set(code.positions_of(move.labels[0]) + code.positions_of(move.labels[1])))

    if move.kind == MoveKind.R3:
        site = _pick_r3_site(code, move)
        items = _items(code)
        flat = [(c, o) for c, row in enumerate(items) for o in range(len(row))]
        for p, q in site:
            (cp, op), (cq, oq) = flat[p], flat[q]
            items[cp][op], items[cq][oq] = items[cq][oq], items[cp][op]
        return _finish(code.kind, items)

    if move.kind == MoveKind.R1_ADD:
        (label,) = _new_labels(code, move, 1)
        block = [
            _virtual_token(code, label, over, sign),
            _virtual_token(code, label, not over, sign),
        ]
        return _finish(code.kind, _insert_blocks(code, [(move.slots[0], block, _tail(move, 0))]))

    a, b = _new_labels(code, move, 2)
    if code.kind == CodeKind.FREE and strict and not move.reverse:
        raise InapplicableMoveError("strict R2 needs the reversed second strand", move=str(move))
    first = [_virtual_token(code, a, over, sign), _virtual_token(code, b, over, _flip(sign))]
    second = [_virtual_token(code, a, not over, sign), _virtual_token(code, b, not over, _flip(sign))]
    if move.reverse:
        second.reverse()
    blocks = [(move.slots[0], first, _tail(move, 0)), (move.slots[1], second, _tail(move, 1))]
    return _finish(code.kind, _insert_blocks(code, blocks))


def apply_move(code: LinkCode, move: Move, strict_r2: Optional[bool] = None) -> LinkCode:
    """Rewrite a code by one move; see apply_move_with_map"""
    return apply_move_with_map(code, move, strict_r2)[0]


def _delete(code: LinkCode, positions: set) -> Tuple[LinkCode, PositionMap]:
    items = [[item for item in row if item[1] not in positions] for row in _items(code)]
    return _finish(code.kind, items)


def _pick_r3_site(code: LinkCode, move: Move) -> Tuple[Pair, Pair, Pair]:
    a, b, c = sorted(move.labels)
    sites = r3_sites(code, a, b, c)
    if move.slots:
        sites = [s for s in sites if tuple(pair[0] for pair in s) == move.slots]
    if not sites:
        raise InapplicableMoveError(f"labels {move.labels} do not form a triangle", move=str(move))
    return sites[0]


def r3_triangle(code: LinkCode, move: Move) -> Tuple[Pair, Pair, Pair]:
    """Triangle sides (pairs {a,b}, {b,c}, {a,c}) the R3 move swaps"""
    return _pick_r3_site(code, move)


# === Inversion ===

def _reinsertion(
    code: LinkCode, deleted: set, pairs: Sequence[Pair]
) -> Tuple[List[int], List[int], List[Pair]]:
    """
    Slots, tails and insertion order that put deleted pairs back exactly.

    Returns:
        (slot per pair, tail per pair, pairs in insertion order); pairs
        sharing a slot share the tail of their joined block
    """
    after, mapping = _delete(code, deleted)
    starts = code.circle_starts()
    groups: Dict[int, List[Tuple[int, Pair]]] = {}
    anchors: Dict[int, Tuple[int, Optional[int]]] = {}
    for pair in pairs:
        circle, offset = code.locate(pair[0])
        length = len(code.circles[circle])
        base = starts[circle]
        pred = None
        for back in range(1, length):
            candidate = base + (offset - back) % length
            if candidate not in deleted:
                pred = candidate
                break
        if pred is None:
            slot = len(after.tokens) + sum(1 for c in after.circles[:circle] if not c)
            anchors[slot] = (base, None)
            groups.setdefault(slot, []).append((offset, pair))
        else:
            slot = mapping[pred]
            anchors[slot] = (base, pred - base)
            groups.setdefault(slot, []).append(((offset - (pred - base)) % length, pair))

    slots: List[int] = []
    tails: List[int] = []
    ordered: List[Pair] = []
    for slot in sorted(groups):
        members = [pair for _, pair in sorted(groups[slot])]
        base, pred_offset = anchors[slot]
        run = [p - base for pair in members for p in pair]
        if pred_offset is None:
            split = run.index(min(run))
            tail = -1 if split == 0 else split
        else:
            split = sum(1 for o in run if o > pred_offset)
            tail = -1 if split == len(run) else split
        for pair in members:
            slots.append(slot)
            tails.append(tail)
            ordered.append(pair)
    return slots, tails, ordered


def inverse_move(code: LinkCode, move: Move, strict_r2: Optional[bool] = None) -> Move:
    """
    The move that undoes ``move`` on ``apply_move(code, move)``, returning
    exactly ``code``.
    """
    if move.kind == MoveKind.SAME:
        return move
    if move.kind == MoveKind.R3:
        # swapping inside each side keeps the side starts in place
        triangle = _pick_r3_site(code, move)
        return Move(kind=MoveKind.R3, labels=tuple(sorted(move.labels)),
                    slots=tuple(pair[0] for pair in triangle))
    if move.is_addition:
        after = apply_move(code, move, strict_r2)
        added = [label for label in after.labels if label not in code.labels]
        if move.kind == MoveKind.R1_ADD:
            return Move.r1_del(added[0])
        return Move.r2_del(*sorted(added))

    tokens = code.tokens
    if move.kind == MoveKind.R1_DEL:
        pair = r1_site(code, move.labels[0])
        if pair is None:
            raise InapplicableMoveError(f"label {move.labels[0]} is not a kink")
        slots, tails, _ = _reinsertion(code, set(pair), [pair])
        options = _virtual_options(code, pair)
        return Move(kind=MoveKind.R1_ADD, slots=(slots[0],), labels=move.labels,
                    tail=tuple(tails) if tails[0] != -1 else (), **options)

    strict = get_settings().strict_r2 if strict_r2 is None else strict_r2
    sites = r2_sites(code, move.labels[0], move.labels[1], strict)
    if not sites:
        raise InapplicableMoveError(f"labels {move.labels} do not form a bigon")
    deleted = {p for pair in sites[0] for p in pair}
    slots, tails, ordered = _reinsertion(code, deleted, list(sites[0]))
    first, second = ordered
    labels = (tokens[first[0]].label, tokens[first[1]].label)
    reverse = tokens[second[0]].label != labels[0]
    options = _virtual_options(code, first)
    return Move(
        kind=MoveKind.R2_ADD,
        slots=tuple(slots),
        labels=labels,
        reverse=reverse,
        tail=tuple(tails) if any(t != -1 for t in tails) else (),
        **options,
    )


def _virtual_options(code: LinkCode, pair: Pair) -> dict:
    if code.kind == CodeKind.FREE:
        return {}
    token = code.tokens[pair[0]]
    return {"over_first": token.passage == "O", "sign": token.sign}


# === Enumeration ===

def deletion_moves(code: LinkCode, strict_r2: Optional[bool] = None) -> List[Move]:
    """All R1 and R2 deletions and R3 moves, in enumeration order"""
    strict = get_settings().strict_r2 if strict_r2 is None else strict_r2
    labels = code.labels
    moves = [Move.r1_del(label) for label in labels if r1_site(code, label) is not None]
    moves.extend(
        Move.r2_del(a, b) for a, b in combinations(labels, 2) if r2_sites(code, a, b, strict)
    )
    for a, b, c in combinations(labels, 3):
        for site in r3_sites(code, a, b, c):
            moves.append(Move(kind=MoveKind.R3, labels=(a, b, c), slots=tuple(p[0] for p in site)))
    return moves


def addition_moves(
    code: LinkCode,
    max_crossings: Optional[int] = None,
    strict_r2: Optional[bool] = None,
    new_labels: Optional[Tuple[int, ...]] = None,
) -> List[Move]:
    """
    One R1 addition per arc slot and one R2 addition per ordered slot pair
    (first <= second) and strand order, within the crossing cap.
    VIRTUAL codes get every passage and sign variant.
    """
    strict = get_settings().strict_r2 if strict_r2 is None else strict_r2
    slots = range(len(code.arc_slots()))
    variants: List[dict] = [{}]
    if code.kind == CodeKind.VIRTUAL:
        variants = [{"over_first": o, "sign": s} for o in (True, False) for s in ("+", "-")]
    moves: List[Move] = []
    if max_crossings is None or code.crossings + 1 <= max_crossings:
        label = (new_labels[0],) if new_labels else ()
        for slot in slots:
            for options in variants:
                moves.append(Move(kind=MoveKind.R1_ADD, slots=(slot,), labels=label, **options))
    if max_crossings is None or code.crossings + 2 <= max_crossings:
        pair = tuple(new_labels) if new_labels and len(new_labels) == 2 else ()
        orders = (True,) if (strict and code.kind == CodeKind.FREE) else (False, True)
        for first in slots:
            for second in slots:
                if second < first:
                    continue
                for reverse in orders:
                    for options in variants:
                        moves.append(
                            Move(kind=MoveKind.R2_ADD, slots=(first, second), labels=pair,
                                 reverse=reverse, **options)
                        )
    return moves


def enumerate_moves(
    code: LinkCode,
    max_crossings: Optional[int] = None,
    strict_r2: Optional[bool] = None,
    include_additions: bool = True,
) -> List[Tuple[Move, LinkCode]]:
    """
    Every applicable move with its result, in a fixed order: R1 deletions,
    R2 deletions, R3, R1 additions, R2 additions.

    Args:
        code: Starting code
        max_crossings: Cap on the crossings an addition may produce
        strict_r2: Strict unsigned R2 reading; defaults to the settings
        include_additions: Set False for deletions and R3 only
    """
    moves = deletion_moves(code, strict_r2)
    if include_additions:
        moves.extend(addition_moves(code, max_crossings, strict_r2))
    results = [(move, apply_move(code, move, strict_r2)) for move in moves]
    logger.debug(f"{len(results)} moves on {code}")
    return results
