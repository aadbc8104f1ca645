"""Deterministic corpora of canonical codes for the verification suites"""

import logging
from typing import Iterator, List, Optional, Sequence, Tuple

from .codes import CodeKind, LinkCode, Token, canonical_form, canonical_key
from .errors import ParseError


logger = logging.getLogger(__name__)


def chord_words(chords: int) -> Iterator[Tuple[int, ...]]:
    """Every word on 2n letters where labels 1..n appear twice, in first-appearance order"""
    size = 2 * chords

    def extend(word: List[int], next_label: int) -> Iterator[Tuple[int, ...]]:
        try:
            first = word.index(0)
        except ValueError:
            yield tuple(word)
            return
        word[first] = next_label
        for partner in range(first + 1, size):
            if word[partner] == 0:
                word[partner] = next_label
                yield from extend(word, next_label + 1)
                word[partner] = 0
        word[first] = 0

    yield from extend([0] * size, 1)


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def _dedupe(codes: Iterator[LinkCode]) -> List[LinkCode]:
    seen = {}
    for code in codes:
        canonical = canonical_form(code)
        key = canonical_key(canonical)
        if key not in seen:
            seen[key] = canonical
    return sorted(seen.values(), key=lambda c: (c.crossings, c.words()))


def enumerate_knot_codes(max_chords: int, min_chords: int = 0) -> List[LinkCode]:
    """
    Canonical single-circle FREE codes with min_chords..max_chords chords,
    ordered by chord count, then word.
    """
    def generate() -> Iterator[LinkCode]:
        for n in range(min_chords, max_chords + 1):
            for word in chord_words(n):
                yield LinkCode.free(list(word))

    codes = _dedupe(generate())
    logger.debug(f"{len(codes)} knot codes with <= {max_chords} chords")
    return codes


def enumerate_link_codes(
    circles: int, max_crossings: int, min_crossings: int = 0, connected_only: bool = False
) -> List[LinkCode]:
    """
    Canonical FREE codes with exactly ``circles`` circles.

    Args:
        connected_only: Keep codes whose framed graph is connected and has
            no crossing-free circle
    """
    def generate() -> Iterator[LinkCode]:
        for n in range(min_crossings, max_crossings + 1):
            for word in chord_words(n):
                for lengths in _compositions(2 * n, circles):
                    pieces, start = [], 0
                    for length in lengths:
                        pieces.append(list(word[start:start + length]))
                        start += length
                    yield LinkCode.free(*pieces)

    codes = _dedupe(generate())
    if connected_only:
        from .graph import graph_components, to_framed_graph

        codes = [
            code for code in codes
            if all(code.circles) and graph_components(to_framed_graph(code)) == 1
        ]
    return codes


def parse_seed_range(text: str) -> List[int]:
    """
    '1..50' -> [1, ..., 50]; '3' -> [3]; '1,4,9' -> [1, 4, 9]

    Raises:
        ParseError: A part is not an integer or a low..high range
    """
    seeds: List[int] = []
    for part in text.split(","):
        part = part.strip()
        try:
            if ".." in part:
                low, high = part.split("..")
                seeds.extend(range(int(low), int(high) + 1))
            elif part:
                seeds.append(int(part))
        except ValueError:
            raise ParseError(f"bad seed range '{part}'", position=text.find(part))
    return seeds



def signed_variant(code: LinkCode, signs: Optional[Sequence[str]] = None) -> LinkCode:
    """
    A VIRTUAL code over the same circles: first occurrence Over, second
    Under, signs from ``signs`` (all '+' by default) in label order.
    """
    labels = code.labels
    sign_of = {label: (signs[k] if signs else "+") for k, label in enumerate(labels)}
    seen = set()
    circles = []
    for circle in code.circles:
        row = []
        for token in circle:
            passage = "U" if token.label in seen else "O"
            seen.add(token.label)
            row.append(Token(token.label, passage, sign_of[token.label]))
        circles.append(row)
    return LinkCode(kind=CodeKind.VIRTUAL, circles=tuple(tuple(r) for r in circles))
