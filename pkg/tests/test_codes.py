"""
Tests for Gauss codes

Tests parsing, serialization and canonical forms.
"""

import pytest

from knot_parity.codes import (
    CodeKind,
    LinkCode,
    Token,
    canonical_form,
    canonical_key,
    detect_kind,
    parse_code,
    same_diagram,
    serialize_code,
)
from knot_parity.errors import ParseError


class TestParseCode:
    """Test the text front end"""

    def test_free_knot(self):
        """Test a single FREE circle"""
        code = parse_code("1 2 1 2")

        assert code.kind == CodeKind.FREE
        assert len(code.circles) == 1
        assert code.labels == [1, 2]
        assert code == LinkCode.free([1, 2, 1, 2])

    def test_free_link(self):
        """Test circles separated by semicolons"""
        code = parse_code("1 2 ; 1 2")

        assert len(code.circles) == 2
        assert code.words() == ((1, 2), (1, 2))

    def test_virtual_trefoil(self):
        """Test passages and signs are kept per token"""
        code = parse_code("O1+ O2+ U1+ U2+")

        assert code.kind == CodeKind.VIRTUAL
        assert code.tokens[0] == Token(1, "O", "+")
        assert code.sign_of(2) == "+"

    def test_unicode_minus(self):
        """Test both minus signs are accepted"""
        assert parse_code("O1− U1−") == parse_code("O1- U1-")

    def test_star_is_empty_circle(self):
        """Test '*' denotes a crossing-free circle"""
        code = parse_code("1 1 ; *")

        assert code.circles[1] == ()
        assert code.crossings == 1

    def test_comments_ignored(self):
        """Test '#' comments are skipped"""
        assert parse_code("1 1  # a kink") == LinkCode.free([1, 1])

    def test_detect_kind(self):
        """Test kind detection from tokens"""
        assert detect_kind("1 2 1 2") == CodeKind.FREE
        assert detect_kind("O1+ U1+") == CodeKind.VIRTUAL

    def test_malformed_token_position(self):
        """Test parse errors pinpoint the offending character"""
        with pytest.raises(ParseError) as exc_info:
            parse_code("1 2 x 1")

        assert exc_info.value.position == 4
        assert exc_info.value.code == "PARSE"

    def test_label_three_times(self):
        """Test a label may occur only twice"""
        with pytest.raises(ParseError) as exc_info:
            parse_code("1 1 1")

        assert exc_info.value.position == 4

    def test_label_once(self):
        """Test a label occurring once is rejected"""
        with pytest.raises(ParseError):
            parse_code("1 2 2")

    def test_two_over_passages(self):
        """Test VIRTUAL labels need one over and one under passage"""
        with pytest.raises(ParseError):
            parse_code("O1+ O1+")

    def test_conflicting_signs(self):
        """Test VIRTUAL labels carry one sign"""
        with pytest.raises(ParseError):
            parse_code("O1+ U1-")

    def test_empty_text(self):
        """Test empty text is not a code"""
        with pytest.raises(ParseError):
            parse_code("   ")

    def test_parse_error_is_value_error(self):
        """Test bad input can be caught as ValueError"""
        with pytest.raises(ValueError):
            parse_code("1 ; ;")


class TestSerializeCode:
    """Test serialization"""

    def test_free(self):
        """Test FREE words"""
        assert serialize_code(LinkCode.free([1, 2, 1, 2])) == "1 2 1 2"

    def test_empty_circle(self):
        """Test the crossing-free sentinel"""
        assert serialize_code(LinkCode.free([])) == "*"
        assert serialize_code(LinkCode.free([1, 1], [])) == "1 1 ; *"

    def test_virtual_round_trip(self, virtual_trefoil):
        """Test the virtual trefoil serializes back to its text"""
        assert serialize_code(virtual_trefoil) == "O1+ O2+ U1+ U2+"
        assert parse_code(serialize_code(virtual_trefoil)) == virtual_trefoil

    def test_ascii_minus(self):
        """Test serialization writes ASCII minus"""
        assert serialize_code(parse_code("O1− U1−")) == "O1- U1-"


class TestLinkCodeModel:
    """Test the LinkCode invariants and views"""

    def test_rejects_label_used_once(self):
        """Test direct construction validates occurrences"""
        with pytest.raises(ValueError):
            LinkCode.free([1, 2, 1])

    def test_rejects_zero_circles(self):
        """Test a code needs a circle"""
        with pytest.raises(ValueError):
            LinkCode(kind=CodeKind.FREE, circles=())

    def test_positions(self):
        """Test global positions run across circles"""
        code = LinkCode.free([1, 2], [1, 2])

        assert code.circle_starts() == [0, 2]
        assert code.positions_of(2) == (1, 3)
        assert code.locate(3) == (1, 1)
        assert code.next_position(1) == 0
        assert code.circle_of(2) == 1

    def test_arc_slots(self):
        """Test empty circles get slots after the last position"""
        code = LinkCode.free([1, 1], [])

        assert code.arc_slots() == [(0, 0), (0, 1), (1, -1)]

    def test_immutable(self):
        """Test codes are frozen"""
        code = LinkCode.free([1, 1])

        with pytest.raises(Exception):
            code.kind = CodeKind.VIRTUAL


class TestCanonicalForm:
    """Test canonical forms up to symmetry"""

    @pytest.mark.parametrize(
        "word, expected",
        [
            ([2, 1, 2, 1], (1, 2, 1, 2)),
            ([1, 1], (1, 1)),
            ([3, 1, 2, 3, 1, 2], (1, 2, 3, 1, 2, 3)),
        ],
    )
    def test_knot_words(self, word, expected):
        """Test brute-force minima of small words"""
        assert canonical_form(LinkCode.free(word)).words() == (expected,)

    def test_idempotent(self):
        """Test canonical_form is a projection"""
        code = LinkCode.free([4, 2, 4, 7, 2, 7])
        once = canonical_form(code)

        assert canonical_form(once) == once

    def test_circle_order_ignored(self):
        """Test reordering circles gives the same key"""
        first = LinkCode.free([1, 1], [2, 3, 2, 3])
        second = LinkCode.free([5, 6, 5, 6], [9, 9])

        assert canonical_key(first) == canonical_key(second)
        assert same_diagram(first, second)

    def test_reversal(self):
        """Test reading a circle backwards gives the same diagram"""
        assert same_diagram(LinkCode.free([1, 2, 3, 1, 3, 2]), LinkCode.free([2, 3, 1, 3, 2, 1]))

    def test_different_diagrams(self):
        """Test distinct chord diagrams stay distinct"""
        assert not same_diagram(LinkCode.free([1, 2, 1, 2]), LinkCode.free([1, 1, 2, 2]))

    def test_kind_kept(self, virtual_trefoil):
        """Test VIRTUAL codes stay VIRTUAL"""
        assert canonical_form(virtual_trefoil).kind == CodeKind.VIRTUAL
