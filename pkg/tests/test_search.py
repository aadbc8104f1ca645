"""
Tests for move sequences and search
"""

import pytest

from knot_parity.codes import LinkCode, parse_code
from knot_parity.errors import ParseError, PreconditionError
from knot_parity.moves import Move, MoveKind, move_to_text
from knot_parity.search import bfs_equivalence, connect, random_walk, round_trip_walk
from knot_parity.sequence import DiagramSequence

SEQUENCE_TEXT = """\
1 2 3 1 2 3
R2-:2,3
1 1
R1-:1
*
"""


class TestDiagramSequence:
    """Test the sequence model and its file format"""

    def test_from_text(self):
        """Test parsing alternating code and move lines"""
        seq = DiagramSequence.from_text(SEQUENCE_TEXT)

        assert len(seq) == 2
        assert seq.start == LinkCode.free([1, 2, 3, 1, 2, 3])
        assert seq.end == parse_code("*")
        assert seq.is_replayable()

    def test_to_text(self):
        """Test printing gives the file format back"""
        assert DiagramSequence.from_text(SEQUENCE_TEXT).to_text() == SEQUENCE_TEXT

    def test_comments_and_blanks(self):
        """Test comments and blank lines are skipped"""
        seq = DiagramSequence.from_text("# start\n1 1\n\nR1-:1  # kink\n*\n")

        assert [move_to_text(m) for m in seq.moves] == ["R1-:1"]

    def test_parse_errors(self):
        """Test misplaced and empty input"""
        for text in ("", "1 1\n1 1\n", "R1-:1\n*\n", "1 1\nR1-:1\n", "1 1\nR9:1\n*\n"):
            with pytest.raises(ParseError):
                DiagramSequence.from_text(text)

    def test_corrupted_step(self):
        """Test replay reports a step whose move does not give the next code"""
        seq = DiagramSequence.from_text("1 2 3 1 2 3\nR2-:1,2\n1 1\n")
        failures = seq.replay_failures()

        assert [index for index, _ in failures] == [0]
        assert "gives 3 3, not 1 1" in failures[0][1]

    def test_same_step(self, kink):
        """Test SAME steps must join equal diagrams up to symmetry"""
        good = DiagramSequence(codes=[kink, LinkCode.free([2, 2])], moves=[Move.same()])
        bad = DiagramSequence(codes=[kink, parse_code("*")], moves=[Move.same()])

        assert good.is_replayable()
        assert not bad.is_replayable()

    def test_lengths_checked(self, kink):
        """Test codes and moves must interleave"""
        with pytest.raises(ValueError):
            DiagramSequence(codes=[kink], moves=[Move.same()])
        with pytest.raises(ValueError):
            DiagramSequence(codes=[])

    def test_reversed(self):
        """Test walking a sequence backwards with inverse moves"""
        back = DiagramSequence.from_text(SEQUENCE_TEXT).reversed()

        assert back.start == parse_code("*")
        assert back.end == LinkCode.free([1, 2, 3, 1, 2, 3])
        assert back.is_replayable()

    def test_concat_requires_meeting_ends(self, kink, unknot):
        """Test concatenation checks the joint"""
        with pytest.raises(ValueError):
            DiagramSequence.single(kink).concat(DiagramSequence.single(unknot))


class TestBfsEquivalence:
    """Test bounded breadth-first search"""

    def test_unknotting(self, three_chords, unknot):
        """Test [1,2,3,1,2,3] reaches the unknot in two moves"""
        seq = bfs_equivalence(three_chords, unknot, max_crossings=3, max_depth=2)

        assert seq is not None
        assert len(seq) == 2
        assert seq.start == three_chords
        assert seq.end == unknot
        assert seq.is_replayable()

    def test_tie_break(self, three_chords, unknot):
        """Test the first of the equally short paths in move order is returned"""
        seq = bfs_equivalence(three_chords, unknot, max_crossings=3, max_depth=2)

        assert seq.to_text() == "1 2 3 1 2 3\nR2-:1,2\n3 3\nR1-:3\n*\n"

    def test_none_within_depth(self, three_chords, unknot):

        """Test one move is not enough"""
        assert bfs_equivalence(three_chords, unknot, max_crossings=3, max_depth=1) is None

    def test_strict_r2(self, two_chords, unknot):
        """Test the parallel bigon of [1,2,1,2] needs the permissive reading"""
        assert len(bfs_equivalence(two_chords, unknot, max_crossings=2, max_depth=1)) == 1
        assert bfs_equivalence(two_chords, unknot, max_crossings=2, max_depth=1,
                               strict_r2=True) is None

    def test_equal_endpoints(self, kink):
        """Test equal codes give the one-diagram sequence"""
        assert len(bfs_equivalence(kink, kink, max_crossings=1, max_depth=0)) == 0

    def test_symmetric_endpoints(self, kink):
        """Test codes equal up to relabeling are joined by SAME"""
        seq = bfs_equivalence(kink, LinkCode.free([2, 2]), max_crossings=1, max_depth=0)

        assert [m.kind for m in seq.moves] == [MoveKind.SAME]

    def test_cap_below_endpoints(self, three_chords, unknot):
        """Test an endpoint above the cap is a precondition failure"""
        with pytest.raises(PreconditionError):
            bfs_equivalence(three_chords, unknot, max_crossings=2, max_depth=3)


class TestRandomWalk:
    """Test seeded walks"""

    def test_length(self, unknot):
        """Test a walk has the requested number of moves"""
        seq = random_walk(unknot, 2, seed=7)

        assert len(seq) == 2
        assert seq.start == unknot
        assert seq.is_replayable()

    def test_deterministic(self, kink):
        """Test the seed fixes the walk"""
        assert random_walk(kink, 5, seed=3, max_crossings=4) == random_walk(kink, 5, seed=3,
                                                                             max_crossings=4)

    def test_cap_respected(self, kink):
        """Test no diagram exceeds the crossing cap"""
        seq = random_walk(kink, 12, seed=11, max_crossings=3)

        assert max(code.crossings for code in seq.codes) <= 3

    def test_negative_length(self, kink):
        """Test negative lengths are refused"""
        with pytest.raises(PreconditionError):
            random_walk(kink, -1, seed=0)

    def test_stuck(self, unknot):
        """Test a diagram with no move under the cap"""
        with pytest.raises(PreconditionError):
            random_walk(unknot, 1, seed=0, max_crossings=0)

    def test_round_trip(self, kink):
        """Test the walk back ends where it started"""
        seq = round_trip_walk(kink, 4, seed=5, max_crossings=4)

        assert len(seq) == 8
        assert seq.start == kink
        assert seq.end == kink
        assert seq.is_replayable()


class TestConnect:
    """Test single-step connection"""

    def test_equal(self, kink):
        """Test equal codes need no step"""
        assert connect(kink, kink) == []

    def test_deletion(self, kink, unknot):
        """Test a kink deletion"""
        steps = connect(kink, unknot)

        assert [(move_to_text(m), c) for m, c in steps] == [("R1-:1", unknot)]

    def test_addition_with_target_label(self, unknot):
        """Test additions take the labels of the target"""
        target = LinkCode.free([2, 2])
        steps = connect(unknot, target)

        assert steps == [(Move.r1_add(0, label=2), target)]

    def test_symmetry_only(self, kink):
        """Test a relabeling is a SAME step"""
        target = LinkCode.free([2, 2])

        assert connect(kink, target) == [(Move.same(), target)]

    def test_family_filter(self, kink, unknot):
        """Test disallowed families are skipped"""
        assert connect(kink, unknot, ["R2"]) is None

    def test_too_far(self, three_chords, unknot):
        """Test codes more than one move apart"""
        assert connect(three_chords, unknot) is None
