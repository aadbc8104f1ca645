"""
Tests for the map f, the filtration and sequence repair
"""

from typing import Dict, Optional

import pytest
from pydantic import ValidationError

from knot_parity.codes import LinkCode, parse_code
from knot_parity.errors import NotApplicableError, PreconditionError, TheoremViolationWitness
from knot_parity.interfaces import ParityAssignment, ParityRule
from knot_parity.moves import Move, MoveKind, apply_move
from knot_parity.projection import (
    FiltrationResult,
    connectify_sequence,
    filtration,
    is_in_level,
    map_f,
    repair_sequence,
    verify_sequence,
)
from knot_parity.rules import ComponentParity, GaussianParity
from knot_parity.sequence import DiagramSequence

UNKNOTTING = """\
1 2 3 1 2 3
R2-:2,3
1 1
R1-:1
*
"""


class EverythingOdd(ParityRule):
    """Marks every crossing odd; breaks R1"""

    name = "everything-odd"

    def unsupported_reason(self, code: LinkCode) -> Optional[str]:
        return None

    def compute(self, code: LinkCode) -> Dict[int, int]:
        return {label: 1 for label in code.labels}


class ExperimentalOdd(EverythingOdd):
    name = "experimental-odd"
    experimental = True


def detour(kink: LinkCode) -> DiagramSequence:
    """[1,1] -> [1,2,3,1,3,2] -> [1,1] through an odd bigon"""
    move = Move.r2_add(0, 1, reverse=True)
    middle = apply_move(kink, move)
    return DiagramSequence(codes=[kink, middle, kink], moves=[move, Move.r2_del(2, 3)])


class TestMapF:
    """Test deletion of odd crossings"""

    def test_two_chords(self, two_chords):
        """Test both odd chords vanish"""
        assignment = GaussianParity().assign(two_chords)

        assert map_f(two_chords, assignment) == parse_code("*")

    def test_partial(self):
        """Test only the odd chords of [1,2,3,1,3,2] go"""
        code = LinkCode.free([1, 2, 3, 1, 3, 2])

        assert map_f(code, GaussianParity().assign(code)) == LinkCode.free([1, 1])

    def test_all_even(self, three_chords):
        """Test an all-even assignment is the identity"""
        assert map_f(three_chords, ParityAssignment.all_even(three_chords)) == three_chords

    def test_domain_mismatch(self, two_chords):
        """Test the assignment must cover exactly the crossings"""
        with pytest.raises(PreconditionError):
            map_f(two_chords, ParityAssignment(values={1: 1}))

    def test_mixed_crossings(self, hopf):
        """Test the component rule empties the Hopf link"""
        assert map_f(hopf, ComponentParity().assign(hopf)) == parse_code("* ; *")


class TestFiltration:
    """Test iteration of f"""

    def test_level_one(self):
        """Test [1,2,3,1,3,2] reaches [1,1] in one round"""
        result = filtration(LinkCode.free([1, 2, 3, 1, 3, 2]), GaussianParity())

        assert result.level == 1
        assert result.core == LinkCode.free([1, 1])
        assert len(result.trace) == 2

    def test_level_zero(self, three_chords):
        """Test an all-even code is its own core"""
        result = filtration(three_chords, GaussianParity())

        assert result.level == 0
        assert result.trace == (three_chords,)

    def test_to_dict(self, two_chords):
        """Test the JSON shape"""
        data = filtration(two_chords, GaussianParity()).to_dict()

        assert data == {"level": 1, "core": "*", "trace": ["1 2 1 2", "*"]}

    def test_link(self):
        """Test the component rule on a link with a self-crossing"""
        result = filtration(LinkCode.free([1, 2, 2], [1]), ComponentParity())

        assert result.level == 1
        assert result.core == LinkCode.free([2, 2], [])

    def test_not_applicable(self, hopf):
        """Test a knot rule on a link"""
        with pytest.raises(NotApplicableError) as exc_info:
            filtration(hopf, GaussianParity())

        assert exc_info.value.details["trace"] == ["1 2 ; 1 2"]

    def test_is_in_level(self, two_chords):
        """Test level membership"""
        assert is_in_level(two_chords, GaussianParity(), 1)
        assert not is_in_level(two_chords, GaussianParity(), 0)

    def test_trace_validated(self, kink):
        """Test the trace must match the level"""
        with pytest.raises(ValidationError):
            FiltrationResult(level=1, core=kink, trace=(kink,))


class TestConnectify:
    """Test R2 templates joining circles"""

    def test_knot_unchanged(self):
        """Test knot sequences come back as given"""
        seq = DiagramSequence.from_text(UNKNOTTING)

        assert connectify_sequence(seq) is seq

    def test_disjoint_circles(self):
        """Test a free circle is tied to circle 0 for the whole sequence"""
        seq = DiagramSequence.from_text("1 1 ; *\nR1-:1\n* ; *\n")
        result = connectify_sequence(seq)

        assert [m.kind for m in result.moves] == [
            MoveKind.R2_ADD, MoveKind.R1_DEL, MoveKind.R2_DEL
        ]
        assert result.codes[1] == LinkCode.free([1, 2, 3, 1], [2, 3])
        assert result.codes[2] == LinkCode.free([2, 3], [2, 3])
        assert result.start == seq.start
        assert result.end == seq.end
        assert result.is_replayable()

    def test_already_connected(self, hopf):
        """Test sequences meeting circle 0 everywhere are untouched"""
        seq = DiagramSequence(codes=[hopf, hopf], moves=[Move.same()])

        assert connectify_sequence(seq) is seq


class TestRepairSequence:
    """Test the repair pipeline"""

    def test_cores_already(self):
        """Test a sequence of cores is rejoined move for move"""
        seq = DiagramSequence.from_text(UNKNOTTING)
        report = repair_sequence(seq, GaussianParity())

        assert report.status == "ok"
        assert report.iterations == 0
        assert report.all_orientable
        assert report.output == seq
        assert [v.relation for v in report.verdicts] == ["MOVE", "MOVE"]
        assert [v.moves for v in report.verdicts] == [["R2-:2,3"], ["R1-:1"]]

    def test_odd_detour_collapses(self, kink):
        """Test a detour through odd crossings becomes SAME steps"""
        report = repair_sequence(detour(kink), GaussianParity())

        assert report.iterations == 1
        assert report.output.codes == [kink, kink, kink]
        assert [m.kind for m in report.output.moves] == [MoveKind.SAME, MoveKind.SAME]
        assert [v.relation for v in report.verdicts] == ["EQUAL", "EQUAL"]
        assert report.all_orientable

    def test_non_orientable_endpoint(self, two_chords):
        """Test endpoints must have orientable frames"""
        with pytest.raises(PreconditionError):
            repair_sequence(DiagramSequence.single(two_chords), GaussianParity())

    def test_witness(self, kink):
        """Test a rule that moves an endpoint raises a witness"""
        with pytest.raises(TheoremViolationWitness):
            repair_sequence(DiagramSequence.single(kink), EverythingOdd())

    def test_experimental_rule_warns(self, kink):
        """Test experimental rules get warnings instead"""
        report = repair_sequence(DiagramSequence.single(kink), ExperimentalOdd())

        assert report.status == "warning"
        assert report.warnings == ["first diagram is not fixed by f", "last diagram is not fixed by f"]

    def test_to_dict(self, kink):
        """Test the JSON shape"""
        data = repair_sequence(detour(kink), GaussianParity()).to_dict()

        assert data["status"] == "ok"
        assert data["output"] == ["1 1", "SAME", "1 1", "SAME", "1 1"]
        assert data["verdicts"][0]["input_move"] == "R2+:@p0,@p1:r"


class TestVerifySequence:
    """Test sequence replay reports"""

    def test_clean(self):
        """Test a replayable knot sequence"""
        report = verify_sequence(DiagramSequence.from_text(UNKNOTTING))

        assert report.replayable
        assert report.all_orientable
        assert [d.components for d in report.diagrams] == [1, 1, 1]

    def test_corrupted(self):
        """Test a wrong step is reported with its index"""
        seq = DiagramSequence.from_text("1 2 3 1 2 3\nR2-:1,2\n1 1\nR1-:1\n*\n")
        report = verify_sequence(seq)

        assert not report.replayable
        assert [f["index"] for f in report.failures] == [0]

    def test_orientability_per_diagram(self, kink):
        """Test the odd middle diagram of a detour is flagged"""
        report = verify_sequence(detour(kink))

        assert [d.orientable for d in report.diagrams] == [True, False, True]
        assert not report.all_orientable
