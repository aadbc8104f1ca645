"""
Report models

Reports collect findings instead of raising, so one run can describe every
failing clause, step or corpus item. ``to_dict`` gives the JSON shape the
CLI prints; field order is fixed so identical runs print identical bytes.
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from .errors import KnotParityError
from .sequence import DiagramSequence


class AxiomCheck(BaseModel):
    """One clause of the parity axioms evaluated at one site"""

    model_config = ConfigDict(populate_by_name=True)

    clause: str  # R1, R2, R3-sum, R3-correspondence, spectator
    site: str
    before: Dict[str, int] = Field(default_factory=dict)
    after: Dict[str, int] = Field(default_factory=dict)
    passed: bool = Field(alias="pass")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "clause": self.clause,
            "site": self.site,
            "before": self.before,
            "after": self.after,
            "pass": self.passed,
        }


class AxiomReport(BaseModel):
    """
    Axiom verdicts for one rule, code and move.

    Attributes:
        rule: Rule name
        code: Code before the move, serialized
        move: Move text
        checks: Clause verdicts in evaluation order
    """

    rule: str
    code: str
    move: str
    checks: List[AxiomCheck] = Field(default_factory=list)

    def add_check(self, clause: str, site: str, before: Dict[int, int],
                  after: Dict[int, int], passed: bool) -> None:
        self.checks.append(AxiomCheck(
            clause=clause,
            site=site,
            before={str(k): v for k, v in sorted(before.items())},
            after={str(k): v for k, v in sorted(after.items())},
            passed=passed,
        ))

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> List[AxiomCheck]:
        return [check for check in self.checks if not check.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "rule": self.rule,
            "code": self.code,
            "move": self.move,
            "pass": self.passed,
            "checks": [check.to_dict() for check in self.checks],
        }


class DiagramFinding(BaseModel):
    index: int
    code: str
    components: int
    orientable: bool


class SequenceReport(BaseModel):
    """Replayability and per-diagram facts for a DiagramSequence"""

    failures: List[Dict[str, Any]] = Field(default_factory=list)
    diagrams: List[DiagramFinding] = Field(default_factory=list)

    @property
    def replayable(self) -> bool:
        return not self.failures

    @property
    def all_orientable(self) -> bool:
        return all(d.orientable for d in self.diagrams)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "replayable": self.replayable,
            "all_orientable": self.all_orientable,
            "failures": self.failures,
            "diagrams": [d.model_dump() for d in self.diagrams],
        }


class StepVerdict(BaseModel):
    """How two consecutive cores of a repaired sequence are related"""

    index: int
    before: str
    after: str
    relation: str  # EQUAL, SAME, MOVE, MOVE+SAME, VIOLATION
    moves: List[str] = Field(default_factory=list)
    input_move: str = ""


class RepairReport(BaseModel):
    """
    Outcome of repairing a sequence.

    Attributes:
        input: Sequence as given
        output: Sequence of cores joined by single moves and SAME markers
        rule: Parity rule used
        iterations: Largest filtration level among the diagrams
        all_orientable: Every output diagram has an orientable frame
        verdicts: One verdict per input step
        warnings: Downgraded findings (experimental rules)
        errors: Structured errors met while repairing
    """

    input: DiagramSequence
    output: Optional[DiagramSequence] = None
    rule: str = ""
    iterations: int = 0
    all_orientable: bool = False
    verdicts: List[StepVerdict] = Field(default_factory=list)
    warnings: List[str] = Field(default_factory=list)
    errors: List[Dict[str, Any]] = Field(default_factory=list)

    def add_error(self, error: Exception, context: Optional[str] = None) -> None:
        entry = error.to_dict() if isinstance(error, KnotParityError) else {
            "code": "ERROR", "message": str(error)
        }
        entry["type"] = type(error).__name__
        entry["context"] = context
        self.errors.append(entry)

    @property
    def status(self) -> str:
        if self.errors:
            return "failed"
        return "warning" if self.warnings else "ok"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "status": self.status,
            "rule": self.rule,
            "iterations": self.iterations,
            "all_orientable": self.all_orientable,
            "input": self.input.to_text().splitlines(),
            "output": self.output.to_text().splitlines() if self.output else None,
            "verdicts": [v.model_dump() for v in self.verdicts],
            "warnings": self.warnings,
            "errors": self.errors,
        }


class SuiteReport(BaseModel):
    """
    Result of one verification suite over a corpus.

    Counterexamples are stored verbatim together with a command that
    reruns the failing case.
    """

    suite: str
    parameters: Dict[str, Any] = Field(default_factory=dict)
    cases: int = 0
    failures: List[Dict[str, Any]] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)

    def add_case(self) -> None:
        self.cases += 1

    def add_failure(self, description: str, rerun: Optional[str] = None, **details: Any) -> None:
        self.failures.append({"description": description, "rerun": rerun, **details})

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        if self.passed:
            return f"{self.suite}: pass, {self.cases} cases"
        return f"{self.suite}: FAIL, {len(self.failures)} of {self.cases} cases"

    def to_dict(self) -> Dict[str, Any]:
        failures = sorted(self.failures, key=lambda f: str(f.get("description")))
        return {
            "suite": self.suite,
            "parameters": self.parameters,
            "pass": self.passed,
            "cases": self.cases,
            "failures": failures,
            "notes": self.notes,
        }
