"""
Abstract interfaces for pluggable parity rules

A rule decides whether it applies to a code and, if so, labels every
classical crossing even (0) or odd (1). Concrete rules live in
knot_parity.rules and are looked up by name through RuleRegistry.
"""

from abc import ABC, abstractmethod
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, field_validator

from .codes import LinkCode
from .errors import NotApplicableError


# === Data Models ===

class ParityAssignment(BaseModel):
    """Crossing label -> Z2 (0 even, 1 odd)"""

    model_config = ConfigDict(frozen=True)

    values: Dict[int, int]
    rule: Optional[str] = None

    @field_validator("values")
    @classmethod
    def _bits_only(cls, values: Dict[int, int]) -> Dict[int, int]:
        for label, bit in values.items():
            if bit not in (0, 1):
                raise ValueError(f"parity of {label} must be 0 or 1, got {bit}")
        return dict(sorted(values.items()))

    def __getitem__(self, label: int) -> int:
        return self.values[label]

    def odd_labels(self) -> List[int]:
        return [label for label, bit in self.values.items() if bit]

    def is_all_even(self) -> bool:
        return not any(self.values.values())

    def to_text(self) -> str:
        """'1: odd, 2: even'; a crossing-free code gives '(no crossings)'"""
        if not self.values:
            return "(no crossings)"
        return ", ".join(
            f"{label}: {'odd' if bit else 'even'}" for label, bit in self.values.items()
        )

    def to_dict(self) -> Dict[str, str]:
        return {str(label): ("odd" if bit else "even") for label, bit in self.values.items()}

    @classmethod
    def all_even(cls, code: LinkCode) -> "ParityAssignment":
        return cls(values={label: 0 for label in code.labels})


# === Rule Interface ===

class ParityRule(ABC):
    """
    Abstract interface for parity rules.

    Subclasses set ``name`` (the CLI handle) and implement:
        - unsupported_reason(): None when the rule applies, else why not
        - compute(): raw label -> bit map for an applicable code

    ``experimental`` rules are not known to satisfy every parity axiom;
    the repair pipeline downgrades their theorem-violation findings to
    warnings.
    """

    name: str = "abstract"
    description: str = ""
    experimental: bool = False

    @abstractmethod
    def unsupported_reason(self, code: LinkCode) -> Optional[str]:
        """
        Explain why the rule does not apply.

        Args:
            code: Diagram to label

        Returns:
            None if the rule applies, otherwise a short reason
        """
        pass

    @abstractmethod
    def compute(self, code: LinkCode) -> Dict[int, int]:
        """
        Label every crossing of an applicable code.

        Args:
            code: Diagram the rule applies to

        Returns:
            Map from every label of the code to 0 or 1
        """
        pass

    def applies(self, code: LinkCode) -> bool:
        return self.unsupported_reason(code) is None

    def assign(self, code: LinkCode) -> ParityAssignment:
        """
        Parity assignment for a code.

        Raises:
            NotApplicableError: The rule does not apply to this code
        """
        reason = self.unsupported_reason(code)
        if reason is not None:
            raise NotApplicableError(f"rule '{self.name}' does not apply: {reason}", rule=self.name)
        return ParityAssignment(values=self.compute(code), rule=self.name)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(name={self.name!r})"
