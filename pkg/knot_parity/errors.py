"""
Exception hierarchy for knot_parity

Every error carries a stable ``code`` string. Reports and the CLI JSON
output use the code instead of the class name so they stay schema-stable.
Errors caused by bad caller input also subclass ValueError.
"""

from typing import Any, Optional, Tuple


class KnotParityError(Exception):
    """Base class for all library errors"""

    code: str = "ERROR"

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self) -> dict:
        """Convert to dictionary for reports"""
        return {"code": self.code, "message": self.message, **self.details}


class ParseError(KnotParityError, ValueError):
    """Malformed Gauss code, move or sequence text"""

    code = "PARSE"

    def __init__(self, message: str, position: Optional[int] = None, **details: Any):
        super().__init__(message, position=position, **details)
        self.position = position

    def __str__(self) -> str:
        if self.position is None:
            return self.message
        return f"{self.message} (at character {self.position})"


class PreconditionError(KnotParityError, ValueError):
    """An operation was called outside its precondition"""

    code = "PRECONDITION"


class NotApplicableError(PreconditionError):
    """A parity rule does not apply to the given code"""

    code = "NOT_APPLICABLE"


class NotInGError(PreconditionError):
    """Some component meets the other components an odd number of times"""

    code = "NOT_IN_G"


class InapplicableMoveError(PreconditionError):
    """A move site is not valid on the given code"""

    code = "INAPPLICABLE"


class CapExceededError(PreconditionError):
    """Exhaustive enumeration would exceed the configured cap"""

    code = "CAP_EXCEEDED"


class NeedsSignedCodeError(PreconditionError):
    """The operation needs over/under and sign data"""

    code = "NEEDS_SIGNED_CODE"


class UnknownRuleError(KnotParityError, KeyError):
    """No parity rule is registered under the requested name"""

    code = "UNKNOWN_RULE"

    def __str__(self) -> str:
        return self.message


class NotTransportableError(KnotParityError):
    """A cycle uses a crossing that the move deletes and cannot be rerouted"""

    code = "NOT_TRANSPORTABLE"


class ConnectifyUnsupportedError(KnotParityError):
    """The R2 insertion template does not survive some move of the sequence"""

    code = "CONNECTIFY_UNSUPPORTED"


class SpanError(KnotParityError):
    """A cycle is outside the span of the generating family"""

    code = "SPAN_INTERNAL"


class TheoremViolationWitness(KnotParityError):
    """Two consecutive cores are not related by one move or a detour"""

    code = "THEOREM_VIOLATION_WITNESS"

    def __init__(self, message: str, index: int, pair: Tuple[str, str], **details: Any):
        super().__init__(message, index=index, pair=list(pair), **details)
        self.index = index
        self.pair = pair
