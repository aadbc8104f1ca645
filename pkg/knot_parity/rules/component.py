"""Component parity: a crossing is odd iff its two passages lie on different circles"""

from typing import Dict, Optional

from ..codes import LinkCode
from ..interfaces import ParityRule


class ComponentParity(ParityRule):

    name = "component"
    description = "mixed crossings odd, self-crossings even (links)"

    def unsupported_reason(self, code: LinkCode) -> Optional[str]:
        if len(code.circles) < 2:
            return "needs at least two circles"
        return None

    def compute(self, code: LinkCode) -> Dict[int, int]:
        seen: Dict[int, int] = {}
        values: Dict[int, int] = {}
        for index, circle in enumerate(code.circles):
            for token in circle:
                if token.label in seen:
                    values[token.label] = int(seen[token.label] != index)
                else:
                    seen[token.label] = index
        return values
