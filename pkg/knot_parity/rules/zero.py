"""The trivial parity"""

from typing import Dict, Optional

from ..codes import LinkCode
from ..interfaces import ParityRule


class ZeroParity(ParityRule):

    name = "zero"
    description = "every crossing even"

    def unsupported_reason(self, code: LinkCode) -> Optional[str]:
        return None

    def compute(self, code: LinkCode) -> Dict[int, int]:
        return {label: 0 for label in code.labels}
