"""Gaussian parity of a knot: a chord is odd iff it links an odd number of chords"""

from typing import Dict, Optional

from ..codes import LinkCode
from ..interfaces import ParityRule


def linked_counts(word) -> Dict[int, int]:
    """Label -> number of chords with exactly one endpoint strictly inside its arc"""
    first: Dict[int, int] = {}
    span: Dict[int, tuple] = {}
    for index, label in enumerate(word):
        if label in first:
            span[label] = (first[label], index)
        else:
            first[label] = index
    counts = {}
    for label, (i, j) in span.items():
        inside = word[i + 1 : j]
        counts[label] = sum(1 for other in set(inside) if inside.count(other) == 1)
    return counts


class GaussianParity(ParityRule):
    """Example-level Gaussian parity; single-circle codes only"""

    name = "gaussian"
    description = "chord parity = number of linked chords mod 2 (knots)"

    def unsupported_reason(self, code: LinkCode) -> Optional[str]:
        if len(code.circles) != 1:
            return f"needs exactly one circle, got {len(code.circles)}"
        return None

    def compute(self, code: LinkCode) -> Dict[int, int]:
        counts = linked_counts(code.words()[0])
        return {label: count % 2 for label, count in counts.items()}
