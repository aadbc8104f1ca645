"""
Hybrid link parity (experimental)

Self-crossings take the transversal count of their first half mod 2, which
on a single circle is the Gaussian linking count; mixed crossings are odd.
Not known to satisfy the third-move axiom on every link, so callers must
check the axioms on the diagrams they use.
"""

import logging
from typing import Dict, Optional

from ..codes import LinkCode
from ..cycles import halves, transversal_count
from ..graph import to_framed_graph, unicursal_components, vertex_components
from ..interfaces import ParityRule


logger = logging.getLogger(__name__)


class HybridParity(ParityRule):

    name = "hybrid-experimental"
    description = "self-crossings by half transversal count, mixed crossings odd (experimental)"
    experimental = True

    def unsupported_reason(self, code: LinkCode) -> Optional[str]:
        return None

    def compute(self, code: LinkCode) -> Dict[int, int]:
        graph = to_framed_graph(code)
        values: Dict[int, int] = {}
        for vertex, (i, j) in vertex_components(graph, unicursal_components(graph)).items():
            if i != j:
                values[vertex] = 1
            else:
                values[vertex] = transversal_count(graph, halves(graph, vertex)[0]) % 2
        logger.debug(f"Hybrid parity odd set: {[v for v, b in values.items() if b]}")
        return values
