"""Built-in parity rules"""

from .component import ComponentParity
from .gaussian import GaussianParity, linked_counts
from .hybrid import HybridParity
from .zero import ZeroParity

__all__ = [
    "ComponentParity",
    "GaussianParity",
    "HybridParity",
    "ZeroParity",
    "linked_counts",
]
