"""
knot_parity - Parity calculus for free and virtual links given by Gauss codes

This package provides:
- Gauss codes and framed 4-graphs: parsing, canonical forms, components
- Cycles: the generating family of the Z2 cycle space and decomposition
- Parity rules: Gaussian, component, zero and an experimental hybrid rule
- Reidemeister moves, move sequences and bounded search
- Atoms: orientability, face tracing and Euler characteristic
- Projection: the map f, the filtration and sequence repair

Example:
    from knot_parity import parse_code, default_registry, filtration

    code = parse_code("1 2 1 2")
    result = filtration(code, default_registry().get_rule("gaussian"))
    print(result.level, result.core)   # 1 *
"""

from .atoms import (
    Atom,
    AtomSurface,
    OrientabilityResult,
    atom_surface,
    canonical_atom,
    cycle_orientable,
    enumerate_atoms,
    face_orientable,
    orientability,
)
from .codes import (
    CodeKind,
    LinkCode,
    Token,
    canonical_form,
    parse_code,
    same_diagram,
    serialize_code,
)
from .config import Settings, get_settings
from .cycles import (
    CycleClass,
    CycleWalk,
    bigons,
    decompose_cycle,
    generating_family,
    halves,
    intersection_cycles,
)
from .errors import (
    ConnectifyUnsupportedError,
    InapplicableMoveError,
    KnotParityError,
    NotApplicableError,
    ParseError,
    PreconditionError,
    TheoremViolationWitness,
)
from .graph import (
    ComponentPartition,
    FramedGraph,
    intersection_graph,
    to_framed_graph,
    unicursal_components,
)
from .interfaces import ParityAssignment, ParityRule
from .moves import Move, MoveKind, apply_move, enumerate_moves, inverse_move
from .parity import (
    agrees,
    component_parity,
    gaussian_homological_parity,
    gaussian_parity_knot,
    in_class_G,
    verify_parity_axioms,
)
from .projection import (
    FiltrationResult,
    connectify_sequence,
    filtration,
    map_f,
    repair_sequence,
    verify_sequence,
)
from .registry import RuleRegistry, default_registry
from .search import bfs_equivalence, connect, random_walk
from .sequence import DiagramSequence
from .transport import transport_cycle

__version__ = "0.1.0"

__all__ = [
    # Graph core
    "CodeKind",
    "LinkCode",
    "Token",
    "FramedGraph",
    "ComponentPartition",
    "parse_code",
    "serialize_code",
    "canonical_form",
    "same_diagram",
    "to_framed_graph",
    "unicursal_components",
    "intersection_graph",
    # Cycles
    "CycleWalk",
    "CycleClass",
    "halves",
    "bigons",
    "intersection_cycles",
    "generating_family",
    "decompose_cycle",
    # Parity
    "ParityAssignment",
    "ParityRule",
    "RuleRegistry",
    "default_registry",
    "gaussian_parity_knot",
    "component_parity",
    "in_class_G",
    "gaussian_homological_parity",
    "agrees",
    "verify_parity_axioms",
    # Moves
    "Move",
    "MoveKind",
    "DiagramSequence",
    "apply_move",
    "inverse_move",
    "enumerate_moves",
    "bfs_equivalence",
    "random_walk",
    "connect",
    "transport_cycle",
    # Atoms
    "Atom",
    "AtomSurface",
    "OrientabilityResult",
    "orientability",
    "cycle_orientable",
    "face_orientable",
    "atom_surface",
    "enumerate_atoms",
    "canonical_atom",
    # Projection
    "FiltrationResult",
    "map_f",
    "filtration",
    "connectify_sequence",
    "repair_sequence",
    "verify_sequence",
    # Ambient
    "Settings",
    "get_settings",
    "KnotParityError",
    "ParseError",
    "PreconditionError",
    "NotApplicableError",
    "InapplicableMoveError",
    "ConnectifyUnsupportedError",
    "TheoremViolationWitness",
]
