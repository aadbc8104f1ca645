"""
Atoms over a framed 4-graph

An atom fixes, at every vertex, which two corners are black. With the
opposite pairs (a, a') and (b, b') of a vertex (see
FramedGraph.opposite_pairs), black_choice bit 0 makes {a, b}, {a', b'}
the black corners and bit 1 makes {a, b'}, {a', b} black; the white
corners are the other two pairs.

A face is a closed alternating chain of edges and same-colour corners,
i.e. a class of half-edges under the edge mate and the corner partner.
"""

import logging
from collections import deque
from itertools import product
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from .codes import CodeKind, LinkCode
from .config import get_settings
from .cycles import CycleWalk, generating_family, transversal_count
from .errors import CapExceededError, NeedsSignedCodeError
from .graph import FramedGraph, to_framed_graph, vertex_pieces


logger = logging.getLogger(__name__)


class Atom(BaseModel):
    """Frame plus one black-corner bit per vertex (vertex order of frame.vertices)"""

    model_config = ConfigDict(frozen=True)

    frame: FramedGraph
    black_choice: Tuple[int, ...]

    @model_validator(mode="after")
    def _check_choice(self) -> "Atom":
        if len(self.black_choice) != self.frame.vertex_count:
            raise ValueError("black_choice needs one bit per vertex")
        if any(bit not in (0, 1) for bit in self.black_choice):
            raise ValueError("black_choice bits must be 0 or 1")
        return self

    def corner_partner(self, colour: str) -> List[int]:
        """Involution pairing each half with its partner in a black or white corner"""
        partner = [0] * len(self.frame.half_vertex)
        for vertex, bit in zip(self.frame.vertices, self.black_choice):
            (a, a2), (b, b2) = self.frame.opposite_pairs(vertex)
            black = ((a, b), (a2, b2)) if bit == 0 else ((a, b2), (a2, b))
            white = ((a, b2), (a2, b)) if bit == 0 else ((a, b), (a2, b2))
            for x, y in black if colour == "black" else white:
                partner[x], partner[y] = y, x
        return partner


class AtomSurface(BaseModel):
    """
    Surface data of an atom.

    A frame with several connected pieces, or with crossing-free circles,
    spans one closed surface per piece; each free loop is a sphere. Genus
    and crosscap number are summed over the pieces.

    Attributes:
        black_faces / white_faces: Face counts per colour
        euler_characteristic: V - E + F, summed over all pieces
        orientable: Whether the frame admits a source-sink structure
        genus: Sum of (2 - chi) / 2 over pieces for orientable surfaces, else None
        crosscap_number: Sum of 2 - chi over pieces for non-orientable surfaces, else None
        face_degrees: Sorted edge counts of all faces
        piece_characteristics: chi of every piece, vertex-bearing pieces
            first; empty means one piece
    """

    black_faces: int
    white_faces: int
    euler_characteristic: int
    orientable: bool
    genus: Optional[int] = None
    crosscap_number: Optional[int] = None
    face_degrees: Tuple[int, ...] = ()
    piece_characteristics: Tuple[int, ...] = ()

    @model_validator(mode="after")
    def _check_surface(self) -> "AtomSurface":
        pieces = self.piece_characteristics or (self.euler_characteristic,)
        if sum(pieces) != self.euler_characteristic:
            raise ValueError("piece characteristics must add up to chi")
        if any(chi > 2 for chi in pieces):
            raise ValueError("a closed connected surface has chi <= 2")
        if self.orientable:
            if any(chi % 2 for chi in pieces) or self.genus is None:
                raise ValueError("orientable surfaces have even chi and a genus >= 0")
            if self.genus != sum((2 - chi) // 2 for chi in pieces):
                raise ValueError("genus must be the sum of the piece genera")
            if self.crosscap_number is not None:
                raise ValueError("orientable surfaces have no crosscap number")
        else:
            if self.genus is not None:
                raise ValueError("non-orientable surfaces have no genus")
            if self.crosscap_number is not None and self.crosscap_number != sum(
                2 - chi for chi in pieces
            ):
                raise ValueError("crosscap number must be the sum over pieces")
        return self

    @property
    def fingerprint(self) -> Tuple[int, bool, Tuple[int, ...]]:
        return self.euler_characteristic, self.orientable, self.face_degrees


class OrientabilityResult(BaseModel):
    """
    Attributes:
        orientable: Frame admits a source-sink structure
        orientation: When orientable, for each edge i whether it runs from
            edges[i][0] to edges[i][1]
        witness: When not, a family walk with an odd transversal count
    """

    orientable: bool
    orientation: Optional[Tuple[bool, ...]] = None
    witness: Optional[CycleWalk] = None


# === Orientability ===

def orientability(graph: FramedGraph) -> OrientabilityResult:
    """
    Decide the source-sink structure by propagation.

    Each half gets "incoming" or not: opposite halves agree, non-opposite
    halves at a vertex differ, and the two halves of an edge differ.
    Propagation runs per connected piece from its lowest half.
    """
    n = len(graph.half_vertex)
    incoming: List[Optional[int]] = [None] * n
    consistent = True
    for seed in range(n):
        if incoming[seed] is not None:
            continue
        incoming[seed] = 1
        queue = deque([seed])
        while queue and consistent:
            h = queue.popleft()
            vertex = graph.half_vertex[h]
            rules = [(graph.opposite[h], incoming[h]), (graph.mate[h], 1 - incoming[h])]  # type: ignore[operator]
            rules.extend(
                (other, 1 - incoming[h])  # type: ignore[operator]
                for other in graph.halves_at(vertex)
                if other not in (h, graph.opposite[h])
            )
            for other, value in rules:
                if incoming[other] is None:
                    incoming[other] = value
                    queue.append(other)
                elif incoming[other] != value:
                    consistent = False
                    break
        if not consistent:
            break

    if consistent:
        orientation = tuple(bool(incoming[b]) for _, b in graph.edges)
        return OrientabilityResult(orientable=True, orientation=orientation)
    witness = next(
        (walk for walk in generating_family(graph) if transversal_count(graph, walk) % 2), None
    )
    logger.debug(f"Frame non-orientable; witness {witness.origin if witness else None}")
    return OrientabilityResult(orientable=False, witness=witness)


def cycle_orientable(graph: FramedGraph, walk: CycleWalk) -> bool:
    """A cycle keeps orientation iff it goes straight through an even number of times"""
    return transversal_count(graph, walk) % 2 == 0


def orientable_by_family(graph: FramedGraph) -> bool:
    return all(cycle_orientable(graph, walk) for walk in generating_family(graph))


# === Faces ===

def _faces(atom: Atom, colour: str) -> List[List[int]]:
    """Faces of one colour as half-edge cycles: h, mate(h), partner(mate(h)), ..."""
    mate = atom.frame.mate
    partner = atom.corner_partner(colour)
    seen = [False] * len(mate)
    faces = []
    for start in range(len(mate)):
        if seen[start]:
            continue
        cycle = []
        h = start
        while True:
            cycle.extend((h, mate[h]))
            seen[h] = seen[mate[h]] = True
            h = partner[mate[h]]
            if h == start:
                break
        faces.append(cycle)
    return faces


def face_orientable(atom: Atom) -> bool:
    """
    Orient every face so that each edge is run in opposite directions by
    its black and its white face; decided by two-colouring the faces.
    """
    graph = atom.frame
    direction: Dict[Tuple[str, int], Dict[int, int]] = {}
    for colour in ("black", "white"):
        for index, cycle in enumerate(_faces(atom, colour)):
            runs: Dict[int, int] = {}
            for k in range(0, len(cycle), 2):
                x = cycle[k]
                edge = graph.edge_of[x]
                runs[edge] = 0 if graph.edges[edge][0] == x else 1
            direction[(colour, index)] = runs

    edge_faces: Dict[int, List[Tuple[Tuple[str, int], int]]] = {}
    for face, runs in direction.items():
        for edge, run in runs.items():
            edge_faces.setdefault(edge, []).append((face, run))

    flip: Dict[Tuple[str, int], int] = {}
    for root in direction:
        if root in flip:
            continue
        flip[root] = 0
        queue = deque([root])
        while queue:
            face = queue.popleft()
            for edge in direction[face]:
                (f1, r1), (f2, r2) = edge_faces[edge]
                other, mine, theirs = (f2, r1, r2) if f1 == face else (f1, r2, r1)
                wanted = flip[face] ^ mine ^ theirs ^ 1
                if other not in flip:
                    flip[other] = wanted
                    queue.append(other)
                elif flip[other] != wanted:
                    return False
    return True


def atom_surface(atom: Atom) -> AtomSurface:
    """Trace the faces of an atom and read off its surface piece by piece"""
    black = _faces(atom, "black")
    white = _faces(atom, "white")
    graph = atom.frame
    piece_of = vertex_pieces(graph)
    count = len(set(piece_of.values()))
    chi = [0] * count
    for vertex in graph.vertices:
        chi[piece_of[vertex]] += 1
    for a, _ in graph.edges:
        chi[piece_of[graph.half_vertex[a]]] -= 1
    for face in black + white:
        chi[piece_of[graph.half_vertex[face[0]]]] += 1
    chi.extend([2] * graph.free_loops)
    orientable = orientability(graph).orientable
    return AtomSurface(
        black_faces=len(black),
        white_faces=len(white),
        euler_characteristic=sum(chi),
        orientable=orientable,
        genus=sum((2 - c) // 2 for c in chi) if orientable else None,
        crosscap_number=None if orientable else sum(2 - c for c in chi),
        face_degrees=tuple(sorted(len(face) // 2 for face in black + white)),
        piece_characteristics=tuple(chi),
    )


def enumerate_atoms(graph: FramedGraph, cap: Optional[int] = None) -> List[Atom]:
    """
    All 2^n atoms over a frame, ordered by black_choice bit vector.

    Raises:
        CapExceededError: n is above the cap (KNOT_PARITY_ATOM_CAP)
    """
    cap = get_settings().atom_cap if cap is None else cap
    n = graph.vertex_count
    if n > cap:
        raise CapExceededError(f"{n} vertices exceed the atom cap {cap}", vertices=n, cap=cap)
    return [Atom(frame=graph, black_choice=bits) for bits in product((0, 1), repeat=n)]


def canonical_atom(code: LinkCode) -> Atom:
    """
    The atom of a signed diagram.

    At a positive crossing the rotation is (over-in, under-in, over-out,
    under-out), at a negative one (over-in, under-out, over-out, under-in);
    the black corners are the first-second and third-fourth entries.

    Raises:
        NeedsSignedCodeError: FREE input
    """
    if code.kind != CodeKind.VIRTUAL:
        raise NeedsSignedCodeError("canonical_atom needs over/under and sign data")
    graph = to_framed_graph(code)
    tokens = code.tokens
    bits = []
    for vertex in graph.vertices:
        p, q = code.positions_of(vertex)
        over, under = (p, q) if tokens[p].passage == "O" else (q, p)
        if tokens[p].sign == "+":
            black = {frozenset((2 * over, 2 * under)), frozenset((2 * over + 1, 2 * under + 1))}
        else:
            black = {frozenset((2 * over, 2 * under + 1)), frozenset((2 * over + 1, 2 * under))}
        (a, a2), (b, b2) = graph.opposite_pairs(vertex)
        bits.append(0 if black == {frozenset((a, b)), frozenset((a2, b2))} else 1)
    return Atom(frame=graph, black_choice=tuple(bits))


def atom_to_dict(atom: Atom, surface: Optional[AtomSurface] = None) -> Dict[str, Any]:
    surface = surface or atom_surface(atom)
    data: Dict[str, Any] = {
        "black_choice": "".join(str(bit) for bit in atom.black_choice),
        "chi": surface.euler_characteristic,
        "orientable": surface.orientable,
    }
    if surface.orientable:
        data["genus"] = surface.genus
    else:
        data["crosscaps"] = surface.crosscap_number
    data["faces"] = {
        "black": surface.black_faces,
        "white": surface.white_faces,
        "degrees": list(surface.face_degrees),
    }
    return data
