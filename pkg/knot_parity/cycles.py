"""
Z2 cycles on framed 4-graphs

A CycleWalk is stored as its passages: (enter half, exit half) at one
vertex, where the mate of exit i is enter i + 1 (cyclically). The edge
walked after passage i is edge_of(exit i). A passage is TRANSVERSAL when
it leaves through the half opposite to the one it entered by, otherwise
it is a ROTATION.
"""

import logging
from enum import Enum
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from pydantic import BaseModel, ConfigDict

from . import gf2
from .errors import ParseError, PreconditionError, SpanError
from .graph import (
    ComponentPartition,
    FramedGraph,
    Passage,
    intersection_graph,
    unicursal_components,
    vertex_components,
)


logger = logging.getLogger(__name__)


class PassageTag(str, Enum):
    ROTATION = "R"
    TRANSVERSAL = "T"


class PassageCount(NamedTuple):
    rotations: int
    transversals: int


class CycleWalk(BaseModel):
    """
    Closed walk on a framed graph.

    Attributes:
        passages: (enter, exit) half pairs, one per vertex visit; empty for
            a free loop
        origin: Free-form tag naming where the walk came from, e.g.
            "half:3:1" or "bigon:2,5"
    """

    model_config = ConfigDict(frozen=True)

    passages: Tuple[Tuple[int, int], ...] = ()
    origin: str = ""

    def __len__(self) -> int:
        return len(self.passages)


class CycleClass(BaseModel):
    """Z2 edge vector of a cycle"""

    model_config = ConfigDict(frozen=True)

    vector: Tuple[int, ...]

    def __add__(self, other: "CycleClass") -> "CycleClass":
        return CycleClass(vector=tuple(a ^ b for a, b in zip(self.vector, other.vector)))

    def is_zero(self) -> bool:
        return not any(self.vector)

    @classmethod
    def zero(cls, width: int) -> "CycleClass":
        return cls(vector=(0,) * width)

    @classmethod
    def from_edges(cls, width: int, edges: Sequence[int]) -> "CycleClass":
        vector = [0] * width
        for edge in edges:
            vector[edge] ^= 1
        return cls(vector=tuple(vector))


# === Walk inspection ===

def check_walk(graph: FramedGraph, walk: CycleWalk) -> None:
    """Raise PreconditionError unless the walk closes up on the graph"""
    n = len(walk.passages)
    for index, (enter, exit) in enumerate(walk.passages):
        if enter == exit or graph.half_vertex[enter] != graph.half_vertex[exit]:
            raise PreconditionError(f"passage {index} does not pass through a single vertex")
        following = walk.passages[(index + 1) % n][0]
        if graph.mate[exit] != following:
            raise PreconditionError(f"walk breaks after passage {index}")


def passage_tag(graph: FramedGraph, passage: Passage) -> PassageTag:
    enter, exit = passage
    return PassageTag.TRANSVERSAL if graph.is_transversal(enter, exit) else PassageTag.ROTATION


def walk_edges(graph: FramedGraph, walk: CycleWalk) -> List[int]:
    return [graph.edge_of[exit] for _, exit in walk.passages]


def passage_profile(graph: FramedGraph, walk: CycleWalk) -> Dict[int, PassageCount]:
    """Vertex -> (rotations, transversals), counted per visit"""
    counts: Dict[int, List[int]] = {}
    for passage in walk.passages:
        vertex = graph.half_vertex[passage[0]]
        slot = counts.setdefault(vertex, [0, 0])
        if passage_tag(graph, passage) == PassageTag.ROTATION:
            slot[0] += 1
        else:
            slot[1] += 1
    return {vertex: PassageCount(r, t) for vertex, (r, t) in sorted(counts.items())}


def transversal_count(graph: FramedGraph, walk: CycleWalk) -> int:
    return sum(1 for passage in walk.passages if graph.is_transversal(*passage))


def rotation_vertices(graph: FramedGraph, walk: CycleWalk) -> List[int]:
    """Vertex of every rotation passage, with repetition"""
    return [
        graph.half_vertex[enter]
        for enter, exit in walk.passages
        if not graph.is_transversal(enter, exit)
    ]


def cycle_class(graph: FramedGraph, walk: CycleWalk) -> CycleClass:
    return CycleClass.from_edges(graph.edge_count, walk_edges(graph, walk))


def is_cycle(graph: FramedGraph, cls: CycleClass) -> bool:
    """Every vertex meets an even number of class edge ends"""
    if len(cls.vector) != graph.edge_count:
        return False
    degree: Dict[int, int] = {}
    for index, bit in enumerate(cls.vector):
        if bit:
            for half in graph.edges[index]:
                vertex = graph.half_vertex[half]
                degree[vertex] = degree.get(vertex, 0) + 1
    return all(d % 2 == 0 for d in degree.values())


# === Text form: "v1:R e1 v2:T e2" ===

def walk_to_text(graph: FramedGraph, walk: CycleWalk) -> str:
    parts = []
    for passage in walk.passages:
        vertex = graph.half_vertex[passage[0]]
        parts.append(f"{vertex}:{passage_tag(graph, passage).value}")
        parts.append(str(graph.edge_of[passage[1]]))
    return " ".join(parts)


def walk_from_text(graph: FramedGraph, text: str) -> CycleWalk:
    """
    Rebuild a walk from its text form. Loop edges leave a choice of halves;
    the first assignment consistent with the tags and closure wins.
    """
    tokens = text.split()
    if len(tokens) % 2:
        raise ParseError("walk text must alternate vertex:tag and edge", len(text))
    steps: List[Tuple[int, PassageTag, int]] = []
    for k in range(0, len(tokens), 2):
        head, edge = tokens[k], tokens[k + 1]
        try:
            vertex_text, tag_text = head.split(":")
            step = (int(vertex_text), PassageTag(tag_text), int(edge))
        except ValueError:
            raise ParseError(f"malformed walk step {head!r} {edge!r}", None)
        if not 0 <= step[2] < graph.edge_count:
            raise ParseError(f"edge {step[2]} out of range", None)
        steps.append(step)
    if not steps:
        return CycleWalk()

    def halves_of(edge: int, vertex: int) -> List[int]:
        return [h for h in graph.edges[edge] if graph.half_vertex[h] == vertex]

    n = len(steps)
    for first_enter in halves_of(steps[-1][2], steps[0][0]):
        passages: List[Passage] = []
        enter = first_enter
        for index, (vertex, tag, edge) in enumerate(steps):
            options = [
                h for h in halves_of(edge, vertex)
                if h != enter and (graph.opposite[enter] == h) == (tag == PassageTag.TRANSVERSAL)
            ]
            if not options:
                break
            exit = options[0]
            passages.append((enter, exit))
            enter = graph.mate[exit]
            if index + 1 < n and graph.half_vertex[enter] != steps[index + 1][0]:
                break
        else:
            if enter == first_enter:
                return CycleWalk(passages=tuple(passages))
    raise ParseError(f"walk {text!r} does not close up on this graph", None)


# === The generating family ===

def component_walks(graph: FramedGraph) -> List[CycleWalk]:
    """One straight-ahead walk per vertex-bearing unicursal component"""
    return [
        CycleWalk(passages=tuple(trace), origin=f"component:{index}")
        for index, trace in enumerate(graph.straight_traces)
    ]


def _visits(graph: FramedGraph, trace: Sequence[Passage], vertex: int) -> List[int]:
    return [i for i, (enter, _) in enumerate(trace) if graph.half_vertex[enter] == vertex]


def _forward(trace: Sequence[Passage], start: int, stop: int) -> List[Passage]:
    """Passages strictly between indices start and stop, going forward cyclically"""
    n = len(trace)
    out = []
    k = (start + 1) % n
    while k != stop:
        out.append(trace[k])
        k = (k + 1) % n
    return out


def halves(graph: FramedGraph, vertex: int) -> Tuple[CycleWalk, CycleWalk]:
    """
    Smooth the self-crossing vertex into its two halves.

    Raises:
        PreconditionError: The vertex is a mixed crossing
    """
    for trace in graph.straight_traces:
        visits = _visits(graph, trace, vertex)
        if len(visits) == 2:
            i, j = visits
            first = [(trace[j][0], trace[i][1])] + list(trace[i + 1 : j])
            second = [(trace[i][0], trace[j][1])] + list(trace[j + 1 :]) + list(trace[:i])
            return (
                CycleWalk(passages=tuple(first), origin=f"half:{vertex}:1"),
                CycleWalk(passages=tuple(second), origin=f"half:{vertex}:2"),
            )
        if len(visits) == 1:
            break
    raise PreconditionError(f"vertex {vertex} is a mixed crossing; halves are undefined")


def _bigon(graph: FramedGraph, trace_i: Sequence[Passage], trace_j: Sequence[Passage],
           v: int, w: int) -> CycleWalk:
    a_i, b_i = _visits(graph, trace_i, v)[0], _visits(graph, trace_i, w)[0]
    a_j, b_j = _visits(graph, trace_j, v)[0], _visits(graph, trace_j, w)[0]
    passages: List[Passage] = [(trace_j[a_j][1], trace_i[a_i][1])]
    passages.extend(_forward(trace_i, a_i, b_i))
    passages.append((trace_i[b_i][0], trace_j[b_j][0]))
    for enter, exit in reversed(_forward(trace_j, a_j, b_j)):
        passages.append((exit, enter))
    return CycleWalk(passages=tuple(passages), origin=f"bigon:{v},{w}")


def bigons(graph: FramedGraph, partition: Optional[ComponentPartition] = None) -> List[CycleWalk]:
    """One walk per pair of mixed crossings joining the same two components"""
    partition = partition or unicursal_components(graph)
    traces = graph.straight_traces
    by_pair: Dict[Tuple[int, int], List[int]] = {}
    for vertex, (i, j) in sorted(vertex_components(graph, partition).items()):
        if i != j:
            by_pair.setdefault((i, j), []).append(vertex)
    walks = []
    for (i, j), crossings in sorted(by_pair.items()):
        for a in range(len(crossings)):
            for b in range(a + 1, len(crossings)):
                walks.append(_bigon(graph, traces[i], traces[j], crossings[a], crossings[b]))
    return walks


def _fundamental_cycles(igraph: nx.Graph) -> List[List[int]]:
    """Fundamental cycles of a DFS forest rooted at the lowest node of each part"""
    cycles: List[List[int]] = []
    for part in sorted((sorted(c) for c in nx.connected_components(igraph)), key=lambda c: c[0]):
        root = part[0]
        parent = {root: None}
        tree = set()
        for u, v in nx.dfs_edges(igraph, source=root):
            parent[v] = u
            tree.add(frozenset((u, v)))

        def path_to_root(node: int) -> List[int]:
            path = [node]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])  # type: ignore[arg-type]
            return path

        for u, v in sorted(tuple(sorted(e)) for e in igraph.subgraph(part).edges()):
            if frozenset((u, v)) in tree:
                continue
            up, vp = path_to_root(u), path_to_root(v)
            common = set(up) & set(vp)
            lca = next(node for node in up if node in common)
            # u -> ... -> lca -> ... -> v, closed by the edge v - u
            left = up[: up.index(lca) + 1]
            right = list(reversed(vp[: vp.index(lca)]))
            cycles.append(left + right)
    return cycles


def intersection_cycles(
    graph: FramedGraph, partition: Optional[ComponentPartition] = None
) -> List[CycleWalk]:
    """
    One walk per fundamental cycle of the intersection graph, rotating at
    the lowest mixed crossing of each intersection edge it uses.
    """
    partition = partition or unicursal_components(graph)
    igraph = intersection_graph(graph, partition)
    traces = graph.straight_traces
    walks = []
    for cycle in _fundamental_cycles(igraph):
        m = len(cycle)
        links = [min(igraph.edges[cycle[k], cycle[(k + 1) % m]]["crossings"]) for k in range(m)]
        passages: List[Passage] = []
        for k in range(m):
            here, there = traces[cycle[k]], traces[cycle[(k + 1) % m]]
            entry = _visits(graph, here, links[k - 1])[0]
            leave = _visits(graph, here, links[k])[0]
            passages.extend(_forward(here, entry, leave))
            passages.append((here[leave][0], there[_visits(graph, there, links[k])[0]][1]))
        origin = "icycle:" + "-".join(str(c) for c in cycle)
        walks.append(CycleWalk(passages=tuple(passages), origin=origin))
    return walks


def generating_family(
    graph: FramedGraph, partition: Optional[ComponentPartition] = None
) -> List[CycleWalk]:
    """
    Spanning family of the Z2 cycle space.

    Order: both halves at every self-crossing (by vertex), bigons, walks
    along the fundamental cycles of the intersection graph, then the walk
    of every component that has no self-crossing.
    """
    partition = partition or unicursal_components(graph)
    family: List[CycleWalk] = []
    components = vertex_components(graph, partition)
    crossed = set()
    for vertex, (i, j) in sorted(components.items()):
        if i == j:
            family.extend(halves(graph, vertex))
            crossed.add(i)
    family.extend(bigons(graph, partition))
    family.extend(intersection_cycles(graph, partition))
    family.extend(walk for index, walk in enumerate(component_walks(graph)) if index not in crossed)
    logger.debug(f"Generating family of {len(family)} walks for V={graph.vertex_count}")
    return family


def family_matrix(graph: FramedGraph, family: Sequence[CycleWalk]) -> np.ndarray:
    return gf2.as_matrix([cycle_class(graph, walk).vector for walk in family], graph.edge_count)


def span_dimension(graph: FramedGraph, family: Optional[Sequence[CycleWalk]] = None) -> int:
    family = generating_family(graph) if family is None else family
    return gf2.rank(family_matrix(graph, family))


# === Decomposition ===

def _rotates_at(graph: FramedGraph, vector: Sequence[int], vertex: int) -> bool:
    used = [h for h in graph.halves_at(vertex) if vector[graph.edge_of[h]]]
    # a loop edge at the vertex contributes both of its halves
    return len(used) == 2 and graph.opposite[used[0]] != used[1]


def decompose_cycle(
    graph: FramedGraph, target: CycleClass, family: Optional[Sequence[CycleWalk]] = None
) -> List[int]:
    """
    Express a cycle over the generating family.

    First removes every rotation at a self-crossing by adding the first
    half there, which never creates rotations elsewhere; the remainder is
    solved by Z2 elimination over the whole family.

    Returns:
        0/1 coefficient per family member

    Raises:
        PreconditionError: target is not a cycle, or the family lacks a
            half needed to clear a rotation
        SpanError: target is outside the span of the family
    """
    if not is_cycle(graph, target):
        raise PreconditionError("target has odd degree at some vertex")
    family = list(generating_family(graph) if family is None else family)
    index = {walk.origin: k for k, walk in enumerate(family)}
    coefficients = [0] * len(family)
    current = list(target.vector)

    for vertex, (i, j) in sorted(vertex_components(graph).items()):
        if i != j or not _rotates_at(graph, current, vertex):
            continue
        origin = f"half:{vertex}:1"
        if origin not in index:
            raise PreconditionError(
                f"family lacks the half {origin} needed at self-crossing {vertex}", origin=origin
            )
        k = index[origin]
        coefficients[k] ^= 1
        for edge in walk_edges(graph, family[k]):
            current[edge] ^= 1

    if any(current):
        rest = gf2.solve(family_matrix(graph, family), current)
        if rest is None:
            raise SpanError("cycle is outside the span of the generating family")
        coefficients = [c ^ int(r) for c, r in zip(coefficients, rest)]
    return coefficients


def combine(graph: FramedGraph, family: Sequence[CycleWalk], coefficients: Sequence[int]) -> CycleClass:
    total = CycleClass.zero(graph.edge_count)
    for walk, c in zip(family, coefficients):
        if c:
            total = total + cycle_class(graph, walk)
    return total
