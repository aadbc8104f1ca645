"""
Framed 4-graphs

Every vertex owns four half-edges split into two opposite pairs; edges
are a perfect matching on half-edges. A graph built from a LinkCode uses
the position layout below, but hand-built graphs only need to satisfy the
invariants checked by FramedGraph.

Position layout for code-built graphs:
    half 2p     arrives at the crossing of global position p
    half 2p + 1 leaves it; opposite(h) == h ^ 1
    edge p      joins 2p + 1 to 2 * next(p): the arc leaving position p
"""

import logging
from collections import Counter
from functools import cached_property
from typing import Dict, List, Optional, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, model_validator

from .codes import LinkCode


logger = logging.getLogger(__name__)

Passage = Tuple[int, int]  # (enter half, exit half) at one vertex


class FramedGraph(BaseModel):
    """
    Abstract 4-valent graph with opposite half-edge pairs.

    Attributes:
        half_vertex: Vertex id of every half-edge
        opposite: Opposite half of every half-edge
        edges: Half-edge pairs; edge i is edges[i]
        free_loops: Crossing-free circles, tracked by count only
    """

    model_config = ConfigDict(frozen=True)

    half_vertex: Tuple[int, ...]
    opposite: Tuple[int, ...]
    edges: Tuple[Tuple[int, int], ...]
    free_loops: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def _check_frame(self) -> "FramedGraph":
        n = len(self.half_vertex)
        if len(self.opposite) != n:
            raise ValueError("opposite must cover every half-edge")
        for vertex, count in Counter(self.half_vertex).items():
            if count != 4:
                raise ValueError(f"vertex {vertex} has {count} half-edges (expected 4)")
        for h, o in enumerate(self.opposite):
            if not 0 <= o < n or o == h or self.opposite[o] != h:
                raise ValueError(f"opposite is not a fixed-point-free involution at half {h}")
            if self.half_vertex[o] != self.half_vertex[h]:
                raise ValueError(f"halves {h} and {o} are opposite but sit at different vertices")
        covered = Counter(h for edge in self.edges for h in edge)
        if sorted(covered) != list(range(n)) or any(c != 1 for c in covered.values()):
            raise ValueError("edges must match every half-edge exactly once")
        return self

    # === Derived structure ===

    @cached_property
    def vertices(self) -> List[int]:
        return sorted(set(self.half_vertex))

    @cached_property
    def mate(self) -> List[int]:
        """Other end of the edge through each half"""
        mate = [0] * len(self.half_vertex)
        for a, b in self.edges:
            mate[a], mate[b] = b, a
        return mate

    @cached_property
    def edge_of(self) -> List[int]:
        edge_of = [0] * len(self.half_vertex)
        for index, (a, b) in enumerate(self.edges):
            edge_of[a] = edge_of[b] = index
        return edge_of

    @cached_property
    def _halves_by_vertex(self) -> Dict[int, List[int]]:
        table: Dict[int, List[int]] = {}
        for h, vertex in enumerate(self.half_vertex):
            table.setdefault(vertex, []).append(h)
        return table

    def halves_at(self, vertex: int) -> List[int]:
        return list(self._halves_by_vertex[vertex])

    def opposite_pairs(self, vertex: int) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        """
        The two opposite pairs at a vertex, in a fixed order: the first
        pair holds the lowest half, each pair is (lower half, its opposite).
        """
        halves = self._halves_by_vertex[vertex]
        a = min(halves)
        b = min(h for h in halves if h not in (a, self.opposite[a]))
        return (a, self.opposite[a]), (b, self.opposite[b])

    def is_transversal(self, enter: int, exit: int) -> bool:
        return self.opposite[enter] == exit

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    # === Straight-ahead tracing ===

    @cached_property
    def straight_traces(self) -> List[List[Passage]]:
        """
        One closed straight-ahead walk per vertex-bearing unicursal
        component, as passages (enter, exit). Each walk starts on the
        lowest-numbered edge not yet used, in that edge's stored direction.
        """
        traces: List[List[Passage]] = []
        used = [False] * len(self.edges)
        for start_edge in range(len(self.edges)):
            if used[start_edge]:
                continue
            used[start_edge] = True
            start = self.edges[start_edge][1]
            enter = start
            walk: List[Passage] = []
            while True:
                exit = self.opposite[enter]
                walk.append((enter, exit))
                used[self.edge_of[exit]] = True
                enter = self.mate[exit]
                if enter == start:
                    break
            traces.append(walk)
        return traces


class ComponentPartition(BaseModel):
    """
    Unicursal components.

    Attributes:
        assignment: Component id of every half-edge
        count: Number of components, free loops included
        free_loops: Ids count - free_loops .. count - 1 are crossing-free
    """

    model_config = ConfigDict(frozen=True)

    assignment: Tuple[int, ...]
    count: int
    free_loops: int = 0

    def component_of_half(self, half: int) -> int:
        return self.assignment[half]


def to_framed_graph(code: LinkCode) -> FramedGraph:
    """
    Build the framed 4-graph of a Gauss code.

    Returns:
        FramedGraph using the position layout of this module; edge p is
        the arc leaving global position p
    """
    tokens = code.tokens
    half_vertex: List[int] = []
    for token in tokens:
        half_vertex.extend((token.label, token.label))
    opposite = tuple(h ^ 1 for h in range(2 * len(tokens)))
    edges = tuple((2 * p + 1, 2 * code.next_position(p)) for p in range(len(tokens)))
    free_loops = sum(1 for circle in code.circles if not circle)
    graph = FramedGraph(
        half_vertex=tuple(half_vertex), opposite=opposite, edges=edges, free_loops=free_loops
    )
    logger.debug(f"Framed graph: V={graph.vertex_count} E={graph.edge_count} free={free_loops}")
    return graph


def unicursal_components(graph: FramedGraph) -> ComponentPartition:
    """
    Partition half-edges by continuing straight through opposite pairs.

    Vertex-bearing components get ids in order of their lowest edge; free
    loops take the ids after them. For code-built graphs without empty
    circles the ids equal circle indices.
    """
    assignment = [-1] * len(graph.half_vertex)
    for index, walk in enumerate(graph.straight_traces):
        for enter, exit in walk:
            assignment[enter] = index
            assignment[exit] = index
            assignment[graph.mate[exit]] = index
    traced = len(graph.straight_traces)
    return ComponentPartition(
        assignment=tuple(assignment), count=traced + graph.free_loops, free_loops=graph.free_loops
    )


def vertex_components(
    graph: FramedGraph, partition: Optional[ComponentPartition] = None
) -> Dict[int, Tuple[int, int]]:
    """Vertex -> component ids of its two opposite pairs, sorted"""
    partition = partition or unicursal_components(graph)
    result = {}
    for vertex in graph.vertices:
        first, second = graph.opposite_pairs(vertex)
        ids = sorted((partition.assignment[first[0]], partition.assignment[second[0]]))
        result[vertex] = (ids[0], ids[1])
    return result


def self_crossings(graph: FramedGraph, partition: Optional[ComponentPartition] = None) -> List[int]:
    return [v for v, (i, j) in vertex_components(graph, partition).items() if i == j]


def mixed_crossings(graph: FramedGraph, partition: Optional[ComponentPartition] = None) -> List[int]:
    return [v for v, (i, j) in vertex_components(graph, partition).items() if i != j]


def intersection_graph(
    graph: FramedGraph, partition: Optional[ComponentPartition] = None
) -> nx.Graph:
    """
    Simple graph on component ids.

    Edge (i, j) exists iff some vertex has one opposite pair in component i
    and the other in component j. The edge attribute ``crossings`` lists
    those vertices in increasing order.
    """
    partition = partition or unicursal_components(graph)
    igraph = nx.Graph()
    igraph.add_nodes_from(range(partition.count))
    for vertex, (i, j) in sorted(vertex_components(graph, partition).items()):
        if i == j:
            continue
        if igraph.has_edge(i, j):
            igraph.edges[i, j]["crossings"].append(vertex)
        else:
            igraph.add_edge(i, j, crossings=[vertex])
    return igraph


def vertex_pieces(graph: FramedGraph) -> Dict[int, int]:
    """Vertex -> connected piece of the underlying 4-graph, pieces numbered by lowest vertex"""
    underlying = nx.MultiGraph()
    underlying.add_nodes_from(graph.vertices)
    for a, b in graph.edges:
        underlying.add_edge(graph.half_vertex[a], graph.half_vertex[b])
    pieces = sorted((sorted(c) for c in nx.connected_components(underlying)), key=lambda c: c[0])
    return {vertex: index for index, piece in enumerate(pieces) for vertex in piece}


def graph_components(graph: FramedGraph) -> int:
    """Connected components of the underlying 4-graph, free loops excluded"""
    return len(set(vertex_pieces(graph).values()))


def cycle_space_dimension(graph: FramedGraph) -> int:
    """E - V + c over the vertex-bearing part of the graph"""
    return graph.edge_count - graph.vertex_count + graph_components(graph)
