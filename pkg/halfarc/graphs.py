# -*- coding: utf-8 -*-
"""Simple undirected graphs, their quotients, covers and degeneracy."""

import collections
import enum

import networkx

from halfarc.partitions import Partition


class InvalidEdgeError(ValueError):
    """Raised when an edge is a loop or has an endpoint out of range."""


class UGraph(object):
    """A simple undirected graph on the vertices ``0..vertex_count-1``.

    Use :func:`build` to construct instances from an edge list.

    Args:
        vertex_count (int): number of vertices
        adjacency (sequence): ``adjacency[v]`` holds the neighbors of ``v``,
            assumed symmetric and loop free
    """

    def __init__(self, vertex_count, adjacency):
        self.vertex_count = vertex_count
        self.adjacency = tuple(tuple(sorted(set(neighbors))) for neighbors in adjacency)
        self._neighbor_sets = tuple(frozenset(neighbors) for neighbors in self.adjacency)

    def neighbors(self, vertex):
        """Sorted tuple of the neighbors of ``vertex``."""
        return self.adjacency[vertex]

    def degree(self, vertex):
        """Number of neighbors of ``vertex``."""
        return len(self.adjacency[vertex])

    def has_edge(self, first, second):
        """True if ``first`` and ``second`` are adjacent."""
        return second in self._neighbor_sets[first]

    def edges(self):
        """Edges as ``(u, v)`` pairs with ``u < v``, in lexicographic order."""
        return [(u, v) for u, neighbors in enumerate(self.adjacency) for v in neighbors if u < v]

    def edge_count(self):
        """Number of edges."""
        return sum(len(neighbors) for neighbors in self.adjacency) // 2

    def arcs(self):
        """Arcs (ordered pairs of adjacent vertices) in lexicographic order."""
        return [(u, v) for u, neighbors in enumerate(self.adjacency) for v in neighbors]

    def __eq__(self, other):
        if not isinstance(other, UGraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.adjacency == other.adjacency

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.vertex_count, self.adjacency))

    def __repr__(self):
        return "UGraph(<{0} vertices, {1} edges>)".format(self.vertex_count, self.edge_count())


def build(vertex_count, edges):
    """Builds a simple graph from an edge list.

    Repeated edges are merged, the adjacency is made symmetric.

    Args:
        vertex_count (int): number of vertices
        edges (iterable): pairs of vertex indices

    Returns:
        UGraph: the graph

    Raises:
        InvalidEdgeError: if an edge is a loop or an endpoint is out of range
    """
    adjacency = [set() for _ in range(vertex_count)]
    for first, second in edges:
        for endpoint in (first, second):
            if not 0 <= endpoint < vertex_count:
                msg = "vertex {0} out of range [graph has {1} vertices]"
                raise InvalidEdgeError(msg.format(endpoint, vertex_count))
        if first == second:
            raise InvalidEdgeError("loops are not allowed [vertex {0}]".format(first))
        adjacency[first].add(second)
        adjacency[second].add(first)
    return UGraph(vertex_count, adjacency)


class DegeneracyKind(enum.Enum):
    """Shapes a normal quotient can take."""

    K1 = "K1"
    K2 = "K2"
    CYCLE = "cycle"
    NON_DEGENERATE = "non-degenerate"


class Degeneracy(collections.namedtuple("Degeneracy", ["kind", "length"])):
    """Degeneracy class of a graph: K1, K2, a cycle of given length, or none."""

    __slots__ = ()

    @classmethod
    def cycle(cls, length):
        """Cycle on ``length >= 3`` vertices."""
        if length < 3:
            raise ValueError("cycles have at least 3 vertices [got {0}]".format(length))
        return cls(DegeneracyKind.CYCLE, length)

    @property
    def is_degenerate(self):
        """True for K1, K2 and cycles."""
        return self.kind is not DegeneracyKind.NON_DEGENERATE

    @property
    def is_cycle(self):
        """True for cycles."""
        return self.kind is DegeneracyKind.CYCLE

    @property
    def tag(self):
        """Short name used in reports."""
        return self.kind.value

    def __str__(self):
        if self.is_cycle:
            return "C{0}".format(self.length)
        return self.kind.value


K1 = Degeneracy(DegeneracyKind.K1, None)
K2 = Degeneracy(DegeneracyKind.K2, None)
NON_DEGENERATE = Degeneracy(DegeneracyKind.NON_DEGENERATE, None)


def classify_degenerate(graph):
    """Tells whether a graph is K1, K2, a cycle or none of those.

    A graph on two vertices without an edge is non-degenerate.

    Args:
        graph (UGraph): graph to be classified

    Returns:
        Degeneracy: the class of ``graph``
    """
    count = graph.vertex_count
    if count == 1:
        return K1
    if count == 2 and graph.has_edge(0, 1):
        return K2
    if count >= 3 and is_regular(graph, 2) and is_connected(graph):
        return Degeneracy.cycle(count)
    return NON_DEGENERATE


def quotient(graph, partition):
    """Quotient graph on the cells of a partition.

    Two cells are adjacent when some edge joins them. Edges inside a cell are
    dropped, so the quotient has no loops.

    Args:
        graph (UGraph): the graph
        partition (Partition): partition of the vertices of ``graph``

    Returns:
        UGraph: graph on ``0..len(partition)-1``

    Raises:
        ValueError: if ``partition`` does not partition the vertices
    """
    if not partition.covers(graph.vertex_count):
        raise ValueError("the partition must cover the {0} vertices".format(graph.vertex_count))
    cell_of = partition.cell_of
    edges = set()
    for first, second in graph.edges():
        a, b = cell_of[first], cell_of[second]
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return build(len(partition), sorted(edges))


def has_intra_cell_edges(graph, partition):
    """True if some edge joins two vertices of the same cell."""
    cell_of = partition.cell_of
    return any(cell_of[u] == cell_of[v] for u, v in graph.edges())


def standard_double_cover(graph):
    """Standard double cover of a graph.

    Vertex ``x`` of layer ``d`` (0 or 1) is numbered ``x + d * n``; ``x`` in one
    layer is adjacent to ``y`` in the other whenever ``x`` and ``y`` are adjacent.

    Args:
        graph (UGraph): the covered graph

    Returns:
        UGraph: graph on ``2 * n`` vertices
    """
    size = graph.vertex_count
    edges = []
    for first, second in graph.edges():
        edges.append((first, second + size))
        edges.append((first + size, second))
    return build(2 * size, edges)


#: Induced subgraph together with the relabeling of the kept vertices
InducedSubgraph = collections.namedtuple("InducedSubgraph", ["graph", "index_map", "vertices"])


def induced(graph, keep):
    """Subgraph induced on a set of vertices.

    Args:
        graph (UGraph): the graph
        keep (iterable of int): vertices to keep

    Returns:
        InducedSubgraph: the subgraph, the map from old to new vertex indices
        and the kept vertices in their new order

    Raises:
        ValueError: if ``keep`` is empty
    """
    vertices = tuple(sorted(set(keep)))
    if not vertices:
        raise ValueError("an induced subgraph needs at least one vertex")
    index_map = {old: new for new, old in enumerate(vertices)}
    edges = [
        (index_map[u], index_map[v])
        for u, v in graph.edges()
        if u in index_map and v in index_map
    ]
    return InducedSubgraph(build(len(vertices), edges), index_map, vertices)


def is_connected(graph):
    """True if the graph has exactly one connected component.

    The graph with no vertices counts as disconnected.
    """
    if graph.vertex_count == 0:
        return False
    return networkx.is_connected(to_networkx(graph))


def is_regular(graph, valency=None):
    """True if all vertices have the same degree (equal to ``valency`` if given)."""
    degrees = {len(neighbors) for neighbors in graph.adjacency}
    if valency is None:
        return len(degrees) <= 1
    return degrees <= {valency}


def is_bipartite(graph, witness=False):
    """Checks whether a graph is bipartite.

    Args:
        graph (UGraph): the graph
        witness (bool): if True, also return a proper 2-coloring

    Returns:
        bool, or ``(bool, coloring)`` when ``witness`` is True. The coloring
        is a tuple of 0/1 colors, or None if the graph is not bipartite
    """
    nx_graph = to_networkx(graph)
    if not witness:
        return networkx.is_bipartite(nx_graph)
    try:
        colors = networkx.bipartite.color(nx_graph)
    except networkx.NetworkXError:
        return False, None
    return True, tuple(colors[vertex] for vertex in range(graph.vertex_count))


def is_automorphism(graph, perm):
    """True if ``perm`` maps edges of ``graph`` onto edges."""
    if perm.domain_size != graph.vertex_count:
        return False
    return all(graph.has_edge(perm(u), perm(v)) for u, v in graph.edges())


def to_networkx(graph):
    """Converts a graph to a ``networkx.Graph`` with the same vertex numbers."""
    result = networkx.Graph()
    result.add_nodes_from(range(graph.vertex_count))
    result.add_edges_from(graph.edges())
    return result


def from_networkx(nx_graph):
    """Converts a ``networkx.Graph`` whose nodes are ``0..n-1``."""
    return build(nx_graph.number_of_nodes(), nx_graph.edges())


def to_graph6(graph):
    """Encodes a graph in graph6 format, without header and trailing newline."""
    return networkx.to_graph6_bytes(to_networkx(graph), header=False).rstrip(b"\n")


def from_graph6(data):
    """Decodes a graph6 string (bytes or str), with or without header."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    return from_networkx(networkx.from_graph6_bytes(data))


__all__ = [
    "Partition",
    "UGraph",
    "InvalidEdgeError",
    "DegeneracyKind",
    "Degeneracy",
    "K1",
    "K2",
    "NON_DEGENERATE",
    "build",
    "classify_degenerate",
    "quotient",
    "has_intra_cell_edges",
    "standard_double_cover",
    "InducedSubgraph",
    "induced",
    "is_connected",
    "is_regular",
    "is_bipartite",
    "is_automorphism",
    "to_networkx",
    "from_networkx",
    "to_graph6",
    "from_graph6",
]
