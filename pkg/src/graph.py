import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional, Sequence

import networkx as nx

from src.constants import VERTEX_PREFIX
from src.exceptions import EmptyGraphException, GraphParseException

logger = logging.getLogger(__name__)

VertexSet = tuple[str, ...]
Edge = tuple[str, str]


@dataclass(frozen=True)
class Graph:
    """
    Finite simple graph with a fixed total order on its vertices.

    Every sign convention downstream (edge orientation, clique orientation, cup product
    signs, directed triangles) is read off `vertices`, so the order never changes once the
    graph exists. Build instances through `build_graph`, which validates and canonicalizes.
    """

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        assert len(set(self.vertices)) == len(self.vertices)
        for u, v in self.edges:
            assert self.index[u] < self.index[v]
        assert list(self.edges) == sorted(self.edges, key=self.edge_key)
        assert len(set(self.edges)) == len(self.edges)

    @cached_property
    def index(self) -> dict[str, int]:
        return {vertex: position for position, vertex in enumerate(self.vertices)}

    @cached_property
    def edge_set(self) -> frozenset[frozenset[str]]:
        return frozenset(frozenset(edge) for edge in self.edges)

    @property
    def number_of_vertices(self) -> int:
        return len(self.vertices)

    @property
    def number_of_edges(self) -> int:
        return len(self.edges)

    def edge_key(self, edge: Edge) -> tuple[int, int]:
        return (self.index[edge[0]], self.index[edge[1]])

    def has_edge(self, u: str, v: str) -> bool:
        return frozenset((u, v)) in self.edge_set

    def neighbors(self, vertex: str) -> VertexSet:
        return tuple(other for other in self.vertices if self.has_edge(vertex, other))

    def sort_vertices(self, labels: Iterable[str]) -> VertexSet:
        return tuple(sorted(labels, key=lambda label: self.index[label]))

    def orient(self, u: str, v: str) -> Edge:
        if self.index[u] < self.index[v]:
            return (u, v)
        return (v, u)

    def is_clique(self, labels: Sequence[str]) -> bool:
        return all(self.has_edge(u, v) for u, v in combinations(labels, 2))

    def to_networkx(self) -> nx.Graph:
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(self.vertices)
        nx_graph.add_edges_from(self.edges)
        return nx_graph


@dataclass(frozen=True)
class MultipartiteParts:
    sizes: tuple[int, ...]
    parts: tuple[VertexSet, ...]


@dataclass(frozen=True)
class TriangleCover:
    triangles: tuple[VertexSet, ...]
    uncovered_edges: tuple[Edge, ...]


def build_graph(vertices: Sequence[str], edges: Iterable[Sequence[str]]) -> Graph:

    if len(set(vertices)) != len(vertices):
        raise GraphParseException("Duplicate vertex labels")

    index = {vertex: position for position, vertex in enumerate(vertices)}
    oriented: set[Edge] = set()

    for edge in edges:
        if len(edge) != 2:
            raise GraphParseException(f"Edge must have two endpoints: {edge}")
        u, v = edge
        if u not in index or v not in index:
            raise GraphParseException(f"Edge endpoint is not a declared vertex: {u} {v}")
        if u == v:
            raise GraphParseException(f"Loop at vertex {u}")
        oriented_edge = (u, v) if index[u] < index[v] else (v, u)
        if oriented_edge in oriented:
            raise GraphParseException(f"Duplicate edge {u} {v}")
        oriented.add(oriented_edge)

    sorted_edges = sorted(oriented, key=lambda edge: (index[edge[0]], index[edge[1]]))

    return Graph(vertices=tuple(vertices), edges=tuple(sorted_edges))


def vertex_set(g: Graph, labels: Iterable[str]) -> VertexSet:

    label_list = list(labels)
    unknown = [label for label in label_list if label not in g.index]
    if unknown:
        raise GraphParseException(f"Unknown vertex labels: {unknown}")
    if len(set(label_list)) != len(label_list):
        raise GraphParseException("Duplicate vertex labels")

    return g.sort_vertices(label_list)


def sequential_labels(count: int, offset: int = 0) -> list[str]:
    return [f"{VERTEX_PREFIX}{i}" for i in range(offset + 1, offset + count + 1)]


def complete_graph(n: int) -> Graph:
    vertices = sequential_labels(count=n)
    return build_graph(vertices=vertices, edges=combinations(vertices, 2))


def edgeless_graph(n: int) -> Graph:
    return build_graph(vertices=sequential_labels(count=n), edges=[])


def path_graph(n: int) -> Graph:
    vertices = sequential_labels(count=n)
    return build_graph(vertices=vertices, edges=zip(vertices, vertices[1:]))


def cycle_graph(n: int) -> Graph:
    vertices = sequential_labels(count=n)
    edges = list(zip(vertices, vertices[1:])) + [(vertices[-1], vertices[0])]
    return build_graph(vertices=vertices, edges=edges)


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    vertices = sequential_labels(count=sum(sizes))
    part_of: dict[str, int] = {}
    position = 0
    for part_number, size in enumerate(sizes):
        for vertex in vertices[position : position + size]:  # noqa: E203
            part_of[vertex] = part_number
        position += size

    edges = [(u, v) for u, v in combinations(vertices, 2) if part_of[u] != part_of[v]]
    return build_graph(vertices=vertices, edges=edges)


def relabel_sequential(g: Graph, offset: int = 0) -> Graph:
    mapping = dict(zip(g.vertices, sequential_labels(count=g.number_of_vertices, offset=offset)))
    return build_graph(
        vertices=[mapping[v] for v in g.vertices],
        edges=[(mapping[u], mapping[v]) for u, v in g.edges],
    )


def join(a: Graph, b: Graph) -> Graph:
    """Join with fresh labels: a takes v1..v|a|, b continues the numbering."""
    left = relabel_sequential(g=a)
    right = relabel_sequential(g=b, offset=a.number_of_vertices)
    return join_of(factors=[left, right])


def join_of(factors: Sequence[Graph]) -> Graph:

    vertices = [v for factor in factors for v in factor.vertices]
    if len(set(vertices)) != len(vertices):
        raise GraphParseException("Join factors must have disjoint vertex labels")

    edges: list[Edge] = [edge for factor in factors for edge in factor.edges]
    for first, second in combinations(factors, 2):
        edges += [(u, v) for u in first.vertices for v in second.vertices]

    return build_graph(vertices=vertices, edges=edges)


def induced_subgraph(g: Graph, w: Iterable[str]) -> Graph:
    labels = vertex_set(g=g, labels=w)
    members = set(labels)
    edges = [(u, v) for u, v in g.edges if u in members and v in members]
    return build_graph(vertices=labels, edges=edges)


def complement(g: Graph) -> Graph:
    edges = [(u, v) for u, v in combinations(g.vertices, 2) if not g.has_edge(u, v)]
    return build_graph(vertices=g.vertices, edges=edges)


def is_connected(g: Graph) -> bool:
    if g.number_of_vertices == 0:
        return False
    return bool(nx.is_connected(g.to_networkx()))


def connected_components(g: Graph) -> list[VertexSet]:
    components = [g.sort_vertices(c) for c in nx.connected_components(g.to_networkx())]
    return sorted(components, key=lambda component: g.index[component[0]])


def connectivity(g: Graph) -> int:
    """Vertex connectivity, with kappa(K_n) = n - 1, kappa(K_1) = 0, disconnected = 0."""

    n = g.number_of_vertices
    if n == 0:
        raise EmptyGraphException("Connectivity of the empty graph is undefined")
    if n == 1:
        return 0
    if g.number_of_edges == n * (n - 1) // 2:
        return n - 1
    if not is_connected(g):
        return 0

    return int(nx.node_connectivity(g.to_networkx()))


def is_tree(g: Graph) -> bool:
    if g.number_of_vertices == 0:
        return False
    return is_connected(g) and g.number_of_edges == g.number_of_vertices - 1


def is_complete(g: Graph) -> bool:
    n = g.number_of_vertices
    return g.number_of_edges == n * (n - 1) // 2


def multipartite_parts(g: Graph) -> Optional[MultipartiteParts]:
    """
    Parts of a complete multipartite graph, or None.

    The complement of a complete multipartite graph is a disjoint union of cliques, and
    the parts are the components of that complement.
    """

    if g.number_of_vertices == 0:
        raise EmptyGraphException("Multipartite recognition needs at least one vertex")

    co_graph = complement(g=g)
    parts = connected_components(g=co_graph)

    for part in parts:
        if not co_graph.is_clique(part):
            return None

    parts.sort(key=lambda part: (len(part), g.index[part[0]]))

    return MultipartiteParts(sizes=tuple(len(part) for part in parts), parts=tuple(parts))


def join_decomposition(g: Graph) -> list[Graph]:

    if g.number_of_vertices == 0:
        raise EmptyGraphException("Join decomposition needs at least one vertex")

    factors = connected_components(g=complement(g=g))

    return [induced_subgraph(g=g, w=factor) for factor in factors]


def triangle_cover(g: Graph) -> TriangleCover:

    triangles = [
        (u, v, w)
        for u, v, w in combinations(g.vertices, 3)
        if g.has_edge(u, v) and g.has_edge(v, w) and g.has_edge(u, w)
    ]

    covered: set[Edge] = set()
    for u, v, w in triangles:
        covered.update([(u, v), (v, w), (u, w)])

    uncovered = [edge for edge in g.edges if edge not in covered]

    return TriangleCover(triangles=tuple(triangles), uncovered_edges=tuple(uncovered))
