import random
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterator, Sequence

import networkx as nx
import pytest

from src.constants import SAMPLE_DENOMINATOR_BOUND, SAMPLE_NUMERATOR_BOUND
from src.graph import build_graph, Graph, sequential_labels
from src.parsing import parse_graph

Point = tuple[Fraction, ...]

BOWTIE = """
vertices: a b c d e
a b
a c
b c
c d
c e
d e
"""


def from_networkx(nx_graph: nx.Graph) -> Graph:
    nodes = sorted(nx_graph.nodes)
    labels = dict(zip(nodes, sequential_labels(count=len(nodes))))
    return build_graph(
        vertices=[labels[node] for node in nodes],
        edges=[(labels[u], labels[v]) for u, v in nx_graph.edges],
    )


def random_fraction(rng: random.Random) -> Fraction:
    numerator = rng.randint(-SAMPLE_NUMERATOR_BOUND, SAMPLE_NUMERATOR_BOUND)
    return Fraction(numerator, rng.randint(1, SAMPLE_DENOMINATOR_BOUND))


@pytest.fixture
def octahedron() -> Graph:
    return parse_graph(text="Km(2,2,2)")


@pytest.fixture
def bowtie() -> Graph:
    return parse_graph(text=BOWTIE)


@pytest.fixture
def petersen() -> Graph:
    return from_networkx(nx_graph=nx.petersen_graph())


@pytest.fixture
def catalog() -> dict[str, Graph]:
    """Named graphs whose classification is known; trees are added separately."""

    graphs = {f"K({n})": parse_graph(text=f"K({n})") for n in range(1, 7)}
    graphs.update({f"Kbar({n})": parse_graph(text=f"Kbar({n})") for n in range(1, 5)})
    for name in ("Km(2,2)", "Km(2,3)", "Km(1,2,2)", "Km(2,2,2)", "Km(2,2,2,2)"):
        graphs[name] = parse_graph(text=name)
    graphs["cycle(4)"] = parse_graph(text="cycle(4)")
    graphs["cycle(5)"] = parse_graph(text="cycle(5)")
    graphs["bowtie"] = parse_graph(text=BOWTIE)
    graphs["petersen"] = from_networkx(nx_graph=nx.petersen_graph())
    return graphs


@pytest.fixture
def trees() -> Callable[[int], Iterator[Graph]]:
    """All trees on 1..max_vertices vertices, up to isomorphism."""

    def generate(max_vertices: int) -> Iterator[Graph]:
        yield parse_graph(text="K(1)")
        for n in range(2, max_vertices + 1):
            for tree in nx.nonisomorphic_trees(n):
                yield from_networkx(nx_graph=tree)

    return generate


@pytest.fixture
def atlas_graphs() -> Callable[[int], Iterator[Graph]]:
    """Every graph on 1..max_vertices vertices up to isomorphism (max 7)."""

    def generate(max_vertices: int) -> Iterator[Graph]:
        for nx_graph in nx.graph_atlas_g():
            if 1 <= nx_graph.number_of_nodes() <= max_vertices:
                yield from_networkx(nx_graph=nx_graph)

    return generate


@pytest.fixture
def labeled_graphs() -> Callable[[int], Iterator[Graph]]:
    """Every labeled graph on v1..vn."""

    def generate(n: int) -> Iterator[Graph]:
        vertices = sequential_labels(count=n)
        pairs = list(combinations(vertices, 2))
        for mask in range(2 ** len(pairs)):
            edges = [pair for bit, pair in enumerate(pairs) if mask >> bit & 1]
            yield build_graph(vertices=vertices, edges=edges)

    return generate


@pytest.fixture
def random_graphs() -> Callable[[int, int, int], list[Graph]]:
    def generate(n: int, count: int, seed: int) -> list[Graph]:
        rng = random.Random(seed)
        vertices = sequential_labels(count=n)
        graphs = []
        for _ in range(count):
            edges = [pair for pair in combinations(vertices, 2) if rng.random() < 0.5]
            graphs.append(build_graph(vertices=vertices, edges=edges))
        return graphs

    return generate


@pytest.fixture
def random_points() -> Callable[[int, int, int], list[Point]]:
    """Seeded nonzero rational points with small numerators and denominators."""

    def generate(dimension: int, count: int, seed: int) -> list[Point]:
        rng = random.Random(seed)
        points: list[Point] = []
        while len(points) < count:
            point = tuple(random_fraction(rng=rng) for _ in range(dimension))
            if any(point):
                points.append(point)
        return points

    return generate


@pytest.fixture
def span_points() -> Callable[[Sequence[Point], int, int], list[Point]]:
    """Seeded nonzero rational combinations of the given vectors."""

    def generate(basis: Sequence[Point], count: int, seed: int) -> list[Point]:
        rng = random.Random(seed)
        dimension = len(basis[0])
        points: list[Point] = []
        while len(points) < count:
            coefficients = [random_fraction(rng=rng) for _ in basis]
            point = tuple(
                sum((c * vector[i] for c, vector in zip(coefficients, basis)), Fraction(0))
                for i in range(dimension)
            )
            if any(point):
                points.append(point)
        return points

    return generate
