import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations
from typing import Optional

import networkx as nx

from src.algebra_types import Ambient, Isotropicity, ObstructionMode, ObstructionReport
from src.cohomology import (
    bb_ring,
    Cocycle,
    CohomologyRing,
    cup,
    iota_star,
    raag_ring,
)
from src.constants import MAX_RESONANCE_VERTICES, TIETZE_BUDGET
from src.exceptions import LargeGraphException, PreconditionException, ZeroCocycleException
from src.graph import connectivity, Graph, VertexSet
from src.linalg import in_span, rank

logger = logging.getLogger(__name__)

RestrictedProducts = dict[tuple[int, int], tuple[Fraction, ...]]


@dataclass(frozen=True)
class ResonanceComponent:
    ambient: Ambient
    w: VertexSet
    dimension: int
    basis: tuple[Cocycle, ...]
    isotropicity: Isotropicity

    def __post_init__(self) -> None:
        assert self.dimension == len(self.basis)
        assert all(element.degree == 1 for element in self.basis)

    def label(self) -> str:
        return f"{self.ambient.value} component over W={{{', '.join(self.w)}}}"


@dataclass(frozen=True)
class ObstructionVerdict:
    passed: bool
    mode: ObstructionMode
    witness: Optional[str] = None

    def __post_init__(self) -> None:
        assert (self.witness is None) == self.passed

    def report(self) -> ObstructionReport:
        return ObstructionReport(passed=self.passed, mode=self.mode, witness=self.witness)


def multiplication_matrix(r: CohomologyRing, a: Cocycle) -> list[tuple[Fraction, ...]]:
    """Rows are the products x * a for the degree-1 basis elements x."""

    return [
        cup(r=r, x=r.basis_cocycle(degree=1, position=i), y=a).coordinates
        for i in range(r.dimension(1))
    ]


def resonance_membership(r: CohomologyRing, a: Cocycle) -> bool:
    """
    Whether a lies in the first resonance variety, i.e. H^1(A, a) != 0.

    The image of multiplication by a from A^0 is the line through a, so a is resonant
    exactly when the kernel of multiplication by a on A^1 has dimension at least 2.
    """

    assert a.degree == 1
    if all(value == 0 for value in a.coordinates):
        raise ZeroCocycleException("Resonance membership is not defined for the zero class")

    kernel = r.dimension(1) - rank(rows=multiplication_matrix(r=r, a=a), columns=r.dimension(2))

    return kernel > 1


def component_contains(c: ResonanceComponent, a: Cocycle) -> bool:
    assert a.degree == 1
    return in_span(vector=a.coordinates, basis=[element.coordinates for element in c.basis])


def maximal_disconnected_sets(g: Graph, allow_large: bool = False) -> list[VertexSet]:
    """
    Every vertex set W maximal among those inducing a disconnected subgraph.

    W is maximal iff each vertex outside W is adjacent to every connected component of
    the induced subgraph on W.
    """

    if g.number_of_vertices > MAX_RESONANCE_VERTICES and not allow_large:
        raise LargeGraphException(
            f"Resonance enumeration over {g.number_of_vertices} vertices exceeds "
            f"{MAX_RESONANCE_VERTICES}; pass allow_large to proceed"
        )

    nx_graph = g.to_networkx()
    found: list[VertexSet] = []

    for size in range(2, g.number_of_vertices + 1):
        for w in combinations(g.vertices, size):
            components = list(nx.connected_components(nx_graph.subgraph(w)))
            if len(components) < 2:
                continue
            outside = (v for v in g.vertices if v not in w)
            if all(
                any(neighbor in component for neighbor in nx_graph[v])
                for v in outside
                for component in components
            ):
                found.append(w)

    found.sort(key=lambda w: (len(w), [g.index[v] for v in w]))
    logger.info(f"found {len(found)} maximal disconnected vertex sets")

    return found


def restricted_products(r: CohomologyRing, basis: tuple[Cocycle, ...]) -> RestrictedProducts:
    return {
        (i, j): cup(r=r, x=basis[i], y=basis[j]).coordinates
        for i, j in combinations(range(len(basis)), 2)
    }


def classify_isotropicity(c: ResonanceComponent, r: CohomologyRing) -> Isotropicity:
    """
    Label a component by the cup product restricted to it.

    Zero when the restricted map vanishes; One when its image is a line and the induced
    alternating form has trivial radical.
    """

    if c.dimension <= 1:
        return Isotropicity.NOT_APPLICABLE

    products = restricted_products(r=r, basis=c.basis)
    image_rank = rank(rows=list(products.values()), columns=r.dimension(2))

    if image_rank == 0:
        return Isotropicity.ZERO
    if image_rank > 1:
        return Isotropicity.NEITHER

    spanning = next(vector for vector in products.values() if any(vector))
    pivot = next(k for k, value in enumerate(spanning) if value != 0)

    form = [[Fraction(0)] * c.dimension for _ in range(c.dimension)]
    for (i, j), vector in products.items():
        coefficient = vector[pivot] / spanning[pivot]
        form[i][j] = coefficient
        form[j][i] = -coefficient

    if rank(rows=form, columns=c.dimension) == c.dimension:
        return Isotropicity.ONE

    return Isotropicity.NEITHER


def labeled_component(
    r: CohomologyRing, w: VertexSet, basis: tuple[Cocycle, ...]
) -> ResonanceComponent:

    unlabeled = ResonanceComponent(
        ambient=r.ambient,
        w=w,
        dimension=len(basis),
        basis=basis,
        isotropicity=Isotropicity.NOT_APPLICABLE,
    )

    return replace(unlabeled, isotropicity=classify_isotropicity(c=unlabeled, r=r))


def raag_resonance(
    g: Graph, allow_large: bool = False, r: Optional[CohomologyRing] = None
) -> list[ResonanceComponent]:
    """Components H_W of R_1 of the RAAG, one per maximal W inducing a disconnected graph."""

    ring = r if r is not None else raag_ring(g=g)
    assert ring.ambient == Ambient.RAAG

    components = []
    for w in maximal_disconnected_sets(g=g, allow_large=allow_large):
        basis = tuple(ring.basis_cocycle(degree=1, position=g.index[v]) for v in w)
        components.append(labeled_component(r=ring, w=w, basis=basis))

    logger.info(f"RAAG resonance has {len(components)} components")

    return components


def bb_resonance(
    g: Graph,
    allow_large: bool = False,
    budget: int = TIETZE_BUDGET,
    r: Optional[CohomologyRing] = None,
) -> list[ResonanceComponent]:
    """
    Components of R_1 of the Bestvina-Brady group, for simply connected flag complexes.

    With connectivity 1 the whole of H^1(N) is resonant; otherwise the components are the
    images of the RAAG components H_W. When H^1(N) has dimension below 2 the variety is {0}
    and no component is returned.
    """

    if g.number_of_vertices <= 1:
        reason = "Resonance of the Bestvina-Brady group needs more than one vertex"
        logger.warning(f"refusing BB resonance: {reason}")
        raise PreconditionException(reason)

    ring = r if r is not None else bb_ring(g=g, budget=budget)
    assert ring.ambient == Ambient.BB and ring.raag is not None

    if ring.dimension(1) < 2:
        logger.info("BB resonance is trivial: H^1(N) has dimension below 2")
        return []

    if connectivity(g=g) == 1:
        basis = tuple(ring.basis_cocycle(degree=1, position=i) for i in range(ring.dimension(1)))
        logger.info("connectivity 1: the whole of H^1(N) is resonant")
        return [labeled_component(r=ring, w=g.vertices, basis=basis)]

    components = []
    for w in maximal_disconnected_sets(g=g, allow_large=allow_large):
        basis = tuple(
            iota_star(r=ring, x=ring.raag.basis_cocycle(degree=1, position=g.index[v]))
            for v in w
        )
        components.append(labeled_component(r=ring, w=w, basis=basis))

    logger.info(f"BB resonance has {len(components)} components")

    return components


def obstruction_check(
    components: list[ResonanceComponent], mode: ObstructionMode
) -> ObstructionVerdict:
    """
    Position obstruction for fundamental groups of quasi-Kahler or Kahler manifolds.

    Every positive-dimensional component must be 0-isotropic of dimension at least 2 or
    1-isotropic of dimension at least 4; in Kahler mode only the latter may occur.
    """

    for c in components:
        if c.dimension == 0:
            continue

        if c.isotropicity == Isotropicity.ONE and c.dimension >= 4:
            continue

        if mode == ObstructionMode.QUASI_KAHLER:
            if c.isotropicity == Isotropicity.ZERO and c.dimension >= 2:
                continue
            witness = (
                f"{c.label()} of dimension {c.dimension} is {c.isotropicity.value}, "
                "not 0-isotropic of dimension >= 2 or 1-isotropic of dimension >= 4"
            )
        else:
            witness = (
                f"{c.label()} of dimension {c.dimension} is {c.isotropicity.value}, "
                "not 1-isotropic of dimension >= 4"
            )

        logger.info(f"obstruction check ({mode.value}) failed: {witness}")
        return ObstructionVerdict(passed=False, mode=mode, witness=witness)

    return ObstructionVerdict(passed=True, mode=mode)
