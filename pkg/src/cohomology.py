import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from src.algebra_types import Ambient
from src.constants import BB_TOP_DEGREE, EDGE_SEPARATOR, RAAG_TOP_DEGREE, TIETZE_BUDGET
from src.exceptions import DegreeOverflowException, PreconditionException
from src.flag_complex import flag_complex
from src.graph import Graph, VertexSet
from src.linalg import matrix_vector, RationalMatrix, rank, row_reduce, unit_vector, zero_vector
from src.presentation import dicks_leary_refusal

logger = logging.getLogger(__name__)

Basis = tuple[VertexSet, ...]
SparseVector = dict[int, Fraction]
ProductTable = dict[tuple[int, int], dict[tuple[int, int], SparseVector]]


@dataclass(frozen=True)
class Cocycle:
    degree: int
    coordinates: tuple[Fraction, ...]


@dataclass(frozen=True)
class CohomologyRing:
    """
    Low-degree cohomology ring with exact rational structure constants.

    RAAG rings hold the exterior Stanley-Reisner ring through degree 3, with the k-cliques
    as the degree-k basis. BB rings hold H^<=2 of the Bestvina-Brady group as the quotient
    of the RAAG ring by nu: degree 1 uses the images of every vertex but the last, degree 2
    uses the edges that are not pivots of the nu-multiplication image. `table[(p, q)]` maps
    a pair of basis indices to the sparse product in degree p + q.
    """

    ambient: Ambient
    graph: Graph
    bases: dict[int, Basis]
    table: ProductTable
    raag: Optional["CohomologyRing"] = None
    iota: RationalMatrix = field(default_factory=list)
    section: RationalMatrix = field(default_factory=list)
    projection: RationalMatrix = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.ambient == Ambient.BB:
            assert self.raag is not None
            assert diagram_commutes(r=self)

    @property
    def top_degree(self) -> int:
        return max(self.bases)

    def dimension(self, degree: int) -> int:
        return len(self.bases.get(degree, ()))

    def basis_labels(self, degree: int) -> list[str]:
        return [EDGE_SEPARATOR.join(element) or "1" for element in self.bases[degree]]

    def basis_cocycle(self, degree: int, position: int) -> Cocycle:
        return Cocycle(
            degree=degree, coordinates=unit_vector(size=self.dimension(degree), position=position)
        )


def make_cocycle(r: CohomologyRing, degree: int, coordinates: list[Fraction | int]) -> Cocycle:
    if len(coordinates) != r.dimension(degree):
        raise ValueError(
            f"degree {degree} cocycle needs {r.dimension(degree)} coordinates, "
            f"got {len(coordinates)}"
        )
    return Cocycle(degree=degree, coordinates=tuple(Fraction(c) for c in coordinates))


def permutation_sign(positions: list[int]) -> int:
    inversions = sum(
        1
        for i in range(len(positions))
        for j in range(i + 1, len(positions))
        if positions[i] > positions[j]
    )
    return -1 if inversions % 2 else 1


def clique_product(g: Graph, left: VertexSet, right: VertexSet) -> tuple[VertexSet, int]:
    """
    Product of two clique monomials: the sorted union and a sign, or sign 0 if it vanishes.

    A monomial vanishes when the cliques share a vertex or their union is not a clique.
    """

    if set(left) & set(right):
        return (), 0

    concatenated = left + right
    if not g.is_clique(concatenated):
        return (), 0

    sign = permutation_sign(positions=[g.index[v] for v in concatenated])
    return g.sort_vertices(concatenated), sign


def unit_products(bases: dict[int, Basis], table: ProductTable) -> None:
    for degree in bases:
        table[(0, degree)] = {(0, j): {j: Fraction(1)} for j in range(len(bases[degree]))}
        table[(degree, 0)] = {(j, 0): {j: Fraction(1)} for j in range(len(bases[degree]))}


def raag_ring(g: Graph) -> CohomologyRing:

    complex_ = flag_complex(g=g)
    bases: dict[int, Basis] = {
        0: ((),),
        1: complex_.vertices,
        2: complex_.edges,
        3: complex_.triangles,
    }
    position = {
        degree: {element: i for i, element in enumerate(bases[degree])} for degree in bases
    }

    table: ProductTable = {}
    unit_products(bases=bases, table=table)

    for p in range(1, RAAG_TOP_DEGREE):
        for q in range(1, RAAG_TOP_DEGREE - p + 1):
            products: dict[tuple[int, int], SparseVector] = {}
            for i, left in enumerate(bases[p]):
                for j, right in enumerate(bases[q]):
                    union, sign = clique_product(g=g, left=left, right=right)
                    if sign != 0:
                        products[(i, j)] = {position[p + q][union]: Fraction(sign)}
            table[(p, q)] = products

    logger.info(f"RAAG ring dimensions {[len(bases[d]) for d in sorted(bases)]}")

    return CohomologyRing(ambient=Ambient.RAAG, graph=g, bases=bases, table=table)


def nu_class(g: Graph) -> Cocycle:
    return Cocycle(degree=1, coordinates=tuple(Fraction(1) for _ in g.vertices))


def cup(r: CohomologyRing, x: Cocycle, y: Cocycle) -> Cocycle:
    """Bilinear, graded-anticommutative product; refuses degrees beyond the stored range."""

    degree = x.degree + y.degree
    if degree > r.top_degree or (x.degree, y.degree) not in r.table:
        raise DegreeOverflowException(
            f"product of degrees {x.degree} and {y.degree} exceeds degree {r.top_degree}"
        )

    assert len(x.coordinates) == r.dimension(x.degree)
    assert len(y.coordinates) == r.dimension(y.degree)

    products = r.table[(x.degree, y.degree)]
    result = list(zero_vector(size=r.dimension(degree)))

    for i, x_value in enumerate(x.coordinates):
        if x_value == 0:
            continue
        for j, y_value in enumerate(y.coordinates):
            if y_value == 0:
                continue
            for k, value in products.get((i, j), {}).items():
                result[k] += x_value * y_value * value

    return Cocycle(degree=degree, coordinates=tuple(result))


def nu_multiplication_rows(r: CohomologyRing) -> list[tuple[Fraction, ...]]:
    """Images nu * v for every vertex v, in H^2(G) coordinates."""

    assert r.ambient == Ambient.RAAG
    nu = nu_class(g=r.graph)

    return [
        cup(r=r, x=nu, y=r.basis_cocycle(degree=1, position=i)).coordinates
        for i in range(r.dimension(1))
    ]


def nu_multiplication_rank(r: CohomologyRing) -> int:
    return rank(rows=nu_multiplication_rows(r=r), columns=r.dimension(2))


def quotient_projection(
    rows: list[tuple[Fraction, ...]], columns: int
) -> tuple[RationalMatrix, list[int]]:
    """
    Projection onto the quotient by the row span, with leftmost-pivot representatives.

    Returns the projection matrix (one row per non-pivot column) and the non-pivot columns.
    """

    reduced, pivots = row_reduce(rows=rows, columns=columns)
    kept = [column for column in range(columns) if column not in pivots]

    projection: RationalMatrix = [[Fraction(0)] * columns for _ in kept]
    for row, column in enumerate(kept):
        projection[row][column] = Fraction(1)
    for pivot_row, pivot in enumerate(pivots):
        for row, column in enumerate(kept):
            projection[row][pivot] = -reduced[pivot_row][column]

    return projection, kept


def bb_ring(g: Graph, budget: int = TIETZE_BUDGET) -> CohomologyRing:
    """
    H^<=2 of the Bestvina-Brady group as H(G)/nu H(G), valid when the flag complex is
    simply connected. Refuses with a reason otherwise.
    """

    reason = dicks_leary_refusal(g=g, budget=budget)
    if reason is not None:
        logger.warning(f"refusing BB cohomology ring: {reason}")
        raise PreconditionException(reason)

    raag = raag_ring(g=g)
    n = g.number_of_vertices
    edge_count = raag.dimension(2)

    iota: RationalMatrix = [
        [Fraction(1) if b == a else Fraction(-1) if b == n - 1 else Fraction(0) for b in range(n)]
        for a in range(n - 1)
    ]
    section: RationalMatrix = [
        [Fraction(1) if a == b else Fraction(0) for b in range(n - 1)] for a in range(n)
    ]

    projection, kept = quotient_projection(rows=nu_multiplication_rows(r=raag), columns=edge_count)

    bases: dict[int, Basis] = {
        0: ((),),
        1: tuple((v,) for v in g.vertices[:-1]),
        2: tuple(raag.bases[2][column] for column in kept),
    }

    table: ProductTable = {}
    unit_products(bases=bases, table=table)

    products: dict[tuple[int, int], SparseVector] = {}
    for a in range(n - 1):
        for b in range(n - 1):
            lifted = cup(r=raag, x=raag.basis_cocycle(1, a), y=raag.basis_cocycle(1, b))
            image = matrix_vector(matrix=projection, vector=lifted.coordinates)
            sparse = {k: value for k, value in enumerate(image) if value != 0}
            if sparse:
                products[(a, b)] = sparse
    table[(1, 1)] = products

    logger.info(f"BB ring dimensions {[len(bases[d]) for d in sorted(bases)]}")

    return CohomologyRing(
        ambient=Ambient.BB,
        graph=g,
        bases=bases,
        table=table,
        raag=raag,
        iota=iota,
        section=section,
        projection=projection,
    )


def iota_star(r: CohomologyRing, x: Cocycle) -> Cocycle:
    """Image in the BB ring of a degree-1 or degree-2 class of the RAAG ring."""

    assert r.ambient == Ambient.BB
    if x.degree == 1:
        return Cocycle(degree=1, coordinates=matrix_vector(matrix=r.iota, vector=x.coordinates))
    if x.degree == 2:
        return Cocycle(
            degree=2, coordinates=matrix_vector(matrix=r.projection, vector=x.coordinates)
        )
    raise DegreeOverflowException(f"iota* is only modeled in degrees 1 and 2, not {x.degree}")


def section_lift(r: CohomologyRing, y: Cocycle) -> Cocycle:
    assert r.ambient == Ambient.BB and y.degree == 1
    return Cocycle(degree=1, coordinates=matrix_vector(matrix=r.section, vector=y.coordinates))


def diagram_commutes(r: CohomologyRing) -> bool:
    """cup_N(iota* v, iota* w) == proj(v cup_G w) for every pair of vertices."""

    assert r.raag is not None
    raag = r.raag

    for a in range(raag.dimension(1)):
        for b in range(raag.dimension(1)):
            v = raag.basis_cocycle(1, a)
            w = raag.basis_cocycle(1, b)
            downstairs = cup(r=r, x=iota_star(r=r, x=v), y=iota_star(r=r, x=w))
            upstairs = iota_star(r=r, x=cup(r=raag, x=v, y=w))
            if downstairs != upstairs:
                return False

    return True


def wedge_iota_rank(r: CohomologyRing) -> int:
    """Rank of wedge^2 iota* onto wedge^2 H^1(N), in the basis of pairs a < b."""

    assert r.ambient == Ambient.BB and r.raag is not None
    n = r.raag.dimension(1)
    m = r.dimension(1)
    pairs = [(a, b) for a in range(m) for b in range(a + 1, m)]

    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            x = [r.iota[a][i] for a in range(m)]
            y = [r.iota[a][j] for a in range(m)]
            rows.append([x[a] * y[b] - x[b] * y[a] for a, b in pairs])

    return rank(rows=rows, columns=len(pairs))


def betti(g: Graph, ambient: Ambient, budget: int = TIETZE_BUDGET) -> list[int]:

    if ambient == Ambient.RAAG:
        ring = raag_ring(g=g)
        return [ring.dimension(degree) for degree in range(RAAG_TOP_DEGREE + 1)]

    ring = bb_ring(g=g, budget=budget)
    return [ring.dimension(degree) for degree in range(BB_TOP_DEGREE + 1)]
