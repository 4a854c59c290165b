import logging
from dataclasses import dataclass
from math import gcd
from typing import Optional, Sequence

from src.algebra_types import GroupClass, MilnorReport, RealizationKind
from src.classify import bb_structure, format_product
from src.exceptions import ArrangementException, PreconditionException
from src.graph import Graph

logger = logging.getLogger(__name__)

MIN_MILNOR_DIMENSION = 3


@dataclass(frozen=True)
class Hyperplane:
    """The affine hyperplane x_var - shift = 0, coordinates numbered from 1."""

    var: int
    shift: int

    def form(self) -> str:
        return f"x{self.var} - {self.shift}"


@dataclass(frozen=True)
class ArrangementRealization:
    kind: RealizationKind
    ambient_dim: int
    hyperplanes: tuple[Hyperplane, ...]
    exponents: tuple[int, ...]
    nu_images: tuple[int, ...]
    fundamental_group: str
    aspherical: bool

    def __post_init__(self) -> None:
        assert len(self.exponents) == len(self.hyperplanes)
        assert all(e > 0 for e in self.exponents)
        if self.exponents:
            assert gcd(*self.exponents) == 1
        assert all(1 <= h.var <= self.ambient_dim for h in self.hyperplanes)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def coordinate_counts(self) -> tuple[int, ...]:
        return tuple(
            sum(1 for h in self.hyperplanes if h.var == var)
            for var in range(1, self.ambient_dim + 1)
        )

    @property
    def essential(self) -> bool:
        return all(count > 0 for count in self.coordinate_counts())


def punctured_lines_group(counts: Sequence[int]) -> str:
    """pi_1 of a product of lines with counts[i] punctures; unpunctured lines drop out."""

    singletons = sum(1 for count in counts if count == 1)
    free_ranks = tuple(count for count in counts if count >= 2)

    return format_product(abelian_rank=singletons, free_ranks=free_ranks)


def product_hyperplanes(counts: Sequence[int]) -> tuple[Hyperplane, ...]:
    """x_i - j for j = 1..counts[i-1], one punctured line per coordinate."""

    return tuple(
        Hyperplane(var=var, shift=shift)
        for var, count in enumerate(counts, start=1)
        for shift in range(1, count + 1)
    )


def polynomial(hyperplanes: Sequence[Hyperplane], exponents: Sequence[int]) -> str:
    if not hyperplanes:
        return "1"
    return "".join(
        f"({h.form()})" if e == 1 else f"({h.form()})^{e}"
        for h, e in zip(hyperplanes, exponents)
    )


def realize(g: Graph) -> ArrangementRealization:
    """
    Quasi-projective realization of the Bestvina-Brady group of g.

    Classes B1-B3 are products of punctured lines, one line with one puncture per Z factor
    and one with n punctures per F_n factor. Class B4 is the Milnor fiber of the product
    arrangement with one coordinate per part, all exponents 1.
    """

    shape = bb_structure(g=g)

    if shape.group_class == GroupClass.NOT_QUASI_KAHLER:
        reason = f"the Bestvina-Brady group is not quasi-Kahler ({shape.label})"
        logger.warning(f"refusing realization: {reason}")
        raise PreconditionException(reason)

    if shape.group_class == GroupClass.B4:
        hyperplanes = product_hyperplanes(counts=shape.parts)
        exponents = tuple(1 for _ in hyperplanes)
        logger.info(f"Milnor fiber realization in dimension {len(shape.parts)}")
        return ArrangementRealization(
            kind=RealizationKind.MILNOR_FIBER_OF_PRODUCT,
            ambient_dim=len(shape.parts),
            hyperplanes=hyperplanes,
            exponents=exponents,
            nu_images=exponents,
            fundamental_group=shape.structure,
            aspherical=False,
        )

    counts = (1,) * shape.abelian_rank + shape.free_ranks
    hyperplanes = product_hyperplanes(counts=counts)
    logger.info(f"punctured line product realization in dimension {len(counts)}")

    return ArrangementRealization(
        kind=RealizationKind.PUNCTURED_LINE_PRODUCT,
        ambient_dim=len(counts),
        hyperplanes=hyperplanes,
        exponents=tuple(1 for _ in hyperplanes),
        nu_images=(),
        fundamental_group=shape.structure,
        aspherical=True,
    )


def general_arrangement(
    ambient_dim: int, hyperplanes: Sequence[tuple[int, int]]
) -> ArrangementRealization:
    """
    An arrangement supplied as (var, shift) pairs.

    Each hyperplane fixes one coordinate, so the complement is a product of punctured lines
    and pi_1(M) is read off the number of hyperplanes per coordinate.
    """

    built = tuple(Hyperplane(var=var, shift=shift) for var, shift in hyperplanes)
    if any(not 1 <= h.var <= ambient_dim for h in built):
        raise ArrangementException(f"hyperplane variables must lie in 1..{ambient_dim}")
    if len(set(built)) != len(built):
        raise ArrangementException("hyperplanes must be distinct")

    counts = [sum(1 for h in built if h.var == var) for var in range(1, ambient_dim + 1)]

    return ArrangementRealization(
        kind=RealizationKind.GENERAL_ARRANGEMENT,
        ambient_dim=ambient_dim,
        hyperplanes=built,
        exponents=tuple(1 for _ in built),
        nu_images=(),
        fundamental_group=punctured_lines_group(counts=counts),
        aspherical=True,
    )


def milnor_data(a: ArrangementRealization, e: Optional[Sequence[int]] = None) -> MilnorReport:
    """
    The exact sequence 1 -> pi_1(F_e) -> pi_1(M) -> Z -> 0 for the exponents e.

    nu_e sends the loop about the j-th hyperplane to e_j, and pi_1(M) is the RAAG of the
    multipartite graph given by the hyperplane counts per coordinate. Arrangements in
    ambient dimension below 3 or with an unconstrained coordinate are refused.
    """

    exponents = tuple(e) if e is not None else tuple(1 for _ in a.hyperplanes)
    d = len(a.hyperplanes)
    counts = list(a.coordinate_counts())

    if len(exponents) != d:
        raise ArrangementException(f"expected {d} exponents, got {len(exponents)}")
    if any(value <= 0 for value in exponents):
        raise ArrangementException(f"exponents must be positive, got {list(exponents)}")
    if gcd(*exponents) != 1:
        raise ArrangementException(f"exponents {list(exponents)} have gcd {gcd(*exponents)}")
    if a.ambient_dim < MIN_MILNOR_DIMENSION:
        reason = (
            f"the exact sequence needs ambient dimension >= {MIN_MILNOR_DIMENSION}, "
            f"got {a.ambient_dim}"
        )
        logger.warning(f"refusing Milnor data: {reason}")
        raise PreconditionException(reason)
    if not a.essential:
        reason = f"arrangement is not essential: hyperplanes per coordinate {counts}"
        logger.warning(f"refusing Milnor data: {reason}")
        raise PreconditionException(reason)

    sizes = ",".join(str(count) for count in counts)
    total_space_group = f"G_{{K_{{{sizes}}}}} = {punctured_lines_group(counts=counts)}"
    all_ones = all(value == 1 for value in exponents)
    fiber_group = f"N_{{K_{{{sizes}}}}}" if all_ones else "ker(nu_e)"

    logger.info(f"Milnor data with d_e = {sum(exponents)}")

    return MilnorReport(
        exact_sequence="1 -> pi_1(F_{e,t}) -> pi_1(M) -> Z -> 0",
        exponents=list(exponents),
        degree=sum(exponents),
        nu_images=list(exponents),
        total_space_group=total_space_group,
        fiber_group=fiber_group,
        kernel_rank=d - 1,
        essentiality_checked=True,
    )
