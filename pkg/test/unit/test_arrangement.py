from contextlib import nullcontext
from typing import Any, ContextManager

import pytest

from src.algebra_types import RealizationKind
from src.arrangement import (
    general_arrangement,
    Hyperplane,
    milnor_data,
    polynomial,
    product_hyperplanes,
    realize,
)
from src.exceptions import ArrangementException, PreconditionException
from src.graph import Graph
from src.parsing import parse_graph
from src.presentation import dicks_leary
from src.tietze import abelianization


def test_product_hyperplanes() -> None:
    assert product_hyperplanes(counts=(2, 1)) == (
        Hyperplane(var=1, shift=1),
        Hyperplane(var=1, shift=2),
        Hyperplane(var=2, shift=1),
    )


@pytest.mark.parametrize(
    "exponents,expected",
    [
        ((1, 1, 1), "(x1 - 1)(x1 - 2)(x2 - 1)"),
        ((1, 3, 1), "(x1 - 1)(x1 - 2)^3(x2 - 1)"),
    ],
)
def test_polynomial(exponents: tuple, expected: str) -> None:
    assert polynomial(hyperplanes=product_hyperplanes(counts=(2, 1)), exponents=exponents) == (
        expected
    )


def test_empty_polynomial() -> None:
    assert polynomial(hyperplanes=(), exponents=()) == "1"


class TestRealize:
    def test_octahedron_is_milnor_fiber(self, octahedron: Graph) -> None:

        a = realize(g=octahedron)

        assert a.kind == RealizationKind.MILNOR_FIBER_OF_PRODUCT
        assert a.ambient_dim == 3
        assert len(a.hyperplanes) == 6
        assert a.degree == 6
        assert a.nu_images == (1,) * 6
        assert a.fundamental_group == "N_{K_{2,2,2}}"
        assert not a.aspherical

    @pytest.mark.parametrize(
        "graph,counts,group",
        [
            ("path(4)", (3,), "F_3"),
            ("K(5)", (1, 1, 1, 1), "Z^4"),
            ("Km(1,2,2)", (2, 2), "F_2 x F_2"),
            ("Km(1,1,1,2)", (1, 1, 2), "Z^2 x F_2"),
            ("K(1)", (), "Z^0"),
        ],
    )
    def test_punctured_line_products(self, graph: str, counts: tuple, group: str) -> None:

        a = realize(g=parse_graph(text=graph))

        assert a.kind == RealizationKind.PUNCTURED_LINE_PRODUCT
        assert a.coordinate_counts() == counts
        assert a.fundamental_group == group
        assert a.aspherical
        assert a.nu_images == ()

    @pytest.mark.parametrize("graph", ["Km(2,2)", "cycle(5)", "Kbar(2)"])
    def test_refused(self, graph: str) -> None:
        with pytest.raises(PreconditionException):
            realize(g=parse_graph(text=graph))


class TestMilnorData:
    def test_octahedron(self, octahedron: Graph) -> None:

        report = milnor_data(a=realize(g=octahedron))

        assert report.degree == 6
        assert report.kernel_rank == 5
        assert report.total_space_group == "G_{K_{2,2,2}} = F_2 x F_2 x F_2"
        assert report.fiber_group == "N_{K_{2,2,2}}"
        assert report.essentiality_checked

    def test_kernel_rank_matches_presentation(self, octahedron: Graph) -> None:

        free_rank, torsion = abelianization(p=dicks_leary(g=octahedron))

        assert milnor_data(a=realize(g=octahedron)).kernel_rank == free_rank
        assert torsion == []

    @pytest.mark.parametrize(
        "exponents,expectation",
        [
            ([1, 2, 1, 1, 1, 1], nullcontext(7)),
            ([2, 2, 2, 2, 2, 2], pytest.raises(ArrangementException)),
            ([1, 1, 1], pytest.raises(ArrangementException)),
            ([1, 0, 1, 1, 1, 1], pytest.raises(ArrangementException)),
        ],
    )
    def test_exponents(
        self, exponents: list, expectation: ContextManager[Any], octahedron: Graph
    ) -> None:

        a = realize(g=octahedron)

        with expectation as expected:
            report = milnor_data(a=a, e=exponents)
            assert report.degree == expected
            assert report.nu_images == exponents
            assert report.fiber_group == "ker(nu_e)"

    @pytest.mark.parametrize("graph", ["path(4)", "Km(1,2,2)"])
    def test_low_dimension_refused(self, graph: str) -> None:
        with pytest.raises(PreconditionException, match="ambient dimension"):
            milnor_data(a=realize(g=parse_graph(text=graph)))

    def test_four_coordinates(self) -> None:

        report = milnor_data(a=realize(g=parse_graph(text="K(5)")))

        assert report.total_space_group == "G_{K_{1,1,1,1}} = Z^4"
        assert report.kernel_rank == 3


class TestGeneralArrangement:
    def test_group_from_coordinate_counts(self) -> None:

        a = general_arrangement(ambient_dim=3, hyperplanes=[(1, 0), (2, 0), (3, 0), (1, 1)])
        report = milnor_data(a=a)

        assert a.kind == RealizationKind.GENERAL_ARRANGEMENT
        assert a.coordinate_counts() == (2, 1, 1)
        assert a.fundamental_group == "Z^2 x F_2"
        assert a.aspherical and a.essential
        assert report.total_space_group == "G_{K_{2,1,1}} = Z^2 x F_2"
        assert report.kernel_rank == 3
        assert report.essentiality_checked

    def test_unconstrained_coordinate_refused(self) -> None:

        a = general_arrangement(ambient_dim=4, hyperplanes=[(1, 0), (2, 0), (3, 0), (3, 1)])

        assert a.fundamental_group == "Z^2 x F_2"
        assert not a.essential
        with pytest.raises(PreconditionException, match="not essential"):
            milnor_data(a=a)

    @pytest.mark.parametrize("hyperplanes", [[(4, 0)], [(0, 1)], [(1, 0), (1, 0)]])
    def test_invalid(self, hyperplanes: list) -> None:
        with pytest.raises(ArrangementException):
            general_arrangement(ambient_dim=3, hyperplanes=hyperplanes)
