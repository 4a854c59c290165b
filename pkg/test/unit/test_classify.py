from typing import Callable, Iterator

import pytest

from src.algebra_types import Ambient, GroupClass, Kollar
from src.classify import (
    bb_structure,
    classify_bb,
    classify_raag,
    format_product,
    top_homology_note,
)
from src.cohomology import betti
from src.constants import DISCONNECTED_NOTE, FP_INFINITY_NOTE
from src.graph import Graph, is_complete, is_tree, multipartite_parts
from src.parsing import parse_graph


@pytest.mark.parametrize(
    "abelian_rank,free_ranks,expected",
    [
        (0, (), "Z^0"),
        (4, (), "Z^4"),
        (0, (3,), "F_3"),
        (2, (2, 3), "Z^2 x F_2 x F_3"),
    ],
)
def test_format_product(abelian_rank: int, free_ranks: tuple, expected: str) -> None:
    assert format_product(abelian_rank=abelian_rank, free_ranks=free_ranks) == expected


class TestBBStructure:
    @pytest.mark.parametrize(
        "graph,group_class,label,structure",
        [
            ("K(1)", GroupClass.B1, "B1(0)", "Z^0"),
            ("K(2)", GroupClass.B1, "B1(1)", "Z^1"),
            ("K(5)", GroupClass.B1, "B1(4)", "Z^4"),
            ("path(4)", GroupClass.B2, "B2(3)", "F_3"),
            ("Km(1,2,2)", GroupClass.B2, "B2(2,2)", "F_2 x F_2"),
            ("Km(1,1,1,2)", GroupClass.B3, "B3(2;2)", "Z^2 x F_2"),
            ("Km(2,2,2)", GroupClass.B4, "B4(2,2,2)", "N_{K_{2,2,2}}"),
            ("Km(2,3)", GroupClass.NOT_QUASI_KAHLER, "NotQuasiKahler", "not quasi-Kahler"),
            ("cycle(5)", GroupClass.NOT_QUASI_KAHLER, "NotQuasiKahler", "not quasi-Kahler"),
        ],
    )
    def test_structure(
        self, graph: str, group_class: GroupClass, label: str, structure: str
    ) -> None:

        shape = bb_structure(g=parse_graph(text=graph))

        assert shape.group_class == group_class
        assert shape.label == label
        assert shape.structure == structure

    def test_parts_certificate(self, octahedron: Graph) -> None:

        shape = bb_structure(g=octahedron)

        assert shape.certificate is not None
        assert shape.certificate.parts == [["v1", "v2"], ["v3", "v4"], ["v5", "v6"]]


class TestClassifyBB:
    def test_octahedron(self, octahedron: Graph) -> None:

        report = classify_bb(g=octahedron)

        assert report.class_label == "B4(2,2,2)"
        assert report.quasi_kahler and report.quasi_projective
        assert not report.kahler and not report.projective
        assert report.kollar == Kollar.NOT_COMMENSURABLE.value
        assert FP_INFINITY_NOTE in report.notes
        assert top_homology_note(parts=3) in report.notes
        assert [check.passed for check in report.cross_checks] == [True, False]
        assert report.cross_checks_consistent

    def test_top_homology_note_follows_part_count(self) -> None:

        report = classify_bb(g=parse_graph(text="Km(2,2,2,2)"))

        assert report.class_label == "B4(2,2,2,2)"
        assert top_homology_note(parts=4) in report.notes
        assert not any("H_3(N)" in note for note in report.notes)
        assert "H_4(N) is not finitely generated" in top_homology_note(parts=4)
        assert "H_3(N) is not finitely generated" in top_homology_note(parts=3)

    @pytest.mark.parametrize("n,kahler", [(1, True), (2, False), (3, True), (4, False), (5, True)])
    def test_complete_graphs(self, n: int, kahler: bool) -> None:

        report = classify_bb(g=parse_graph(text=f"K({n})"))

        assert report.kahler == kahler
        assert report.quasi_kahler

    def test_square_is_not_quasi_kahler(self) -> None:

        report = classify_bb(g=parse_graph(text="Km(2,2)"))

        assert report.group_class == GroupClass.NOT_QUASI_KAHLER.value
        assert report.kollar == Kollar.NOT_APPLICABLE.value
        assert report.cross_checks == []
        assert report.cross_checks_consistent is None

    def test_tree(self) -> None:

        report = classify_bb(g=parse_graph(text="path(4)"))

        assert report.structure == "F_3"
        assert report.kollar == Kollar.ASPHERICAL_QP.value
        assert report.cross_checks_consistent

    def test_disconnected_note(self) -> None:

        report = classify_bb(g=parse_graph(text="Kbar(3)"))

        assert DISCONNECTED_NOTE in report.notes
        assert not report.quasi_kahler

    def test_explanation_only_on_request(self) -> None:

        g = parse_graph(text="Km(1,2,2)")

        assert classify_bb(g=g).explanation is None
        explanation = classify_bb(g=g, explain=True).explanation
        assert explanation is not None
        assert any("F_2 x F_2" in line for line in explanation)


def matching_classes(g: Graph) -> set[str]:
    """Class labels whose defining condition g meets, read straight off the graph."""

    parts = multipartite_parts(g=g)
    sizes = parts.sizes if parts is not None else ()
    singletons = sizes.count(1)
    large = len(sizes) - singletons

    matches: set[str] = set()
    if is_complete(g):
        matches.add(GroupClass.B1.value)
    if (is_tree(g) and g.number_of_vertices >= 3) or (singletons == 1 and large > 0):
        matches.add(GroupClass.B2.value)
    if singletons >= 2 and large > 0:
        matches.add(GroupClass.B3.value)
    if parts is not None and singletons == 0 and len(sizes) >= 3:
        matches.add(GroupClass.B4.value)

    return matches


class TestClassificationAudit:
    def test_resonance_agrees_and_classes_are_disjoint(
        self, atlas_graphs: Callable[[int], Iterator[Graph]]
    ) -> None:

        for g in atlas_graphs(7):
            report = classify_bb(g=g)
            matches = matching_classes(g=g)

            assert len(matches) <= 1, g
            assert report.quasi_kahler == bool(matches), g
            if matches:
                assert {report.group_class} == matches, g

            if not report.cross_checks:
                continue
            quasi_kahler_check, kahler_check = report.cross_checks
            assert not report.quasi_kahler or quasi_kahler_check.passed, g
            assert not report.kahler or kahler_check.passed, g
            assert report.group_class != GroupClass.B4.value or not kahler_check.passed, g
            assert report.cross_checks_consistent, g

    def test_kahler_groups_have_even_first_betti_number(
        self, atlas_graphs: Callable[[int], Iterator[Graph]]
    ) -> None:

        kahler = [g for g in atlas_graphs(7) if classify_bb(g=g).kahler]

        assert [g.number_of_vertices for g in kahler] == [1, 3, 5, 7]
        for g in kahler:
            assert betti(g=g, ambient=Ambient.BB)[1] % 2 == 0, g


class TestClassifyRaag:
    @pytest.mark.parametrize(
        "graph,structure",
        [("Km(2,3)", "F_2 x F_3"), ("K(3)", "Z^3"), ("Kbar(3)", "F_3"), ("Km(1,2)", "Z^1 x F_2")],
    )
    def test_products_of_free_groups(self, graph: str, structure: str) -> None:

        report = classify_raag(g=parse_graph(text=graph))

        assert report.quasi_kahler
        assert report.structure == structure
        assert report.obstruction is not None and report.obstruction.passed

    @pytest.mark.parametrize("graph", ["path(4)", "cycle(5)"])
    def test_not_multipartite(self, graph: str) -> None:

        report = classify_raag(g=parse_graph(text=graph))

        assert not report.quasi_kahler
        assert report.structure is None

    def test_large_graph_skips_obstruction(self) -> None:

        report = classify_raag(g=parse_graph(text="Km(9,9)"))

        assert report.quasi_kahler
        assert report.structure == "F_9 x F_9"
        assert report.obstruction is None
        assert len(report.notes) == 1 and "skipped" in report.notes[0]

        assert not classify_raag(g=parse_graph(text="path(17)")).quasi_kahler
