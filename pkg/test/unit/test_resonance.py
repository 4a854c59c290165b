import pytest

from src.algebra_types import Ambient, Isotropicity, ObstructionMode
from src.cohomology import bb_ring, make_cocycle, raag_ring
from src.exceptions import LargeGraphException, PreconditionException, ZeroCocycleException
from src.graph import Graph, induced_subgraph, is_connected
from src.parsing import parse_graph
from src.resonance import (
    bb_resonance,
    classify_isotropicity,
    component_contains,
    labeled_component,
    maximal_disconnected_sets,
    obstruction_check,
    raag_resonance,
    resonance_membership,
)


class TestMembership:
    @pytest.mark.parametrize(
        "graph,coordinates,expected",
        [
            ("Kbar(2)", [1, 0], True),
            ("K(2)", [1, 1], False),
            ("Km(2,2)", [1, 1, 0, 0], True),
            ("Km(2,2)", [1, 0, 1, 0], False),
            ("Km(2,2)", [0, 0, 3, -2], True),
        ],
    )
    def test_raag_membership(self, graph: str, coordinates: list, expected: bool) -> None:

        r = raag_ring(g=parse_graph(text=graph))
        a = make_cocycle(r=r, degree=1, coordinates=coordinates)

        assert resonance_membership(r=r, a=a) == expected

    def test_zero_class_rejected(self) -> None:

        r = raag_ring(g=parse_graph(text="K(3)"))

        with pytest.raises(ZeroCocycleException):
            resonance_membership(r=r, a=make_cocycle(r=r, degree=1, coordinates=[0, 0, 0]))

    def test_bb_membership_on_tree(self) -> None:

        r = bb_ring(g=parse_graph(text="path(4)"))
        a = make_cocycle(r=r, degree=1, coordinates=[1, -2, 5])

        assert resonance_membership(r=r, a=a)


class TestMaximalDisconnectedSets:
    def test_cycle(self) -> None:
        assert maximal_disconnected_sets(g=parse_graph(text="cycle(4)")) == [
            ("v1", "v3"),
            ("v2", "v4"),
        ]

    def test_complete_graph_has_none(self) -> None:
        assert maximal_disconnected_sets(g=parse_graph(text="K(4)")) == []

    @pytest.mark.parametrize("graph", ["path(5)", "cycle(6)", "Km(1,2,3)"])
    def test_maximality(self, graph: str, bowtie: Graph) -> None:

        for g in (parse_graph(text=graph), bowtie):
            for w in maximal_disconnected_sets(g=g):
                assert not is_connected(induced_subgraph(g=g, w=w))
                for v in g.vertices:
                    if v not in w:
                        assert is_connected(induced_subgraph(g=g, w=w + (v,)))

    def test_large_graph_refused(self) -> None:
        with pytest.raises(LargeGraphException):
            maximal_disconnected_sets(g=parse_graph(text="path(17)"))


class TestRaagResonance:
    def test_square(self) -> None:

        components = raag_resonance(g=parse_graph(text="Km(2,2)"))

        assert [c.w for c in components] == [("v1", "v2"), ("v3", "v4")]
        assert all(c.dimension == 2 for c in components)
        assert all(c.isotropicity == Isotropicity.ZERO for c in components)

    def test_edgeless(self) -> None:

        (component,) = raag_resonance(g=parse_graph(text="Kbar(3)"))

        assert component.dimension == 3
        assert component.ambient == Ambient.RAAG

    @pytest.mark.parametrize("n", [1, 2, 5])
    def test_complete_graph_is_not_resonant(self, n: int) -> None:
        assert raag_resonance(g=parse_graph(text=f"K({n})")) == []

    def test_components_are_resonant(self) -> None:

        g = parse_graph(text="Km(2,3)")
        r = raag_ring(g=g)

        for c in raag_resonance(g=g):
            columns = zip(*(element.coordinates for element in c.basis))
            a = make_cocycle(r=r, degree=1, coordinates=[sum(column) for column in columns])
            assert component_contains(c=c, a=a)
            assert resonance_membership(r=r, a=a)


class TestBBResonance:
    def test_octahedron(self, octahedron: Graph) -> None:

        components = bb_resonance(g=octahedron)

        assert len(components) == 3
        assert all(c.dimension == 2 for c in components)
        assert all(c.isotropicity == Isotropicity.ZERO for c in components)

    def test_bowtie_is_one_component(self, bowtie: Graph) -> None:

        (component,) = bb_resonance(g=bowtie)

        assert component.dimension == 4
        assert component.w == bowtie.vertices
        assert component.isotropicity == Isotropicity.NEITHER

    @pytest.mark.parametrize("graph", ["K(2)", "K(4)", "K(5)"])
    def test_empty(self, graph: str) -> None:
        assert bb_resonance(g=parse_graph(text=graph)) == []

    def test_single_vertex_refused(self) -> None:
        with pytest.raises(PreconditionException):
            bb_resonance(g=parse_graph(text="K(1)"))

    def test_not_simply_connected_refused(self) -> None:
        with pytest.raises(PreconditionException):
            bb_resonance(g=parse_graph(text="cycle(5)"))


class TestIsotropicity:
    def test_single_element_not_applicable(self) -> None:

        r = raag_ring(g=parse_graph(text="Kbar(2)"))
        c = labeled_component(r=r, w=("v1",), basis=(r.basis_cocycle(degree=1, position=0),))

        assert c.isotropicity == Isotropicity.NOT_APPLICABLE
        assert classify_isotropicity(c=c, r=r) == Isotropicity.NOT_APPLICABLE

    def test_one_isotropic(self) -> None:

        r = raag_ring(g=parse_graph(text="K(2)"))
        basis = tuple(r.basis_cocycle(degree=1, position=i) for i in range(2))

        assert labeled_component(r=r, w=("v1", "v2"), basis=basis).isotropicity == Isotropicity.ONE

    def test_degenerate_form_is_neither(self) -> None:

        r = raag_ring(g=parse_graph(text="path(3)"))
        basis = tuple(r.basis_cocycle(degree=1, position=i) for i in (0, 1))
        extra = make_cocycle(r=r, degree=1, coordinates=[1, 0, 0])

        c = labeled_component(r=r, w=("v1", "v2"), basis=basis + (extra,))

        assert c.isotropicity == Isotropicity.NEITHER


class TestObstruction:
    def test_octahedron(self, octahedron: Graph) -> None:

        components = bb_resonance(g=octahedron)

        assert obstruction_check(components=components, mode=ObstructionMode.QUASI_KAHLER).passed
        verdict = obstruction_check(components=components, mode=ObstructionMode.KAHLER)
        assert not verdict.passed
        assert verdict.witness is not None

    @pytest.mark.parametrize("mode", list(ObstructionMode))
    def test_no_components_pass(self, mode: ObstructionMode) -> None:
        assert obstruction_check(components=[], mode=mode).passed

    def test_bowtie_fails(self, bowtie: Graph) -> None:

        verdict = obstruction_check(
            components=bb_resonance(g=bowtie), mode=ObstructionMode.QUASI_KAHLER
        )

        assert not verdict.passed
        assert verdict.report().witness == verdict.witness
