import logging
from dataclasses import dataclass
from typing import Optional

from src.algebra_types import (
    CertificateKind,
    CertificateReport,
    ClassificationReport,
    GroupClass,
    Kollar,
    ObstructionMode,
    RaagClassificationReport,
    Verdict,
)
from src.constants import (
    ASPHERICAL_NOTE,
    DISCONNECTED_NOTE,
    FP_INFINITY_NOTE,
    TIETZE_BUDGET,
    TOP_HOMOLOGY_NOTE,
)
from src.exceptions import LargeGraphException
from src.flag_complex import simple_connectivity
from src.graph import (
    Graph,
    is_complete,
    is_connected,
    is_tree,
    multipartite_parts,
    MultipartiteParts,
    triangle_cover,
)
from src.resonance import bb_resonance, obstruction_check, ObstructionVerdict, raag_resonance

logger = logging.getLogger(__name__)

QUASI_KAHLER_CLASSES = (GroupClass.B1, GroupClass.B2, GroupClass.B3, GroupClass.B4)


@dataclass(frozen=True)
class BBStructure:
    """
    Group-theoretic shape of the Bestvina-Brady group read off the graph.

    For B1-B3 the group is Z^abelian_rank x F_n1 x ... x F_ns with `free_ranks` = (n1..ns);
    for B4 it is the kernel of a multipartite graph with `parts` >= 2 each and at least
    three parts.
    """

    group_class: GroupClass
    abelian_rank: int = 0
    free_ranks: tuple[int, ...] = ()
    parts: tuple[int, ...] = ()
    certificate: Optional[CertificateReport] = None
    explanation: tuple[str, ...] = ()

    @property
    def label(self) -> str:
        sizes = ",".join(str(size) for size in self.free_ranks)
        if self.group_class == GroupClass.B1:
            return f"B1({self.abelian_rank})"
        if self.group_class == GroupClass.B2:
            return f"B2({sizes})"
        if self.group_class == GroupClass.B3:
            return f"B3({self.abelian_rank};{sizes})"
        if self.group_class == GroupClass.B4:
            return f"B4({','.join(str(size) for size in self.parts)})"
        return GroupClass.NOT_QUASI_KAHLER.value

    @property
    def structure(self) -> str:
        if self.group_class == GroupClass.B4:
            return f"N_{{K_{{{','.join(str(size) for size in self.parts)}}}}}"
        if self.group_class == GroupClass.NOT_QUASI_KAHLER:
            return "not quasi-Kahler"
        return format_product(abelian_rank=self.abelian_rank, free_ranks=self.free_ranks)


def format_product(abelian_rank: int, free_ranks: tuple[int, ...]) -> str:

    factors = []
    if abelian_rank > 0 or not free_ranks:
        factors.append(f"Z^{abelian_rank}")
    factors += [f"F_{rank}" for rank in free_ranks]

    return " x ".join(factors)


def top_homology_note(parts: int) -> str:
    """The flag complex of a B4 graph with r parts is a wedge of (r - 1)-spheres."""
    return TOP_HOMOLOGY_NOTE.format(spheres=parts - 1, degree=parts)


def parts_certificate(parts: MultipartiteParts) -> CertificateReport:
    return CertificateReport(
        kind=CertificateKind.MULTIPARTITE_PARTS,
        detail=f"complete multipartite with parts {list(parts.sizes)}",
        parts=[list(part) for part in parts.parts],
    )


def bb_structure(g: Graph) -> BBStructure:
    """
    Decide whether g is a tree or one of the allowed complete multipartite graphs, and
    resolve the Bestvina-Brady group accordingly.
    """

    n = g.number_of_vertices

    if is_tree(g):
        detail = f"tree on {n} vertices"
        certificate = CertificateReport(kind=CertificateKind.CONTRACTIBLE_TREE, detail=detail)
        if n == 1:
            return BBStructure(
                group_class=GroupClass.B1,
                certificate=certificate,
                explanation=("single vertex: N is trivial, Z^0",),
            )
        if n == 2:
            return BBStructure(
                group_class=GroupClass.B1,
                abelian_rank=1,
                certificate=certificate,
                explanation=("tree on 2 vertices: N = F_1 = Z",),
            )
        return BBStructure(
            group_class=GroupClass.B2,
            free_ranks=(n - 1,),
            certificate=certificate,
            explanation=(f"tree on {n} vertices: N = F_{n - 1}",),
        )

    parts = multipartite_parts(g=g)
    if parts is None:
        return BBStructure(
            group_class=GroupClass.NOT_QUASI_KAHLER,
            certificate=CertificateReport(
                kind=CertificateKind.NO_CONDITION_MATCHED,
                detail="neither a tree nor complete multipartite: no condition matched",
            ),
            explanation=(
                "not a tree",
                "complement is not a disjoint union of cliques, so not complete multipartite",
            ),
        )

    certificate = parts_certificate(parts=parts)
    singletons = sum(1 for size in parts.sizes if size == 1)
    free_ranks = tuple(size for size in parts.sizes if size >= 2)
    found = f"complement components give parts {list(parts.sizes)}"

    if singletons > 0:
        abelian_rank = singletons - 1
        if abelian_rank > 0 and free_ranks:
            group_class = GroupClass.B3
        elif abelian_rank > 0:
            group_class = GroupClass.B1
        else:
            group_class = GroupClass.B2
        return BBStructure(
            group_class=group_class,
            abelian_rank=abelian_rank,
            free_ranks=free_ranks,
            certificate=certificate,
            explanation=(
                found,
                "a part of size 1 splits off a K_1 join factor, so N is the RAAG of the rest",
                f"remaining parts {[1] * abelian_rank + list(free_ranks)} give "
                f"{format_product(abelian_rank=abelian_rank, free_ranks=free_ranks)}",
            ),
        )

    if len(parts.sizes) >= 3:
        return BBStructure(
            group_class=GroupClass.B4,
            parts=parts.sizes,
            certificate=certificate,
            explanation=(found, f"all {len(parts.sizes)} parts have size >= 2 and r >= 3"),
        )

    return BBStructure(
        group_class=GroupClass.NOT_QUASI_KAHLER,
        certificate=CertificateReport(
            kind=CertificateKind.NO_CONDITION_MATCHED,
            detail=(
                f"complete multipartite with parts {list(parts.sizes)}: no part of size 1 "
                "and fewer than 3 parts"
            ),
            parts=[list(part) for part in parts.parts],
        ),
        explanation=(found, "no part of size 1, and all parts >= 2 needs r >= 3"),
    )


def cross_checks(
    g: Graph, allow_large: bool, budget: int
) -> tuple[list[ObstructionVerdict], list[str]]:
    """Resonance obstruction verdicts in both modes, when the BB resonance is available."""

    if g.number_of_vertices <= 1 or not is_connected(g):
        return [], []

    if simple_connectivity(g=g, budget=budget).verdict != Verdict.YES:
        return [], ["resonance cross-checks skipped: flag complex not certified simply connected"]

    try:
        components = bb_resonance(g=g, allow_large=allow_large, budget=budget)
    except LargeGraphException as e:
        logger.warning(f"skipping resonance cross-checks: {e}")
        return [], [f"resonance cross-checks skipped: {e}"]

    return [
        obstruction_check(components=components, mode=ObstructionMode.QUASI_KAHLER),
        obstruction_check(components=components, mode=ObstructionMode.KAHLER),
    ], []


def classify_bb(
    g: Graph, explain: bool = False, allow_large: bool = False, budget: int = TIETZE_BUDGET
) -> ClassificationReport:
    """Quasi-projectivity, Kahler and Kollar answers for the Bestvina-Brady group of g."""

    shape = bb_structure(g=g)
    quasi_kahler = shape.group_class in QUASI_KAHLER_CLASSES
    kahler = is_complete(g) and g.number_of_vertices % 2 == 1

    assert not kahler or quasi_kahler
    assert not kahler or shape.abelian_rank % 2 == 0
    if quasi_kahler and triangle_cover(g=g).uncovered_edges:
        assert is_tree(g)

    if shape.group_class == GroupClass.B4:
        kollar = Kollar.NOT_COMMENSURABLE
    elif quasi_kahler:
        kollar = Kollar.ASPHERICAL_QP
    else:
        kollar = Kollar.NOT_APPLICABLE

    notes: list[str] = []
    if not is_connected(g):
        notes.append(DISCONNECTED_NOTE)
    if shape.group_class == GroupClass.B4:
        notes += [FP_INFINITY_NOTE, top_homology_note(parts=len(shape.parts))]
    elif quasi_kahler:
        notes.append(ASPHERICAL_NOTE)

    verdicts, skipped = cross_checks(g=g, allow_large=allow_large, budget=budget)
    notes += skipped

    consistent: Optional[bool] = None
    if verdicts:
        quasi_kahler_check, kahler_check = verdicts
        consistent = (
            (not quasi_kahler or quasi_kahler_check.passed)
            and (not kahler or kahler_check.passed)
            and (shape.group_class != GroupClass.B4 or not kahler_check.passed)
        )
        assert consistent, f"classification disagrees with resonance obstructions for {g}"

    explanation = list(shape.explanation)
    if kahler:
        explanation.append(
            f"K_{g.number_of_vertices} with an odd number of vertices: "
            f"N = Z^{shape.abelian_rank} has even rank, so it is Kahler and projective"
        )
    else:
        explanation.append("not a complete graph on an odd number of vertices: not Kahler")
    for verdict in verdicts:
        outcome = "passes" if verdict.passed else f"fails ({verdict.witness})"
        explanation.append(f"{verdict.mode.value} resonance obstruction {outcome}")

    assert shape.certificate is not None
    logger.info(f"classified as {shape.label}, kahler {kahler}")

    return ClassificationReport(
        quasi_kahler=quasi_kahler,
        quasi_projective=quasi_kahler,
        kahler=kahler,
        projective=kahler,
        group_class=shape.group_class,
        class_label=shape.label,
        structure=shape.structure,
        kollar=kollar,
        certificates=[shape.certificate],
        cross_checks=[verdict.report() for verdict in verdicts],
        cross_checks_consistent=consistent,
        notes=notes,
        explanation=explanation if explain else None,
    )


def classify_raag(g: Graph, allow_large: bool = False) -> RaagClassificationReport:
    """
    The RAAG is quasi-Kahler iff it is a product of free groups iff g is multipartite.

    The answer is read off the graph; the resonance obstruction is a cross-check and is
    skipped with a note when the graph is too large to enumerate.
    """

    parts = multipartite_parts(g=g)

    verdict: Optional[ObstructionVerdict] = None
    notes: list[str] = []
    try:
        components = raag_resonance(g=g, allow_large=allow_large)
        verdict = obstruction_check(components=components, mode=ObstructionMode.QUASI_KAHLER)
    except LargeGraphException as e:
        logger.warning(f"skipping resonance obstruction: {e}")
        notes.append(f"resonance obstruction skipped: {e}")
    obstruction = verdict.report() if verdict is not None else None

    if parts is None:
        certificate = CertificateReport(
            kind=CertificateKind.NO_CONDITION_MATCHED,
            detail="complement is not a disjoint union of cliques",
        )
        return RaagClassificationReport(
            quasi_kahler=False,
            quasi_projective=False,
            certificates=[certificate],
            obstruction=obstruction,
            notes=notes,
        )

    assert verdict is None or verdict.passed
    singletons = sum(1 for size in parts.sizes if size == 1)
    free_ranks = tuple(size for size in parts.sizes if size >= 2)

    return RaagClassificationReport(
        quasi_kahler=True,
        quasi_projective=True,
        structure=format_product(abelian_rank=singletons, free_ranks=free_ranks),
        certificates=[parts_certificate(parts=parts)],
        obstruction=obstruction,
        notes=notes,
    )
