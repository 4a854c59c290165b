import logging
from fractions import Fraction
from typing import Any, Optional

from pydantic import BaseModel

from src.algebra_types import (
    Ambient,
    AnalysisReport,
    CertificateReport,
    ComponentReport,
    ConnectivityReport,
    GraphReport,
    HyperplaneReport,
    ObstructionMode,
    PresentationReport,
    RealizationReport,
    ResonanceReport,
    RingReport,
    StructureConstantReport,
)
from src.arrangement import ArrangementRealization, milnor_data, polynomial, realize
from src.classify import classify_bb, classify_raag
from src.cohomology import bb_ring, CohomologyRing, raag_ring
from src.constants import JSON_INDENT, TIETZE_BUDGET
from src.exceptions import ArrangementException, LargeGraphException, PreconditionException
from src.flag_complex import ConnectivityVerdict, simple_connectivity
from src.graph import Graph
from src.presentation import dicks_leary, raag_presentation
from src.resonance import bb_resonance, obstruction_check, raag_resonance, ResonanceComponent
from src.tietze import abelianization, format_word, Presentation, simplify

logger = logging.getLogger(__name__)


def format_fraction(value: Fraction) -> str:
    return str(value)


def graph_report(g: Graph) -> GraphReport:
    return GraphReport(vertices=list(g.vertices), edges=[list(edge) for edge in g.edges])


def connectivity_report(verdict: ConnectivityVerdict) -> ConnectivityReport:

    if verdict.kind is None:
        return ConnectivityReport(verdict=verdict.verdict)

    parts = None
    if verdict.join_sides is not None:
        parts = [list(side) for side in verdict.join_sides]
    elif verdict.trace:
        parts = [list(verdict.trace)]

    return ConnectivityReport(
        verdict=verdict.verdict,
        certificate=CertificateReport(kind=verdict.kind, detail=verdict.detail, parts=parts),
    )


def presentation_report(p: Presentation, group: Ambient) -> PresentationReport:

    free_rank, torsion = abelianization(p=p)

    return PresentationReport(
        group=group,
        generators=list(p.generators),
        relators=[format_word(word=relator) for relator in p.relators],
        abelianization_rank=free_rank,
        torsion=torsion,
        faithful=p.faithful,
    )


def ring_report(r: CohomologyRing) -> RingReport:
    """Bases by degree and every nonzero structure constant of positive-degree products."""

    products = []
    for (p, q), table in sorted(r.table.items()):
        if p == 0 or q == 0:
            continue
        for (i, j), sparse in sorted(table.items()):
            for k, value in sorted(sparse.items()):
                products.append(
                    StructureConstantReport(
                        degrees=[p, q], i=i, j=j, k=k, value=format_fraction(value)
                    )
                )

    return RingReport(
        ambient=r.ambient,
        bases={str(degree): r.basis_labels(degree) for degree in sorted(r.bases)},
        products=products,
        betti=[r.dimension(degree) for degree in sorted(r.bases)],
    )


def ring_dump(r: CohomologyRing) -> str:
    return to_json(model=ring_report(r=r))


def component_report(c: ResonanceComponent) -> ComponentReport:
    return ComponentReport(
        ambient=c.ambient,
        w=list(c.w),
        dim=c.dimension,
        isotropicity=c.isotropicity,
        basis_matrix=[
            [format_fraction(value) for value in element.coordinates] for element in c.basis
        ],
    )


def resonance_report(ambient: Ambient, components: list[ResonanceComponent]) -> ResonanceReport:
    return ResonanceReport(
        ambient=ambient,
        components=[component_report(c=c) for c in components],
        obstructions=[
            obstruction_check(components=components, mode=mode).report()
            for mode in ObstructionMode
        ],
    )


def realization_report(a: ArrangementRealization) -> RealizationReport:
    return RealizationReport(
        kind=a.kind,
        ambient_dim=a.ambient_dim,
        hyperplanes=[HyperplaneReport(var=h.var, shift=h.shift) for h in a.hyperplanes],
        exponents=list(a.exponents),
        degree=a.degree,
        nu_images=list(a.nu_images),
        polynomial=polynomial(hyperplanes=a.hyperplanes, exponents=a.exponents),
        fundamental_group=a.fundamental_group,
        aspherical=a.aspherical,
    )


def to_json(model: BaseModel) -> str:
    return model.json(by_alias=True, indent=JSON_INDENT) + "\n"


def render_scalar(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return "[" + ", ".join(render_scalar(item) for item in value) + "]"
    return str(value)


def is_nested(value: Any) -> bool:
    if isinstance(value, dict):
        return True
    return isinstance(value, list) and any(isinstance(item, (dict, list)) for item in value)


def render_lines(value: Any, indent: int) -> list[str]:

    pad = "  " * indent
    lines: list[str] = []

    if isinstance(value, dict):
        for key, item in value.items():
            if item is None:
                continue
            if is_nested(item):
                lines.append(f"{pad}{key}:")
                lines += render_lines(value=item, indent=indent + 1)
            else:
                lines.append(f"{pad}{key}: {render_scalar(item)}")
        return lines

    for item in value:
        if is_nested(item):
            lines.append(f"{pad}-")
            lines += render_lines(value=item, indent=indent + 1)
        else:
            lines.append(f"{pad}- {render_scalar(item)}")

    return lines


def render_text(model: BaseModel) -> str:
    """Indented `key: value` lines; nulls are left out."""
    return "\n".join(render_lines(value=model.dict(by_alias=True), indent=0)) + "\n"


def analyze(
    g: Graph,
    explain: bool = False,
    allow_large: bool = False,
    budget: int = TIETZE_BUDGET,
    exponents: Optional[list[int]] = None,
) -> AnalysisReport:
    """
    Every report that applies to g. A section whose preconditions fail is left out and its
    reason recorded under `refusals`.
    """

    refusals: dict[str, str] = {}
    verdict = simple_connectivity(g=g, budget=budget)

    raag_classification = classify_raag(g=g, allow_large=allow_large)
    raag_components: Optional[list[ResonanceComponent]] = None
    try:
        raag_components = raag_resonance(g=g, allow_large=allow_large)
    except LargeGraphException as e:
        refusals["raagResonance"] = str(e)

    presentations = [presentation_report(p=raag_presentation(g=g), group=Ambient.RAAG)]
    cohomology = [ring_report(r=raag_ring(g=g))]
    resonance = []
    if raag_components is not None:
        resonance.append(resonance_report(ambient=Ambient.RAAG, components=raag_components))

    try:
        presentations.append(
            presentation_report(p=dicks_leary(g=g, budget=budget), group=Ambient.BB)
        )
    except PreconditionException as e:
        refusals["bbPresentation"] = e.reason

    ring: Optional[CohomologyRing] = None
    try:
        ring = bb_ring(g=g, budget=budget)
        cohomology.append(ring_report(r=ring))
    except PreconditionException as e:
        refusals["bbCohomology"] = e.reason

    if ring is not None:
        try:
            components = bb_resonance(g=g, allow_large=allow_large, budget=budget, r=ring)
            resonance.append(resonance_report(ambient=Ambient.BB, components=components))
        except (PreconditionException, LargeGraphException) as e:
            refusals["bbResonance"] = str(e)

    arrangement: Optional[ArrangementRealization] = None
    realization = None
    milnor = None
    try:
        arrangement = realize(g=g)
        realization = realization_report(a=arrangement)
    except PreconditionException as e:
        refusals["realization"] = e.reason

    if arrangement is not None:
        try:
            milnor = milnor_data(a=arrangement, e=exponents)
        except (PreconditionException, ArrangementException) as e:
            refusals["milnor"] = str(e)

    logger.info(f"analysis finished with {len(refusals)} refusals")

    return AnalysisReport(
        graph=graph_report(g=g),
        connectivity=connectivity_report(verdict=verdict),
        classification=classify_bb(g=g, explain=explain, allow_large=allow_large, budget=budget),
        raag_classification=raag_classification,
        presentations=presentations,
        cohomology=cohomology,
        resonance=resonance,
        realization=realization,
        milnor=milnor,
        refusals=refusals,
    )


def simplified_report(p: Presentation, group: Ambient, budget: int) -> PresentationReport:
    return presentation_report(p=simplify(p=p, budget=budget), group=group)
