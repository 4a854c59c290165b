import logging
from typing import Optional

from src.algebra_types import Verdict
from src.constants import TIETZE_BUDGET
from src.exceptions import PreconditionException
from src.flag_complex import edge_label, flag_complex_triangles, simple_connectivity
from src.graph import Graph, is_connected
from src.tietze import build_presentation, commutator, Presentation, Word

logger = logging.getLogger(__name__)


def raag_presentation(g: Graph) -> Presentation:
    relators = [commutator(a=u, b=v) for u, v in g.edges]
    return build_presentation(generators=g.vertices, relators=relators)


def dicks_leary(g: Graph, force: bool = False, budget: int = TIETZE_BUDGET) -> Presentation:
    """
    Dicks-Leary presentation of the Bestvina-Brady group.

    Generators are the edges, oriented increasingly. Each directed triangle (e, f, g) with
    e = {u,v}, f = {v,w}, g = {u,w}, u < v < w contributes e f e^-1 f^-1 and e f g^-1.
    The presentation is only certified when the flag complex is simply connected; with
    `force` it is emitted anyway and marked as not faithful.
    """

    reason = dicks_leary_refusal(g=g, budget=budget)
    if reason is not None:
        if not force:
            logger.warning(f"refusing Dicks-Leary presentation: {reason}")
            raise PreconditionException(reason)
        logger.warning(f"emitting uncertified Dicks-Leary presentation: {reason}")

    relators: list[Word] = []
    for u, v, w in flag_complex_triangles(g=g):
        e = edge_label((u, v))
        f = edge_label((v, w))
        h = edge_label((u, w))
        relators.append(commutator(a=e, b=f))
        relators.append(((e, 1), (f, 1), (h, -1)))

    return build_presentation(
        generators=[edge_label(edge) for edge in g.edges],
        relators=relators,
        faithful=reason is None,
    )


def dicks_leary_refusal(g: Graph, budget: int = TIETZE_BUDGET) -> Optional[str]:

    if not is_connected(g):
        return "graph is disconnected, so the Bestvina-Brady group is not finitely generated"

    verdict = simple_connectivity(g=g, budget=budget)
    if verdict.verdict == Verdict.NO:
        return f"flag complex is not simply connected ({verdict.detail})"
    if verdict.verdict == Verdict.UNKNOWN:
        return "simple connectivity of the flag complex could not be certified"

    return None
