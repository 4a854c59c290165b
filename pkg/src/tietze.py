import logging
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from src.constants import INVERSE_SUFFIX, TIETZE_BUDGET
from src.exceptions import PresentationParseException
from src.linalg import abelian_invariants

logger = logging.getLogger(__name__)

Letter = tuple[str, int]
Word = tuple[Letter, ...]


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]
    faithful: bool = True

    def __post_init__(self) -> None:
        declared = set(self.generators)
        assert len(declared) == len(self.generators)
        for relator in self.relators:
            assert all(label in declared and exponent in (1, -1) for label, exponent in relator)
            assert free_reduce(word=relator) == relator

    @property
    def length(self) -> int:
        return len(self.generators) + sum(len(relator) for relator in self.relators)

    def is_trivial(self) -> bool:
        return not self.generators


def invert(word: Sequence[Letter]) -> Word:
    return tuple((label, -exponent) for label, exponent in reversed(word))


def free_reduce(word: Iterable[Letter]) -> Word:

    reduced: list[Letter] = []

    for label, exponent in word:
        if reduced and reduced[-1][0] == label and reduced[-1][1] == -exponent:
            reduced.pop()
        else:
            reduced.append((label, exponent))

    return tuple(reduced)


def cyclically_reduce(word: Iterable[Letter]) -> Word:

    reduced = list(free_reduce(word=word))

    while len(reduced) > 1 and reduced[0] == (reduced[-1][0], -reduced[-1][1]):
        reduced = reduced[1:-1]

    return tuple(reduced)


def commutator(a: str, b: str) -> Word:
    return ((a, 1), (b, 1), (a, -1), (b, -1))


def build_presentation(
    generators: Sequence[str], relators: Iterable[Iterable[Letter]], faithful: bool = True
) -> Presentation:

    reduced = [free_reduce(word=relator) for relator in relators]

    return Presentation(
        generators=tuple(generators),
        relators=tuple(relator for relator in reduced if relator),
        faithful=faithful,
    )


def abelianization(p: Presentation) -> tuple[int, list[int]]:
    """Free rank and torsion of the abelianized group, via the relator exponent matrix."""

    column = {generator: position for position, generator in enumerate(p.generators)}
    rows = []

    for relator in p.relators:
        row = [0] * len(p.generators)
        for label, exponent in relator:
            row[column[label]] += exponent
        rows.append(row)

    return abelian_invariants(rows=rows, columns=len(p.generators))


def solve_for(relator: Word, generator: str) -> Word:
    """Word equal to `generator` in the group, read off a relator where it occurs once."""

    position = next(i for i, (label, _) in enumerate(relator) if label == generator)
    rotated = relator[position:] + relator[:position]
    exponent = rotated[0][1]
    rest = rotated[1:]

    return invert(word=rest) if exponent == 1 else rest


def substitute(word: Word, generator: str, replacement: Word) -> Word:

    substituted: list[Letter] = []

    for label, exponent in word:
        if label == generator:
            substituted += replacement if exponent == 1 else invert(word=replacement)
        else:
            substituted.append((label, exponent))

    return cyclically_reduce(word=substituted)


def normalize_relators(relators: Iterable[Word]) -> tuple[Word, ...]:

    normalized: list[Word] = []

    for relator in relators:
        reduced = cyclically_reduce(word=relator)
        if reduced and reduced not in normalized:
            normalized.append(reduced)

    return tuple(normalized)


def eliminate(p: Presentation, relator_index: int, generator: str) -> Presentation:

    replacement = solve_for(relator=p.relators[relator_index], generator=generator)
    others = [
        substitute(word=relator, generator=generator, replacement=replacement)
        for position, relator in enumerate(p.relators)
        if position != relator_index
    ]

    return Presentation(
        generators=tuple(g for g in p.generators if g != generator),
        relators=normalize_relators(relators=others),
        faithful=p.faithful,
    )


def best_elimination(p: Presentation) -> Optional[tuple[Presentation, str]]:
    """
    Cheapest generator elimination, or None when nothing can be eliminated.

    A generator is eliminable from a relator where it occurs exactly once. Candidates are
    ranked by resulting total length, then by how many occurrences get substituted, then by
    preferring the generator listed last.
    """

    best: Optional[tuple[tuple[int, int, int], Presentation, str]] = None
    position = {generator: i for i, generator in enumerate(p.generators)}

    for relator_index, relator in enumerate(p.relators):
        counts = Counter(label for label, _ in relator)
        for generator, count in counts.items():
            if count != 1:
                continue
            candidate = eliminate(p=p, relator_index=relator_index, generator=generator)
            substitutions = sum(
                1
                for other_index, other in enumerate(p.relators)
                if other_index != relator_index
                for label, _ in other
                if label == generator
            )
            key = (candidate.length, substitutions, -position[generator])
            if best is None or key < best[0]:
                best = (key, candidate, generator)

    if best is None or best[1].length > p.length:
        return None

    return best[1], best[2]


def simplify_with_trace(
    p: Presentation, budget: int = TIETZE_BUDGET
) -> tuple[Presentation, list[str]]:

    assert budget >= 0
    trace: list[str] = []
    moves = 0

    if budget == 0:
        return p, trace

    normalized = normalize_relators(relators=p.relators)
    if normalized != p.relators:
        p = Presentation(generators=p.generators, relators=normalized, faithful=p.faithful)
        trace.append("reduce relators")
        moves += 1

    while moves < budget:
        elimination = best_elimination(p=p)
        if elimination is None:
            break
        p, generator = elimination
        trace.append(f"eliminate {generator}")
        moves += 1

    logger.info(f"tietze simplification used {moves} moves, {len(p.generators)} generators left")

    return p, trace


def simplify(p: Presentation, budget: int = TIETZE_BUDGET) -> Presentation:
    """
    Free reduction plus generator eliminations, at most `budget` moves.

    Eliminations are not limited to relators of length <= 2: a generator occurring once in
    any relator may be solved for and substituted, provided the total relator length does
    not grow.
    """

    simplified, _ = simplify_with_trace(p=p, budget=budget)
    return simplified


def format_word(word: Word) -> str:
    return " ".join(
        label if exponent == 1 else f"{label}{INVERSE_SUFFIX}" for label, exponent in word
    )


def parse_word(text: str) -> Word:

    letters: list[Letter] = []

    for token in text.split():
        if token.endswith(INVERSE_SUFFIX):
            letters.append((token[: -len(INVERSE_SUFFIX)], -1))
        else:
            letters.append((token, 1))

    return tuple(letters)


def serialize_presentation(p: Presentation) -> str:
    lines = [" ".join(p.generators)] + [format_word(word=relator) for relator in p.relators]
    return "\n".join(lines) + "\n"


def parse_presentation(text: str) -> Presentation:

    lines = text.splitlines()
    if not lines:
        raise PresentationParseException("Presentation text is empty")

    generators = lines[0].split()
    relators = [parse_word(text=line) for line in lines[1:] if line.strip()]

    declared = set(generators)
    for relator in relators:
        unknown = {label for label, _ in relator if label not in declared}
        if unknown:
            raise PresentationParseException(f"Undeclared generators in relator: {unknown}")

    return build_presentation(generators=generators, relators=relators)
