import logging
import re
from typing import Optional

from src.constants import (
    COMMENT_PREFIX,
    CONSTRUCTOR_ARITY,
    MIN_CONSTRUCTOR_SIZE,
    VERTICES_HEADER,
)
from src.exceptions import EmptyGraphException, GraphParseException
from src.graph import (
    build_graph,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    edgeless_graph,
    Graph,
    join,
    path_graph,
)

logger = logging.getLogger(__name__)

TOKEN_PATTERN = re.compile(r"\s*(?:(?P<name>[A-Za-z]+)|(?P<number>\d+)|(?P<symbol>[(),]))")
EXPRESSION_PATTERN = re.compile(r"^\s*[A-Za-z]+\s*\(")


def parse_graph(text: str) -> Graph:
    """
    Parse a constructor expression such as `Km(2,2,2)` or an edge-list document.

    Edge-list documents have one `u v` pair per line and an optional `vertices: a b c`
    header that fixes the vertex order; without a header the order is natural label order.
    """

    if EXPRESSION_PATTERN.match(text) and "\n" not in text.strip():
        graph = parse_expression(expression=text)
    else:
        graph = parse_edge_list(document=text)

    if graph.number_of_vertices == 0:
        raise EmptyGraphException("A graph needs at least one vertex")

    logger.info(
        f"parsed graph with {graph.number_of_vertices} vertices, {graph.number_of_edges} edges"
    )
    return graph


def tokenize(expression: str) -> list[str]:

    tokens: list[str] = []
    position = 0
    stripped = expression.rstrip()

    while position < len(stripped):
        match = TOKEN_PATTERN.match(stripped, position)
        if match is None or match.end() == position:
            raise GraphParseException(f"Unexpected character at {position}: {expression!r}")
        tokens.append(match.group(match.lastgroup or "symbol"))
        position = match.end()

    return tokens


def parse_expression(expression: str) -> Graph:

    tokens = tokenize(expression=expression)
    graph, position = parse_term(tokens=tokens, position=0)

    if position != len(tokens):
        raise GraphParseException(f"Trailing input after expression: {tokens[position:]}")

    return graph


def expect(tokens: list[str], position: int, symbol: str) -> int:
    if position >= len(tokens) or tokens[position] != symbol:
        found = tokens[position] if position < len(tokens) else "end of input"
        raise GraphParseException(f"Expected {symbol!r}, found {found!r}")
    return position + 1


def parse_term(tokens: list[str], position: int) -> tuple[Graph, int]:

    if position >= len(tokens) or not tokens[position].isalpha():
        raise GraphParseException("Expected a constructor name")

    name = tokens[position]
    if name not in CONSTRUCTOR_ARITY and name != "Km":
        raise GraphParseException(f"Unknown constructor {name!r}")

    position = expect(tokens=tokens, position=position + 1, symbol="(")

    if name == "join":
        left, position = parse_term(tokens=tokens, position=position)
        position = expect(tokens=tokens, position=position, symbol=",")
        right, position = parse_term(tokens=tokens, position=position)
        position = expect(tokens=tokens, position=position, symbol=")")
        return join(a=left, b=right), position

    numbers: list[int] = []
    while True:
        if position >= len(tokens) or not tokens[position].isdigit():
            raise GraphParseException(f"Expected an integer argument to {name}")
        numbers.append(int(tokens[position]))
        position += 1
        if position < len(tokens) and tokens[position] == ",":
            position += 1
            continue
        break
    position = expect(tokens=tokens, position=position, symbol=")")

    arity: Optional[int] = CONSTRUCTOR_ARITY.get(name)
    if arity is not None and len(numbers) != arity:
        raise GraphParseException(f"{name} takes {arity} argument(s), got {len(numbers)}")

    minimum = MIN_CONSTRUCTOR_SIZE[name]
    if any(number < minimum for number in numbers):
        raise GraphParseException(f"{name} arguments must be at least {minimum}")

    return construct(name=name, numbers=numbers), position


def construct(name: str, numbers: list[int]) -> Graph:

    if name == "K":
        return complete_graph(n=numbers[0])
    elif name == "Kbar":
        return edgeless_graph(n=numbers[0])
    elif name == "Km":
        return complete_multipartite(sizes=numbers)
    elif name == "path":
        return path_graph(n=numbers[0])
    elif name == "cycle":
        return cycle_graph(n=numbers[0])

    raise GraphParseException(f"Unknown constructor {name!r}")


def natural_key(label: str) -> tuple:
    return tuple(int(part) if part.isdigit() else part for part in re.split(r"(\d+)", label))


def parse_edge_list(document: str) -> Graph:

    declared: Optional[list[str]] = None
    edges: list[tuple[str, str]] = []

    for line_number, raw_line in enumerate(document.splitlines(), start=1):
        line = raw_line.split(COMMENT_PREFIX, 1)[0].strip()
        if not line:
            continue

        if line.startswith(VERTICES_HEADER):
            if declared is not None or edges:
                raise GraphParseException(f"Line {line_number}: header must come first, once")
            declared = line[len(VERTICES_HEADER) :].split()  # noqa: E203
            continue

        fields = line.split()
        if len(fields) != 2:
            raise GraphParseException(f"Line {line_number}: expected 'u v', got {line!r}")
        edges.append((fields[0], fields[1]))

    if declared is None:
        labels = {label for edge in edges for label in edge}
        declared = sorted(labels, key=natural_key)

    return build_graph(vertices=declared, edges=edges)


def serialize_graph(g: Graph) -> str:
    lines = [" ".join([VERTICES_HEADER] + list(g.vertices))]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"
