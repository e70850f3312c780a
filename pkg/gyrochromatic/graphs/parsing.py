"""
Graph input and output

Includes:
- read_edge_list / write_edge_list: "n m" header, then m lines "u v" (0-indexed, '#' comments)
- read_connection_set: JSON {"moduli": [...], "S": [[...], ...]} for cayley:<group>:<file>
- parse_dsl: generator expressions such as "lex(K2,circulant:5:1,4)"
- resolve_graph: '-' (stdin), an edge-list file, or a DSL string
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

from mylogger import Logger

from gyrochromatic import settings
from gyrochromatic.exceptions import ValidationError
from gyrochromatic.graphs import generators, operations
from gyrochromatic.graphs.models import AbelianGroup, ConnectionSet, Graph

logger = Logger()


# ----------------------- EDGE LISTS -----------------------

def read_edge_list(text: str, label: str = "") -> Graph:
    """ Parse the edge-list format; errors carry the offending line number """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            lines.append((lineno, content))
    if not lines:
        raise ValidationError("empty edge list, expected header 'n m'")

    def ints(lineno, content):
        parts = content.split()
        if len(parts) != 2:
            raise ValidationError(f"expected two integers, got {content!r}", location=f"line {lineno}")
        try:
            return int(parts[0]), int(parts[1])
        except ValueError:
            raise ValidationError(f"expected two integers, got {content!r}", location=f"line {lineno}")

    n, m = ints(*lines[0])
    edges = [ints(lineno, content) for lineno, content in lines[1:]]
    if len(edges) != m:
        raise ValidationError(f"header announces {m} edges but {len(edges)} were given", location="line 1")
    return generators.make_graph(n, edges, label=label or f"edgelist({n},{m})")


def write_edge_list(g: Graph) -> str:
    out = [f"# {g.label}", f"{g.n} {g.edge_count}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def read_connection_set(path: str) -> ConnectionSet:
    """ Load {"moduli": [...], "S": [[...], ...]} from path (falls back to the bundled data dir) """
    candidate = Path(path)
    if not candidate.exists():
        candidate = settings.DATA_DIR / path
    try:
        payload = json.loads(candidate.read_text())
    except FileNotFoundError:
        raise ValidationError(f"connection set file {path!r} not found")
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed JSON in {path}: {exc.msg}", location=f"line {exc.lineno}")
    if not isinstance(payload, dict) or "moduli" not in payload or "S" not in payload:
        raise ValidationError(f"{path} must contain 'moduli' and 'S'")
    moduli, entries = payload["moduli"], payload["S"]
    if not isinstance(moduli, list) or any(isinstance(m, bool) or not isinstance(m, int) for m in moduli):
        raise ValidationError(f"moduli in {path} must be a list of integers", location="$.moduli")
    group = AbelianGroup(tuple(moduli))
    if not isinstance(entries, list):
        raise ValidationError(f"S in {path} must be a list of group elements", location="$.S")
    elements = []
    for i, x in enumerate(entries):
        if not isinstance(x, list):
            raise ValidationError(f"expected a list of residues, got {x!r}", location=f"$.S[{i}]")
        try:
            elements.append(group.validate(x))
        except ValidationError as exc:
            raise ValidationError(exc.message, location=f"$.S[{i}]")
    return ConnectionSet(group, frozenset(elements))


# ----------------------- GENERATOR DSL -----------------------

_BINARY = {
    "cartesian": operations.cartesian,
    "lex": operations.lexicographic,
    "union": operations.disjoint_union,
}
_UNARY = {
    "line": operations.line_graph,
    "complement": operations.complement,
}


class _DslParser:
    """ Recursive-descent parser over a DSL string """

    def __init__(self, text: str):
        self.text = text.replace(" ", "")
        self.pos = 0

    def fail(self, message):
        raise ValidationError(f"{message} in graph spec {self.text!r}", location=f"offset {self.pos}")

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char: str):
        if self.peek() != char:
            self.fail(f"expected {char!r}")
        self.pos += 1

    def name(self) -> str:
        start = self.pos
        while self.peek().isalpha() or self.peek() == "_":
            self.pos += 1
        if start == self.pos:
            self.fail("expected a graph name")
        return self.text[start:self.pos]

    def integer(self) -> int:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected an integer")
        return int(self.text[start:self.pos])

    def integers(self, count=None) -> list[int]:
        """ Comma-separated integers; without count, continues while a digit follows the comma """
        values = [self.integer()]
        while self.peek() == "," and (count is None or len(values) < count):
            nxt = self.text[self.pos + 1:self.pos + 2]
            if not nxt.isdigit():
                break
            self.pos += 1
            values.append(self.integer())
        if count is not None and len(values) != count:
            self.fail(f"expected {count} integers")
        return values

    def token(self) -> str:
        start = self.pos
        while self.peek() and self.peek() not in ",)":
            self.pos += 1
        return self.text[start:self.pos]

    def parse(self) -> Graph:
        graph = self.graph()
        if self.pos != len(self.text):
            self.fail("unexpected trailing input")
        return graph

    def graph(self) -> Graph:
        name = self.name()
        lowered = name.lower()
        if self.peek() == "(":
            return self.call(lowered)
        if name in ("K", "C") and self.peek().isdigit():
            size = self.integer()
            return generators.complete(size) if name == "K" else generators.cycle(size)
        if lowered == "petersen":
            return generators.petersen()
        if lowered == "g" and self.peek() == "5":
            self.integer()
            return generators.g5()
        self.expect(":")
        if lowered == "kneser":
            return generators.kneser(*self.integers(2))
        if lowered == "circclique":
            return generators.circular_clique(*self.integers(2))
        if lowered == "hamming":
            return generators.hamming_cayley(*self.integers(2))
        if lowered == "circulant":
            modulus = self.integer()
            self.expect(":")
            return generators.circulant(modulus, self.integers())
        if lowered == "cayley":
            group = self.token_until(":")
            self.expect(":")
            connection = read_connection_set(self.token())
            if connection.group != AbelianGroup.parse(group):
                self.fail(f"connection set file is over Z_{connection.group}, not Z_{group}")
            return generators.cayley(connection.group, connection, label=f"cayley:{group}")
        self.fail(f"unknown graph {name!r}")

    def token_until(self, stop: str) -> str:
        start = self.pos
        while self.peek() and self.peek() != stop:
            self.pos += 1
        return self.text[start:self.pos]

    def call(self, func: str) -> Graph:
        self.expect("(")
        if func in _BINARY:
            left = self.graph()
            self.expect(",")
            right = self.graph()
            result = _BINARY[func](left, right)
        elif func in _UNARY:
            result = _UNARY[func](self.graph())
        elif func == "identify":
            left = self.graph()
            self.expect(",")
            u = self.integer()
            self.expect(",")
            right = self.graph()
            self.expect(",")
            v = self.integer()
            result = operations.identify(left, u, right, v)
        else:
            self.fail(f"unknown operation {func!r}")
        self.expect(")")
        return result


def parse_dsl(text: str) -> Graph:
    return _DslParser(text).parse()


def resolve_graph(spec: str, stdin=None) -> Graph:
    """ '-' reads an edge list from stdin, an existing path is an edge-list file, anything else is DSL """
    if spec == "-":
        stream = stdin if stdin is not None else sys.stdin
        return read_edge_list(stream.read(), label="stdin")
    path = Path(spec)
    if path.is_file():
        logger.debug(f"reading edge list from {path}")
        return read_edge_list(path.read_text(), label=path.name)
    graph = parse_dsl(spec)
    logger.debug(f"built {graph.label}: n={graph.n}, m={graph.edge_count}, vt={graph.vt}")
    return graph
