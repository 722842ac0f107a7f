"""graph6, edge-list and DOT formats."""

import logging
import re
from collections.abc import Iterator

from .errors import (
    DuplicateEdgeError,
    EdgeListSyntaxError,
    EdgeRangeError,
    Graph6ByteRangeError,
    Graph6LengthError,
    Graph6PaddingError,
    Graph6SizeError,
    LoopEdgeError,
)
from .graph import MAX_VERTICES, Graph

logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"
_DOT_ID = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def _graph6_groups(n: int) -> int:
    return -(-(n * (n - 1) // 2) // 6)


def decode_graph6(text: str) -> Graph:
    """Decode the short graph6 form (n <= 62); surrounding whitespace is an error.

    Adjacency bits run over the upper triangle column by column,
    (0,1), (0,2), (1,2), (0,3), ... packed most significant bit first.
    """
    s = text
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    if not s:
        raise Graph6LengthError("empty graph6 string")
    for position, char in enumerate(s):
        if not 63 <= ord(char) <= 126:
            raise Graph6ByteRangeError(f"byte {ord(char)} at position {position} outside [63, 126]")
    if s[0] == "~":
        raise Graph6SizeError("extended graph6 header (n >= 63) is not supported")

    n = ord(s[0]) - 63
    groups = _graph6_groups(n)
    if len(s) != 1 + groups:
        raise Graph6LengthError(f"graph6 string for n={n} needs {1 + groups} bytes, got {len(s)}")

    packed = 0
    for char in s[1:]:
        packed = (packed << 6) | (ord(char) - 63)
    pair_count = n * (n - 1) // 2
    padding = 6 * groups - pair_count
    if packed & ((1 << padding) - 1):
        raise Graph6PaddingError(f"nonzero padding bits in {s!r}")
    packed >>= padding

    rows = [0] * n
    position = pair_count - 1
    for j in range(1, n):
        for i in range(j):
            if (packed >> position) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            position -= 1
    return Graph.from_rows(rows)


def encode_graph6(graph: Graph) -> str:
    n = graph.vertex_count
    if n > MAX_VERTICES:
        raise Graph6SizeError(f"graph6 short form holds at most {MAX_VERTICES} vertices, got {n}")
    rows = graph.rows
    packed = 0
    for j in range(1, n):
        row = rows[j]
        for i in range(j):
            packed = (packed << 1) | ((row >> i) & 1)
    groups = _graph6_groups(n)
    packed <<= 6 * groups - n * (n - 1) // 2
    chars = [chr(63 + n)]
    for shift in range(6 * (groups - 1), -1, -6):
        chars.append(chr(63 + ((packed >> shift) & 0x3F)))
    return "".join(chars)


def read_graph6_lines(text: str) -> Iterator[Graph]:
    """One graph per non-blank line."""
    for line in text.splitlines():
        line = line.strip()
        if line:
            yield decode_graph6(line)


def parse_edge_list(text: str) -> Graph:
    """Parse ``n <count>`` followed by ``i j`` lines; ``#`` lines are comments."""
    lines = [
        (number, line.strip())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.strip().startswith("#")
    ]
    if not lines:
        raise EdgeListSyntaxError("missing 'n <count>' header")

    number, header = lines[0]
    fields = header.split()
    if len(fields) != 2 or fields[0] != "n" or not (fields[1].isascii() and fields[1].isdigit()):
        raise EdgeListSyntaxError(f"line {number}: expected 'n <count>', got {header!r}")
    n = int(fields[1])
    if n > MAX_VERTICES:
        raise EdgeRangeError(f"line {number}: vertex count {n} exceeds {MAX_VERTICES}")

    edges: set[tuple[int, int]] = set()
    for number, line in lines[1:]:
        fields = line.split()
        try:
            if not line.isascii():
                raise ValueError(line)
            u, v = (int(field) for field in fields)
        except ValueError as e:
            raise EdgeListSyntaxError(f"line {number}: expected 'i j', got {line!r}") from e
        if u == v:
            raise LoopEdgeError(f"line {number}: loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeRangeError(f"line {number}: edge ({u}, {v}) outside [0, {n})")
        key = (min(u, v), max(u, v))
        if key in edges:
            raise DuplicateEdgeError(f"line {number}: duplicate edge {key}")
        edges.add(key)
    return Graph(n, edges)


def write_edge_list(graph: Graph) -> str:
    lines = [f"n {graph.vertex_count}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def write_dot(graph: Graph, name: str = "G") -> str:
    graph_id = name if _DOT_ID.match(name) else '"' + name.replace('"', '\\"') + '"'
    lines = [f"graph {graph_id} {{"]
    lines.extend(f"  {v};" for v in graph.vertices())
    lines.extend(f"  {u} -- {v};" for u, v in graph.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_graphs(text: str) -> list[Graph]:
    """Read a graph6 stream, or a single edge-list block if the first line is ``n <count>``."""
    first = next((line.strip() for line in text.splitlines() if line.strip()), None)
    if first is None:
        return []
    if first.startswith("n ") or first == "n":
        graphs = [parse_edge_list(text)]
    else:
        graphs = list(read_graph6_lines(text))
    logger.debug(f"Read {len(graphs)} graphs")
    return graphs
