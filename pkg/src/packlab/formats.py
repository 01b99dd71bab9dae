"""Graph serialization: graph6 strings and plain edge-list text.

graph6 packs the upper triangle column by column (edge (i, j), i < j, at bit
``j*(j-1)//2 + i``), six bits per printable byte, after a size header: one
byte for n <= 62, the four-byte ``~``-prefixed form for larger n.  That bit
order matches the package's edge-mask integers, so witness masks from the
enumeration kernels serialize without reshuffling.

The edge-list format is line oriented: a ``n=<N>`` header, then one ``u v``
pair per line.
"""

from __future__ import annotations

from .errors import Graph6Error, ParameterRangeError
from .graph import Graph

_G6_MAX = 258047


def encode_graph6(graph: Graph) -> str:
    n = graph.n
    if n <= 62:
        header = bytes([n + 63])
    elif n <= _G6_MAX:
        header = bytes(
            [126, 63 + ((n >> 12) & 63), 63 + ((n >> 6) & 63), 63 + (n & 63)]
        )
    else:  # unreachable under the vertex cap, kept for safety
        raise ParameterRangeError(f"graph6 encoder supports n <= {_G6_MAX}")
    mask = graph.edge_mask()
    nslots = n * (n - 1) // 2
    out = bytearray(header)
    for start in range(0, nslots, 6):
        group = 0
        for t in range(6):
            s = start + t
            bit = (mask >> s) & 1 if s < nslots else 0
            group = (group << 1) | bit
        out.append(63 + group)
    return out.decode("ascii")


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error("graph6 strings are ASCII") from exc
    for b in data:
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} outside the graph6 alphabet")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("graph6 sizes beyond 258047 are not supported")
        if len(data) < 4:
            raise Graph6Error("truncated graph6 size header")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
        if n <= 62:
            raise Graph6Error("non-canonical long size header for n <= 62")
    else:
        n = data[0] - 63
        body = data[1:]
    nslots = n * (n - 1) // 2
    nbytes = (nslots + 5) // 6
    if len(body) != nbytes:
        raise Graph6Error(
            f"graph6 body has {len(body)} bytes, expected {nbytes} for n={n}"
        )
    mask = 0
    for idx, b in enumerate(body):
        group = b - 63
        for t in range(6):
            s = idx * 6 + t
            bit = (group >> (5 - t)) & 1
            if s < nslots:
                mask |= bit << s
            elif bit:
                raise Graph6Error("nonzero padding bits in graph6 body")
    return Graph.from_edge_mask(n, mask)


def format_edge_list(graph: Graph) -> str:
    lines = [f"n={graph.n}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("n="):
        raise ParameterRangeError("edge list must start with an 'n=<N>' header")
    try:
        n = int(lines[0][2:])
    except ValueError as exc:
        raise ParameterRangeError(f"bad vertex count {lines[0]!r}") from exc
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParameterRangeError(f"bad edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ParameterRangeError(f"bad edge line {ln!r}") from exc
        edges.append((u, v))
    return Graph(n, edges)


def parse_graph(text: str, fmt: str | None = None) -> Graph:
    """Parse either supported format; auto-detects on the 'n=' header."""
    if fmt == "graph6":
        return decode_graph6(text)
    if fmt == "edges":
        return parse_edge_list(text)
    if fmt is not None:
        raise ParameterRangeError(f"unknown graph format {fmt!r}")
    stripped = text.lstrip()
    if stripped.startswith("n="):
        return parse_edge_list(text)
    return decode_graph6(text)
