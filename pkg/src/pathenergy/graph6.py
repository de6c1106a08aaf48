"""graph6 encoding and decoding (short form, n <= 62).

The format packs the upper triangle of the adjacency matrix in column-major
order (x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...) into 6-bit groups, each
offset by 63 into the printable ASCII range. The first byte encodes the
vertex count. The long form (first byte 126, n >= 63) is rejected: streams
at the scale this package targets stay far below 62 vertices.
"""

from __future__ import annotations

from .graphs import Graph

HEADER = ">>graph6<<"

_MAX_SHORT_N = 62


class Graph6ParseError(ValueError):
    """Malformed graph6 input; ``offset`` is the failing byte position."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"byte {offset}: {message}"
        super().__init__(message)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (an optional leading file header is tolerated)."""
    if text.startswith(HEADER):
        text = text[len(HEADER):]
    text = text.rstrip("\r\n")
    if not text:
        raise Graph6ParseError("empty graph6 string", offset=0)
    for i, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise Graph6ParseError(
                f"character {ch!r} outside printable range 63..126", offset=i
            )
    n = ord(text[0]) - 63
    if n == 63:
        raise Graph6ParseError(
            "long form (n >= 63) is not supported", offset=0
        )
    body = text[1:]
    need_bits = n * (n - 1) // 2
    need_bytes = (need_bits + 5) // 6
    if len(body) != need_bytes:
        raise Graph6ParseError(
            f"expected {need_bytes} data bytes for n={n}, got {len(body)}",
            offset=min(len(text), 1 + need_bytes),
        )
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                edges.append((u, v))
            k += 1
    for j in range(need_bits, len(bits)):
        if bits[j]:
            raise Graph6ParseError("nonzero padding bits", offset=1 + j // 6)
    return Graph(n, tuple(sorted(edges)))


def emit_graph6(g: Graph) -> str:
    """Encode a graph in short form with zero-padded trailing bits."""
    if g.n > _MAX_SHORT_N:
        raise ValueError(f"short form supports n <= {_MAX_SHORT_N}, got n={g.n}")
    bits = []
    edge_set = set(g.edges)
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if (u, v) in edge_set else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)
