"""graph6 codec (short form, n <= 62) and line-oriented file ingestion.

Format: one header byte chr(63 + n), then the upper triangle of the
adjacency matrix in column-major order x(0,1), x(0,2), x(1,2), x(0,3), ...
packed big-endian six bits per byte, zero-padded, each byte offset by 63.
The long forms (n > 62) are rejected rather than implemented.
"""

from __future__ import annotations

from .errors import Graph6Error, LimitError
from .graphs import Graph, edge_pair_order

_OFFSET = 63
_MAX_N = 62
FILE_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    """Decode a single graph6 string (trailing CR/LF tolerated).

    Raises Graph6Error with the offending byte offset for a bad header
    byte, a truncated body, an invalid body byte, or trailing garbage;
    LimitError for the n > 62 long-form marker.
    """
    line = text.rstrip("\r\n")
    if not line:
        raise Graph6Error("empty graph6 string", 0)
    head = ord(line[0])
    if head == 126:
        raise LimitError("graph6 long form (n > 62) is not supported")
    if not _OFFSET <= head <= _OFFSET + _MAX_N:
        raise Graph6Error(f"bad header byte {line[0]!r}", 0)
    n = head - _OFFSET
    if n == 0:
        raise Graph6Error("graph of order 0 is not supported", 0)
    n_bits = n * (n - 1) // 2
    n_bytes = (n_bits + 5) // 6
    if len(line) < 1 + n_bytes:
        raise Graph6Error(f"truncated body: need {n_bytes} bytes, got {len(line) - 1}",
                          len(line))
    if len(line) > 1 + n_bytes:
        raise Graph6Error("trailing garbage after graph6 body", 1 + n_bytes)
    rows = [0] * n
    pairs = edge_pair_order(n)
    bit = 0
    for i, ch in enumerate(line[1:]):
        val = ord(ch) - _OFFSET
        if not 0 <= val < 64:
            raise Graph6Error(f"invalid body byte {ch!r}", 1 + i)
        for k in range(6):
            if bit >= n_bits:
                break
            if val >> (5 - k) & 1:
                u, v = pairs[bit]
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            bit += 1
    return Graph(n, tuple(rows))


def to_graph6(g: Graph) -> str:
    """Encode a graph; inverse of parse_graph6, bit-exact."""
    if g.n > _MAX_N:
        raise LimitError(f"graph6 short form supports n <= {_MAX_N}, got {g.n}")
    out = [chr(_OFFSET + g.n)]
    val = 0
    k = 0
    for u, v in edge_pair_order(g.n):
        val = val << 1 | (g.adj[u] >> v & 1)
        k += 1
        if k == 6:
            out.append(chr(_OFFSET + val))
            val = k = 0
    if k:
        out.append(chr(_OFFSET + (val << (6 - k))))
    return "".join(out)


def iter_graph6_lines(lines) -> "iter[tuple[int, str]]":
    """Yield (line_number, payload) from an iterable of text lines.

    Line numbers are 1-based.  Blank lines are skipped; an optional
    ``>>graph6<<`` file header prefix is stripped wherever it appears.
    """
    for line_no, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        if line.startswith(FILE_HEADER):
            line = line[len(FILE_HEADER):]
        if not line:
            continue
        yield line_no, line


def read_graph6_file(path) -> list[tuple[int, Graph]]:
    """Parse a whole graph6 file into (line_number, Graph) pairs."""
    out = []
    with open(path, "r", encoding="ascii") as fh:
        for line_no, line in iter_graph6_lines(fh):
            try:
                out.append((line_no, parse_graph6(line)))
            except Graph6Error as exc:
                raise Graph6Error(f"line {line_no}: {exc.args[0]}", exc.offset) from None
    return out
