"""graph6 encoding (nauty's printable format for undirected graphs)."""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import CapabilityError, Graph6ParseError
from .graph import Graph

HEADER = ">>graph6<<"
MAX_ORDER = 68719476735  # 2^36 - 1, the largest order graph6 can express


def _encode_order(n: int) -> list[int]:
    if n < 63:
        return [n]
    if n < 258048:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    if n <= MAX_ORDER:
        return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    raise CapabilityError(f"graph6 cannot encode n = {n}")


def encode(g: Graph) -> str:
    """graph6 text for ``g`` (no header, no trailing newline)."""
    out = _encode_order(g.n)
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc)
                acc = nbits = 0
    if nbits:
        out.append(acc << (6 - nbits))
    return "".join(chr(63 + x) for x in out)


def decode(text: str, max_order: int = 1 << 16) -> Graph:
    """Parse one graph6 string; an optional ``>>graph6<<`` header is skipped."""
    s = text.strip()
    base = 0
    if s.startswith(HEADER):
        s = s[len(HEADER):]
        base = len(HEADER)
    data = []
    for pos, ch in enumerate(s):
        code = ord(ch) - 63
        if not 0 <= code <= 63:
            raise Graph6ParseError(f"character {ch!r} is outside the graph6 range", base + pos)
        data.append(code)
    if not data:
        raise Graph6ParseError("empty graph6 string", base)

    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise Graph6ParseError("truncated 8-byte order field", base + len(data))
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        pos = 8
    else:
        if len(data) < 4:
            raise Graph6ParseError("truncated 4-byte order field", base + len(data))
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    if n > max_order:
        raise CapabilityError(f"graph6 order {n} exceeds the accepted maximum {max_order}")

    need_bits = n * (n - 1) // 2
    need_bytes = (need_bits + 5) // 6
    if len(data) - pos != need_bytes:
        offset = base + min(len(data), pos + need_bytes)
        raise Graph6ParseError(f"expected {need_bytes} adjacency bytes for n={n}, got {len(data) - pos}", offset)

    rows = [0] * n
    bits = _bit_stream(data[pos:])
    for j in range(1, n):
        for i in range(j):
            if next(bits):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    pad = need_bytes * 6 - need_bits
    if pad and data[-1] & ((1 << pad) - 1):
        raise Graph6ParseError("nonzero padding bits", base + len(data) - 1)
    return Graph(n, tuple(rows))


def _bit_stream(codes: list[int]) -> Iterator[int]:
    for x in codes:
        for shift in range(5, -1, -1):
            yield x >> shift & 1


def read_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Graphs from line-delimited graph6 text; blank lines are ignored."""
    for line in lines:
        if line.strip():
            yield decode(line)
