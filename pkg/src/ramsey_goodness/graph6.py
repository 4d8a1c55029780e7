"""graph6 codec, bit-exact with the format used by nauty and networkx."""

from __future__ import annotations

from .graphcore import MAX_VERTICES, Graph, bits

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input; ``position`` is the offending byte offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (byte {position})")
        self.position = position


def _size_prefix(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise ValueError(f"graph6 cannot encode n={n}")


def encode(g: Graph, header: bool = False) -> str:
    out = [HEADER] if header else []
    out.append(_size_prefix(g.n))
    acc = 0
    width = 0
    rows = g.rows
    for j in range(1, g.n):
        r = rows[j]
        for i in range(j):
            acc = acc << 1 | (r >> i & 1)
            width += 1
            if width == 6:
                out.append(chr(acc + 63))
                acc = width = 0
    if width:
        out.append(chr((acc << (6 - width)) + 63))
    return "".join(out)


def decode(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    s = text.strip()
    offset = 0
    if s.startswith(HEADER):
        offset = len(HEADER)
    for pos in range(offset, len(s)):
        if not 63 <= ord(s[pos]) <= 126:
            raise Graph6Error(f"character {s[pos]!r} outside graph6 range", pos)
    if offset == len(s):
        raise Graph6Error("empty graph6 string", offset)
    if s[offset] != "~":
        n = ord(s[offset]) - 63
        body = offset + 1
    else:
        if len(s) < offset + 4:
            raise Graph6Error("truncated size field", len(s))
        if s[offset + 1] == "~":
            raise Graph6Error("8-byte size field not supported", offset + 1)
        n = 0
        for c in s[offset + 1 : offset + 4]:
            n = n << 6 | (ord(c) - 63)
        body = offset + 4
    if n > MAX_VERTICES:
        raise Graph6Error(f"n={n} exceeds the vertex cap {MAX_VERTICES}", offset)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    have = len(s) - body
    if have != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, found {have}", body + min(have, need))
    stream = 0
    for c in s[body:]:
        stream = stream << 6 | (ord(c) - 63)
    pad = need * 6 - nbits
    if stream & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", len(s) - 1)
    stream >>= pad
    rows = [0] * n
    idx = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if stream >> idx & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx -= 1
    return Graph(n, rows)


def code_to_graph6(code: int, n: int) -> str:
    """graph6 of the oracle's integer encoding without building a Graph."""
    out = [_size_prefix(n)]
    nbits = n * (n - 1) // 2
    acc = width = 0
    for idx in range(nbits):
        acc = acc << 1 | (code >> idx & 1)
        width += 1
        if width == 6:
            out.append(chr(acc + 63))
            acc = width = 0
    if width:
        out.append(chr((acc << (6 - width)) + 63))
    return "".join(out)


def edge_list(g: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u in range(g.n) for v in bits(g.rows[u]) if u < v]
