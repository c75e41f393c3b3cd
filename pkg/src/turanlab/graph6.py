"""graph6 parsing and serialization, bit-exact per the format description.

Upper-triangle bits are taken column by column: for j = 1..n-1 the bits
(0,j), (1,j), ..., (j-1,j), padded with zeros to a multiple of six and
offset by 63 into printable ASCII.
"""

from __future__ import annotations

from .errors import Graph6Error, VertexLimitError
from .graphs import MAX_VERTICES, Graph

_HEADER = ">>graph6<<"


def graph6_serialize(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(
            chr(((n >> shift) & 0x3F) + 63) for shift in (12, 6, 0)
        )
    else:
        raise ValueError(f"graph6 long form not supported for n={n}")
    bits = []
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            bits.append((col >> i) & 1)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return head + "".join(body)


def graph6_parse(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER) :].strip()
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid graph6 byte {ord(ch)}", i)
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise Graph6Error("8-byte graph6 order not supported", 0)
        if len(s) < 4:
            raise Graph6Error("truncated graph6 order", len(s))
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        pos = 4
    else:
        n = ord(s[0]) - 63
        pos = 1
    if n > MAX_VERTICES:
        raise VertexLimitError(
            f"graph6 input has {n} vertices, above the limit of {MAX_VERTICES}"
        )
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) - pos < nbytes:
        raise Graph6Error(
            f"graph6 body too short, expected {nbytes} bytes", len(s)
        )
    if len(s) - pos > nbytes:
        raise Graph6Error("trailing data after graph6 body", pos + nbytes)
    bits = []
    for ch in s[pos:]:
        val = ord(ch) - 63
        for shift in range(5, -1, -1):
            bits.append((val >> shift) & 1)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    for extra in bits[nbits:]:
        if extra:
            raise Graph6Error("nonzero padding bits", len(s) - 1)
    return Graph(n, edges)
