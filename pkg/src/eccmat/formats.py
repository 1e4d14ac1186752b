"""Edge-list and graph6 text formats."""

from __future__ import annotations

from .graph import Graph, GraphError


def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` on the first line followed by one ``i j`` pair per line (0-based).

    Blank lines and ``#`` comments are ignored.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise GraphError("edge list is empty: expected vertex count on the first line")
    lineno, head = rows[0]
    if len(head) != 1:
        raise GraphError(f"line {lineno}: expected a single vertex count, got {' '.join(head)!r}")
    n = _int_token(head[0], lineno)
    if n < 1:
        raise GraphError(f"line {lineno}: vertex count must be positive")
    edges = []
    for lineno, toks in rows[1:]:
        if len(toks) != 2:
            raise GraphError(f"line {lineno}: expected 'i j', got {' '.join(toks)!r}")
        i, j = (_int_token(t, lineno) for t in toks)
        for v in (i, j):
            if not 0 <= v < n:
                raise GraphError(f"line {lineno}: vertex {v} out of range 0..{n - 1}")
        if i == j:
            raise GraphError(f"line {lineno}: self-loop at vertex {i}")
        edges.append((i, j))
    return Graph(n, tuple(edges))


def _int_token(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphError(f"line {lineno}: non-integer token {tok!r}") from None


def format_edge_list(g: Graph) -> str:
    return "".join([f"{g.n}\n"] + [f"{i} {j}\n" for i, j in g.edges])


def _encode_n(n: int) -> list[int]:
    if n <= 62:
        return [n + 63]
    if n <= 258047:
        return [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    return [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]


def to_graph6(g: Graph) -> str:
    bits = [int(g.has_edge(i, j)) for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    data = [int("".join(map(str, bits[k : k + 6])), 2) + 63 for k in range(0, len(bits), 6)]
    return "".join(map(chr, _encode_n(g.n) + data))


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphError("graph6 string is empty")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise GraphError("graph6 string contains characters outside '?'..'~'")
    vals = [ord(c) - 63 for c in s]
    if vals[0] < 63:
        n, body = vals[0], vals[1:]
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise GraphError("graph6 header truncated")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        if len(vals) < 8:
            raise GraphError("graph6 header truncated")
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        body = vals[8:]
    nbits = n * (n - 1) // 2
    expected = -(-nbits // 6)
    if len(body) != expected:
        raise GraphError(f"graph6 length mismatch: n={n} needs {expected} data bytes, got {len(body)}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, tuple(edges))
