"""Simple undirected graphs on vertices 0..n-1, named families and operators."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input or out-of-range family parameters."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. ``edges`` is a sorted tuple of pairs ``(i, j)`` with ``i < j``."""

    n: int
    edges: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {self.n}")
        normalized = set()
        for e in self.edges:
            i, j = int(e[0]), int(e[1])
            if i == j:
                raise GraphError(f"self-loop at vertex {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise GraphError(f"edge ({i}, {j}) has an endpoint outside 0..{self.n - 1}")
            normalized.add((i, j) if i < j else (j, i))
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for i, j in self.edges:
            nbrs[i].add(j)
            nbrs[j].add(i)
        return tuple(frozenset(s) for s in nbrs)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adjacency]

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.adjacency[i]

    def adjacency_matrix(self):
        import numpy as np

        a = np.zeros((self.n, self.n), dtype=np.int64)
        for i, j in self.edges:
            a[i, j] = a[j, i] = 1
        return a

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in self.adjacency[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return len(seen) == self.n

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, tuple((perm[i], perm[j]) for i, j in self.edges))


def make_graph(n: int, edges: Iterable[Sequence[int]] = ()) -> Graph:
    return Graph(n, tuple(tuple(e) for e in edges))


def empty(n: int) -> Graph:
    return Graph(n)


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph(n, tuple(itertools.combinations(range(n), 2)))


def star(n: int) -> Graph:
    """K_{1,n-1} with center 0."""
    if n < 2:
        raise GraphError("star needs n >= 2")
    return Graph(n, tuple((0, i) for i in range(1, n)))


def complete_multipartite(parts: Sequence[int]) -> Graph:
    parts = [int(p) for p in parts]
    if len(parts) < 2:
        raise GraphError("complete multipartite graph needs at least 2 parts")
    if any(p < 1 for p in parts):
        raise GraphError(f"part sizes must be positive, got {parts}")
    owner = [k for k, p in enumerate(parts) for _ in range(p)]
    n = len(owner)
    return Graph(n, tuple((i, j) for i, j in itertools.combinations(range(n), 2) if owner[i] != owner[j]))


def wheel(n: int) -> Graph:
    """W_n on ``n`` vertices: hub 0, rim cycle 1..n-1."""
    if n < 4:
        raise GraphError("wheel needs a rim of at least 3 vertices (n >= 4)")
    rim = n - 1
    return join(empty(1), cycle(rim))


def barbell(n: int) -> Graph:
    """Two copies of K_n (0..n-1 and n..2n-1) bridged by the edge (0, n)."""
    if n < 2:
        raise GraphError("barbell needs n >= 2")
    left = list(itertools.combinations(range(n), 2))
    right = [(i + n, j + n) for i, j in left]
    return Graph(2 * n, tuple(left + right + [(0, n)]))


def cocktail_party(n: int) -> Graph:
    """K_{2n} minus the matching {i, i+n}."""
    if n < 2:
        raise GraphError("cocktail party graph needs n >= 2")
    return Graph(
        2 * n,
        tuple((i, j) for i, j in itertools.combinations(range(2 * n), 2) if j - i != n),
    )


def lollipop(m: int, n: int) -> Graph:
    """K_m on 0..m-1, path on m..m+n-1, bridge (m-1, m)."""
    if m < 3 or n < 1:
        raise GraphError("lollipop needs m >= 3 and n >= 1")
    edges = list(itertools.combinations(range(m), 2))
    edges += [(k, k + 1) for k in range(m - 1, m + n - 1)]
    return Graph(m + n, tuple(edges))


FAMILIES = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "star": star,
    "wheel": wheel,
    "barbell": barbell,
    "cocktail_party": cocktail_party,
    "lollipop": lollipop,
    "complete_multipartite": lambda *parts: complete_multipartite(parts),
    "empty": empty,
}


def family(name: str, *params: int) -> Graph:
    """Build a named family member, e.g. ``family("lollipop", 3, 2)``."""
    key = name.replace("-", "_")
    if key in ("multipartite",):
        key = "complete_multipartite"
    if key not in FAMILIES:
        raise GraphError(f"unknown family {name!r}; choose from {sorted(FAMILIES)}")
    try:
        return FAMILIES[key](*params)
    except TypeError as exc:
        raise GraphError(f"bad parameters for {name}: {params}") from exc


def complement(g: Graph) -> Graph:
    return Graph(g.n, tuple(e for e in itertools.combinations(range(g.n), 2) if not g.has_edge(*e)))


def join(g1: Graph, g2: Graph) -> Graph:
    """Complete product: disjoint union plus every edge between the two parts."""
    off = g1.n
    edges = list(g1.edges)
    edges += [(i + off, j + off) for i, j in g2.edges]
    edges += [(i, j + off) for i in range(g1.n) for j in range(g2.n)]
    return Graph(g1.n + g2.n, tuple(edges))


def corona(g: Graph, h: Graph) -> Graph:
    """Corona G∘H. Vertex ``k`` of the copy attached to ``i`` gets label ``i + n*(k+1)``."""
    n, m = g.n, h.n
    if n == 0 or m == 0:
        raise GraphError("corona needs nonempty graphs")
    edges = list(g.edges)
    for i in range(n):
        label = [i + n * (k + 1) for k in range(m)]
        edges += [(label[a], label[b]) for a, b in h.edges]
        edges += [(i, v) for v in label]
    return Graph(n * (1 + m), tuple(edges))


def prufer_decode(seq: Sequence[int], n: int) -> Graph:
    """Labeled tree for a Prüfer sequence of length n-2 over 0..n-1."""
    if len(seq) != n - 2:
        raise GraphError(f"Prüfer sequence for n={n} must have length {n - 2}")
    degree = [1] * n
    for s in seq:
        degree[s] += 1
    edges = []
    for s in seq:
        leaf = degree.index(1)
        edges.append((leaf, s))
        degree[leaf] -= 1
        degree[s] -= 1
    u, v = (i for i in range(n) if degree[i] == 1)
    edges.append((u, v))
    return Graph(n, tuple(edges))


def enumerate_labeled_trees(n: int, prefix: Sequence[int] = ()) -> Iterator[Graph]:
    """Yield every labeled tree on n vertices whose Prüfer sequence starts with ``prefix``.

    Splitting over the n single-symbol prefixes partitions the n**(n-2) trees.
    """
    if n < 2:
        raise GraphError("tree enumeration needs n >= 2")
    prefix = tuple(prefix)
    if len(prefix) > n - 2:
        raise GraphError("prefix longer than the Prüfer sequence")
    for rest in itertools.product(range(n), repeat=n - 2 - len(prefix)):
        yield prufer_decode(prefix + rest, n)


def is_star(g: Graph) -> bool:
    return g.n >= 2 and g.m == g.n - 1 and max(g.degrees()) == g.n - 1


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Brute-force isomorphism test by backtracking over degree-compatible maps.

    Intended as a test oracle for small graphs (n <= 10).
    """
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    n = g1.n
    d1, d2 = g1.degrees(), g2.degrees()
    order = sorted(range(n), key=lambda v: -d1[v])
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(k: int) -> bool:
        if k == n:
            return True
        u = order[k]
        for w in range(n):
            if w in used or d2[w] != d1[u]:
                continue
            if all(g1.has_edge(u, x) == g2.has_edge(w, y) for x, y in mapping.items()):
                mapping[u] = w
                used.add(w)
                if extend(k + 1):
                    return True
                del mapping[u]
                used.discard(w)
        return False

    return extend(0)
