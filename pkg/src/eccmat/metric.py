"""Distances, eccentricities and the eccentricity matrix of a connected graph."""

from __future__ import annotations

import json
from collections import deque

import numpy as np

from .graph import Graph, GraphError


class DisconnectedGraphError(GraphError):
    """The operation needs a connected graph."""


def apsp(g: Graph) -> np.ndarray:
    """All-pairs shortest path lengths by one BFS per source."""
    n = g.n
    if n == 0:
        raise GraphError("graph has no vertices")
    d = np.full((n, n), -1, dtype=np.int64)
    adj = g.adjacency
    for s in range(n):
        row = d[s]
        row[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = row[u] + 1
            for v in adj[u]:
                if row[v] < 0:
                    row[v] = du
                    queue.append(v)
        if (row < 0).any():
            t = int(np.flatnonzero(row < 0)[0])
            raise DisconnectedGraphError(f"graph is disconnected: no path between {s} and {t}")
    return d


def eccentricities(g: Graph | np.ndarray) -> np.ndarray:
    d = apsp(g) if isinstance(g, Graph) else np.asarray(g)
    return d.max(axis=1)


def ecc_from_distances(d: np.ndarray) -> np.ndarray:
    """Keep ``d[i, j]`` where it equals ``min(e(i), e(j))``, zero elsewhere.

    Works on a single matrix or a stack of matrices (leading batch axes).
    """
    e = d.max(axis=-1)
    keep = d == np.minimum(e[..., :, None], e[..., None, :])
    return np.where(keep, d, 0)


def eccentricity_matrix(g: Graph) -> np.ndarray:
    return ecc_from_distances(apsp(g))


def support_graph(m: np.ndarray) -> Graph:
    m = np.asarray(m)
    i, j = np.nonzero(np.triu(m, 1))
    return Graph(m.shape[0], tuple(zip(i.tolist(), j.tolist())))


def is_irreducible(m: np.ndarray) -> bool:
    return support_graph(m).is_connected()


def matrix_to_csv(m: np.ndarray) -> str:
    return "".join(",".join(str(int(x)) for x in row) + "\n" for row in np.asarray(m))


def matrix_to_json(m: np.ndarray) -> str:
    m = np.asarray(m)
    return json.dumps({"n": int(m.shape[0]), "entries": [[int(x) for x in row] for row in m]})


def matrix_from_json(text: str) -> np.ndarray:
    obj = json.loads(text)
    m = np.array(obj["entries"], dtype=np.int64).reshape(obj["n"], obj["n"])
    return m
