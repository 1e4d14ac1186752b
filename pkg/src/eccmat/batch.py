"""Vectorized construction of eccentricity matrices for stacks of labeled trees.

Tree ``k`` on ``n`` vertices is the one whose Prüfer sequence is the base-``n``
expansion of ``k`` (most significant symbol first), so index ranges
``[p * n**(n-3), (p+1) * n**(n-3))`` are exactly the trees with first symbol ``p``.
"""

from __future__ import annotations

import numpy as np

from .metric import ecc_from_distances


def prufer_sequences(n: int, start: int, stop: int) -> np.ndarray:
    """Prüfer sequences for tree indices ``start..stop-1``, shape ``(stop-start, n-2)``."""
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((idx.size, n - 2), dtype=np.int64)
    for pos in range(n - 3, -1, -1):
        idx, out[:, pos] = np.divmod(idx, n)
    return out


def decode_prufer(seqs: np.ndarray, n: int) -> np.ndarray:
    """Edge arrays ``(B, n-1, 2)`` for a stack of Prüfer sequences."""
    b = seqs.shape[0]
    rows = np.arange(b)
    degree = np.ones((b, n), dtype=np.int64)
    for k in range(n - 2):
        np.add.at(degree, (rows, seqs[:, k]), 1)
    edges = np.empty((b, n - 1, 2), dtype=np.int64)
    for k in range(n - 2):
        leaf = np.argmax(degree == 1, axis=1)
        s = seqs[:, k]
        edges[:, k, 0] = leaf
        edges[:, k, 1] = s
        degree[rows, leaf] -= 1
        degree[rows, s] -= 1
    first = np.argmax(degree == 1, axis=1)
    degree[rows, first] = 0
    second = np.argmax(degree == 1, axis=1)
    edges[:, n - 2, 0] = first
    edges[:, n - 2, 1] = second
    return edges


def tree_distances(edges: np.ndarray, n: int) -> np.ndarray:
    """Floyd-Warshall over a stack of graphs given by edge arrays."""
    b = edges.shape[0]
    rows = np.repeat(np.arange(b), edges.shape[1])
    u = edges[:, :, 0].ravel()
    v = edges[:, :, 1].ravel()
    big = n + 1
    d = np.full((b, n, n), big, dtype=np.int64)
    d[:, np.arange(n), np.arange(n)] = 0
    d[rows, u, v] = 1
    d[rows, v, u] = 1
    for k in range(n):
        np.minimum(d, d[:, :, k, None] + d[:, None, k, :], out=d)
    return d


def tree_ecc_matrices(n: int, start: int, stop: int) -> tuple[np.ndarray, np.ndarray]:
    """Eccentricity matrices and max degrees of trees ``start..stop-1`` on n vertices."""
    if n == 2:
        edges = np.array([[[0, 1]]], dtype=np.int64)[start:stop]
    else:
        edges = decode_prufer(prufer_sequences(n, start, stop), n)
    d = tree_distances(edges, n)
    deg = (d == 1).sum(axis=2)
    return ecc_from_distances(d), deg.max(axis=1)


def supports_connected(m: np.ndarray) -> np.ndarray:
    """For a stack of nonnegative symmetric matrices, whether each support graph is connected."""
    b, n, _ = m.shape
    reach = (m != 0) | np.eye(n, dtype=bool)
    frontier = reach[:, 0, :]
    for _ in range(n):
        nxt = np.einsum("bi,bij->bj", frontier.astype(np.int32), reach.astype(np.int32)) > 0
        if np.array_equal(nxt, frontier):
            break
        frontier = nxt
    return frontier.all(axis=1)
