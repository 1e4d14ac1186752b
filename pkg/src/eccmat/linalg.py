"""Symmetric eigenvalues, exact characteristic polynomials and inertia."""

from __future__ import annotations

from typing import NamedTuple, Sequence

import numpy as np

from .surd import Surd

DEFAULT_TOL = 1e-12
MAX_SWEEPS = 60


class Inertia(NamedTuple):
    n_plus: int
    n_minus: int
    n_zero: int


class Spectrum:
    """Eigenvalue multiset as sorted ``(value, multiplicity)`` pairs.

    Values are either exact :class:`Surd` instances or floats.
    """

    def __init__(self, entries):
        merged: dict = {}
        for value, mult in entries:
            if isinstance(value, (int, np.integer)):
                value = Surd(int(value))
            elif isinstance(value, np.floating):
                value = float(value)
            if mult <= 0:
                continue
            merged[value] = merged.get(value, 0) + int(mult)
        self.entries = sorted(merged.items(), key=lambda vm: float(vm[0]))

    @classmethod
    def from_values(cls, values) -> Spectrum:
        return cls((v, 1) for v in values)

    def __len__(self) -> int:
        return sum(m for _, m in self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __repr__(self) -> str:
        body = ", ".join(f"{v}" + (f" x{m}" if m > 1 else "") for v, m in self.entries)
        return f"Spectrum({{{body}}})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Spectrum):
            return NotImplemented
        return self.entries == other.entries

    @property
    def is_exact(self) -> bool:
        return all(isinstance(v, Surd) for v, _ in self.entries)

    def values(self) -> np.ndarray:
        """All eigenvalues as floats, ascending, repeated by multiplicity."""
        out = [float(v) for v, m in self.entries for _ in range(m)]
        return np.sort(np.array(out, dtype=float))

    def trace(self) -> float:
        return float(sum(float(v) * m for v, m in self.entries))

    def min(self) -> float:
        return float(self.entries[0][0])

    def to_json(self) -> list[dict]:
        out = []
        for v, m in self.entries:
            if isinstance(v, Surd):
                value = {"exact": v.as_dict(), "float": float(v)}
            else:
                value = {"float": v}
            out.append({"value": value, "mult": m})
        return out

    @classmethod
    def from_json(cls, data: list[dict]) -> Spectrum:
        entries = []
        for item in data:
            v = item["value"]
            entries.append((Surd.from_dict(v["exact"]) if "exact" in v else float(v["float"]), item["mult"]))
        return cls(entries)


def spectrum_distance(a, b) -> float:
    """Largest gap between the sorted eigenvalue lists of two spectra (inf if sizes differ)."""
    va = a.values() if isinstance(a, Spectrum) else np.sort(np.asarray(a, dtype=float))
    vb = b.values() if isinstance(b, Spectrum) else np.sort(np.asarray(b, dtype=float))
    if va.shape != vb.shape:
        return float("inf")
    if va.size == 0:
        return 0.0
    return float(np.max(np.abs(va - vb)))


def _check_symmetric(a: np.ndarray, tol: float) -> None:
    if a.ndim < 2 or a.shape[-1] != a.shape[-2]:
        raise ValueError(f"expected square matrices, got shape {a.shape}")
    scale = max(1.0, float(np.max(np.abs(a), initial=0.0)))
    if np.max(np.abs(a - np.swapaxes(a, -1, -2)), initial=0.0) > tol * scale:
        raise ValueError("matrix is not symmetric")


def jacobi_eigenvalues(a, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Eigenvalues of one symmetric matrix or a stack of them by cyclic Jacobi rotations.

    Input shape ``(..., n, n)``; returns ``(..., n)`` sorted ascending. Each
    matrix is rotated until its off-diagonal Frobenius norm is below
    ``tol * ||M||_F``. All matrices in a stack are rotated together.
    """
    a = np.array(a, dtype=float)
    _check_symmetric(a, 1e3 * tol if tol > 0 else 0.0)
    shape = a.shape
    n = shape[-1]
    # batch axis last so row and column slices are contiguous blocks
    A = np.ascontiguousarray(a.reshape(-1, n, n).transpose(1, 2, 0))
    fro = np.sqrt(np.einsum("ijb,ijb->b", A, A))
    target = tol * fro
    offdiag = [(p, q) for p in range(n - 1) for q in range(p + 1, n)]
    for _ in range(MAX_SWEEPS):
        off = np.sqrt(2.0 * sum(A[p, q] * A[p, q] for p, q in offdiag)) if offdiag else np.zeros_like(fro)
        if np.all(off <= target):
            break
        for p, q in offdiag:
            apq = A[p, q].copy()
            active = apq != 0.0
            if not active.any():
                continue
            app = A[p, p].copy()
            aqq = A[q, q].copy()
            with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
                theta = (aqq - app) / (2.0 * apq)
                t = np.copysign(1.0, theta) / (np.abs(theta) + np.sqrt(theta * theta + 1.0))
            t[~(active & np.isfinite(t))] = 0.0
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c
            row_p = A[p].copy()
            row_q = A[q]
            A[p] = c * row_p - s * row_q
            A[q] = s * row_p + c * row_q
            A[:, p] = A[p]
            A[:, q] = A[q]
            A[p, p] = app - t * apq
            A[q, q] = aqq + t * apq
            A[p, q] = 0.0
            A[q, p] = 0.0
    else:
        raise RuntimeError("Jacobi iteration did not converge")
    vals = np.sort(np.diagonal(A, axis1=0, axis2=1), axis=-1)
    return vals.reshape(shape[:-1])


def merge_eigenvalues(values: Sequence[float], window: float) -> Spectrum:
    """Group sorted values that lie within ``window`` of their neighbour."""
    groups: list[list[float]] = []
    for v in sorted(values):
        if groups and v - groups[-1][-1] <= window:
            groups[-1].append(v)
        else:
            groups.append([v])
    return Spectrum((float(np.mean(g)), len(g)) for g in groups)


def eig_symmetric(m, tol: float = DEFAULT_TOL) -> Spectrum:
    a = np.asarray(m, dtype=float)
    vals = jacobi_eigenvalues(a, tol)
    fro = float(np.linalg.norm(a))
    return merge_eigenvalues(vals, 10 * tol * fro)


def _as_int_rows(m) -> list[list[int]]:
    rows = [[int(x) for x in row] for row in np.asarray(m, dtype=object)]
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("expected a square matrix")
    return rows


def charpoly_exact(m) -> list[int]:
    """Coefficients of det(xI - M), highest degree first, by Berkowitz's division-free method."""
    rows = _as_int_rows(m)
    n = len(rows)
    # sparse rows, column index ascending, for the growing leading block
    sparse = [[(j, v) for j, v in enumerate(row) if v] for row in rows]
    poly = [1]
    for r in range(n):
        col = [rows[i][r] for i in range(r)]
        row_r = [(j, v) for j, v in sparse[r] if j < r]
        toeplitz = [1, -rows[r][r]]
        vec = col
        for _ in range(r):
            toeplitz.append(-sum(v * vec[j] for j, v in row_r))
            vec = [sum(v * vec[j] for j, v in sparse[i] if j < r) for i in range(r)]
        poly = [
            sum(toeplitz[i - k] * poly[k] for k in range(max(0, i - len(toeplitz) + 1), min(i, r) + 1))
            for i in range(r + 2)
        ]
    return poly


def det_exact(m) -> int:
    poly = charpoly_exact(m)
    n = len(poly) - 1
    return (-1) ** n * poly[-1]


def _sign_changes(coeffs: Sequence[int]) -> int:
    signs = [c > 0 for c in coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def inertia_from_charpoly(poly: Sequence[int]) -> Inertia:
    """Descartes' rule counts exactly when every root is real."""
    n = len(poly) - 1
    trimmed = list(poly)
    n_zero = 0
    while len(trimmed) > 1 and trimmed[-1] == 0:
        trimmed.pop()
        n_zero += 1
    deg = len(trimmed) - 1
    n_plus = _sign_changes(trimmed)
    n_minus = _sign_changes([c if (deg - k) % 2 == 0 else -c for k, c in enumerate(trimmed)])
    if n_plus + n_minus + n_zero != n:
        raise ArithmeticError("polynomial is not real-rooted; input was not symmetric")
    return Inertia(n_plus, n_minus, n_zero)


def inertia_exact(m) -> Inertia:
    a = np.asarray(m)
    if a.size and not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    return inertia_from_charpoly(charpoly_exact(a))


def rank_exact(m) -> int:
    """Rank of a symmetric integer matrix (zero eigenvalue multiplicity is exact)."""
    inertia = inertia_exact(m)
    return inertia.n_plus + inertia.n_minus


def kron(a, b) -> np.ndarray:
    return np.kron(np.asarray(a), np.asarray(b))


def principal_submatrix(m, index_set: Sequence[int]) -> np.ndarray:
    m = np.asarray(m)
    idx = [int(i) for i in index_set]
    if len(set(idx)) != len(idx):
        raise ValueError(f"repeated index in {idx}")
    if any(not 0 <= i < m.shape[0] for i in idx):
        raise IndexError(f"index set {idx} out of range for order {m.shape[0]}")
    return m[np.ix_(idx, idx)]


def block2(b0, b1) -> np.ndarray:
    return np.block([[b0, b1], [b1, b0]])


def block2_spectrum_check(b0, b1, tol: float = 1e-8) -> bool:
    """Spectrum of [[B0, B1], [B1, B0]] equals spec(B0 + B1) united with spec(B0 - B1)."""
    b0 = np.asarray(b0, dtype=float)
    b1 = np.asarray(b1, dtype=float)
    if b0.shape != b1.shape or b0.ndim != 2 or b0.shape[0] != b0.shape[1]:
        raise ValueError(f"blocks must be square of equal order, got {b0.shape} and {b1.shape}")
    big = block2(b0, b1)
    lhs = jacobi_eigenvalues(big)
    rhs = np.concatenate([jacobi_eigenvalues(b0 + b1), jacobi_eigenvalues(b0 - b1)])
    scale = max(1.0, float(np.linalg.norm(big)))
    return spectrum_distance(lhs, rhs) < tol * scale


def column_sum_identity_check(b, alpha: float, lam: float, tol: float = 1e-9) -> bool:
    """Check 1^T (lam I - B)^{-1} 1 == n / (lam - alpha) when every column of B sums to alpha."""
    b = np.asarray(b, dtype=float)
    n = b.shape[0]
    if not np.allclose(b.sum(axis=0), alpha, rtol=0, atol=tol * max(1.0, abs(alpha))):
        raise ValueError("column sums of B are not all equal to alpha")
    eigs = np.linalg.eigvals(b)
    if np.min(np.abs(eigs - lam)) < tol * max(1.0, abs(lam)):
        raise ValueError(f"lambda={lam} is (numerically) an eigenvalue of B")
    x = np.linalg.solve(lam * np.eye(n) - b, np.ones(n))
    expected = n / (lam - alpha)
    return abs(x.sum() - expected) < tol * max(1.0, abs(expected))
