"""Closed-form eccentricity spectra for named graph families.

Exact values are returned as :class:`~eccmat.surd.Surd`; eigenvalues that come
from adjacency spectra of cycles or regular graphs are floats.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .graph import Graph, GraphError, complement
from .linalg import Spectrum, jacobi_eigenvalues, merge_eigenvalues
from .surd import Surd

FLOAT_MERGE_WINDOW = 1e-11


@dataclass(frozen=True)
class FamilySpectrum:
    family: str
    params: tuple
    spectrum: Spectrum
    det: Optional[int] = None
    notes: tuple[str, ...] = field(default=())

    @property
    def order(self) -> int:
        return len(self.spectrum)

    def to_json(self) -> dict:
        out = {
            "family": self.family,
            "params": [p if isinstance(p, int) else str(p) for p in self.params],
            "spectrum": self.spectrum.to_json(),
        }
        if self.det is not None:
            out["det"] = str(self.det)
        return out


def _pm(a: int, r: int, c: int = 1) -> tuple[Surd, Surd]:
    return Surd(a, 1, r, c), Surd(a, -1, r, c)


def _with_floats(exact: list, floats: Sequence[float]) -> Spectrum:
    merged = merge_eigenvalues(floats, FLOAT_MERGE_WINDOW) if len(floats) else Spectrum([])
    return Spectrum(list(exact) + list(merged.entries))


def star_spectrum(n: int) -> FamilySpectrum:
    """K_{1,n-1}: (n-2) ± sqrt(n^2-3n+3) once each, -2 with multiplicity n-2."""
    if n < 3:
        raise GraphError("star spectrum needs n >= 3")
    hi, lo = _pm(n - 2, n * n - 3 * n + 3)
    det = (-1) ** (n - 1) * (n - 1) * 2 ** (n - 2)
    return FamilySpectrum("star", (n,), Spectrum([(hi, 1), (lo, 1), (Surd(-2), n - 2)]), det)


def block_a_matrix(n: int) -> np.ndarray:
    """The (n+1)x(n+1) matrix [[0, 2J], [2J, 3J]]."""
    a = np.full((n + 1, n + 1), 3, dtype=np.int64)
    a[0, :] = a[:, 0] = 2
    a[0, 0] = 0
    return a


def block_a_spectrum(n: int) -> Spectrum:
    if n < 1:
        raise GraphError("block matrix needs n >= 1")
    hi, lo = _pm(3 * n, 9 * n * n + 16 * n, 2)
    return Spectrum([(Surd(0), n - 1), (hi, 1), (lo, 1)])


def corona_spectrum(n: int, m: int) -> FamilySpectrum:
    """K_n ∘ G for any connected G on m vertices; G's structure does not matter."""
    if n < 2 or m < 1:
        raise GraphError("corona spectrum needs n >= 2 and m >= 1")
    l1, l2 = _pm(3 * m, 9 * m * m + 16 * m, 2)
    spec = Spectrum(
        [
            (Surd(0), n * (m - 1)),
            (-l1, n - 1),
            (-l2, n - 1),
            (l1 * (n - 1), 1),
            (l2 * (n - 1), 1),
        ]
    )
    return FamilySpectrum("corona", (n, m), spec)


def cycle_adjacency_eigenvalues(n: int) -> np.ndarray:
    return 2 * np.cos(2 * np.pi * np.arange(n) / n)


def wheel_spectrum(n: int) -> FamilySpectrum:
    """Wheel on n+1 vertices (rim C_n, n >= 4)."""
    if n < 4:
        raise GraphError("wheel spectrum needs a rim of n >= 4 vertices")
    hi, lo = _pm(n - 3, (n - 3) ** 2 + n)
    rest = -2 * (cycle_adjacency_eigenvalues(n)[1:] + 1)
    return FamilySpectrum("wheel", (n,), _with_floats([(hi, 1), (lo, 1)], rest))


def barbell_spectrum(n: int) -> FamilySpectrum:
    if n < 2:
        raise GraphError("barbell spectrum needs n >= 2")
    hi, lo = _pm(3 * (n - 1), 9 * n * n - 2 * n - 7, 2)
    spec = Spectrum([(Surd(0), 2 * (n - 2)), (hi, 1), (lo, 1), (-hi, 1), (-lo, 1)])
    return FamilySpectrum("barbell", (n,), spec)


def cocktail_spectrum(n: int) -> FamilySpectrum:
    if n < 2:
        raise GraphError("cocktail party spectrum needs n >= 2")
    return FamilySpectrum("cocktail_party", (n,), Spectrum([(Surd(2), n), (Surd(-2), n)]))


def multipartite_spectrum(parts: Sequence[int]) -> FamilySpectrum:
    """Complete multipartite graph with every part of size >= 2.

    A singleton part is a dominating vertex of eccentricity 1, which breaks the
    block-diagonal eccentricity matrix the formula relies on; such input is rejected.
    """
    parts = tuple(int(p) for p in parts)
    if len(parts) < 2:
        raise GraphError("need at least 2 parts")
    if any(p < 1 for p in parts):
        raise GraphError(f"part sizes must be positive, got {parts}")
    singles = [i for i, p in enumerate(parts) if p == 1]
    if singles:
        raise GraphError(
            f"part {singles[0]} has size 1: its vertex is dominating and the block formula does not apply"
        )
    n, k = sum(parts), len(parts)
    entries = [(Surd(-2), n - k)] + [(Surd(2 * (p - 1)), 1) for p in parts]
    return FamilySpectrum("complete_multipartite", parts, Spectrum(entries))


def regular_degree(g: Graph) -> int:
    degs = set(g.degrees())
    if len(degs) != 1:
        raise GraphError(f"graph is not regular: degrees {sorted(degs)}")
    return degs.pop()


def cone_spectrum(g: Graph) -> FamilySpectrum:
    """G ∨ K_1 for an r-regular G with r <= n-2."""
    n = g.n
    r = regular_degree(g)
    if r > n - 2:
        raise GraphError("graph is complete; the cone has diameter 1")
    hi, lo = _pm(n - r - 1, (n - r - 1) ** 2 + n)
    adj = list(jacobi_eigenvalues(g.adjacency_matrix()))
    # drop one copy of the eigenvalue r (all-ones eigenvector)
    adj.pop(int(np.argmin(np.abs(np.array(adj) - r))))
    rest = -2 * (np.array(adj) + 1)
    return FamilySpectrum("cone", (n, r), _with_floats([(hi, 1), (lo, 1)], rest))


def dominating_vertices(g: Graph) -> list[int]:
    return [v for v, d in enumerate(g.degrees()) if d == g.n - 1]


def join_ecc_matrix(g1: Graph, g2: Graph) -> np.ndarray:
    """Eccentricity matrix of G1 ∨ G2 as blockdiag(2A(complement G1), 2A(complement G2)).

    Both parts must be connected with no dominating vertex.
    """
    for label, g in (("G1", g1), ("G2", g2)):
        if not g.is_connected():
            raise GraphError(f"{label} is disconnected")
        dom = dominating_vertices(g)
        if dom:
            raise GraphError(f"{label} has dominating vertex {dom[0]}; block formula does not apply")
    n1, n2 = g1.n, g2.n
    out = np.zeros((n1 + n2, n1 + n2), dtype=np.int64)
    out[:n1, :n1] = 2 * complement(g1).adjacency_matrix()
    out[n1:, n1:] = 2 * complement(g2).adjacency_matrix()
    return out


def join_spectrum(g1: Graph, g2: Graph) -> FamilySpectrum:
    m = join_ecc_matrix(g1, g2)
    n1 = g1.n
    vals = np.concatenate([jacobi_eigenvalues(m[:n1, :n1]), jacobi_eigenvalues(m[n1:, n1:])])
    return FamilySpectrum("join", (g1.n, g2.n), merge_eigenvalues(vals, FLOAT_MERGE_WINDOW))


EXACT_FAMILIES = {
    "star": star_spectrum,
    "corona": corona_spectrum,
    "wheel": wheel_spectrum,
    "barbell": barbell_spectrum,
    "cocktail_party": cocktail_spectrum,
    "complete_multipartite": lambda *parts: multipartite_spectrum(parts),
}


def family_spectrum(name: str, *params: int) -> FamilySpectrum:
    key = name.replace("-", "_")
    key = {"cocktail": "cocktail_party", "multipartite": "complete_multipartite"}.get(key, key)
    if key not in EXACT_FAMILIES:
        raise GraphError(f"no closed form for family {name!r}; choose from {sorted(EXACT_FAMILIES)}")
    try:
        return EXACT_FAMILIES[key](*params)
    except TypeError as exc:
        raise GraphError(f"bad parameters for {name}: {params}") from exc
