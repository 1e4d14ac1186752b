"""Exhaustive sweeps and cross-checks of eccentricity-spectrum results.

Sweeps over finitely many trees corroborate the tree results; they are not proofs.
"""

from __future__ import annotations

import itertools
import json
import logging
import os
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

import numpy as np

from . import closed_forms as cf
from . import graph as gr
from .batch import supports_connected, tree_ecc_matrices
from .graph import Graph
from .linalg import (
    Inertia,
    Spectrum,
    block2_spectrum_check,
    column_sum_identity_check,
    inertia_exact,
    jacobi_eigenvalues,
    kron,
    principal_submatrix,
    spectrum_distance,
)
from .metric import apsp, eccentricity_matrix, is_irreducible

log = logging.getLogger(__name__)

BATCH_SIZE = 1 << 16
DEFAULT_SEED = 20200317
COROLLARY_NOTE = "finite corroboration over the listed range, not a proof"


@dataclass
class VerificationReport:
    claim: str
    parameter_range: dict[str, Any] = field(default_factory=dict)
    instances_checked: int = 0
    failures: list[tuple[str, Any, Any]] = field(default_factory=list)
    max_deviation: float = 0.0
    elapsed: float = 0.0
    stats: dict[str, Any] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, instance: str, observed: Any, expected: Any) -> None:
        self.failures.append((instance, observed, expected))

    def deviation(self, value: float) -> None:
        if value > self.max_deviation:
            self.max_deviation = float(value)

    def merge(self, other: VerificationReport) -> VerificationReport:
        """Combine two partial reports of the same claim; counters add, failures sort."""
        out = VerificationReport(self.claim, dict(self.parameter_range))
        out.instances_checked = self.instances_checked + other.instances_checked
        out.failures = sorted(self.failures + other.failures, key=lambda f: f[0])
        out.max_deviation = max(self.max_deviation, other.max_deviation)
        out.elapsed = self.elapsed + other.elapsed
        out.stats = _merge_stats(self.stats, other.stats)
        out.notes = list(dict.fromkeys(self.notes + other.notes))
        return out

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "claim": self.claim,
            "passed": self.passed,
            "parameter_range": self.parameter_range,
            "instances_checked": self.instances_checked,
            "failures": [
                {"instance": i, "observed": _jsonable(o), "expected": _jsonable(e)} for i, o, e in self.failures
            ],
            "max_deviation": self.max_deviation,
            "stats": _jsonable(self.stats),
            "notes": self.notes,
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out

    def to_table(self) -> str:
        lines = [
            f"claim             {self.claim}",
            f"result            {'PASS' if self.passed else 'FAIL'}",
            f"range             {json.dumps(self.parameter_range)}",
            f"instances         {self.instances_checked}",
            f"failures          {len(self.failures)}",
            f"max deviation     {self.max_deviation:.3e}",
            f"elapsed           {self.elapsed:.2f} s",
        ]
        for k, v in sorted(self.stats.items()):
            lines.append(f"{k:<17} {json.dumps(_jsonable(v))}")
        for note in self.notes:
            lines.append(f"note              {note}")
        for inst, obs, exp in self.failures[:20]:
            lines.append(f"  x {inst}: observed {obs}, expected {exp}")
        return "\n".join(lines)


def _merge_stats(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        if k not in out or out[k] is None:
            out[k] = v
        elif v is None:
            continue
        elif isinstance(v, dict):
            out[k] = _merge_stats(out[k], v)
        elif k.startswith("max_"):
            out[k] = max(out[k], v)
        elif k.startswith("min_"):
            out[k] = min(out[k], v)
        elif isinstance(v, (int, float)) and not isinstance(v, bool):
            out[k] = out[k] + v
        else:
            out[k] = v
    return out


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, np.ndarray):
        return _jsonable(x.tolist())
    if isinstance(x, np.generic):
        return x.item()
    if isinstance(x, Spectrum):
        return x.to_json()
    if isinstance(x, (int, float, str, bool)) or x is None:
        return x
    return str(x)


def resolve_jobs(jobs: int | None) -> int:
    if jobs is None:
        jobs = int(os.environ.get("ECCMAT_JOBS", "1"))
    return max(1, jobs)


# ---------------------------------------------------------------- tree sweeps


def _prufer_label(n: int, k: int) -> str:
    digits = []
    for _ in range(n - 2):
        k, d = divmod(k, n)
        digits.append(d)
    return f"n={n} prufer=({','.join(map(str, reversed(digits)))})"


def _sweep_chunk(n: int, start: int, stop: int, tol: float) -> tuple[VerificationReport, VerificationReport]:
    """Check one contiguous range of tree indices for both tree claims."""
    t0 = time.perf_counter()
    conj = VerificationReport("tree-conjecture")
    irr = VerificationReport("tree-irreducibility")
    n_star = n_equal = 0
    max_nonstar = -np.inf
    for lo in range(start, stop, BATCH_SIZE):
        hi = min(stop, lo + BATCH_SIZE)
        ecc, maxdeg = tree_ecc_matrices(n, lo, hi)
        connected = supports_connected(ecc)
        irr.instances_checked += hi - lo
        for k in np.flatnonzero(~connected):
            irr.fail(_prufer_label(n, lo + int(k)), "reducible", "irreducible")
        if n < 3:
            continue
        least = jacobi_eigenvalues(ecc)[:, 0]
        is_star = maxdeg == n - 1
        equal = np.abs(least + 2.0) <= tol
        conj.instances_checked += hi - lo
        n_star += int(is_star.sum())
        n_equal += int(equal.sum())
        if is_star.any():
            conj.deviation(float(np.max(np.abs(least[is_star] + 2.0))))
        if (~is_star).any():
            max_nonstar = max(max_nonstar, float(np.max(least[~is_star])))
        bad = (least > -2.0 + tol) | (is_star & ~equal) | (~is_star & (least > -3.0 + tol))
        for k in np.flatnonzero(bad):
            expected = "-2 (star)" if is_star[k] else "<= -3 (non-star)"
            conj.fail(_prufer_label(n, lo + int(k)), float(least[k]), expected)
    if n >= 3:
        conj.stats = {
            f"n={n}": {
                "trees": stop - start,
                "stars": n_star,
                "equality_cases": n_equal,
                "max_least_eigenvalue_nonstar": None if max_nonstar == -np.inf else max_nonstar,
            }
        }
    elapsed = time.perf_counter() - t0
    conj.elapsed = irr.elapsed = elapsed
    return conj, irr


def _tree_chunks(n: int) -> list[tuple[int, int, int]]:
    """Split the n**(n-2) trees by first Prüfer symbol."""
    total = n ** (n - 2)
    if n <= 3:
        return [(n, 0, total)]
    step = n ** (n - 3)
    return [(n, p * step, (p + 1) * step) for p in range(n)]


def sweep_trees(
    max_n: int, tol: float = 1e-7, jobs: int | None = None, min_n: int = 2, allow_n10: bool = False
) -> tuple[VerificationReport, VerificationReport]:
    """One pass over all labeled trees on min_n..max_n vertices checking both tree claims."""
    if max_n > 10 or (max_n == 10 and not allow_n10):
        raise ValueError("max_n above 9 needs allow_n10=True (n=10 is 10^8 trees); above 10 is unsupported")
    if max_n == 10:
        warnings.warn("sweeping n=10: 100 million trees, expect hours of runtime", RuntimeWarning)
    jobs = resolve_jobs(jobs)
    chunks = [c for n in range(max(2, min_n), max_n + 1) for c in _tree_chunks(n)]
    t0 = time.perf_counter()
    conj = VerificationReport("tree-conjecture")
    irr = VerificationReport("tree-irreducibility")
    if jobs == 1:
        results = (_sweep_chunk(n, a, b, tol) for n, a, b in chunks)
        for c, i in results:
            conj, irr = conj.merge(c), irr.merge(i)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_sweep_chunk, n, a, b, tol) for n, a, b in chunks]
            for fut in futures:
                c, i = fut.result()
                conj, irr = conj.merge(c), irr.merge(i)
    elapsed = time.perf_counter() - t0
    conj.claim, irr.claim = "tree-conjecture", "tree-irreducibility"
    conj.parameter_range = {"n": [max(3, min_n), max_n], "tol": tol}
    irr.parameter_range = {"n": [max(2, min_n), max_n]}
    for rep in (conj, irr):
        rep.elapsed = elapsed
        rep.notes.append(COROLLARY_NOTE)
    for key, s in conj.stats.items():
        if s["stars"] != s["equality_cases"]:
            conj.fail(key, f"{s['equality_cases']} equality cases", f"{s['stars']} stars")
    control = gr.complete_multipartite((2, 3))
    reducible = not is_irreducible(eccentricity_matrix(control))
    irr.stats["negative_control_K23_reducible"] = reducible
    if not reducible:
        irr.fail("K_{2,3} negative control", "irreducible", "reducible")
    return conj, irr


def verify_tree_conjecture(max_n: int = 9, tol: float = 1e-7, jobs: int | None = None, **kw) -> VerificationReport:
    if not 3 <= max_n <= 10:
        raise ValueError("max_n must lie in 3..10")
    return sweep_trees(max_n, tol, jobs, min_n=3, **kw)[0]


def verify_tree_irreducibility(max_n: int = 9, jobs: int | None = None, **kw) -> VerificationReport:
    if not 2 <= max_n <= 10:
        raise ValueError("max_n must lie in 2..10")
    return sweep_trees(max_n, 1e-7, jobs, min_n=2, **kw)[1]


# ------------------------------------------------------- closed-form cross-checks


def connected_graphs(m: int) -> list[Graph]:
    """One representative of every connected graph on m vertices (m <= 6), by brute force."""
    if m > 6:
        raise ValueError("brute-force graph listing is limited to m <= 6")
    pairs = list(itertools.combinations(range(m), 2))
    reps: list[Graph] = []
    for size in range(m - 1, len(pairs) + 1):
        for subset in itertools.combinations(pairs, size):
            g = Graph(m, subset)
            if g.is_connected() and not any(gr.are_isomorphic(g, h) for h in reps):
                reps.append(g)
    if m == 1:
        reps = [Graph(1)]
    return reps


def _distinct_h(m: int) -> list[tuple[str, Graph]]:
    """Three structurally distinct connected graphs on m vertices (fewer when none exist)."""
    if m == 1:
        return [("K1", Graph(1))]
    if m == 2:
        return [("K2", gr.complete(2))]
    if m == 3:
        return [("P3", gr.path(3)), ("K3", gr.complete(3))]
    return [(f"P{m}", gr.path(m)), (f"K1,{m - 1}", gr.star(m)), (f"K{m}", gr.complete(m))]


def default_grid(family: str, seed: int = DEFAULT_SEED) -> list:
    if family == "star":
        return list(range(3, 31))
    if family == "corona":
        return [(n, m, name, h) for n in range(2, 6) for m in range(1, 6) for name, h in _distinct_h(m)]
    if family == "wheel":
        return list(range(4, 13))
    if family == "barbell":
        return list(range(2, 11))
    if family in ("cocktail", "cocktail_party"):
        return list(range(2, 13))
    if family in ("multipartite", "complete_multipartite"):
        return random_partitions(10, 12, seed)
    if family == "cone":
        return [
            ("C4", gr.cycle(4)),
            ("C5", gr.cycle(5)),
            ("C6", gr.cycle(6)),
            ("CP(2)", gr.cocktail_party(2)),
            ("CP(3)", gr.cocktail_party(3)),
        ]
    if family == "join":
        return [
            ("C4", gr.cycle(4), "C4", gr.cycle(4)),
            ("C4", gr.cycle(4), "C5", gr.cycle(5)),
            ("P4", gr.path(4), "P4", gr.path(4)),
            ("C5", gr.cycle(5), "CP(3)", gr.cocktail_party(3)),
            ("P5", gr.path(5), "C6", gr.cycle(6)),
        ]
    if family == "block_a":
        return list(range(1, 13))
    raise ValueError(f"unknown family {family!r}")


CROSSCHECK_FAMILIES = ("star", "corona", "wheel", "barbell", "cocktail", "multipartite", "cone", "join", "block_a")


def random_partitions(count: int, max_n: int, seed: int) -> list[tuple[int, ...]]:
    """Distinct random partitions with at least two parts, each part >= 2, total <= max_n."""
    rng = np.random.default_rng(seed)
    out: list[tuple[int, ...]] = []
    seen = set()
    while len(out) < count:
        n = int(rng.integers(4, max_n + 1))
        parts = []
        left = n
        while left >= 4 and (not parts or rng.random() < 0.6):
            p = int(rng.integers(2, left - 1))
            parts.append(p)
            left -= p
        parts.append(left)
        if len(parts) < 2 or min(parts) < 2:
            continue
        key = tuple(sorted(parts, reverse=True))
        if key not in seen:
            seen.add(key)
            out.append(key)
    return out


def _family_case(family: str, point) -> tuple[str, Spectrum, np.ndarray]:
    if family == "star":
        return f"star n={point}", cf.star_spectrum(point).spectrum, eccentricity_matrix(gr.star(point))
    if family == "corona":
        n, m, name, h = point
        g = gr.corona(gr.complete(n), h)
        return f"corona K{n} o {name}", cf.corona_spectrum(n, m).spectrum, eccentricity_matrix(g)
    if family == "wheel":
        return f"wheel rim={point}", cf.wheel_spectrum(point).spectrum, eccentricity_matrix(gr.wheel(point + 1))
    if family == "barbell":
        return f"barbell n={point}", cf.barbell_spectrum(point).spectrum, eccentricity_matrix(gr.barbell(point))
    if family in ("cocktail", "cocktail_party"):
        return f"cocktail n={point}", cf.cocktail_spectrum(point).spectrum, eccentricity_matrix(gr.cocktail_party(point))
    if family in ("multipartite", "complete_multipartite"):
        g = gr.complete_multipartite(point)
        return f"multipartite {point}", cf.multipartite_spectrum(point).spectrum, eccentricity_matrix(g)
    if family == "cone":
        name, g = point
        return f"cone {name}", cf.cone_spectrum(g).spectrum, eccentricity_matrix(gr.join(g, gr.empty(1)))
    if family == "join":
        n1, g1, n2, g2 = point
        direct = eccentricity_matrix(gr.join(g1, g2))
        formula = cf.join_ecc_matrix(g1, g2)
        if not np.array_equal(direct, formula):
            raise AssertionError(f"join {n1} v {n2}: block formula differs from direct construction")
        return f"join {n1} v {n2}", cf.join_spectrum(g1, g2).spectrum, direct
    if family == "block_a":
        return f"block_a n={point}", cf.block_a_spectrum(point), cf.block_a_matrix(point)
    raise ValueError(f"unknown family {family!r}")


def crosscheck_family(family: str, param_grid: Iterable | None = None, tol: float = 1e-8) -> VerificationReport:
    """Compare closed-form spectra with Jacobi eigenvalues of the constructed eccentricity matrices."""
    t0 = time.perf_counter()
    grid = list(param_grid) if param_grid is not None else default_grid(family)
    rep = VerificationReport(f"crosscheck-{family}", {"points": len(grid), "tol": tol})
    for point in grid:
        try:
            label, closed, matrix = _family_case(family, point)
        except AssertionError as exc:
            rep.instances_checked += 1
            rep.fail(str(point), str(exc), "equal matrices")
            continue
        numeric = jacobi_eigenvalues(matrix)
        dev = spectrum_distance(closed, numeric)
        rep.instances_checked += 1
        rep.deviation(dev)
        if not dev < tol:
            rep.fail(label, numeric.tolist(), closed.values().tolist())
    rep.elapsed = time.perf_counter() - t0
    return rep


# --------------------------------------------------------------------- inertia


def verify_inertia(family: str, param_grid: Iterable | None = None) -> VerificationReport:
    """Exact inertia (2, 2, N-4) and rank 4 for paths and lollipops."""
    t0 = time.perf_counter()
    if family == "path":
        grid = list(param_grid) if param_grid is not None else list(range(4, 41))
        cases = [(f"path n={n}", gr.path(n)) for n in grid]
        if any(n < 4 for n in grid):
            raise ValueError("path inertia needs n >= 4")
    elif family == "lollipop":
        grid = (
            list(param_grid)
            if param_grid is not None
            else [(m, n) for m in range(3, 9) for n in range(2, 9)]
        )
        if any(m < 3 or n < 2 for m, n in grid):
            raise ValueError("lollipop inertia needs m >= 3 and n >= 2")
        cases = [(f"lollipop m={m} n={n}", gr.lollipop(m, n)) for m, n in grid]
    else:
        raise ValueError(f"no inertia result for family {family!r}")
    rep = VerificationReport(f"inertia-{family}", {"points": len(cases)})
    for label, g in cases:
        got = inertia_exact(eccentricity_matrix(g))
        want = Inertia(2, 2, g.n - 4)
        rep.instances_checked += 1
        if got != want:
            rep.fail(label, tuple(got), tuple(want))
        elif got.n_plus + got.n_minus != 4:
            rep.fail(label, f"rank {got.n_plus + got.n_minus}", "rank 4")
    rep.elapsed = time.perf_counter() - t0
    return rep


# ----------------------------------------------------------------- cospectrality


@dataclass
class CospectralPair:
    h1: Graph
    h2: Graph
    g1: Graph
    g2: Graph
    spectrum: np.ndarray
    deviation: float
    witness: str


def non_isomorphism_witness(g1: Graph, g2: Graph) -> str | None:
    """Name a reason the graphs differ, or None if they are isomorphic."""
    if g1.n <= 10:
        return None if gr.are_isomorphic(g1, g2) else "brute-force"
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return "degree-sequence"
    d1 = np.linalg.eigvalsh(apsp(g1).astype(float))
    d2 = np.linalg.eigvalsh(apsp(g2).astype(float))
    if np.max(np.abs(d1 - d2)) > 1e-6:
        return "distance-spectrum"
    return None if gr.are_isomorphic(g1, g2) else "brute-force"


def cospectral_pairs(n: int, m: int, tol: float = 1e-8, limit: int | None = None) -> list[CospectralPair]:
    """ε-cospectral, non-isomorphic coronas K_n ∘ H1 and K_n ∘ H2 over connected H on m vertices."""
    if n < 2 or m < 3:
        raise ValueError("need n >= 2 and m >= 3 (m = 2 has only one connected graph)")
    hs = connected_graphs(m)
    out = []
    kn = gr.complete(n)
    for h1, h2 in itertools.combinations(hs, 2):
        g1, g2 = gr.corona(kn, h1), gr.corona(kn, h2)
        e1 = jacobi_eigenvalues(eccentricity_matrix(g1))
        e2 = jacobi_eigenvalues(eccentricity_matrix(g2))
        dev = spectrum_distance(e1, e2)
        witness = non_isomorphism_witness(g1, g2)
        if dev < tol and witness is not None:
            out.append(CospectralPair(h1, h2, g1, g2, e1, dev, witness))
        if limit is not None and len(out) >= limit:
            break
    return out


def verify_cospectral(n: int, m: int, tol: float = 1e-8) -> VerificationReport:
    t0 = time.perf_counter()
    hs = connected_graphs(m)
    rep = VerificationReport("cospectral", {"n": n, "m": m, "tol": tol})
    pairs = cospectral_pairs(n, m, tol)
    expected = len(hs) * (len(hs) - 1) // 2
    rep.instances_checked = expected
    for p in pairs:
        rep.deviation(p.deviation)
    if len(pairs) != expected:
        rep.fail(f"K{n} o H, H on {m} vertices", f"{len(pairs)} cospectral pairs", f"{expected}")
    rep.stats = {"connected_H": len(hs), "witnesses": sorted({p.witness for p in pairs})}
    rep.elapsed = time.perf_counter() - t0
    return rep


# ------------------------------------------------------------ property suites


def _rand_sym(rng, n: int, scale: float = 5.0) -> np.ndarray:
    a = rng.uniform(-scale, scale, size=(n, n))
    return (a + a.T) / 2


def run_property_suites(
    seed: int = DEFAULT_SEED,
    block_count: int = 100,
    kron_count: int = 100,
    colsum_count: int = 50,
    interlace_count: int = 200,
) -> VerificationReport:
    """Randomized checks of the block, Kronecker, column-sum and interlacing facts."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(seed)
    rep = VerificationReport("property-suites", {"seed": seed})
    counts = {"block": 0, "kron": 0, "column_sum": 0, "interlacing": 0}

    for k in range(block_count):
        n = int(rng.integers(1, 7))
        b0, b1 = _rand_sym(rng, n), _rand_sym(rng, n)
        if not block2_spectrum_check(b0, b1, tol=1e-8):
            rep.fail(f"block #{k}", "spectra differ", "union of spec(B0+B1), spec(B0-B1)")
        counts["block"] += 1

    for k in range(kron_count):
        a = _rand_sym(rng, int(rng.integers(1, 5)))
        b = _rand_sym(rng, int(rng.integers(1, 5)))
        lhs = jacobi_eigenvalues(kron(a, b))
        rhs = np.outer(jacobi_eigenvalues(a), jacobi_eigenvalues(b)).ravel()
        dev = spectrum_distance(lhs, rhs)
        scale = max(1.0, float(np.linalg.norm(a) * np.linalg.norm(b)))
        rep.deviation(dev / scale)
        if not dev < 1e-8 * scale:
            rep.fail(f"kron #{k}", dev, "< 1e-8 * scale")
        counts["kron"] += 1

    for k in range(colsum_count):
        n = int(rng.integers(2, 7))
        alpha = float(rng.uniform(-5, 5))
        r = rng.uniform(-3, 3, size=(n, n))
        b = r - r.sum(axis=0, keepdims=True) / n + alpha / n
        eigs = np.linalg.eigvals(b)
        while True:
            lam = float(rng.uniform(-20, 20))
            if np.min(np.abs(eigs - lam)) > 0.5:
                break
        if not column_sum_identity_check(b, alpha, lam, tol=1e-9):
            rep.fail(f"column-sum #{k}", "identity fails", n / (lam - alpha))
        counts["column_sum"] += 1

    for k in range(interlace_count):
        n = int(rng.integers(2, 9))
        a = _rand_sym(rng, n)
        drop = int(rng.integers(0, n))
        sub = principal_submatrix(a, [i for i in range(n) if i != drop])
        lam = jacobi_eigenvalues(a)
        beta = jacobi_eigenvalues(sub)
        ok = np.all(lam[:-1] <= beta + 1e-8) and np.all(beta <= lam[1:] + 1e-8)
        if not ok:
            rep.fail(f"interlacing #{k}", beta.tolist(), lam.tolist())
        counts["interlacing"] += 1

    rep.instances_checked = sum(counts.values())
    rep.stats = counts
    rep.elapsed = time.perf_counter() - t0
    return rep


# ------------------------------------------------------------------- sentinel


def consistency_sentinel(tol: float = 1e-8) -> VerificationReport:
    """B_{2,2}, K_2 ∘ K_1 and P_4 coincide, and so do their three spectra."""
    rep = VerificationReport("consistency-sentinel", {"tol": tol})
    p4 = gr.path(4)
    for name, g in (("barbell(2)", gr.barbell(2)), ("corona(K2,K1)", gr.corona(gr.complete(2), gr.Graph(1)))):
        rep.instances_checked += 1
        if not gr.are_isomorphic(g, p4):
            rep.fail(name, "not isomorphic", "P4")
    spectra = {
        "barbell_spectrum(2)": cf.barbell_spectrum(2).spectrum.values(),
        "corona_spectrum(2,1)": cf.corona_spectrum(2, 1).spectrum.values(),
        "jacobi(eps(P4))": jacobi_eigenvalues(eccentricity_matrix(p4)),
    }
    for (na, a), (nb, b) in itertools.combinations(spectra.items(), 2):
        dev = spectrum_distance(a, b)
        rep.instances_checked += 1
        rep.deviation(dev)
        if not dev < tol:
            rep.fail(f"{na} vs {nb}", a.tolist(), b.tolist())
    got = inertia_exact(eccentricity_matrix(p4))
    rep.instances_checked += 1
    if got != Inertia(2, 2, 0):
        rep.fail("inertia eps(P4)", tuple(got), (2, 2, 0))
    return rep


def run_claim(claim: str, **kw) -> list[VerificationReport]:
    """Dispatch a claim tag to its verifier. Used by the command line."""
    max_n = kw.get("max_n", 9)
    jobs = kw.get("jobs")
    seed = kw.get("seed", DEFAULT_SEED)
    tol = kw.get("tol")

    def pick(default):
        return default if tol is None else tol

    grid = kw.get("grid")
    family = kw.get("family")
    if claim == "tree-conjecture":
        return [verify_tree_conjecture(max_n, pick(1e-7), jobs, allow_n10=kw.get("allow_n10", False))]
    if claim == "tree-irreducibility":
        return [verify_tree_irreducibility(max_n, jobs, allow_n10=kw.get("allow_n10", False))]
    if claim == "trees":
        return list(sweep_trees(max_n, pick(1e-7), jobs, allow_n10=kw.get("allow_n10", False)))
    if claim == "crosscheck":
        families = [family] if family else list(CROSSCHECK_FAMILIES)
        return [crosscheck_family(f, grid if family else None, pick(1e-8)) for f in families]
    if claim == "inertia":
        families = [family] if family else ["path", "lollipop"]
        return [verify_inertia(f, grid if family else None) for f in families]
    if claim == "cospectral":
        n, m = (grid or [(2, 4)])[0]
        return [verify_cospectral(n, m, pick(1e-8))]
    if claim == "properties":
        return [run_property_suites(seed)]
    if claim == "sentinel":
        return [consistency_sentinel(pick(1e-8))]
    raise KeyError(claim)


CLAIMS = ("tree-conjecture", "tree-irreducibility", "trees", "crosscheck", "inertia", "cospectral", "properties", "sentinel")
