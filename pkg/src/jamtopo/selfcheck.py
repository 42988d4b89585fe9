"""Randomized self-test suites behind ``jamtopo check``.

Each suite draws its own inputs from a seeded generator and returns a
:class:`SuiteResult`; nothing raises on a failed check.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import homology, network, sheaf, simplicial
from .scenarios import random_complex, random_scene

log = logging.getLogger(__name__)


@dataclass
class SuiteResult:
    name: str
    cases: int
    failures: list[str]

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" first failure: {self.failures[0]}" if self.failures else ""
        return f"{status} {self.name}: {self.cases} cases, {len(self.failures)} failures.{extra}"


def _det(M) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    A = [[int(x) for x in row] for row in M]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[-1][-1]


def check_snf(rng: np.random.Generator, n: int) -> SuiteResult:
    failures = []
    for t in range(n):
        m, k = (int(x) for x in rng.integers(1, 21, size=2))
        M = rng.integers(-6, 7, size=(m, k)) * (rng.random((m, k)) < 0.5)
        r = homology.smith_normal_form(M)
        if not np.array_equal(r.U.dot(np.asarray(M, dtype=object)).dot(r.V), r.D):
            failures.append(f"matrix {t}: U M V != D")
            continue
        if abs(_det(r.U)) != 1 or abs(_det(r.V)) != 1:
            failures.append(f"matrix {t}: transform not unimodular")
        diag = [d for d in r.diagonal if d]
        if any(b % a for a, b in zip(diag, diag[1:])):
            failures.append(f"matrix {t}: divisibility chain broken {diag}")
        off = r.D.copy()
        for i in range(min(m, k)):
            off[i, i] = 0
        if np.any(off != 0):
            failures.append(f"matrix {t}: D not diagonal")
        if homology.elementary_divisors(M) != diag:
            failures.append(f"matrix {t}: sparse divisors disagree with dense SNF")
    return SuiteResult("smith normal form", n, failures)


def check_homology(rng: np.random.Generator, n: int) -> SuiteResult:
    failures = []
    for t in range(n):
        X = random_complex(rng)
        for k in range(1, X.dimension):
            prod = homology.boundary_matrix(X, k) @ homology.boundary_matrix(X, k + 1)
            if np.any(prod != 0):
                failures.append(f"complex {t}: boundary squared nonzero in degree {k}")
        h = homology.homology_summary(X)
        if h.betti[0] != len(simplicial.connected_components(X)):
            failures.append(f"complex {t}: betti0 {h.betti[0]} != component count")
        if h.euler_characteristic() != simplicial.euler_characteristic(X):
            failures.append(f"complex {t}: Euler identity fails")
    return SuiteResult("homology oracles", n, failures)


def check_theorem_bound(rng: np.random.Generator, n: int) -> SuiteResult:
    """Attack every facet of random link and interference complexes."""
    failures = []
    cases = 0
    for t in range(n):
        scene = random_scene(rng)
        for kind in ("link", "interference"):
            X = network.build_complex(scene, kind)
            if len(simplicial.connected_components(X)) != 1:
                continue
            h1 = homology.betti(X, 1)
            for f in simplicial.facets(X):
                Y = simplicial.remove_open(X, sheaf.roi_facet(X, f))
                if len(Y) == 0:
                    continue
                cases += 1
                comps = len(simplicial.connected_components(Y))
                bound = homology.relative_betti(X, Y, 1).rank + 1
                if comps > bound:
                    failures.append(f"scene {t} {kind} facet {f}: {comps} > bound {bound}")
                if h1.trivial and comps != bound:
                    failures.append(f"scene {t} {kind} facet {f}: bound {bound} not attained ({comps})")
    return SuiteResult("theorem bound", cases, failures)


def check_sheaf_lemmas(rng: np.random.Generator, n: int) -> SuiteResult:
    failures = []
    for t in range(n):
        X = random_complex(rng, max_vertices=10)
        secs = sheaf.enumerate_global_sections(X)
        regions: dict[int, frozenset] = {}
        for s in secs:
            if not sheaf.is_section(X, s.as_dict()):
                failures.append(f"complex {t}: enumerated non-section")
            for v in s.active_nodes:
                A = sheaf.active_region(X, s, v)
                if (v,) not in A or len(simplicial.connected_components(A)) != 1:
                    failures.append(f"complex {t}: active region of {v} not connected around it")
                if regions.setdefault(v, A.cells) != A.cells:
                    failures.append(f"complex {t}: active region of {v} depends on the section")
            for a, b in combinations(s.active_nodes, 2):
                A = sheaf.active_region(X, s, a)
                B = sheaf.active_region(X, s, b)
                if simplicial.star(X, A.cells) & B.cells:
                    failures.append(f"complex {t}: star of active({a}) meets active({b})")
    return SuiteResult("sheaf lemmas", n, failures)


SUITES = {
    "snf": check_snf,
    "homology": check_homology,
    "theorem": check_theorem_bound,
    "sheaf": check_sheaf_lemmas,
}


def run_all(seed: int, scenes: int) -> list[SuiteResult]:
    if scenes == 0:
        log.warning("zero cases requested; every suite passes vacuously")
    rng = np.random.default_rng(seed)
    return [fn(rng, scenes) for fn in SUITES.values()]
