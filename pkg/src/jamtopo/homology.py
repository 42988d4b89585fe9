"""Integer simplicial homology: boundary matrices, Smith normal form, Betti numbers.

All arithmetic uses Python integers, so nothing overflows. Ranks and torsion
for homology go through :func:`elementary_divisors`, which strips unit pivots
from the sparse boundary matrix before handing the (usually tiny) remainder
to the dense Smith normal form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .simplicial import Cell, SimplicialComplex


@dataclass(frozen=True)
class SnfResult:
    """``U @ M @ V == D`` with ``U``, ``V`` unimodular and ``D`` in Smith form."""

    U: np.ndarray
    D: np.ndarray
    V: np.ndarray
    rank: int

    @property
    def diagonal(self) -> list[int]:
        k = min(self.D.shape) if self.D.size else 0
        return [int(self.D[i, i]) for i in range(k)]


@dataclass(frozen=True)
class HomologyGroup:
    """Rank of the free part and the torsion coefficients (all > 1)."""

    rank: int
    torsion: tuple[int, ...] = ()

    @property
    def trivial(self) -> bool:
        return self.rank == 0 and not self.torsion


@dataclass(frozen=True)
class HomologySummary:
    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...] = field(default=())

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti))


def _ordered_cells(X: SimplicialComplex, k: int, exclude: frozenset[Cell] = frozenset()) -> list[Cell]:
    return [c for c in X.cells_of_dim(k) if c not in exclude]


def _sparse_boundary(rows: Sequence[Cell], cols: Sequence[Cell]) -> dict[int, dict[int, int]]:
    """Row-major sparse boundary from ``cols`` (k-cells) to ``rows`` ((k-1)-cells).

    Faces not listed in ``rows`` are dropped, which is how relative chains
    quotient out a subcomplex.
    """
    row_index = {c: i for i, c in enumerate(rows)}
    out: dict[int, dict[int, int]] = {}
    for j, c in enumerate(cols):
        for i in range(len(c)):
            r = row_index.get(c[:i] + c[i + 1:])
            if r is not None:
                out.setdefault(r, {})[j] = -1 if i % 2 else 1
    return out


def boundary_matrix(X: SimplicialComplex, k: int) -> np.ndarray:
    """Dense integer matrix of the k-th boundary map.

    Rows are the (k-1)-cells and columns the k-cells, both in canonical
    order. ``k = 0`` gives the zero map into the trivial group (zero rows).
    """
    if k < 0 or k > max(X.dimension, 0):
        raise ValueError(f"degree {k} out of range for a complex of dimension {X.dimension}")
    cols = X.cells_of_dim(k)
    if k == 0:
        return np.zeros((0, len(cols)), dtype=np.int64)
    rows = X.cells_of_dim(k - 1)
    M = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for r, entries in _sparse_boundary(rows, cols).items():
        for c, v in entries.items():
            M[r, c] = v
    return M


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _snf_dense(A: list[list[int]], track: bool, ncols: int | None = None):
    """In-place Smith normal form of ``A``; returns (U, V) when ``track``."""
    m = len(A)
    n = ncols if ncols is not None else (len(A[0]) if m else 0)
    U = _identity(m) if track else None
    V = _identity(n) if track else None

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        if track:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        if track:
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst -= q * row_src
        a, b = A[dst], A[src]
        for j in range(n):
            if b[j]:
                a[j] -= q * b[j]
        if track:
            a, b = U[dst], U[src]
            for j in range(m):
                if b[j]:
                    a[j] -= q * b[j]

    def add_col(dst, src, q):
        for row in A:
            if row[src]:
                row[dst] -= q * row[src]
        if track:
            for row in V:
                if row[src]:
                    row[dst] -= q * row[src]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = A[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, A[i][t] // A[t][t])
                    dirty |= A[i][t] != 0
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, A[t][j] // A[t][t])
                    dirty |= A[t][j] != 0
            if dirty:
                # a remainder is now smaller than the pivot; move it in
                best = None
                for i in range(t, m):
                    if A[i][t] and (best is None or abs(A[i][t]) < best[0]):
                        best = (abs(A[i][t]), i, t)
                for j in range(t + 1, n):
                    if A[t][j] and abs(A[t][j]) < best[0]:
                        best = (abs(A[t][j]), t, j)
                swap_rows(t, best[1])
                swap_cols(t, best[2])
                continue
            p = A[t][t]
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, -1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            if track:
                U[t] = [-x for x in U[t]]
        t += 1
    return U, V


def _to_int_lists(M) -> list[list[int]]:
    arr = np.asarray(M, dtype=object)
    if arr.ndim != 2:
        raise ValueError("expected a 2-D integer matrix")
    return [[int(x) for x in row] for row in arr]


def smith_normal_form(M) -> SnfResult:
    """Smith normal form with unimodular transforms, exact over the integers.

    Pivot rule: smallest nonzero absolute value in the active block, ties
    broken by (row, column) order.
    """
    A = _to_int_lists(M)
    shape = np.shape(M)
    U, V = _snf_dense(A, track=True, ncols=shape[1])
    D = np.array(A, dtype=object).reshape(shape)
    rank = sum(1 for i in range(min(shape)) if A[i][i])
    return SnfResult(
        U=np.array(U, dtype=object).reshape(shape[0], shape[0]),
        D=D,
        V=np.array(V, dtype=object).reshape(shape[1], shape[1]),
        rank=rank,
    )


def _divisors_sparse(rows: dict[int, dict[int, int]]) -> list[int]:
    rows = {r: dict(e) for r, e in rows.items() if e}
    cols: dict[int, set[int]] = {}
    for r, e in rows.items():
        for c in e:
            cols.setdefault(c, set()).add(r)
    units = 0
    progress = True
    while progress:
        progress = False
        for c in sorted(cols):
            if c not in cols:
                continue
            cands = [r for r in cols[c] if abs(rows[r][c]) == 1]
            if not cands:
                continue
            piv = min(cands, key=lambda r: (len(rows[r]), r))
            prow = rows.pop(piv)
            inv = prow[c]  # a unit is its own inverse
            for r in cols[c] - {piv}:
                row = rows[r]
                q = row[c] * inv
                for cc, v in prow.items():
                    nv = row.get(cc, 0) - q * v
                    if nv:
                        row[cc] = nv
                        cols[cc].add(r)
                    else:
                        row.pop(cc, None)
                        cols[cc].discard(r)
                if not row:
                    del rows[r]
            for cc in prow:
                cols[cc].discard(piv)
            # column c is now zero apart from the pivot row, drop it
            for r in list(cols.get(c, ())):
                rows[r].pop(c, None)
                if not rows[r]:
                    del rows[r]
            cols.pop(c, None)
            for cc in [cc for cc, s in cols.items() if not s]:
                del cols[cc]
            units += 1
            progress = True
    if not rows:
        return [1] * units
    rlist = sorted(rows)
    clist = sorted(cols)
    cpos = {c: j for j, c in enumerate(clist)}
    A = [[0] * len(clist) for _ in rlist]
    for i, r in enumerate(rlist):
        for c, v in rows[r].items():
            A[i][cpos[c]] = v
    _snf_dense(A, track=False)
    rest = [abs(A[i][i]) for i in range(min(len(rlist), len(clist))) if A[i][i]]
    return [1] * units + rest


def elementary_divisors(M) -> list[int]:
    """Nonzero diagonal of the Smith normal form, in divisibility order."""
    rows: dict[int, dict[int, int]] = {}
    for i, row in enumerate(_to_int_lists(M)):
        e = {j: v for j, v in enumerate(row) if v}
        if e:
            rows[i] = e
    return _divisors_sparse(rows)


def _as_subcomplex(X: SimplicialComplex, Y) -> frozenset[Cell]:
    cells = Y.cells if isinstance(Y, SimplicialComplex) else frozenset(tuple(c) for c in Y)
    extra = cells - X.cells
    if extra:
        raise ValueError(f"cell {min(extra)} of Y is not in X")
    if not isinstance(Y, SimplicialComplex):
        SimplicialComplex(cells)  # raises unless subset-closed
    return cells


def _relative_group(X: SimplicialComplex, Y: frozenset[Cell], k: int) -> HomologyGroup:
    if k < 0:
        raise ValueError("degree must be non-negative")
    ck = _ordered_cells(X, k, Y)
    if not ck:
        return HomologyGroup(0)
    rank_k = 0
    if k > 0:
        rank_k = len(_divisors_sparse(_sparse_boundary(_ordered_cells(X, k - 1, Y), ck)))
    up = _divisors_sparse(_sparse_boundary(ck, _ordered_cells(X, k + 1, Y)))
    return HomologyGroup(len(ck) - rank_k - len(up), tuple(d for d in up if d > 1))


def betti(X: SimplicialComplex, k: int) -> HomologyGroup:
    """k-th integral homology group of ``X`` (unreduced)."""
    return _relative_group(X, frozenset(), k)


def relative_betti(X: SimplicialComplex, Y, k: int) -> HomologyGroup:
    """k-th homology of the pair (X, Y).

    ``Y`` must be a subcomplex of ``X``; chains are those of ``X`` with the
    cells of ``Y`` quotiented out.
    """
    return _relative_group(X, _as_subcomplex(X, Y), k)


def homology_summary(X: SimplicialComplex, Y=None) -> HomologySummary:
    """All homology groups of ``X`` (or of the pair (X, Y)) up to dim X."""
    Yc = frozenset() if Y is None else _as_subcomplex(X, Y)
    groups = [_relative_group(X, Yc, k) for k in range(X.dimension + 1)]
    return HomologySummary(tuple(g.rank for g in groups), tuple(g.torsion for g in groups))
