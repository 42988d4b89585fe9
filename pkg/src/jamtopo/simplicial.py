"""Abstract simplicial complexes.

A cell is a strictly increasing tuple of non-negative vertex ids. A
:class:`SimplicialComplex` is an immutable, subset-closed set of cells with
face/coface queries. Closure, star, facets and removal of open sets are
module-level functions taking the host complex first.
"""

from __future__ import annotations

import json
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator

Cell = tuple[int, ...]


class NotOpenError(ValueError):
    """Raised when a cell set whose removal would break subset-closure is removed."""


def make_cell(vertices: Iterable[int]) -> Cell:
    """Validate ``vertices`` as a canonical cell and return it as a tuple.

    Raises:
        ValueError: if the vertex list is empty, not strictly increasing,
            or contains something other than non-negative integers.
    """
    cell = tuple(vertices)
    if not cell:
        raise ValueError("a cell needs at least one vertex")
    for v in cell:
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise ValueError(f"vertex ids must be non-negative integers, got {v!r}")
    if any(a >= b for a, b in zip(cell, cell[1:])):
        raise ValueError(f"cell vertices must be strictly increasing: {cell}")
    return cell


def proper_faces(cell: Cell) -> Iterator[Cell]:
    """All nonempty proper subsets of ``cell``, in canonical order."""
    for size in range(1, len(cell)):
        yield from combinations(cell, size)


def cell_key(cell: Cell) -> str:
    return "-".join(str(v) for v in cell)


def parse_cell_key(key: str) -> Cell:
    return make_cell(int(v) for v in key.split("-"))


def _sort_key(cell: Cell) -> tuple[int, Cell]:
    return (len(cell), cell)


class SimplicialComplex:
    """Immutable finite abstract simplicial complex.

    Construct with :meth:`from_cells` (closes under faces) or directly from a
    set that is already subset-closed (validated).
    """

    __slots__ = ("_cells", "_sorted", "_cofaces")

    def __init__(self, cells: Iterable[Iterable[int]] = ()):
        cs = frozenset(make_cell(c) for c in cells)
        for c in cs:
            for f in proper_faces(c):
                if f not in cs:
                    raise ValueError(f"not subset-closed: {f} is a face of {c} but missing")
        self._cells = cs
        self._sorted: tuple[Cell, ...] | None = None
        self._cofaces: dict[Cell, frozenset[Cell]] | None = None

    @classmethod
    def from_cells(cls, cells: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Smallest complex containing every given cell."""
        out: set[Cell] = set()
        for c in cells:
            c = make_cell(c)
            if c in out:
                continue
            out.add(c)
            out.update(proper_faces(c))
        obj = cls.__new__(cls)
        obj._cells = frozenset(out)
        obj._sorted = None
        obj._cofaces = None
        return obj

    # container protocol
    def __contains__(self, cell: object) -> bool:
        return cell in self._cells

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.sorted_cells())

    def __len__(self) -> int:
        return len(self._cells)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SimplicialComplex):
            return self._cells == other._cells
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._cells)

    def __repr__(self) -> str:
        return f"SimplicialComplex(f_vector={self.f_vector()})"

    @property
    def cells(self) -> frozenset[Cell]:
        return self._cells

    def sorted_cells(self) -> tuple[Cell, ...]:
        """Cells ordered by dimension, then lexicographically."""
        if self._sorted is None:
            self._sorted = tuple(sorted(self._cells, key=_sort_key))
        return self._sorted

    @property
    def dimension(self) -> int:
        """Largest cell dimension; -1 for the empty complex."""
        return max((len(c) - 1 for c in self._cells), default=-1)

    def cells_of_dim(self, k: int) -> list[Cell]:
        return [c for c in self.sorted_cells() if len(c) == k + 1]

    def vertices(self) -> list[int]:
        return [c[0] for c in self.sorted_cells() if len(c) == 1]

    def f_vector(self) -> tuple[int, ...]:
        counts = [0] * (self.dimension + 1)
        for c in self._cells:
            counts[len(c) - 1] += 1
        return tuple(counts)

    def _coface_index(self) -> dict[Cell, frozenset[Cell]]:
        if self._cofaces is None:
            idx: dict[Cell, set[Cell]] = {c: set() for c in self._cells}
            for d in self._cells:
                for c in proper_faces(d):
                    idx[c].add(d)
            self._cofaces = {c: frozenset(s) for c, s in idx.items()}
        return self._cofaces

    def cofaces(self, cell: Cell) -> frozenset[Cell]:
        """Proper cofaces of ``cell`` (cells strictly containing it)."""
        self._require(cell)
        return self._coface_index()[cell]

    def faces(self, cell: Cell) -> list[Cell]:
        """Proper faces of ``cell``."""
        self._require(cell)
        return list(proper_faces(cell))

    def is_facet(self, cell: Cell) -> bool:
        return not self.cofaces(cell)

    def _require(self, cell: Cell) -> None:
        if cell not in self._cells:
            raise KeyError(f"cell {cell} is not in the complex")

    # serialization: facets only
    def to_json(self) -> dict:
        return {"cells": [list(f) for f in facets(self)]}

    @classmethod
    def from_json(cls, data: dict) -> "SimplicialComplex":
        if not isinstance(data, dict) or not isinstance(data.get("cells"), list):
            raise ValueError('complex JSON must be an object with a "cells" list')
        return cls.from_cells(data["cells"])

    def save(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_json(), indent=1) + "\n")

    @classmethod
    def load(cls, path: str | Path) -> "SimplicialComplex":
        return cls.from_json(json.loads(Path(path).read_text()))


def _as_cells(X: SimplicialComplex, S: Iterable[Iterable[int]]) -> set[Cell]:
    out = set()
    for c in S:
        c = tuple(c)
        if c not in X:
            raise ValueError(f"cell {c} is not in the host complex")
        out.add(c)
    return out


def insert_closed(X: SimplicialComplex, cell: Iterable[int]) -> SimplicialComplex:
    """Return a complex containing ``X``, ``cell`` and all faces of ``cell``."""
    c = make_cell(cell)
    if c in X:
        return X
    return SimplicialComplex.from_cells([*X.cells, c])


def closure(X: SimplicialComplex, S: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Smallest subcomplex of ``X`` containing every cell of ``S``."""
    return SimplicialComplex.from_cells(_as_cells(X, S))


def star(X: SimplicialComplex, S: Iterable[Iterable[int]]) -> frozenset[Cell]:
    """All cells of ``X`` having at least one face in ``S``."""
    out: set[Cell] = set()
    for c in _as_cells(X, S):
        out.add(c)
        out.update(X.cofaces(c))
    return frozenset(out)


def facets(X: SimplicialComplex) -> list[Cell]:
    """Cells without proper cofaces, in canonical order."""
    idx = X._coface_index()
    return [c for c in X.sorted_cells() if not idx[c]]


def is_open(X: SimplicialComplex, S: Iterable[Iterable[int]]) -> bool:
    S = _as_cells(X, S)
    return all(X.cofaces(c) <= S for c in S)


def remove_open(X: SimplicialComplex, S: Iterable[Iterable[int]]) -> SimplicialComplex:
    """The subcomplex on ``X`` minus the open set ``S``.

    Raises:
        NotOpenError: if ``S`` is not closed under taking cofaces.
    """
    S = _as_cells(X, S)
    for c in S:
        missing = X.cofaces(c) - S
        if missing:
            raise NotOpenError(f"cell set is not open: {c} has coface {min(missing)} outside it")
    obj = SimplicialComplex.__new__(SimplicialComplex)
    obj._cells = X.cells - S
    obj._sorted = None
    obj._cofaces = None
    return obj


def connected_components(X: SimplicialComplex) -> list[tuple[int, ...]]:
    """Vertex partition into path components, each sorted, ordered by least vertex."""
    parent = {v: v for v in X.vertices()}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in X.cells_of_dim(1):
        a, b = find(e[0]), find(e[1])
        if a != b:
            parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for v in parent:
        groups.setdefault(find(v), []).append(v)
    return sorted((tuple(sorted(g)) for g in groups.values()), key=lambda g: g[0])


def euler_characteristic(X: SimplicialComplex) -> int:
    return sum((-1) ** k * n for k, n in enumerate(X.f_vector()))
