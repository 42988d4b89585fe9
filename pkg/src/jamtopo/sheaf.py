"""The transmission sheaf of a complex: stalks, restrictions, sections, regions of influence.

The stalk at a cell ``c`` is the set of nodes lying in some cell that
contains ``c`` (``c`` itself included), plus the silent value :data:`BOT`.
Restricting along ``c <= d`` keeps a node if it is in the stalk of ``d`` and
goes silent otherwise. Global sections are the transmission patterns in
which no two active nodes interfere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping

from .simplicial import (
    Cell,
    SimplicialComplex,
    cell_key,
    closure,
    facets,
    parse_cell_key,
    star,
)


class _Bottom:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "⊥"

    def __reduce__(self):
        return (_Bottom, ())


BOT = _Bottom()
"""The silent value present in every stalk."""


class NotAFacetError(ValueError):
    pass


class NotASectionError(ValueError):
    pass


def stalk(X: SimplicialComplex, c: Cell) -> frozenset:
    """Nodes sharing a coface with ``c`` (``c`` counts as its own coface), plus BOT."""
    c = tuple(c)
    out = set(c)
    for d in X.cofaces(c):
        out.update(d)
    out.add(BOT)
    return frozenset(out)


def restrict(X: SimplicialComplex, c: Cell, d: Cell, value):
    """Push a stalk value at ``c`` forward to the coface ``d``."""
    c, d = tuple(c), tuple(d)
    if c not in X or d not in X:
        raise KeyError("both cells must belong to the complex")
    if not set(c) <= set(d):
        raise ValueError(f"{c} is not a face of {d}")
    if value is BOT:
        return BOT
    if value not in stalk(X, c):
        raise ValueError(f"{value!r} is not in the stalk at {c}")
    return value if value in stalk(X, d) else BOT


def is_section(X: SimplicialComplex, assignment: Mapping[Cell, object], Y: Iterable[Cell] | None = None) -> bool:
    """Check that ``assignment`` is a section over ``Y`` (default: all of ``X``)."""
    Y = set(X.cells) if Y is None else {tuple(c) for c in Y}
    if not Y <= X.cells:
        raise ValueError("support contains cells outside the complex")
    stalks = {c: stalk(X, c) for c in Y}
    for c in Y:
        if c not in assignment or assignment[c] not in stalks[c]:
            return False
    for c in Y:
        v = assignment[c]
        for d in X.cofaces(c):
            if d in Y:
                pushed = v if (v is not BOT and v in stalks[d]) else BOT
                if pushed != assignment[d]:
                    return False
    return True


@dataclass(frozen=True)
class Section:
    """A global section, stored cellwise in canonical cell order."""

    values: tuple[tuple[Cell, object], ...]

    def as_dict(self) -> dict[Cell, object]:
        return dict(self.values)

    def __getitem__(self, cell: Cell):
        return self.as_dict()[tuple(cell)]

    @property
    def active_nodes(self) -> tuple[int, ...]:
        return tuple(sorted({v for _, v in self.values if v is not BOT}))

    def to_json(self) -> dict:
        return {
            "active_nodes": list(self.active_nodes),
            "assignment": {cell_key(c): ("bot" if v is BOT else v) for c, v in self.values},
        }

    @classmethod
    def from_json(cls, data: dict) -> "Section":
        vals = []
        for k, v in data["assignment"].items():
            vals.append((parse_cell_key(k), BOT if v == "bot" else int(v)))
        vals.sort(key=lambda cv: (len(cv[0]), cv[0]))
        return cls(tuple(vals))


@dataclass(frozen=True)
class SectionEnumeration:
    sections: list[Section]
    truncated: bool
    explored: int

    def __len__(self) -> int:
        return len(self.sections)

    def __iter__(self):
        return iter(self.sections)


def enumerate_global_sections(X: SimplicialComplex, limit: int = 10**6) -> SectionEnumeration:
    """All global sections of the transmission sheaf, by backtracking.

    A global section is fixed by its vertex values (every other cell must
    carry the restriction of each of its vertices), so the search assigns
    vertices in order and checks each cell once its last vertex is set.
    ``limit`` bounds the number of partial assignments explored; when hit, the
    result is flagged ``truncated``.
    """
    verts = X.vertices()
    stalks = {c: stalk(X, c) for c in X.cells}
    # cells checked when their largest vertex gets a value
    closing: dict[int, list[Cell]] = {v: [] for v in verts}
    for c in X.cells:
        if len(c) > 1:
            closing[c[-1]].append(c)
    order = X.sorted_cells()
    choices = {
        v: [BOT] + sorted(n for n in stalks[(v,)] if n is not BOT) for v in verts
    }

    def value_at(c: Cell, vals: dict[int, object]):
        out = None
        for v in c:
            x = vals[v]
            x = x if (x is not BOT and x in stalks[c]) else BOT
            if out is None:
                out = x
            elif x != out:
                return None
        return out

    sections: list[Section] = []
    vals: dict[int, object] = {}
    explored = 0
    truncated = False

    def rec(i: int) -> None:
        nonlocal explored, truncated
        if truncated:
            return
        if i == len(verts):
            cellvals = {(v,): vals[v] for v in verts}
            for c in order:
                if len(c) > 1:
                    cellvals[c] = value_at(c, vals)
            sections.append(Section(tuple((c, cellvals[c]) for c in order)))
            return
        v = verts[i]
        for x in choices[v]:
            explored += 1
            if explored > limit:
                truncated = True
                return
            vals[v] = x
            if all(value_at(c, vals) is not None for c in closing[v]):
                rec(i + 1)
            if truncated:
                return
        del vals[v]

    rec(0)
    sections.sort(key=lambda s: (len(s.active_nodes), s.active_nodes))
    return SectionEnumeration(sections, truncated, min(explored, limit))


def section_from_nodes(X: SimplicialComplex, nodes: Iterable[int]) -> dict[Cell, object]:
    """Cellwise assignment in which each listed node claims every cell whose stalk has it.

    Raises:
        NotASectionError: if two of the nodes claim a common cell.
    """
    nodes = sorted(set(nodes))
    out: dict[Cell, object] = {c: BOT for c in X.cells}
    for n in nodes:
        for c in active_cells(X, n):
            if out[c] is not BOT:
                raise NotASectionError(f"nodes {out[c]} and {n} both reach cell {c}")
            out[c] = n
    return out


def active_cells(X: SimplicialComplex, n: int) -> frozenset[Cell]:
    """Cells whose stalk contains ``n``: the active region of ``n`` whenever it transmits."""
    if (n,) not in X:
        raise KeyError(f"unknown vertex {n}")
    return frozenset(closure(X, star(X, [(n,)])).cells)


def active_region(X: SimplicialComplex, s, n: int) -> SimplicialComplex:
    """Subcomplex of cells that global section ``s`` assigns to node ``n``."""
    values = s.as_dict() if isinstance(s, Section) else dict(s)
    if set(values) != set(X.cells) or not is_section(X, values):
        raise NotASectionError("active regions need a global section")
    return SimplicialComplex(c for c, v in values.items() if v == n and v is not BOT)


def roi_cell(X: SimplicialComplex, c: Cell) -> frozenset[Cell]:
    """Star of the closure of any cell ``c``."""
    return star(X, closure(X, [tuple(c)]).cells)


def roi_facet(X: SimplicialComplex, f: Cell) -> frozenset[Cell]:
    """Region of influence of a facet: the star of its closure."""
    f = tuple(f)
    if f not in X or not X.is_facet(f):
        raise NotAFacetError(f"{f} is not a facet")
    return roi_cell(X, f)


def roi_node(X: SimplicialComplex, n: int) -> frozenset[Cell]:
    """Union of the regions of influence of every facet containing node ``n``."""
    if (n,) not in X:
        raise KeyError(f"unknown vertex {n}")
    out: set[Cell] = set()
    for f in facets(X):
        if n in f:
            out |= roi_facet(X, f)
    return frozenset(out)


def save_sections(path: str | Path, sections: Iterable[Section]) -> None:
    data = {"sections": [s.to_json() for s in sections]}
    Path(path).write_text(json.dumps(data, indent=1) + "\n")


def load_sections(path: str | Path) -> list[Section]:
    return [Section.from_json(d) for d in json.loads(Path(path).read_text())["sections"]]
