"""Local (per facet / per node) and global (per jammer) vulnerability assessments.

Locally, attacking a facet removes its region of influence; the number of
pieces left is bounded by ``rank H1(X, X - roi) + 1``, with equality when the
ambient complex has no first homology. Globally, each jammer gets a
persistence diagram and is ranked by the age of its oldest finite class.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .homology import betti, relative_betti
from .network import NetworkScene
from .persistence import (
    JammerSpec,
    PersistenceDiagram,
    RadiusGrid,
    jammer_diagram,
    significant_generators,
)
from .sheaf import NotAFacetError, roi_cell, roi_facet, roi_node
from .simplicial import Cell, SimplicialComplex, cell_key, connected_components, facets, remove_open

LOCAL_COLUMNS = ["facet", "dim", "roi_size", "components", "bound", "attained",
                 "h1_ambient_rank", "torsion", "caveat"]
GLOBAL_COLUMNS = ["jammer", "max_age", "significant_count", "diagram_path"]

CAVEAT_ROI_COVERS = "roi covers the whole complex"
CAVEAT_DISCONNECTED = "complex is disconnected"


class DisconnectedComplexError(ValueError):
    pass


@dataclass(frozen=True)
class FacetAssessment:
    """Outcome of attacking one facet (or one node, for :func:`assess_node`)."""

    cell: Cell
    roi_size: int
    components: int
    bound: int
    h1_ambient_rank: int
    torsion: tuple[int, ...] = ()
    ambient_torsion: tuple[int, ...] = ()
    caveat: str = ""

    @property
    def dim(self) -> int:
        return len(self.cell) - 1

    @property
    def attained(self) -> bool:
        return self.components == self.bound

    @property
    def h1_trivial_ambient(self) -> bool:
        return self.h1_ambient_rank == 0 and not self.ambient_torsion

    @property
    def torsion_flag(self) -> bool:
        return bool(self.torsion or self.ambient_torsion)

    @property
    def hypotheses_met(self) -> bool:
        return not self.caveat

    def row(self) -> list:
        return [
            cell_key(self.cell), self.dim, self.roi_size, self.components, self.bound,
            int(self.attained), self.h1_ambient_rank,
            ";".join(map(str, self.torsion)), self.caveat,
        ]


def _assess(X: SimplicialComplex, cell: Cell, roi: frozenset[Cell], h1=None) -> FacetAssessment:
    Y = remove_open(X, roi)
    rel = relative_betti(X, Y, 1)
    if h1 is None:
        h1 = betti(X, 1)
    caveats = []
    if len(connected_components(X)) != 1:
        caveats.append(CAVEAT_DISCONNECTED)
    if len(Y) == 0:
        caveats.append(CAVEAT_ROI_COVERS)
    return FacetAssessment(
        cell=cell,
        roi_size=len(roi),
        components=len(connected_components(Y)),
        bound=rel.rank + 1,
        h1_ambient_rank=h1.rank,
        torsion=rel.torsion,
        ambient_torsion=h1.torsion,
        caveat="; ".join(caveats),
    )


def assess_facet(X: SimplicialComplex, L: Cell, *, _h1=None) -> FacetAssessment:
    """Component count after attacking facet ``L`` against its homological bound.

    Hypothesis failures (disconnected ``X``, or the region of influence being
    all of ``X``) are reported through ``caveat`` rather than raised.
    """
    L = tuple(L)
    if L not in X or not X.is_facet(L):
        raise NotAFacetError(f"{L} is not a facet")
    return _assess(X, L, roi_facet(X, L), _h1)


def assess_cell(X: SimplicialComplex, c: Cell) -> FacetAssessment:
    """Attack on an arbitrary cell, removing the star of its closure."""
    c = tuple(c)
    if c not in X:
        raise KeyError(f"cell {c} is not in the complex")
    return _assess(X, c, roi_cell(X, c))


def assess_node(X: SimplicialComplex, n: int) -> FacetAssessment:
    """Like :func:`assess_facet`, removing the region of influence of node ``n``."""
    return _assess(X, (n,), roi_node(X, n))


def _rank_key(a: FacetAssessment):
    return (-a.components, -a.bound, a.cell)


def assess_all_facets(X: SimplicialComplex) -> list[FacetAssessment]:
    """Every facet's assessment, most damaging first.

    Facets whose region of influence is everything are kept, flagged by
    ``caveat``.

    Raises:
        DisconnectedComplexError: if ``X`` is not connected.
    """
    if len(connected_components(X)) != 1:
        raise DisconnectedComplexError("local assessment needs a connected complex")
    h1 = betti(X, 1)
    return sorted((assess_facet(X, f, _h1=h1) for f in facets(X)), key=_rank_key)


def _write_rows(path_or_file, header: list[str], rows: Iterable[list]) -> None:
    if hasattr(path_or_file, "write"):
        w = csv.writer(path_or_file)
        w.writerow(header)
        w.writerows(rows)
        return
    with open(path_or_file, "w", newline="") as fh:
        _write_rows(fh, header, rows)


def write_local_csv(path_or_file, rows: Iterable[FacetAssessment]) -> None:
    _write_rows(path_or_file, LOCAL_COLUMNS, (a.row() for a in rows))


def read_local_csv(path: str | Path) -> list[dict]:
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != LOCAL_COLUMNS:
            raise ValueError(f"unexpected local report columns {reader.fieldnames}")
        return list(reader)


@dataclass(frozen=True)
class GlobalAssessment:
    label: str
    diagram: PersistenceDiagram
    max_age: float
    significant_count: int

    def row(self, diagram_path: str = "") -> list:
        return [self.label, repr(self.max_age), self.significant_count, diagram_path]


def assess_jammers(
    scene: NetworkScene,
    X: SimplicialComplex,
    jammers: Sequence[JammerSpec],
    grid: RadiusGrid | None = None,
    tau: float | None = None,
) -> list[GlobalAssessment]:
    """One assessment per jammer, ranked by oldest finite class.

    ``grid=None`` uses each jammer's critical grid; ``tau=None`` means
    ``0.1 * R_max`` of the grid in use.
    """
    out = []
    for j in jammers:
        d = jammer_diagram(X, scene, j, grid)
        t = 0.1 * d.grid.r_max if tau is None else tau
        out.append(GlobalAssessment(j.label, d, d.max_age(), len(significant_generators(d, t))))
    # stable sort keeps input order on ties
    return sorted(out, key=lambda a: (-a.max_age, -a.significant_count))


def write_global_csv(path_or_file, rows: Iterable[GlobalAssessment], diagram_path: str = "") -> None:
    _write_rows(path_or_file, GLOBAL_COLUMNS, (a.row(diagram_path) for a in rows))
