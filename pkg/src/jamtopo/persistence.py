"""Zero-dimensional persistence of the surviving network under a growing jammer.

Jamming radius ``R`` silences every node strictly within ``R`` of the jammer
and removes the union of their regions of influence. Survivors shrink as ``R``
grows, so components are tracked from the largest radius down to 0. A class
is born at the largest radius where it exists and dies at the radius where it
merges into an elder class (larger birth radius; ties go to the smaller
representative vertex). Classes still alive at ``R = 0`` are essential.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .network import NetworkScene
from .sheaf import roi_node
from .simplicial import SimplicialComplex, connected_components, remove_open

DIAGRAM_COLUMNS = ["jammer_label", "birth_radius", "death_radius", "age", "essential", "representative_vertex"]


@dataclass(frozen=True)
class JammerSpec:
    x: float
    y: float
    label: str = "jammer"

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError("jammer coordinates must be finite")

    @property
    def position(self) -> tuple[float, float]:
        return (self.x, self.y)

    @classmethod
    def parse(cls, text: str, default_label: str = "jammer") -> "JammerSpec":
        """Parse ``"x,y"`` or ``"x,y,label"``."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) not in (2, 3):
            raise ValueError(f"jammer spec must be x,y[,label], got {text!r}")
        label = parts[2] if len(parts) == 3 and parts[2] else default_label
        return cls(float(parts[0]), float(parts[1]), label)


@dataclass(frozen=True)
class RadiusGrid:
    radii: tuple[float, ...]

    def __post_init__(self):
        r = tuple(float(x) for x in self.radii)
        object.__setattr__(self, "radii", r)
        if not r or r[0] != 0.0:
            raise ValueError("a radius grid starts at 0")
        if any(b <= a for a, b in zip(r, r[1:])):
            raise ValueError("grid radii must be strictly increasing")

    @classmethod
    def uniform(cls, n: int, r_max: float) -> "RadiusGrid":
        """``n`` evenly spaced radii from 0 to ``r_max`` inclusive."""
        if n < 2:
            raise ValueError("a uniform grid needs at least 2 points")
        if not r_max > 0:
            raise ValueError("r_max must be positive")
        return cls(tuple(np.linspace(0.0, r_max, n)))

    @classmethod
    def critical(cls, scene: NetworkScene, jammer: JammerSpec) -> "RadiusGrid":
        """0 plus every distinct node-jammer distance.

        The jammed set is constant on each interval between consecutive
        distances and the right endpoint belongs to it, so this grid gives
        the exact diagram.
        """
        d = sorted({math.dist(n.position, jammer.position) for n in scene.nodes} - {0.0})
        return cls((0.0, *d))

    @property
    def r_max(self) -> float:
        return self.radii[-1]

    def refined(self) -> "RadiusGrid":
        r = self.radii
        mids = [(a + b) / 2 for a, b in zip(r, r[1:])]
        return RadiusGrid(tuple(sorted((*r, *mids))))

    def __len__(self) -> int:
        return len(self.radii)

    def __iter__(self):
        return iter(self.radii)


@dataclass(frozen=True)
class PersistencePair:
    birth_radius: float
    death_radius: float
    representative_vertex: int
    essential: bool = False

    @property
    def age(self) -> float:
        return self.birth_radius - self.death_radius

    def alive_at(self, R: float) -> bool:
        if self.essential and R == 0:
            return True
        return self.death_radius < R <= self.birth_radius


@dataclass(frozen=True)
class PersistenceDiagram:
    pairs: tuple[PersistencePair, ...]
    grid: RadiusGrid
    jammer: JammerSpec | None = None

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    @property
    def essential(self) -> list[PersistencePair]:
        return [p for p in self.pairs if p.essential]

    @property
    def finite(self) -> list[PersistencePair]:
        return [p for p in self.pairs if not p.essential]

    def alive_count(self, R: float) -> int:
        return sum(p.alive_at(R) for p in self.pairs)

    def max_age(self) -> float:
        return max((p.age for p in self.finite), default=0.0)


@dataclass(frozen=True)
class SweepStep:
    radius: float
    jammed: frozenset[int]
    survivor: SimplicialComplex
    components: tuple[tuple[int, ...], ...]


def jammed_nodes(scene: NetworkScene, jammer: JammerSpec, R: float) -> frozenset[int]:
    """Nodes strictly closer than ``R`` to the jammer."""
    if R < 0:
        raise ValueError("jamming radius must be non-negative")
    return frozenset(n.id for n in scene.nodes if math.dist(n.position, jammer.position) < R)


def surviving_complex(X: SimplicialComplex, jammed: Iterable[int]) -> SimplicialComplex:
    """``X`` minus the regions of influence of the jammed nodes."""
    removed: set = set()
    for n in jammed:
        removed |= roi_node(X, n)
    return remove_open(X, removed)


def sweep(X: SimplicialComplex, scene: NetworkScene, jammer: JammerSpec, grid: RadiusGrid) -> list[SweepStep]:
    steps = []
    for R in grid:
        jam = jammed_nodes(scene, jammer, R)
        Y = surviving_complex(X, jam)
        steps.append(SweepStep(R, jam, Y, tuple(connected_components(Y))))
    return steps


def _check_monotone(steps: Sequence[SweepStep]) -> None:
    if not steps:
        raise ValueError("empty sweep")
    radii = [s.radius for s in steps]
    if radii[0] != 0.0 or any(b <= a for a, b in zip(radii, radii[1:])):
        raise ValueError("sweep radii must start at 0 and strictly increase")
    for a, b in zip(steps, steps[1:]):
        if not b.survivor.cells <= a.survivor.cells:
            raise ValueError(f"survivor at R={b.radius} is not contained in survivor at R={a.radius}")


def persistent_h0(steps: Sequence[SweepStep], jammer: JammerSpec | None = None) -> PersistenceDiagram:
    """Persistence diagram of surviving components across a monotone sweep."""
    _check_monotone(steps)
    pairs: list[PersistencePair] = []
    # alive classes: (birth, representative, vertex set of current component)
    alive: list[tuple[float, int, frozenset[int]]] = []
    for step in reversed(steps):
        R = step.radius
        nxt = []
        for comp in step.components:
            vs = frozenset(comp)
            inside = [a for a in alive if a[2] <= vs]
            if not inside:
                nxt.append((R, min(comp), vs))
                continue
            inside.sort(key=lambda a: (-a[0], a[1]))
            elder = inside[0]
            for birth, rep, _ in inside[1:]:
                pairs.append(PersistencePair(birth, R, rep))
            nxt.append((elder[0], elder[1], vs))
        alive = nxt
    for birth, rep, _ in alive:
        pairs.append(PersistencePair(birth, 0.0, rep, essential=True))
    pairs.sort(key=lambda p: (-p.age, p.representative_vertex))
    return PersistenceDiagram(tuple(pairs), RadiusGrid(tuple(s.radius for s in steps)), jammer)


def jammer_diagram(X: SimplicialComplex, scene: NetworkScene, jammer: JammerSpec, grid: RadiusGrid | None = None) -> PersistenceDiagram:
    """Sweep and diagram in one call; ``grid`` defaults to the exact critical grid."""
    grid = grid or RadiusGrid.critical(scene, jammer)
    return persistent_h0(sweep(X, scene, jammer, grid), jammer)


def significant_generators(diagram: PersistenceDiagram, min_age: float) -> list[PersistencePair]:
    """Non-essential pairs with age at least ``min_age``, oldest first."""
    if min_age < 0:
        raise ValueError("min_age must be non-negative")
    return sorted(
        (p for p in diagram.finite if p.age >= min_age),
        key=lambda p: (-p.age, p.representative_vertex),
    )


def diagram_rows(diagram: PersistenceDiagram) -> list[list]:
    label = diagram.jammer.label if diagram.jammer else ""
    return [
        [label, repr(p.birth_radius), repr(p.death_radius), repr(p.age), int(p.essential), p.representative_vertex]
        for p in diagram.pairs
    ]


def write_diagram_csv(path: str | Path, diagrams: Iterable[PersistenceDiagram]) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(DIAGRAM_COLUMNS)
        for d in diagrams:
            w.writerows(diagram_rows(d))


def read_diagram_csv(path: str | Path) -> dict[str, list[PersistencePair]]:
    out: dict[str, list[PersistencePair]] = {}
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != DIAGRAM_COLUMNS:
            raise ValueError(f"unexpected diagram columns {reader.fieldnames}")
        for row in reader:
            out.setdefault(row["jammer_label"], []).append(
                PersistencePair(
                    float(row["birth_radius"]),
                    float(row["death_radius"]),
                    int(row["representative_vertex"]),
                    row["essential"] == "1",
                )
            )
    return out


def plot_diagram_svg(path: str | Path, diagrams: Sequence[PersistenceDiagram]) -> None:
    """Scatter of (birth, death) per jammer with the diagonal drawn; saved as SVG."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(4.5, 4.5))
    top = max([d.grid.r_max for d in diagrams] + [1e-12])
    ax.plot([0, top], [0, top], color="0.5", lw=1)
    markers = "os^Dv<>p"
    for k, d in enumerate(diagrams):
        fin = d.finite
        ess = d.essential
        lbl = d.jammer.label if d.jammer else f"jammer {k}"
        ax.scatter([p.birth_radius for p in fin], [p.death_radius for p in fin],
                   marker=markers[k % len(markers)], label=lbl)
        if ess:
            ax.scatter([p.birth_radius for p in ess], [p.death_radius for p in ess],
                       marker=markers[k % len(markers)], facecolors="none", edgecolors="k")
    ax.set_xlabel("birth radius")
    ax.set_ylabel("death radius")
    ax.set_xlim(0, top * 1.05)
    ax.set_ylim(-0.02 * top, top * 1.05)
    ax.legend(loc="upper left", fontsize="small")
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)
