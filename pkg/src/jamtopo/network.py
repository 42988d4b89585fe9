"""Physical network scenes and the interference / link complexes built from them.

Signal model: node ``i`` at distance ``d`` has level ``P_i / (1 + d)**alpha``
(power form), or ``T * ((1 + r_i) / (1 + d))**alpha`` when a coverage radius
``r_i`` is given directly. Either way the super-threshold region of a node is
an open disk, so the interference complex is the nerve of those disks.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path

import networkx as nx
import numpy as np

from .simplicial import Cell, SimplicialComplex

EPS_GEO = 1e-9


class SceneError(ValueError):
    """Malformed scene description."""


class DegenerateSceneError(SceneError):
    """A complex would change under a perturbation of relative size ``EPS_GEO``."""


@dataclass(frozen=True)
class NodeSpec:
    id: int
    x: float
    y: float
    power: float | None = None
    radius: float | None = None

    def __post_init__(self):
        if isinstance(self.id, bool) or not isinstance(self.id, int) or self.id < 0:
            raise SceneError(f"node id must be a non-negative integer, got {self.id!r}")
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise SceneError(f"node {self.id}: non-finite position")
        if (self.power is None) == (self.radius is None):
            raise SceneError(f"node {self.id}: give exactly one of power or radius")
        if self.power is not None and not self.power > 0:
            raise SceneError(f"node {self.id}: power must be positive")
        if self.radius is not None and not self.radius > 0:
            raise SceneError(f"node {self.id}: radius must be positive")

    @property
    def position(self) -> tuple[float, float]:
        return (self.x, self.y)


@dataclass(frozen=True)
class RadioModel:
    alpha: float = 2.0
    threshold: float = 1.0

    def __post_init__(self):
        if not self.alpha >= 1:
            raise SceneError("path-loss exponent must be >= 1")
        if not self.threshold > 0:
            raise SceneError("threshold must be positive")


@dataclass(frozen=True)
class NetworkScene:
    nodes: tuple[NodeSpec, ...]
    model: RadioModel = field(default_factory=RadioModel)
    max_dim: int = 3

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        if not self.nodes:
            raise SceneError("a scene needs at least one node")
        ids = [n.id for n in self.nodes]
        if len(set(ids)) != len(ids):
            raise SceneError("node ids must be unique")
        if isinstance(self.max_dim, bool) or not isinstance(self.max_dim, int) or self.max_dim < 1:
            raise SceneError("max_dim must be a positive integer")

    def node(self, i: int) -> NodeSpec:
        for n in self.nodes:
            if n.id == i:
                return n
        raise KeyError(f"unknown node id {i}")

    @property
    def ids(self) -> list[int]:
        return sorted(n.id for n in self.nodes)

    def diameter(self) -> float:
        pts = np.array([n.position for n in self.nodes], dtype=float)
        if len(pts) < 2:
            return 0.0
        return float(np.max(np.linalg.norm(pts[:, None, :] - pts[None, :, :], axis=-1)))

    def with_threshold(self, threshold: float) -> "NetworkScene":
        return NetworkScene(self.nodes, RadioModel(self.model.alpha, threshold), self.max_dim)

    # JSON scene format
    def to_json(self) -> dict:
        nodes = []
        for n in self.nodes:
            d = {"id": n.id, "x": n.x, "y": n.y}
            if n.power is not None:
                d["power"] = n.power
            else:
                d["radius"] = n.radius
            nodes.append(d)
        return {
            "model": {"alpha": self.model.alpha, "threshold": self.model.threshold},
            "max_dim": self.max_dim,
            "nodes": nodes,
        }

    @classmethod
    def from_json(cls, data: dict) -> "NetworkScene":
        try:
            model = data.get("model", {})
            nodes = [
                NodeSpec(
                    id=d["id"],
                    x=float(d["x"]),
                    y=float(d["y"]),
                    power=None if d.get("power") is None else float(d["power"]),
                    radius=None if d.get("radius") is None else float(d["radius"]),
                )
                for d in data["nodes"]
            ]
            return cls(
                tuple(nodes),
                RadioModel(float(model.get("alpha", 2.0)), float(model.get("threshold", 1.0))),
                data.get("max_dim", 3),
            )
        except SceneError:
            raise
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise SceneError(f"malformed scene: {exc!r}") from exc

    def save(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_json(), indent=1) + "\n")

    @classmethod
    def load(cls, path: str | Path) -> "NetworkScene":
        try:
            data = json.loads(Path(path).read_text())
        except json.JSONDecodeError as exc:
            raise SceneError(f"scene is not valid JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise SceneError("scene JSON must be an object")
        return cls.from_json(data)


def signal_level(scene: NetworkScene, i: int, point) -> float:
    """Signal strength of node ``i`` at ``point``."""
    n = scene.node(i)
    d = math.dist(n.position, point)
    alpha = scene.model.alpha
    if n.power is not None:
        return n.power / (1 + d) ** alpha
    return scene.model.threshold * ((1 + n.radius) / (1 + d)) ** alpha


def coverage_radius(scene: NetworkScene, i: int) -> float | None:
    """Radius of the open disk where node ``i`` exceeds the threshold, or None if empty."""
    n = scene.node(i)
    if n.radius is not None:
        return n.radius
    T = scene.model.threshold
    if n.power <= T:
        return None
    return (n.power / T) ** (1 / scene.model.alpha) - 1


def _circle_intersections(c1, r1, c2, r2) -> list[np.ndarray]:
    """Crossing points of two circles; empty unless they cross transversally."""
    d = math.dist(c1, c2)
    if not (abs(r1 - r2) < d < r1 + r2):
        return []
    a = (d * d + r1 * r1 - r2 * r2) / (2 * d)
    h = math.sqrt(max(r1 * r1 - a * a, 0.0))
    c1, c2 = np.asarray(c1, float), np.asarray(c2, float)
    u = (c2 - c1) / d
    mid = c1 + a * u
    perp = np.array([-u[1], u[0]])
    return [mid + h * perp, mid - h * perp]


def disks_common_point(disks) -> bool:
    """True iff the open disks ``[((x, y), r), ...]`` have a common point.

    Either some center lies strictly inside every disk, or the intersection
    region has a corner where two boundary circles cross strictly inside all
    the other disks.
    """
    disks = [(np.asarray(c, dtype=float), float(r)) for c, r in disks]
    if not disks:
        raise ValueError("need at least one disk")
    if any(not r > 0 for _, r in disks):
        raise ValueError("disk radii must be positive")
    if len(disks) == 1:
        return True
    centers = np.array([c for c, _ in disks])
    radii = np.array([r for _, r in disks])

    def inside(p, skip=()):
        dist = np.linalg.norm(centers - p, axis=1)
        ok = dist < radii
        for k in skip:
            ok[k] = True
        return bool(ok.all())

    if any(inside(c) for c in centers):
        return True
    for i, j in combinations(range(len(disks)), 2):
        for p in _circle_intersections(centers[i], radii[i], centers[j], radii[j]):
            if inside(p, skip=(i, j)):
                return True
    return False


def _radii(scene: NetworkScene, delta: float = 0.0) -> dict[int, float | None]:
    out = {}
    for n in scene.nodes:
        r = coverage_radius(scene, n.id)
        if r is not None:
            r += delta
            if r <= 0:
                r = None
        out[n.id] = r
    return out


def _interference(scene: NetworkScene, radii: dict[int, float | None]) -> SimplicialComplex:
    pos = {n.id: n.position for n in scene.nodes}
    cells: set[Cell] = {(i,) for i in scene.ids}
    layer = [(i,) for i in scene.ids if radii[i] is not None]
    for _ in range(scene.max_dim):
        nxt = []
        for c in layer:
            for v in scene.ids:
                if v <= c[-1] or radii[v] is None:
                    continue
                cand = c + (v,)
                # every codimension-1 face must already be present
                if any(cand[:k] + cand[k + 1:] not in cells for k in range(len(cand) - 1)):
                    continue
                if disks_common_point([(pos[u], radii[u]) for u in cand]):
                    cells.add(cand)
                    nxt.append(cand)
        layer = nxt
    return SimplicialComplex(cells)


def _link_edges(scene: NetworkScene, radii: dict[int, float | None]) -> list[tuple[int, int]]:
    pos = {n.id: n.position for n in scene.nodes}
    edges = []
    for i, j in combinations(scene.ids, 2):
        ri, rj = radii[i], radii[j]
        if ri is None or rj is None:
            continue
        d = math.dist(pos[i], pos[j])
        if d < ri and d < rj:
            edges.append((i, j))
    return edges


def _clique_complex(vertices, edges, max_dim: int) -> SimplicialComplex:
    G = nx.Graph()
    G.add_nodes_from(vertices)
    G.add_edges_from(edges)
    top: list[Cell] = []
    for clique in nx.find_cliques(G):
        clique = tuple(sorted(clique))
        if len(clique) <= max_dim + 1:
            top.append(clique)
        else:
            top.extend(combinations(clique, max_dim + 1))
    return SimplicialComplex.from_cells(top)


def build_interference_complex(scene: NetworkScene) -> SimplicialComplex:
    """Node sets whose super-threshold disks share a point (at most ``max_dim + 1`` nodes)."""
    return _interference(scene, _radii(scene))


def build_link_graph(scene: NetworkScene) -> list[tuple[int, int]]:
    """Pairs of nodes that each hear the other above threshold."""
    return _link_edges(scene, _radii(scene))


def build_link_complex(scene: NetworkScene) -> SimplicialComplex:
    """Clique complex of the link graph, truncated at ``max_dim``."""
    return _clique_complex(scene.ids, build_link_graph(scene), scene.max_dim)


def build_complex(scene: NetworkScene, kind: str) -> SimplicialComplex:
    if kind == "link":
        return build_link_complex(scene)
    if kind == "interference":
        return build_interference_complex(scene)
    raise ValueError(f"unknown complex kind {kind!r} (expected 'link' or 'interference')")


def geometric_tolerance(scene: NetworkScene) -> float:
    radii = [r for r in _radii(scene).values() if r is not None]
    scale = max([scene.diameter(), *radii])
    return EPS_GEO * (scale if scale > 0 else 1.0)


def validate_scene(scene: NetworkScene) -> None:
    """Reject scenes whose complexes flip when every coverage radius moves by the tolerance.

    Raises:
        DegenerateSceneError: naming the first unstable cell.
    """
    eps = geometric_tolerance(scene)
    lo, hi = _radii(scene, -eps), _radii(scene, eps)
    for name, build in (
        ("link", lambda r: _clique_complex(scene.ids, _link_edges(scene, r), scene.max_dim)),
        ("interference", lambda r: _interference(scene, r)),
    ):
        small, large = build(lo), build(hi)
        if small != large:
            cell = min(large.cells - small.cells, key=lambda c: (len(c), c))
            raise DegenerateSceneError(
                f"{name} complex is unstable at cell {list(cell)} within tolerance {eps:.3g}"
            )
