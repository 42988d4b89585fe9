"""Small named complexes and scenes, plus seeded random generators.

Vertex labels on the named complexes start at 1 so that ``path_complex(6)``
reads v1..v6.
"""

from __future__ import annotations

import math
from itertools import combinations

import numpy as np

from .network import NetworkScene, NodeSpec, RadioModel
from .persistence import JammerSpec
from .simplicial import SimplicialComplex


def path_complex(n: int) -> SimplicialComplex:
    if n == 1:
        return SimplicialComplex.from_cells([(1,)])
    return SimplicialComplex.from_cells([(i, i + 1) for i in range(1, n)])


def ring_complex(n: int) -> SimplicialComplex:
    if n < 3:
        raise ValueError("a ring needs at least 3 vertices")
    return SimplicialComplex.from_cells([(i, i + 1) for i in range(1, n)] + [(1, n)])


def filled_triangle() -> SimplicialComplex:
    return SimplicialComplex.from_cells([(1, 2, 3)])


def triangle_boundary() -> SimplicialComplex:
    return SimplicialComplex.from_cells([(1, 2), (1, 3), (2, 3)])


def hollow_tetrahedron() -> SimplicialComplex:
    return SimplicialComplex.from_cells(combinations(range(1, 5), 3))


def cycle_with_pendant() -> SimplicialComplex:
    """4-cycle v1..v4 with a pendant edge v1-v5."""
    return SimplicialComplex.from_cells([(1, 2), (2, 3), (3, 4), (1, 4), (1, 5)])


def star_tree(leaves: int) -> SimplicialComplex:
    """Center 0 joined to vertices 1..leaves."""
    return SimplicialComplex.from_cells([(0, i) for i in range(1, leaves + 1)])


def spider_tree(legs: int = 3, length: int = 2) -> SimplicialComplex:
    """Center 0 with ``legs`` paths of ``length`` edges each."""
    edges = []
    nxt = 1
    for _ in range(legs):
        prev = 0
        for _ in range(length):
            edges.append((min(prev, nxt), max(prev, nxt)))
            prev, nxt = nxt, nxt + 1
    return SimplicialComplex.from_cells(edges)


def fig1_scene() -> NetworkScene:
    """Three nodes on an equilateral triangle of side 1, coverage radius 0.55."""
    pts = [(0.0, 0.0), (1.0, 0.0), (0.5, math.sqrt(3) / 2)]
    return NetworkScene(tuple(NodeSpec(i + 1, x, y, radius=0.55) for i, (x, y) in enumerate(pts)))


# dumbbell: two unit-square clusters joined by three bridge nodes at unit spacing
DUMBBELL_RADIUS = 1.5
DUMBBELL_BRIDGE_LENGTH = 2.0
DUMBBELL_POSITIONS = [
    (-1.0, 0.0), (-1.0, 1.0), (0.0, 0.0), (0.0, 1.0),   # left cluster, ids 0-3
    (1.0, 0.5), (2.0, 0.5), (3.0, 0.5),                 # bridge, ids 4-6
    (4.0, 0.0), (4.0, 1.0), (5.0, 0.0), (5.0, 1.0),     # right cluster, ids 7-10
]


def dumbbell_scene(max_dim: int = 3) -> NetworkScene:
    """Two 4-node clusters (each a complete link clique) joined by a 3-node bridge."""
    nodes = tuple(NodeSpec(i, x, y, radius=DUMBBELL_RADIUS) for i, (x, y) in enumerate(DUMBBELL_POSITIONS))
    return NetworkScene(nodes, RadioModel(), max_dim)


def bridge_jammer() -> JammerSpec:
    return JammerSpec(2.0, 0.5, "bridge")


def cluster_jammer() -> JammerSpec:
    return JammerSpec(-1.5, 0.5, "cluster-edge")


def random_scene(rng: np.random.Generator, max_nodes: int = 12, side: float = 4.0,
                 alpha: float = 2.0, max_dim: int = 3) -> NetworkScene:
    """Power-form scene with 3..max_nodes nodes uniform in a square.

    Powers are drawn so coverage radii fall in [0.5, 2.0] at threshold 1.
    """
    n = int(rng.integers(3, max_nodes + 1))
    pts = rng.uniform(0.0, side, size=(n, 2))
    radii = rng.uniform(0.5, 2.0, size=n)
    nodes = tuple(
        NodeSpec(i, float(x), float(y), power=float((1 + r) ** alpha))
        for i, ((x, y), r) in enumerate(zip(pts, radii))
    )
    return NetworkScene(nodes, RadioModel(alpha, 1.0), max_dim)


def random_complex(rng: np.random.Generator, max_vertices: int = 12, max_dim: int = 3,
                   max_facets: int | None = None) -> SimplicialComplex:
    """Closure of a few random cells on up to ``max_vertices`` vertices.

    Every vertex appears, so isolated vertices are possible.
    """
    n = int(rng.integers(1, max_vertices + 1))
    max_facets = max_facets or 2 * n
    k = int(rng.integers(0, max_facets + 1))
    cells = [(v,) for v in range(n)]
    for _ in range(k):
        size = int(rng.integers(2, min(max_dim + 1, n) + 1)) if n >= 2 else 1
        cells.append(tuple(sorted(int(v) for v in rng.choice(n, size=size, replace=False))))
    return SimplicialComplex.from_cells(cells)
