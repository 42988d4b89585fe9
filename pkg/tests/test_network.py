import math
from itertools import combinations

import numpy as np
import pytest

from jamtopo import scenarios
from jamtopo.network import (
    DegenerateSceneError,
    NetworkScene,
    NodeSpec,
    RadioModel,
    SceneError,
    build_interference_complex,
    build_link_complex,
    build_link_graph,
    coverage_radius,
    disks_common_point,
    signal_level,
    validate_scene,
)
from jamtopo.simplicial import facets


def grid_verdict(disks, pitch):
    """Sample max_x min_k (r_k - |x - c_k|) on a grid over the smallest disk.

    The margin function is 1-Lipschitz, so a positive sample proves a
    common point and a sample max below -pitch/sqrt(2) proves there is none.
    Returns True, False, or None when the grid cannot decide.
    """
    c = np.array([d[0] for d in disks], float)
    r = np.array([d[1] for d in disks], float)
    k = int(np.argmin(r))
    xs = np.arange(c[k, 0] - r[k], c[k, 0] + r[k] + pitch, pitch)
    ys = np.arange(c[k, 1] - r[k], c[k, 1] + r[k] + pitch, pitch)
    X, Y = np.meshgrid(xs, ys)
    pts = np.stack([X.ravel(), Y.ravel()], axis=1)
    margin = np.min(r[None, :] - np.linalg.norm(pts[:, None, :] - c[None, :, :], axis=-1), axis=1)
    best = margin.max()
    if best > 0:
        return True
    if best < -pitch / math.sqrt(2):
        return False
    return None


FIG1_DISKS = [((0.0, 0.0), 0.55), ((1.0, 0.0), 0.55), ((0.5, math.sqrt(3) / 2), 0.55)]


class TestSignal:
    def scene(self):
        return NetworkScene(
            (NodeSpec(0, 0.0, 0.0, power=8.0), NodeSpec(1, 3.0, 0.0, radius=1.0), NodeSpec(2, 9.0, 0.0, power=1.0)),
            RadioModel(alpha=3.0, threshold=1.0),
        )

    def test_power_form(self):
        assert signal_level(self.scene(), 0, (1.0, 0.0)) == pytest.approx(1.0)
        assert signal_level(self.scene(), 0, (0.0, 0.0)) == 8.0

    def test_radius_form_calibration(self):
        assert signal_level(self.scene(), 1, (4.0, 0.0)) == pytest.approx(1.0)

    def test_decreasing(self):
        s = self.scene()
        levels = [signal_level(s, 0, (d, 0.0)) for d in np.linspace(0, 5, 20)]
        assert all(a > b for a, b in zip(levels, levels[1:]))

    def test_coverage_radius(self):
        s = self.scene()
        assert coverage_radius(s, 0) == pytest.approx(1.0)
        assert coverage_radius(s, 2) is None
        assert coverage_radius(s, 1) == 1.0
        s2 = NetworkScene((NodeSpec(0, 0, 0, radius=0.55),))
        assert coverage_radius(s2, 0) == 0.55

    def test_unknown_node(self):
        with pytest.raises(KeyError):
            signal_level(self.scene(), 7, (0, 0))


class TestDisks:
    def test_fig1_pairs_and_triple(self):
        for pair in combinations(FIG1_DISKS, 2):
            assert disks_common_point(pair)
            assert grid_verdict(pair, 1e-3) is True
        assert not disks_common_point(FIG1_DISKS)
        assert grid_verdict(FIG1_DISKS, 1e-3) is False

    def test_single(self):
        assert disks_common_point([((3.0, 4.0), 0.1)])

    def test_concentric(self):
        assert disks_common_point([((1.0, 1.0), r) for r in (0.1, 0.5, 2.0)])

    def test_empty_input(self):
        with pytest.raises(ValueError):
            disks_common_point([])

    def test_against_grid_oracle(self, rng):
        decided = 0
        for _ in range(400):
            k = int(rng.integers(2, 5))
            disks = [(tuple(rng.uniform(0, 3, 2)), float(rng.uniform(0.4, 1.6))) for _ in range(k)]
            v = grid_verdict(disks, 0.01)
            if v is None:
                continue
            decided += 1
            assert disks_common_point(disks) == v, disks
        assert decided > 350


class TestFigureOne:
    def test_interference(self):
        X = build_interference_complex(scenarios.fig1_scene())
        assert X.f_vector() == (3, 3)
        assert facets(X) == [(1, 2), (1, 3), (2, 3)]

    def test_link(self):
        s = scenarios.fig1_scene()
        assert build_link_graph(s) == []
        assert build_link_complex(s).f_vector() == (3,)


def test_single_node():
    s = NetworkScene((NodeSpec(4, 0.0, 0.0, power=5.0),))
    assert build_interference_complex(s).cells == {(4,)}


def test_coincident_nodes_fill_triangle():
    s = NetworkScene(tuple(NodeSpec(i, 1.0, 1.0, radius=0.3) for i in range(3)))
    assert (0, 1, 2) in build_interference_complex(s)
    assert (0, 1, 2) in build_link_complex(s)


def test_collinear_link_graph():
    s = NetworkScene(tuple(NodeSpec(i + 1, float(i), 0.0, radius=1.2) for i in range(3)))
    assert build_link_graph(s) == [(1, 2), (2, 3)]
    assert build_link_complex(s).f_vector() == (3, 2)


def test_mute_nodes_stay_as_vertices():
    s = NetworkScene((NodeSpec(0, 0, 0, power=0.5), NodeSpec(1, 0.1, 0, power=9.0)))
    assert build_interference_complex(s).cells == {(0,), (1,)}
    assert build_link_complex(s).cells == {(0,), (1,)}


def test_max_dim_caps_cells():
    s = NetworkScene(tuple(NodeSpec(i, 0.01 * i, 0.0, radius=1.0) for i in range(6)), max_dim=2)
    for X in (build_link_complex(s), build_interference_complex(s)):
        assert X.dimension == 2
        assert X.f_vector() == (6, 15, 20)


def test_interference_is_nerve(rng):
    """Every candidate cell of random scenes agrees with the grid oracle where it decides."""
    decided = undecided = 0
    for _ in range(15):
        s = scenarios.random_scene(rng, max_nodes=8)
        X = build_interference_complex(s)
        disks = {n.id: (n.position, coverage_radius(s, n.id)) for n in s.nodes}
        covered = [i for i in s.ids if disks[i][1] is not None]
        for k in range(2, s.max_dim + 2):
            for cand in combinations(covered, k):
                v = grid_verdict([disks[i] for i in cand], 0.01)
                if v is None:
                    undecided += 1
                    continue
                decided += 1
                assert (cand in X) == v
    assert decided > 20 * max(undecided, 1)


def test_threshold_monotonicity(rng):
    for _ in range(20):
        s = scenarios.random_scene(rng, max_nodes=8)
        lo, hi = sorted(rng.uniform(0.5, 2.0, 2))
        I_lo = build_interference_complex(s.with_threshold(lo))
        I_hi = build_interference_complex(s.with_threshold(hi))
        assert I_hi.cells <= I_lo.cells


def test_link_complex_is_flag(rng):
    for _ in range(20):
        s = scenarios.random_scene(rng)
        X = build_link_complex(s)
        edges = set(build_link_graph(s))
        for k in range(3, s.max_dim + 2):
            for cand in combinations(s.ids, k):
                clique = all(p in edges for p in combinations(cand, 2))
                assert (cand in X) == clique


def test_facets_are_maximal_sets(rng):
    for _ in range(20):
        s = scenarios.random_scene(rng, max_nodes=8)
        pos = {n.id: n.position for n in s.nodes}
        r = {n.id: coverage_radius(s, n.id) for n in s.nodes}
        I, L = build_interference_complex(s), build_link_complex(s)
        for f in facets(I):
            if len(f) > s.max_dim or any(r[i] is None for i in f):
                continue
            for extra in s.ids:
                if extra in f or r[extra] is None:
                    continue
                assert not disks_common_point([(pos[i], r[i]) for i in (*f, extra)])
        for f in facets(L):
            if len(f) > s.max_dim:
                continue
            for extra in s.ids:
                if extra in f:
                    continue
                linked = all(
                    r[a] is not None and r[b] is not None and math.dist(pos[a], pos[b]) < min(r[a], r[b])
                    for a in f for b in [extra]
                )
                assert not linked


class TestValidation:
    def test_tangent_link_is_degenerate(self):
        s = NetworkScene((NodeSpec(0, 0.0, 0.0, radius=1.0), NodeSpec(1, 1.0, 0.0, radius=1.0)))
        with pytest.raises(DegenerateSceneError):
            validate_scene(s)

    def test_generic_scene_passes(self):
        validate_scene(scenarios.fig1_scene())
        validate_scene(scenarios.dumbbell_scene())

    @pytest.mark.parametrize(
        "data",
        [
            {"nodes": []},
            {"nodes": [{"id": 0, "x": 0, "y": 0}]},
            {"nodes": [{"id": 0, "x": 0, "y": 0, "power": 2, "radius": 1}]},
            {"nodes": [{"id": 0, "x": 0, "y": 0, "radius": -1}]},
            {"nodes": [{"id": 0, "x": 0, "y": 0, "radius": 1}, {"id": 0, "x": 1, "y": 0, "radius": 1}]},
            {"model": {"alpha": 0.5}, "nodes": [{"id": 0, "x": 0, "y": 0, "radius": 1}]},
            {"nodes": [{"id": "a", "x": 0, "y": 0, "radius": 1}]},
        ],
    )
    def test_malformed(self, data):
        with pytest.raises(SceneError):
            NetworkScene.from_json(data)

    def test_json_roundtrip(self, tmp_path):
        s = scenarios.dumbbell_scene()
        p = tmp_path / "s.json"
        s.save(p)
        assert NetworkScene.load(p) == s
