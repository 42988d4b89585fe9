import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from jamtopo import scenarios
from jamtopo.homology import (
    betti,
    boundary_matrix,
    elementary_divisors,
    homology_summary,
    relative_betti,
    smith_normal_form,
)
from jamtopo.sheaf import roi_cell, roi_facet
from jamtopo.simplicial import SimplicialComplex, connected_components, euler_characteristic, remove_open
from oracles import oracle_components, oracle_relative_betti


def sympy_divisors(M):
    M = np.asarray(M)
    if M.size == 0:
        return []
    D = sympy_snf(sympy.Matrix(M.tolist()), domain=sympy.ZZ)
    return sorted((abs(int(D[i, i])) for i in range(min(D.shape)) if D[i, i] != 0))


class TestBoundary:
    def test_edge_orientation(self):
        X = SimplicialComplex.from_cells([(1, 2)])
        assert boundary_matrix(X, 1).tolist() == [[-1], [1]]

    def test_boundary_squared_zero(self):
        X = scenarios.filled_triangle()
        assert not np.any(boundary_matrix(X, 1) @ boundary_matrix(X, 2))

    def test_path_rank(self, path6):
        d1 = boundary_matrix(path6, 1)
        assert d1.shape == (6, 5)
        assert np.linalg.matrix_rank(d1) == 5

    def test_zero_map_in_degree_zero(self, path6):
        assert boundary_matrix(path6, 0).shape == (0, 6)

    def test_out_of_range(self, path6):
        with pytest.raises(ValueError):
            boundary_matrix(path6, 2)


class TestSmithNormalForm:
    def test_identity(self):
        r = smith_normal_form(np.eye(3, dtype=int))
        assert r.diagonal == [1, 1, 1] and r.rank == 3

    def test_hand_example(self):
        r = smith_normal_form([[2, 4], [4, 8]])
        assert r.D.tolist() == [[2, 0], [0, 0]]
        assert r.rank == 1

    def test_zero(self):
        assert smith_normal_form(np.zeros((3, 2), dtype=int)).rank == 0

    def test_empty(self):
        r = smith_normal_form(np.zeros((0, 4), dtype=int))
        assert r.rank == 0 and r.V.shape == (4, 4)

    def test_torsion_example(self):
        # Z^2 / <(2, 0), (0, 3)> has Smith form diag(1, 6)
        assert smith_normal_form([[2, 0], [0, 3]]).diagonal == [1, 6]

    @settings(max_examples=80, deadline=None)
    @given(
        st.integers(1, 7).flatmap(
            lambda m: st.integers(1, 7).flatmap(
                lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=m, max_size=m)
            )
        )
    )
    def test_matches_sympy(self, rows):
        M = np.array(rows, dtype=np.int64)
        r = smith_normal_form(M)
        assert np.array_equal(r.U.dot(M.astype(object)).dot(r.V), r.D)
        assert abs(sympy.Matrix(r.U.tolist()).det()) == 1
        assert abs(sympy.Matrix(r.V.tolist()).det()) == 1
        nz = [d for d in r.diagonal if d]
        assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
        assert sorted(nz) == sympy_divisors(M)
        assert elementary_divisors(M) == nz

    def test_deterministic(self, rng):
        M = rng.integers(-5, 6, size=(6, 7))
        a, b = smith_normal_form(M), smith_normal_form(M)
        assert np.array_equal(a.U, b.U) and np.array_equal(a.V, b.V)


class TestBetti:
    def test_sphere(self, tetra):
        assert homology_summary(tetra).betti == (1, 0, 1)

    def test_ring(self, ring6):
        assert homology_summary(ring6).betti == (1, 1)

    def test_path(self, path6):
        assert homology_summary(path6).betti == (1, 0)

    def test_projective_plane_torsion(self):
        # minimal 6-vertex triangulation of RP^2
        faces = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6), (2, 3, 5),
                 (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6)]
        X = SimplicialComplex.from_cells([tuple(sorted(f)) for f in faces])
        assert betti(X, 1).rank == 0 and betti(X, 1).torsion == (2,)
        assert betti(X, 2).rank == 0

    def test_random_against_oracles(self, rng):
        for _ in range(60):
            X = scenarios.random_complex(rng)
            h = homology_summary(X)
            assert h.betti[0] == oracle_components(X.cells)
            assert h.euler_characteristic() == euler_characteristic(X)
            for k in range(X.dimension + 1):
                assert h.betti[k] == oracle_relative_betti(X.cells, (), k)


class TestRelative:
    def test_path_edge(self, path6):
        Y = remove_open(path6, roi_facet(path6, (3, 4)))
        assert relative_betti(path6, Y, 1).rank == 1

    def test_tetra_edge(self, tetra):
        Y = remove_open(tetra, roi_cell(tetra, (1, 2)))
        assert relative_betti(tetra, Y, 1).rank == 0

    def test_quotient_by_everything(self, tetra):
        for k in range(3):
            assert relative_betti(tetra, tetra, k).rank == 0

    def test_rejects_non_subcomplex(self, path6):
        with pytest.raises(ValueError):
            relative_betti(path6, [(1, 2)], 1)
        with pytest.raises(ValueError):
            relative_betti(path6, [(7,)], 0)

    def test_connected_pair_has_no_h0(self, rng):
        for _ in range(40):
            X = scenarios.random_complex(rng, max_vertices=8)
            if len(connected_components(X)) != 1:
                continue
            Y = SimplicialComplex.from_cells([X.sorted_cells()[0]])
            assert relative_betti(X, Y, 0).rank == 0

    def test_relative_euler(self, rng):
        for _ in range(40):
            X = scenarios.random_complex(rng, max_vertices=9)
            f = X.sorted_cells()[-1]
            Y = remove_open(X, roi_cell(X, f))
            h = homology_summary(X, Y)
            assert h.euler_characteristic() == euler_characteristic(X) - euler_characteristic(Y)
            for k in range(X.dimension + 1):
                assert h.betti[k] == oracle_relative_betti(X.cells, Y.cells, k)
