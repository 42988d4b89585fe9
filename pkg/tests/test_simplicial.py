import json

import pytest
from hypothesis import given, settings, strategies as st

from jamtopo import scenarios
from jamtopo.simplicial import (
    NotOpenError,
    SimplicialComplex,
    closure,
    connected_components,
    euler_characteristic,
    facets,
    insert_closed,
    is_open,
    make_cell,
    remove_open,
    star,
)
from oracles import oracle_closure, oracle_components, oracle_star

EMPTY = SimplicialComplex()


class TestInsertClosed:
    def test_triangle_brings_all_faces(self):
        X = insert_closed(EMPTY, (1, 2, 3))
        assert len(X) == 7
        assert X.f_vector() == (3, 3, 1)

    def test_single_vertex(self):
        assert len(insert_closed(EMPTY, (1,))) == 1

    def test_idempotent(self):
        once = insert_closed(EMPTY, (1, 2))
        assert insert_closed(once, (1, 2)) == once

    @pytest.mark.parametrize("bad", [(2, 1), (1, 1), (), (-1, 2), (0.5,)])
    def test_malformed(self, bad):
        with pytest.raises(ValueError):
            insert_closed(EMPTY, bad)


def test_constructor_rejects_unclosed_sets():
    with pytest.raises(ValueError, match="subset-closed"):
        SimplicialComplex([(1,), (1, 2)])


class TestClosureStar:
    def test_closure_of_edge(self):
        X = scenarios.filled_triangle()
        assert closure(X, [(1, 2)]).cells == {(1,), (2,), (1, 2)}

    def test_closure_of_nothing(self):
        assert len(closure(scenarios.filled_triangle(), [])) == 0

    def test_closure_of_top_cell(self):
        X = scenarios.filled_triangle()
        assert closure(X, [(1, 2, 3)]) == X

    def test_closure_rejects_foreign_cells(self):
        with pytest.raises(ValueError):
            closure(scenarios.filled_triangle(), [(1, 4)])

    def test_star_of_middle_vertex(self, path3):
        assert star(path3, [(2,)]) == {(2,), (1, 2), (2, 3)}

    def test_star_of_edge(self):
        assert star(scenarios.filled_triangle(), [(1, 2)]) == {(1, 2), (1, 2, 3)}

    def test_star_of_facets(self, tetra):
        F = facets(tetra)
        assert star(tetra, F) == set(F)


class TestFacets:
    def test_triangle_boundary(self):
        assert facets(scenarios.triangle_boundary()) == [(1, 2), (1, 3), (2, 3)]

    def test_isolated_vertices(self):
        X = SimplicialComplex.from_cells([(1,), (2,), (3,)])
        assert facets(X) == [(1,), (2,), (3,)]

    def test_filled_triangle(self):
        assert facets(scenarios.filled_triangle()) == [(1, 2, 3)]


class TestRemoveOpen:
    def test_path_minus_roi_of_middle_edge(self, path6):
        roi = oracle_star(path6.cells, oracle_closure([(3, 4)]))
        Y = remove_open(path6, roi)
        assert Y.cells == {(1,), (2,), (1, 2), (5,), (6,), (5, 6)}

    def test_remove_nothing(self, path6):
        assert remove_open(path6, []) == path6

    def test_remove_everything(self):
        X = scenarios.filled_triangle()
        assert len(remove_open(X, star(X, closure(X, [(1, 2, 3)]).cells))) == 0

    def test_not_open(self, path3):
        with pytest.raises(NotOpenError):
            remove_open(path3, [(2,)])


class TestComponents:
    def test_path_split(self, path6):
        Y = remove_open(path6, star(path6, closure(path6, [(3, 4)]).cells))
        assert len(connected_components(Y)) == 2 == oracle_components(Y.cells)
        assert connected_components(Y) == [(1, 2), (5, 6)]

    def test_ring_stays_whole(self, ring6):
        Y = remove_open(ring6, star(ring6, closure(ring6, [(3, 4)]).cells))
        assert len(connected_components(Y)) == 1

    def test_empty(self):
        assert connected_components(EMPTY) == []


@pytest.mark.parametrize(
    "X, chi",
    [(scenarios.filled_triangle(), 1), (scenarios.triangle_boundary(), 0), (scenarios.hollow_tetrahedron(), 2)],
)
def test_euler_characteristic(X, chi):
    assert euler_characteristic(X) == chi


def test_json_roundtrip_is_facets_only(tmp_path, tetra):
    p = tmp_path / "c.json"
    tetra.save(p)
    data = json.loads(p.read_text())
    assert sorted(map(tuple, data["cells"])) == facets(tetra)
    assert SimplicialComplex.load(p) == tetra


cells_strategy = st.lists(
    st.sets(st.integers(0, 7), min_size=1, max_size=4).map(lambda s: tuple(sorted(s))),
    min_size=1,
    max_size=8,
)


@settings(max_examples=150, deadline=None)
@given(cells_strategy, st.data())
def test_closure_star_properties(cells, data):
    X = SimplicialComplex.from_cells(cells)
    S = data.draw(st.lists(st.sampled_from(X.sorted_cells()), max_size=5))
    cl = closure(X, S)
    assert closure(X, cl.cells) == cl
    assert set(S) <= cl.cells
    assert cl.cells == oracle_closure(S)
    stS = star(X, S)
    assert star(X, stS) == stS
    assert set(S) <= stS
    assert stS == oracle_star(X.cells, S)
    # complement of star(closure(S)) is a subcomplex
    U = star(X, cl.cells)
    assert is_open(X, U)
    remove_open(X, U)


@settings(max_examples=100, deadline=None)
@given(cells_strategy)
def test_every_cell_lies_in_a_facet(cells):
    X = SimplicialComplex.from_cells(cells)
    F = facets(X)
    assert all(any(set(c) <= set(f) for f in F) for c in X.cells)
    for f in F:
        remove_open(X, star(X, closure(X, [f]).cells))


def test_make_cell_returns_tuple():
    assert make_cell([0, 3, 9]) == (0, 3, 9)
