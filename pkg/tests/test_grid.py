import random

import pytest

from gridperc import make_grid


def test_vertex_and_edge_counts():
    g = make_grid(3, 5)
    assert g.vertex_count == 15
    assert g.edge_count == 22
    g = make_grid(1, 1)
    assert g.vertex_count == 1
    assert g.edge_count == 0
    g = make_grid(5, 7)
    assert g.vertex_count == 35
    assert g.edge_count == 58


@pytest.mark.parametrize("rows,cols", [(0, 3), (3, 0), (0, 0), (-1, 2)])
def test_zero_dimensions_rejected(rows, cols):
    with pytest.raises(ValueError):
        make_grid(rows, cols)


def test_neighbors_of_corner_edge_interior():
    g = make_grid(3, 5)
    assert set(g.neighbors((0, 0))) == {(0, 1), (1, 0)}
    assert len(g.neighbors((1, 2))) == 4
    assert len(g.neighbors((0, 2))) == 3


def test_invalid_vertex_rejected():
    g = make_grid(3, 5)
    with pytest.raises(ValueError):
        g.neighbors((3, 0))
    with pytest.raises(ValueError):
        g.degree((0, 5))


def test_is_boundary():
    g = make_grid(3, 5)
    assert not g.is_boundary((1, 2))
    assert g.is_boundary((0, 2))
    g = make_grid(2, 2)
    assert all(g.is_boundary(v) for v in g.full_set())


def test_boundary_iff_degree_at_most_three():
    for rows in range(2, 7):
        for cols in range(2, 8):
            g = make_grid(rows, cols)
            for v in g.full_set():
                assert g.is_boundary(v) == (g.degree(v) <= 3)


def test_degree_into():
    g = make_grid(3, 3)
    corners = g.vertex_set([(0, 0), (0, 2), (2, 0), (2, 2)])
    assert g.degree_into((1, 1), corners) == 0
    assert g.degree_into((0, 1), g.vertex_set([(0, 0), (0, 2)])) == 2
    assert g.degree_into((0, 0), g.full_set()) == 2


def test_adjacency_symmetry_and_handshake():
    for rows in range(1, 7):
        for cols in range(1, 11):
            g = make_grid(rows, cols)
            degree_sum = 0
            for u in g.full_set():
                for w in g.neighbors(u):
                    assert u in g.neighbors(w)
                degree_sum += g.degree(u)
            assert degree_sum == 2 * g.edge_count


def test_vertex_set_algebra_matches_python_sets():
    rng = random.Random(7)
    g = make_grid(4, 6)
    universe = list(g.full_set())
    for _ in range(100):
        a = {v for v in universe if rng.random() < 0.4}
        b = {v for v in universe if rng.random() < 0.4}
        va, vb = g.vertex_set(a), g.vertex_set(b)
        assert set(va | vb) == a | b
        assert set(va & vb) == a & b
        assert set(va - vb) == a - b
        assert (va <= vb) == (a <= b)
        assert len(va) == len(a)
        assert va.isdisjoint(vb) == a.isdisjoint(b)
    assert set(g.vertex_set(universe).complement()) == set()


def test_cross_grid_operations_rejected():
    a = make_grid(3, 3).full_set()
    b = make_grid(3, 4).full_set()
    with pytest.raises(ValueError):
        _ = a | b


def test_vertex_set_immutable():
    vs = make_grid(2, 2).empty_set()
    with pytest.raises(AttributeError):
        vs.mask = 1
