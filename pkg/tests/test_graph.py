import random
from fractions import Fraction as F

import pytest

from polydiag import graph
from polydiag.graph import (
    WeightedDigraph,
    adjacency_matrix,
    automorphisms,
    cayley_digraph,
    cyclic_group_table,
    digraph_of_graph,
    dihedral_group_table,
    from_adjacency,
    imbalance,
    is_strongly_connected,
    is_vertex_transitive,
    is_weakly_connected,
    is_weight_balanced,
    laplacian_matrix,
    perm_compose,
    perm_inverse,
)
from polydiag.linalg import matrix


def vdp_digraph():
    # cell 1 autonomous, cell 2 driven by cell 1 and itself
    return WeightedDigraph(2, ((1, 2, F(1)), (2, 2, F(1))))


def test_adjacency_examples():
    assert adjacency_matrix(vdp_digraph()) == matrix([[0, 0], [1, 1]])
    assert adjacency_matrix(WeightedDigraph(2, ())) == matrix([[0, 0], [0, 0]])
    g = from_adjacency([[0, 1, 1], [2, 0, 2], [1, 2, 0]])
    assert adjacency_matrix(g) == matrix([[0, 1, 1], [2, 0, 2], [1, 2, 0]])


def test_laplacian_examples():
    assert laplacian_matrix(vdp_digraph()) == matrix([[0, 0], [-1, 1]])
    two_cell = digraph_of_graph(2, [(1, 2)])
    assert laplacian_matrix(two_cell) == matrix([[1, -1], [-1, 1]])
    assert laplacian_matrix(WeightedDigraph(3, ())) == matrix([[0] * 3] * 3)


def test_laplacian_row_sums_zero():
    rng = random.Random(0)
    for _ in range(20):
        g = graph.random_weight_balanced_digraph(rng.randint(2, 6), rng)
        for row in laplacian_matrix(g):
            assert sum(row) == 0
        # weight balance makes the column sums vanish as well
        for col in zip(*laplacian_matrix(g)):
            assert sum(col) == 0


def test_imbalance_examples():
    g = digraph_of_graph(3, [(1, 2), (2, 3)])
    assert all(imbalance(g, i) == 0 for i in (1, 2, 3))
    balanced = from_adjacency([[0, 0, 2], [1, 0, 0], [1, 1, 0]])
    assert all(imbalance(balanced, i) == 0 for i in (1, 2, 3))
    feedforward = from_adjacency([[1, 0, 0], [1, 0, 0], [0, 1, 0]])
    assert [imbalance(feedforward, i) for i in (1, 2, 3)] == [1, 0, -1]
    with pytest.raises(ValueError):
        imbalance(balanced, 4)


def test_total_imbalance_vanishes():
    rng = random.Random(1)
    for _ in range(25):
        n = rng.randint(2, 6)
        arrows = []
        for t in range(1, n + 1):
            for h in range(1, n + 1):
                if rng.random() < 0.4:
                    arrows.append((t, h, F(rng.randint(1, 5), rng.randint(1, 3))))
        g = WeightedDigraph(n, tuple(arrows))
        assert sum(imbalance(g, i) for i in range(1, n + 1)) == 0


def test_weight_balanced_iff_row_equals_column_sums():
    rng = random.Random(2)
    for _ in range(25):
        n = rng.randint(2, 5)
        a = [[F(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
        g = from_adjacency(a)
        row = [sum(a[i][j] for j in range(n)) for i in range(n)]
        col = [sum(a[i][j] for i in range(n)) for j in range(n)]
        assert is_weight_balanced(g) == (row == col)


def test_connectivity_predicates():
    c3 = from_adjacency([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    assert is_strongly_connected(c3)
    assert is_weight_balanced(c3)
    lonely = digraph_of_graph(3, [(2, 3)])
    assert not is_weakly_connected(lonely)
    assert not is_strongly_connected(lonely)
    single = WeightedDigraph(1, ())
    assert is_strongly_connected(single)
    assert is_weight_balanced(single)


def test_digraph_of_graph():
    assert len(digraph_of_graph(3, [(2, 3)]).arrows) == 2
    assert len(digraph_of_graph(3, [(1, 2), (1, 3), (2, 3)]).arrows) == 6
    assert digraph_of_graph(2, []).arrows == ()
    with pytest.raises(ValueError):
        digraph_of_graph(2, [(1, 1)])
    rng = random.Random(3)
    for _ in range(10):
        g = graph.random_connected_graph(rng.randint(2, 7), rng)
        assert is_weight_balanced(g)
        assert is_weakly_connected(g)


def test_duplicate_and_zero_weight_arrows_rejected():
    with pytest.raises(ValueError):
        WeightedDigraph(2, ((1, 2, F(1)), (1, 2, F(2))))
    with pytest.raises(ValueError):
        WeightedDigraph(2, ((1, 2, F(0)),))


# ---------------------------------------------------------------------------
# automorphisms and Cayley digraphs


def test_cayley_z7_automorphism_orders():
    t7 = cyclic_group_table(7)
    g = cayley_digraph(t7, [(1, F(1)), (6, F(2))])
    assert len(automorphisms(g)) == 7
    g_eq = cayley_digraph(t7, [(1, F(1)), (6, F(1))])
    assert len(automorphisms(g_eq)) == 14


def test_cayley_d3_automorphism_orders():
    t = dihedral_group_table(3)
    g = cayley_digraph(t, [(3, F(1)), (4, F(2))])
    assert len(automorphisms(g)) == 6
    g_eq = cayley_digraph(t, [(3, F(1)), (4, F(1))])
    assert len(automorphisms(g_eq)) == 12


def test_cayley_z2():
    g = cayley_digraph(cyclic_group_table(2), [(1, F(1))])
    assert g.arrows == ((1, 2, F(1)), (2, 1, F(1)))


def test_cayley_rejects_bad_tables():
    with pytest.raises(ValueError):
        cayley_digraph([[0, 1], [1, 1]], [(1, F(1))])  # not a group
    with pytest.raises(ValueError):
        cayley_digraph(cyclic_group_table(3), [(1, F(1)), (1, F(2))])  # collision


def test_automorphism_group_axioms():
    g = cayley_digraph(dihedral_group_table(3), [(3, F(1)), (4, F(1))])
    autos = automorphisms(g)
    aset = set(autos)
    assert graph.identity_perm(6) in aset
    for a in autos:
        assert perm_inverse(a) in aset
        for b in autos:
            assert perm_compose(a, b) in aset


def test_vertex_transitive_implies_weight_balanced():
    for g in (
        cayley_digraph(cyclic_group_table(5), [(1, F(2))]),
        cayley_digraph(dihedral_group_table(3), [(3, F(1)), (4, F(1))]),
    ):
        assert is_vertex_transitive(g)
        assert is_weight_balanced(g)


def test_equal_in_degrees_makes_a_plus_l_scalar():
    g = cayley_digraph(cyclic_group_table(7), [(1, F(1)), (6, F(2))])
    a = adjacency_matrix(g)
    lap = laplacian_matrix(g)
    d = sum(a[0])
    for i in range(g.n):
        for j in range(g.n):
            expect = d if i == j else 0
            assert a[i][j] + lap[i][j] == expect


def test_automorphism_limit():
    with pytest.raises(ValueError):
        automorphisms(WeightedDigraph(13, ()))


def test_strong_connectivity_of_balanced_connected_positive():
    rng = random.Random(4)
    checked = 0
    while checked < 40:
        g = graph.random_weight_balanced_digraph(rng.randint(2, 7), rng)
        if not is_weakly_connected(g):
            continue
        checked += 1
        assert is_strongly_connected(g)


# ---------------------------------------------------------------------------
# file formats


def test_json_round_trip():
    g = WeightedDigraph(3, ((1, 2, F(1)), (2, 3, F(-1, 2))))
    assert graph.from_json(graph.to_json(g)) == g
    assert '"-1/2"' in graph.to_json(g)


def test_undirected_json():
    g = graph.from_json('{"n":3,"edges":[[2,3]]}')
    assert g == digraph_of_graph(3, [(2, 3)])


def test_edgelist_round_trip():
    g = WeightedDigraph(3, ((1, 2, F(1)), (2, 3, F(-1, 2))))
    text = graph.to_edgelist(g)
    assert text.splitlines()[0] == "n=3"
    assert graph.from_edgelist(text) == g
    with pytest.raises(ValueError):
        graph.from_edgelist("1 2 3\n")
