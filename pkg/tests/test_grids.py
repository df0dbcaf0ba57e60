"""Grid graphs, flows, supports, forests, and integral equivalences."""

from itertools import product

import pytest

from genps.grids import (
    SINK,
    FlowError,
    Subgraph,
    build_graph,
    build_grid_graph,
    build_h_graph,
    build_h_top,
    count_integral_flows,
    enumerate_integral_flows,
    flow_from_horizontal,
    h_reversed_instance,
    is_forest,
    map_G_to_H,
    support,
    unique_flow_on_forest,
    verify_flow,
)
from genps.partitions import count_pps, enumerate_pps, psi
from genps.vectors import InputError, dominates, prefix_sums, theta


def test_grid_graph_shape():
    g = build_grid_graph(3, 4, (1, 1, 1), (0, 0, 0))
    assert len(g.vertices) == 3 * 5 + 1
    n, m = 3, 4
    assert len(g.edges) == n * m + (n - 1) * (m + 1) + (m + 1)
    assert g.netflow[SINK] == -3
    # dimension bookkeeping: first Betti number of the whole graph is nm
    assert len(g.edges) - len(g.vertices) + 1 == n * m


def test_build_graph_dispatch():
    g = build_graph("H_top", 1, None, (5,), (5,))
    # single through-path: a row -1 vertex, a chain vertex, a row 1 vertex, the sink
    assert len(g.vertices) == 4
    assert count_integral_flows(g) == 1
    with pytest.raises(InputError):
        build_graph("nope", 1, 1, (1,), (0,))


def test_flow_from_horizontal():
    g = build_grid_graph(2, 1, (1, 1), (0, 0))
    f = flow_from_horizontal(g, [[1], [1]])
    assert f[((1, 0), (1, 1))] == 1
    assert f[((1, 0), (2, 0))] == 0
    assert f[((1, 1), (2, 1))] == 1
    assert f[((2, 1), SINK)] == 2
    assert verify_flow(f)
    zero_g = build_grid_graph(2, 1, (0, 0), (0, 0))
    zf = flow_from_horizontal(zero_g, [[0], [0]])
    assert all(v == 0 for v in zf.values)
    with pytest.raises(FlowError):
        flow_from_horizontal(g, [[2], [0]])


def test_verify_flow_perturbation():
    g = build_grid_graph(2, 2, (1, 1), (0, 0))
    for f in enumerate_integral_flows(g):
        assert verify_flow(f)
        for i in range(len(f.values)):
            bumped = list(f.values)
            bumped[i] += 1
            assert not verify_flow(type(f)(g, bumped))
        break


def test_row_sum_identity():
    # vertical flows of row i (sink edges for the last row) sum to the
    # prefix-sum gap between a and b
    for n in (1, 2, 3):
        for m in (0, 1, 2):
            for a in product(range(3), repeat=n):
                for b in product(range(3), repeat=n):
                    if not dominates(a, b):
                        continue
                    pa, pb = prefix_sums(a), prefix_sums(b)
                    for pp in enumerate_pps(theta(a, b), m):
                        f = psi(pp, a, b)
                        rows = list(f.y) + [f.sink_flows]
                        for i in range(n):
                            assert sum(rows[i]) == pa[i] - pb[i]


def test_support_and_forest():
    g = build_grid_graph(2, 1, (1, 1), (0, 0))
    zero = build_grid_graph(2, 1, (0, 0), (0, 0))
    zf = flow_from_horizontal(zero, [[0], [0]])
    assert len(support(zf)) == 0 and is_forest(support(zf))
    # the non-vertex flow of the square has a cycle in its support
    from genps.partitions import PlanePartition
    from genps.vectors import SkewShape

    bad = PlanePartition(SkewShape.of((2, 1)), ((1, 0), (0,)), 1)
    assert not is_forest(support(psi(bad, (1, 1), (0, 0))))


def test_unique_flow_on_forest():
    g = build_grid_graph(1, 1, (1,), (0,))
    f = flow_from_horizontal(g, [[1]])
    s = support(f)
    assert unique_flow_on_forest(s).values == f.values
    # dropping any edge leaves an invalid forest
    for drop in s.edge_indices():
        assert unique_flow_on_forest(Subgraph(g, s.mask & ~(1 << drop))) is None
    with pytest.raises(InputError):
        bad = Subgraph(g, (1 << len(g.edges)) - 1)
        if not is_forest(bad):
            unique_flow_on_forest(bad)


def test_unique_flow_recovers_all_forest_supports():
    for n, m in ((1, 2), (2, 1), (2, 2), (3, 1)):
        for a in product(range(3), repeat=n):
            if sum(a) > 3:
                continue
            b = (0,) * n
            for pp in enumerate_pps(theta(a, b), m):
                f = psi(pp, a, b)
                s = support(f)
                if is_forest(s):
                    assert unique_flow_on_forest(s).values == f.values


def test_edge_minimality():
    for n, m in ((1, 2), (2, 1), (2, 2)):
        a, b = (1,) * n, (0,) * n
        for pp in enumerate_pps(theta(a, b), m):
            f = psi(pp, a, b)
            s = support(f)
            if not is_forest(s):
                continue
            for drop in s.edge_indices():
                assert unique_flow_on_forest(Subgraph(f.graph, s.mask & ~(1 << drop))) is None


def test_pp_count_equals_flow_count():
    for n in (1, 2):
        for m in (0, 1, 2):
            for a in product(range(3), repeat=n):
                for b in product(range(3), repeat=n):
                    if not dominates(a, b):
                        continue
                    g = build_grid_graph(n, m, a, b)
                    assert count_integral_flows(g) == count_pps(theta(a, b), m)


def test_map_G_to_H_counts_and_bijectivity():
    g = build_grid_graph(2, 1, (1, 1), (0, 0))
    flows = list(enumerate_integral_flows(g))
    images = {map_G_to_H(f).values for f in flows}
    h = map_G_to_H(flows[0]).graph
    assert len(flows) == 5 and len(images) == 5 == count_integral_flows(h)

    g = build_grid_graph(2, 2, (1, 1), (0, 0))
    flows = list(enumerate_integral_flows(g))
    images = {map_G_to_H(f).values for f in flows}
    assert len(flows) == 14 and len(images) == 14
    assert count_integral_flows(map_G_to_H(flows[0]).graph) == 14

    zero = build_grid_graph(2, 1, (0, 0), (0, 0))
    zf = flow_from_horizontal(zero, [[0], [0]])
    assert all(v == 0 for v in map_G_to_H(zf).values)


def test_reversal():
    h = build_h_graph(1, 1, (1, 0), (0, 1))
    assert count_integral_flows(h) == 2 == count_integral_flows(h_reversed_instance(h))
    g = build_grid_graph(2, 1, (2, 1), (0, 0))
    assert g.reversed().reversed().edges == g.edges
    assert g.reversed().reversed().netflow == g.netflow
    assert count_integral_flows(g.reversed()) == count_integral_flows(g)


def test_reversed_counts_sweep():
    for n in (1, 2):
        for m in (1, 2):
            for a in product(range(3), repeat=n):
                for b in product(range(3), repeat=n):
                    if not dominates(a, b) or b[0] != 0:
                        continue
                    a_p = tuple(a) + (0,)
                    b_p = (0,) + tuple(b[1:]) + (sum(a) - sum(b),)
                    h = build_h_graph(n, m, a_p, b_p)
                    expected = count_pps(theta(a, b), m)
                    assert count_integral_flows(h) == expected
                    assert count_integral_flows(h_reversed_instance(h)) == expected


def test_h_top_unsplittable_tree():
    g = build_h_top(3, (2, 1, 0), (0, 3, 0))
    assert count_integral_flows(g) == 1


def test_json_and_dot():
    g = build_grid_graph(2, 1, (1, 1), (0, 0))
    data = g.to_json()
    assert data["kind"] == "G" and data["n"] == 2 and data["m"] == 1
    assert "digraph" in g.to_dot()
    f = flow_from_horizontal(g, [[1], [0]])
    assert f.to_json() == {"x": [[1], [0]]}
