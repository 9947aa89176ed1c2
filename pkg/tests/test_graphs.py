from __future__ import annotations

import itertools
import random
from fractions import Fraction as Q

import networkx as nx
import pytest

from tauvec.constructions import billera_lee, billera_lee_3sphere
from tauvec.graphs import (
    Graph,
    binomial_quotient,
    bl_graph,
    bl_in_degrees,
    bl_params,
    bl_tau0,
    d_dim_order,
    find_peo,
    is_peo,
    max_cardinality_search,
    peo_bound,
    step_bound,
    tau0_bounds_strongly_connected,
    tau0_graph,
    tau0_graph_reference,
)
from tauvec.tau import tau_vector


def random_graph(n, p, seed):
    rng = random.Random(seed)
    return Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def test_tau0_matches_reference():
    for seed in range(30):
        G = random_graph(random.Random(seed).randint(1, 9), 0.4, seed)
        assert tau0_graph(G) == tau0_graph_reference(G)


def test_tau0_of_complete_graph_is_zero():
    assert tau0_graph(Graph.complete(7)) == 0


def test_tau0_of_edgeless_graph():
    # β̃_0 = |W| - 1 on every nonempty W
    n = 5
    expected = sum(Q(j - 1, 1) for j in range(1, n + 1)) / (n + 1)
    assert tau0_graph(Graph.from_edges(n, [])) == expected


def test_tau0_agrees_with_complex():
    S = billera_lee_3sphere(8, 24)
    assert tau0_graph(Graph.of_complex(S)) == tau_vector(S)[0] == Q(8, 315)


def test_peo_bound_equality_on_chordal():
    G = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    b = peo_bound(G, [0, 1, 2, 3])
    assert b.is_equality and b.bound == tau0_graph(G)


def test_peo_bound_strict_on_cycle():
    G = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    b = peo_bound(G, [0, 1, 2, 3])
    assert not b.is_equality and b.bound > tau0_graph(G)
    assert find_peo(G) is None


def test_peo_bound_rejects_bad_order():
    with pytest.raises(ValueError):
        peo_bound(Graph.complete(3), [0, 0, 1])


def test_peo_exists_exactly_for_chordal_graphs():
    for seed in range(60):
        G = random_graph(7, 0.5, seed)
        H = nx.Graph()
        H.add_nodes_from(range(7))
        H.add_edges_from(G.edges())
        order = find_peo(G)
        assert (order is not None) == nx.is_chordal(H)
        if order is not None:
            assert is_peo(G, order) and order == max_cardinality_search(G)


def test_step_bound():
    assert step_bound(0, 1) == Q(1, 2) - Q(1, 2)
    assert step_bound(1, 3) == Q(1, 6) - Q(1, 12)


def test_bl_params_and_values():
    p = bl_params(8, 24, 4)
    assert (p.k, p.j) == (6, 5)
    assert bl_tau0(8, 24, 4) == Q(8, 315)
    assert bl_tau0(10, 30, 3) == Q(51, 440)
    assert bl_tau0(10, 30, 4) == Q(1, 11)


@pytest.mark.parametrize("f0,f1,d", [(8, 24, 4), (10, 30, 3), (10, 30, 4), (9, 20, 2), (12, 66, 5)])
def test_bl_graph_brute_force(f0, f1, d):
    G, _ = bl_graph(f0, f1, d)
    assert G.num_edges == f1
    assert tau0_graph(G) == bl_tau0(f0, f1, d)
    assert sorted(peo_bound(G, list(range(f0))).deltas) == sorted(bl_in_degrees(f0, f1, d))


def test_bl_params_infeasible():
    with pytest.raises(ValueError):
        bl_params(8, 10, 4)
    with pytest.raises(ValueError):
        bl_params(5, 11, 2)


def test_d_dim_order_of_billera_lee_sphere():
    S = billera_lee(4, (1, 3, 2)).sphere
    seq = d_dim_order(S)
    assert seq.deltas == (0, 1, 2, 3, 4, 5, 5, 4)


def test_strongly_connected_bounds():
    b = tau0_bounds_strongly_connected(10, 30, 3)
    assert b.upper == Q(51, 440) and b.lower == Q(1, 11)
    assert b.quotient_ok


@pytest.mark.parametrize("n,a,b", [(0, 0, 0), (3, 1, 2), (6, 2, 5), (9, 0, 4)])
def test_binomial_quotient(n, a, b):
    from math import comb

    lhs = sum(Q(comb(n, k), comb(n + b, k + a)) for k in range(n + 1))
    assert binomial_quotient(n, a, b) == lhs
