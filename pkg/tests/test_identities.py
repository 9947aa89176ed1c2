from __future__ import annotations

import itertools
from fractions import Fraction as Q

import pytest

from tauvec.complex import SimplicialComplex
from tauvec.constructions import (
    boundary_simplex,
    connected_sum,
    cycle,
    cycle_join,
    cyclic_polytope_boundary,
    simplex_join,
    stack_randomly,
    stacked_sphere,
)
from tauvec.graphs import Graph, tau0_graph
from tauvec.identities import (
    G2Seed,
    IdentityCheck,
    bl_dominance,
    closed_form_tau,
    connsum_constant,
    expected_extremal,
    g2_one_bounds,
    missing_edges_tau0,
    nearly_neighborly_check,
    verify_identities,
)
from tauvec.tau import tau_vector
from tauvec.vectors import tau_of


def test_closed_form_values():
    assert closed_form_tau("cycle_join", 4, 3) == tau_of([Q(1, 8), Q(1, 84), Q(1, 140), Q(1, 84), Q(1, 8)], 7)
    assert closed_form_tau("stacked", 3, 8)[0] == Q(2, 45)
    assert closed_form_tau("simplex_join", 2, 2)[1] == Q(1, 70)
    assert closed_form_tau("cycle", 4) == tau_of([Q(1, 5), Q(1, 15), Q(1, 5)], 4)


@pytest.mark.parametrize(
    "family,params,C",
    [
        ("stacked", (3, 9), stacked_sphere(3, 9, 3)),
        ("stacked", (2, 8), stacked_sphere(2, 8, 1)),
        ("simplex_join", (3, 3), simplex_join(3, 3)),
        ("cycle_join", (6, 3), cycle_join(6, 3)),
        ("cycle_join", (4, 4), cycle_join(4, 4)),
        ("cycle", (9,), cycle(9)),
    ],
)
def test_closed_forms_match_enumeration(family, params, C):
    assert closed_form_tau(family, *params) == tau_vector(C)


def test_connected_sum_constant_and_formula():
    A, B = stacked_sphere(3, 7, 1), cycle_join(4, 3)
    t = closed_form_tau("connsum", tau_vector(A), tau_vector(B), 3, A.n, B.n)
    assert t == tau_vector(connected_sum(A, B))
    assert connsum_constant(3, 5, 5) == Q(1, 5) - Q(2, 6) + Q(1, 7)


def test_simplex_boundary_sum_typo_check():
    C = connected_sum(boundary_simplex(3), boundary_simplex(3))
    assert tau_vector(C)[0] == Q(1, 105)


def test_stacking_formula():
    M = cycle_join(4, 3)
    S = stack_randomly(M, 3, seed=5)
    assert closed_form_tau("stacking_delta", tau_vector(M), 3, M.n, 3) == tau_vector(S)


def test_unknown_family():
    with pytest.raises(ValueError):
        closed_form_tau("torus", 3)


@pytest.mark.parametrize(
    "C", [cycle(6), boundary_simplex(4), cyclic_polytope_boundary(4, 8), simplex_join(2, 3), stacked_sphere(5, 9, 0)]
)
def test_identities_hold_on_spheres(C):
    rep = verify_identities(C)
    assert rep.ok
    assert "duality_-1_{}".format(C.dim) in rep.names()


def test_three_sphere_forms_present():
    rep = verify_identities(cyclic_polytope_boundary(4, 9))
    for name in ("3sphere_tau0_tau2", "3sphere_h", "3sphere_f", "3sphere_g", "odd_sphere_tau", "odd_sphere_h"):
        assert rep[name].holds


def test_non_sphere_gets_only_general_checks():
    ball = SimplicialComplex.from_facets([[1, 2, 3], [2, 3, 4]])
    rep = verify_identities(ball)
    assert rep.names() == ["euler", "h_form"] and rep.ok


def test_wrong_tau_is_detected():
    C = boundary_simplex(3)
    wrong = tau_of([Q(1, 6), Q(1, 100), 0, 0, Q(1, 6)], 5)
    assert not verify_identities(C, wrong).ok


def test_identity_check_relations():
    assert IdentityCheck("a", Q(1), Q(2), "<=").holds
    assert IdentityCheck("b", Q(2), Q(1), ">=").holds
    assert not IdentityCheck("c", Q(2), Q(1), "=").holds
    assert IdentityCheck("d", Q(1), Q(3), "<=").slack == 2


def test_g2_one_bounds_d3():
    b = g2_one_bounds(3, 7)
    assert b.tau0 == (Q(1, 84), Q(13, 840))
    assert b.tau1 == (Q(1, 140), Q(1, 70))


def test_g2_one_bounds_large_d():
    from math import comb

    assert g2_one_bounds(5, 10).tau1 == (0, Q(1, 4 * comb(9, 4)))
    with pytest.raises(ValueError):
        g2_one_bounds(3, 5)


def test_expected_extremal():
    cyc = expected_extremal(G2Seed("cycle_join", (5, 3), 0))
    assert cyc["tau0_lower"] and cyc["tau1_lower"] and not cyc["tau0_upper"]
    tri = expected_extremal(G2Seed("cycle_join", (3, 3), 2))
    assert tri["tau0_upper"] and tri["tau1_upper"]


def brute_tau0_missing(n, missing):
    edges = [e for e in itertools.combinations(range(n), 2) if e not in missing]
    return tau0_graph(Graph.from_edges(n, edges))


@pytest.mark.parametrize("n", [5, 7, 9])
def test_missing_edges_closed_forms(n):
    assert missing_edges_tau0(n, "one") == brute_tau0_missing(n, {(0, 1)})
    assert missing_edges_tau0(n, "disjoint") == brute_tau0_missing(n, {(0, 1), (2, 3)})
    assert missing_edges_tau0(n, "adjacent") == brute_tau0_missing(n, {(0, 1), (0, 2)})


def test_nearly_neighborly():
    S = cyclic_polytope_boundary(4, 8)
    chk = nearly_neighborly_check(S)
    assert chk is not None and chk.holds and chk.lhs == 0
    assert nearly_neighborly_check(stacked_sphere(3, 9, 0)) is None


def test_bl_dominance():
    for C in (cycle_join(4, 3), stacked_sphere(3, 8, 2), simplex_join(2, 2)):
        rep = bl_dominance(C)
        assert rep is not None and rep.ok
