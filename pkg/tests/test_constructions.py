from __future__ import annotations

from math import comb

import pytest

from tauvec.canon import isomorphic
from tauvec.complex import ComplexError, SimplicialComplex
from tauvec.constructions import (
    billera_lee,
    billera_lee_3sphere,
    boundary_simplex,
    connected_sum,
    cycle,
    cycle_join,
    cyclic_polytope_boundary,
    kuhnel_4manifold_11,
    lower_cyclic_facet_lists,
    lower_cyclic_facets,
    lower_cyclic_indegrees,
    m_sequence_check,
    pseudopower,
    simplex_join,
    stack,
    stacked_sphere,
)
from tauvec.homology import reduced_betti
from tauvec.identities import is_homology_sphere


@pytest.mark.parametrize("d", [0, 1, 2, 5])
def test_boundary_simplex(d):
    B = boundary_simplex(d)
    assert B.n == d + 2 and B.dim == d and len(B.facets) == d + 2


def test_cycle_and_path_errors():
    with pytest.raises(ComplexError):
        cycle(2)


@pytest.mark.parametrize("D,n", [(3, 6), (4, 8), (5, 9), (6, 9)])
def test_cyclic_polytope_is_sphere_and_neighborly(D, n):
    C = cyclic_polytope_boundary(D, n)
    assert is_homology_sphere(C)
    assert C.neighborliness() >= D // 2


def test_cyclic_4_polytope_f_vector():
    # f_1 = C(n,2) and f_3 = n(n-3)/2 for the cyclic 4-polytope
    assert cyclic_polytope_boundary(4, 8).f_vector == (1, 8, 28, 40, 20)


@pytest.mark.parametrize("d,n", [(2, 6), (3, 7), (4, 8), (4, 9)])
def test_lower_envelope_is_ball_inside_boundary(d, n):
    L = lower_cyclic_facets(d, n)
    full = set(cyclic_polytope_boundary(d + 1, n).facets)
    assert set(L.facets) <= full
    assert L.is_strongly_connected()
    assert all(len(fs) <= 2 for fs in L.ridges().values())
    assert all(x == 0 for x in reduced_betti(L).values)


def test_lower_envelope_of_small_cases():
    assert lower_cyclic_facet_lists(1, 4) == [(1, 2), (2, 3), (3, 4)]
    assert lower_cyclic_facet_lists(2, 5) == [(1, 2, 3), (1, 3, 4), (1, 4, 5)]


def test_indegree_counts_match_h_vector():
    # the in-degree histogram of a shelling gives the h-vector of L_d(n)
    facets = lower_cyclic_facet_lists(4, 8)
    indeg = lower_cyclic_indegrees(facets)
    hist = [0] * 5
    for v in indeg.values():
        hist[v] += 1
    L = lower_cyclic_facets(4, 8)
    assert tuple(hist) == L.face_vectors().h[:5]


def test_pseudopowers():
    assert pseudopower(3, 2) == 4
    assert pseudopower(4, 2) == 5
    assert pseudopower(2, 1) == 3
    assert pseudopower(0, 3) == 0


def test_m_sequences():
    assert m_sequence_check((1, 3, 6))
    assert not m_sequence_check((1, 3, 7))
    assert not m_sequence_check((1, 1, 2))
    assert not m_sequence_check((2, 1))


def test_billera_lee_example():
    bl = billera_lee(4, (1, 3, 2))
    assert bl.ball.face_vectors().h == (1, 3, 2, 0, 0, 0)
    assert bl.sphere.f_vector == (1, 8, 24, 32, 16)
    assert is_homology_sphere(bl.sphere)


def test_billera_lee_3sphere_f():
    S = billera_lee_3sphere(9, 30)
    assert S.f_vector[1:3] == (9, 30)


def test_billera_lee_errors():
    with pytest.raises(ComplexError):
        billera_lee(4, (1, 2, 4))
    with pytest.raises(ComplexError):
        billera_lee(4, (1, 3, 2), n=7)


def test_billera_lee_larger_n_same_sphere():
    a = billera_lee(4, (1, 2, 1)).sphere
    b = billera_lee(4, (1, 2, 1), n=10).sphere
    assert isomorphic(a, b)


def test_stacking():
    S = stack(boundary_simplex(3), 0b11110)
    assert S.n == 6 and S.f_vector == (1, 6, 14, 16, 8)
    with pytest.raises(ComplexError):
        stack(S, 0b11110)


@pytest.mark.parametrize("d,n", [(2, 8), (3, 9), (4, 10)])
def test_stacked_sphere_g2_zero(d, n):
    S = stacked_sphere(d, n, 7)
    assert S.f_vector[2] == (d + 1) * n - comb(d + 2, 2)
    assert S.face_vectors().g[2] == 0


def test_joins():
    J = simplex_join(2, 3)
    assert J.n == 7 and J.dim == 4 and is_homology_sphere(J)
    K = cycle_join(5, 3)
    assert K.n == 8 and K.dim == 3 and is_homology_sphere(K)
    with pytest.raises(ComplexError):
        simplex_join(1, 3)


def test_connected_sum_of_simplex_boundaries():
    C = connected_sum(boundary_simplex(3), boundary_simplex(3))
    assert C.n == 6
    assert isomorphic(C, stacked_sphere(3, 6, 0))


def test_connected_sum_requires_manifolds():
    with pytest.raises(ComplexError):
        connected_sum(SimplicialComplex.from_facets([[1, 2, 3]]), boundary_simplex(2))
    with pytest.raises(ComplexError):
        connected_sum(boundary_simplex(2), boundary_simplex(3))


def test_kuhnel_manifold():
    M = kuhnel_4manifold_11()
    assert M.f_vector == (1, 11, 55, 110, 110, 44)
    assert M.is_closed_pseudomanifold()
    assert all(M.link(v).face_vectors().g[2] == 0 for v in range(11))
