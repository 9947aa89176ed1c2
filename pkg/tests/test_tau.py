from __future__ import annotations

from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracle import tau_reference
from tauvec.complex import SimplicialComplex, bits
from tauvec.constructions import (
    boundary_simplex,
    cycle,
    kuhnel_4manifold_11,
    stacked_sphere,
)
from tauvec.linalg import GF2, QQ, Field
from tauvec.tau import (
    CapExceeded,
    betti_counts,
    hochster_table,
    mu_vector,
    sigma_vector,
    tau_from_table,
    tau_vector,
    tightness_report,
)
from test_homology import RP2


def as_list(t):
    return list(t.values)


def test_square():
    assert as_list(tau_vector(cycle(4))) == [Q(1, 5), Q(1, 15), Q(1, 5)]


def test_boundary_of_4_simplex():
    assert as_list(tau_vector(boundary_simplex(3))) == [Q(1, 6), 0, 0, 0, Q(1, 6)]


def test_empty_complex_on_ground_set():
    # every W induces {∅}
    assert as_list(tau_vector(SimplicialComplex(3, []))) == [1]


def test_tau_indexing():
    t = tau_vector(cycle(5))
    assert t[-1] == Q(1, 6) and t[5] == 0 and t.start == -1 and t.n == 5


@pytest.mark.parametrize("field", [GF2, QQ, Field(3)])
def test_rp2_against_oracle(field):
    facets = [tuple(bits(f)) for f in RP2.facets]
    assert as_list(tau_vector(RP2, field)) == tau_reference(6, facets, 2, field.p)


def test_rp2_field_difference():
    assert tau_vector(RP2, GF2)[2] > tau_vector(RP2, QQ)[2]


random_complexes = st.integers(1, 7).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.sets(st.integers(1, n), min_size=1, max_size=4), min_size=0, max_size=8),
    )
)


@settings(max_examples=40, deadline=None)
@given(random_complexes)
def test_random_complexes_against_oracle(data):
    n, facets = data
    C = SimplicialComplex.from_facets([sorted(f) for f in facets], n)
    ref = tau_reference(n, [tuple(bits(f)) for f in C.facets], max(C.dim, -1), 2)
    assert as_list(tau_vector(C)) == ref


def test_sigma_relation():
    C = stacked_sphere(3, 7, 1)
    t, s = tau_vector(C), sigma_vector(C)
    n = C.n
    for i in t.indices():
        expected = (n + 1) * t[i] - (1 if i == 0 else 0)
        assert s[i] == expected


def test_sigma_ignores_ghosts():
    C = cycle(5)
    assert sigma_vector(C.with_ghosts(2)) == sigma_vector(C)


def test_hochster_square():
    t = hochster_table(cycle(4))
    assert t.rows() == [(-1, 0, 1), (0, 2, 2), (1, 4, 1)]
    assert tau_from_table(t) == tau_vector(cycle(4))


def test_hochster_minimal_nonfaces():
    C = stacked_sphere(3, 8, 0)
    t = hochster_table(C)
    sizes = {}
    for m in C.minimal_nonfaces():
        k = bin(m).count("1")
        sizes[k] = sizes.get(k, 0) + 1
    for j in range(C.n + 1):
        assert t[(0, j)] == sizes.get(j, 0)


def test_workers_bit_identical():
    C = stacked_sphere(3, 10, 4)
    assert betti_counts(C, GF2, workers=1) == betti_counts(C, GF2, workers=2)


def test_cap():
    with pytest.raises(CapExceeded, match="exceeds enumeration cap"):
        tau_vector(stacked_sphere(3, 12, 0), cap=10)


def test_mu_of_boundary_simplex():
    assert as_list(mu_vector(boundary_simplex(3))) == [1, 0, 0, 1]


def test_mu_needs_closed_pseudomanifold():
    with pytest.raises(ValueError):
        mu_vector(SimplicialComplex.from_facets([[1, 2, 3]]))


def test_kuhnel_mu_equals_betti():
    M = kuhnel_4manifold_11()
    assert as_list(mu_vector(M)) == [1, 1, 0, 1, 1]
    rep = tightness_report(M, exhaustive=False)
    assert rep.betti == (1, 1, 0, 1, 1)
    assert rep.mu_equals_betti and rep.tight


def test_tightness_report_stacked():
    rep = tightness_report(stacked_sphere(3, 7, 0))
    assert not rep.tight
    assert rep.witness is not None
    assert not rep.mu_equals_betti
