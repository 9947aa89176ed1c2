from __future__ import annotations

from fractions import Fraction as Q

import pytest

from tauvec.bounds import (
    FIGURE5,
    FIGURE5_CHI,
    bound_row,
    figure5_table,
    manifold_f,
    mu_bound_pair,
    rows_to_csv,
    tightness_inequalities,
)
from tauvec.constructions import boundary_simplex
from tauvec.tau import mu_vector


def test_pair_examples():
    assert mu_bound_pair(10, 30, "proven") == (Q(51, 40), Q(11, 20))
    assert mu_bound_pair(10, 30, "conjectured") == (1, 0)
    assert bound_row(8, 28).proven_pair == (0, 1)
    assert bound_row(15, 105).conjectured_pair == (0, 22)


def test_bad_mode():
    with pytest.raises(ValueError):
        mu_bound_pair(10, 30, "guess")


def test_infeasible_link():
    with pytest.raises(ValueError):
        mu_bound_pair(10, 20, "proven")


def test_manifold_f():
    assert manifold_f(5, 10) == (6, 15, 20, 15, 6)
    assert manifold_f(14, 64) == (15, 105, 320, 375, 150)
    with pytest.raises(ValueError):
        manifold_f(6, 13)


def test_rows():
    rows = figure5_table()
    assert len(rows) == len(FIGURE5)
    for r, (lf, proven, conj) in zip(rows, FIGURE5):
        assert r.proven_pair == proven and r.conjectured_pair == conj
        assert r.chi == FIGURE5_CHI[lf]


def test_conjectured_never_looser():
    for r in figure5_table():
        assert r.conjectured_exact[0] <= r.proven_exact[0]
        assert r.conjectured_exact[1] <= r.proven_exact[1]


def test_csv_schema():
    text = rows_to_csv(figure5_table()[:2])
    lines = text.splitlines()
    assert lines[0].startswith("link_n,link_e,f0,f1,f2,f3,f4,chi,b1_proven,b2_proven,b1_conj,b2_conj")
    assert lines[1] == "5,10,6,15,20,15,6,2,0,0,0,0,0,0,0,0"


def test_mu_below_bounds_for_simplex_row():
    mu = mu_vector(boundary_simplex(4))
    b1, b2 = mu_bound_pair(5, 10, "proven")
    assert mu[1] <= b1 and mu[2] <= b2


def test_neighborly_inequality_equality():
    rep = tightness_inequalities(f0=9, chi=3, k=2)
    chk = rep["neighborly_k2"]
    assert chk.lhs == chk.rhs == 10 and chk.holds and chk.equality


def test_g2_inequality():
    chk = tightness_inequalities(g2=15, d=4, beta1=1)["g2_beta1"]
    assert chk.rhs == 15 and chk.equality
    assert not tightness_inequalities(g2=14, d=4, beta1=1).ok


def test_vertex_inequality_trivial():
    for n in range(5, 12):
        assert tightness_inequalities(n=n, d=3, beta1=0).ok


def test_kuhnel_vertex_inequality_is_sharp():
    # 11 vertices, d = 4, β_1 = 1: C(6, 2) = 15 = C(6, 2)
    assert tightness_inequalities(n=11, d=4, beta1=1)["vertices_beta1"].equality


def test_tightness_inequalities_needs_params():
    with pytest.raises(ValueError):
        tightness_inequalities(f0=9)
