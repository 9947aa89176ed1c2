from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracle import rank_mod_p as dense_rank_mod_p
from tauvec.linalg import GF2, QQ, Field, rank, rank_gf2, rank_mod_p, rank_rational

matrices = st.integers(1, 6).flatmap(
    lambda c: st.lists(st.lists(st.integers(-2, 2), min_size=c, max_size=c), min_size=0, max_size=7)
)


def sparse(M):
    return [{k: x for k, x in enumerate(row) if x} for row in M]


def bitrows(M):
    return [sum(1 << k for k, x in enumerate(row) if x % 2) for row in M]


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_gf2_matches_dense_elimination(M):
    expected = dense_rank_mod_p(np.array(M, dtype=np.int64).reshape(len(M), -1), 2) if M else 0
    assert rank_gf2(bitrows(M)) == expected
    assert rank_mod_p(sparse(M), 2) == expected


@settings(max_examples=150, deadline=None)
@given(matrices, st.sampled_from([3, 5, 7]))
def test_mod_p_matches_dense_elimination(M, p):
    expected = dense_rank_mod_p(np.array(M, dtype=np.int64).reshape(len(M), -1), p) if M else 0
    assert rank_mod_p(sparse(M), p) == expected


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_rational_matches_numpy(M):
    expected = int(np.linalg.matrix_rank(np.array(M, dtype=float))) if M else 0
    assert rank_rational(sparse(M)) == expected


def test_characteristic_dependence():
    # [[1,1],[1,-1]] has determinant -2
    M = [{0: 1, 1: 1}, {0: 1, 1: -1}]
    assert rank_rational(M) == 2
    assert rank_mod_p(M, 2) == 1
    assert rank_mod_p(M, 3) == 2


def test_field_parse():
    assert Field.parse("fp:2") == GF2
    assert Field.parse("q") == QQ
    assert Field.parse("fp:5").p == 5
    assert str(Field.parse("fp:3")) == "GF(3)"
    with pytest.raises(ValueError):
        Field.parse("fp:4")


def test_dispatch():
    assert rank([0b11, 0b01], GF2) == 2
    assert rank([{0: 2}], Field(3)) == 1
