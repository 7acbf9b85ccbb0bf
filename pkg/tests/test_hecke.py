from itertools import permutations

import pytest

from src.coeffs import ONE, t, t_power
from src.hecke import (
    SeminormalElement,
    act_T,
    act_T_inv,
    act_theta_bar,
    act_word,
    basis_elements,
    permutation_length,
    reduced_word,
    restrict_q,
    restrict_syt,
    swap_syt,
    syt_content,
    t_block,
)
from src.tableaux import standard_tableaux

SHAPES = [(2,), (1, 1), (2, 1), (3,), (2, 2), (3, 1), (2, 1, 1)]


def test_same_row_and_same_column_blocks():
    row = ((1, 2),)
    col = ((1,), (2,))
    assert t_block(1, row) == ((row, ONE),)
    assert t_block(1, col) == ((col, -t),)


def test_swap_syt():
    u = ((1, 2), (3,))
    assert swap_syt(u, 2) == ((1, 3), (2,))
    assert swap_syt(u, 1) is None


@pytest.mark.parametrize("shape", SHAPES)
def test_quadratic_relation(shape):
    n = sum(shape)
    for v in basis_elements(shape):
        for i in range(1, n):
            Tv = act_T(i, v)
            assert act_T(i, Tv) + Tv.scale(t - 1) - v.scale(t) == SeminormalElement(shape)


@pytest.mark.parametrize("shape", [(2, 1), (3, 1), (2, 2), (2, 1, 1)])
def test_braid_and_far_commutation(shape):
    n = sum(shape)
    for v in basis_elements(shape):
        for i in range(1, n - 1):
            assert act_word((i, i + 1, i), v) == act_word((i + 1, i, i + 1), v)
        for i in range(1, n):
            for j in range(i + 2, n):
                assert act_word((i, j), v) == act_word((j, i), v)


def test_inverse():
    for v in basis_elements((2, 1)):
        for i in (1, 2):
            assert act_T(i, act_T_inv(i, v)) == v
            assert act_T_inv(i, act_T(i, v)) == v


@pytest.mark.parametrize("shape", [(2, 1), (3, 1), (2, 2)])
def test_jucys_murphy_recursion(shape):
    n = sum(shape)
    for v in basis_elements(shape):
        for i in range(1, n):
            lhs = act_T_inv(i, act_theta_bar(i, act_T_inv(i, v))).scale(t)
            assert lhs == act_theta_bar(i + 1, v)


def test_theta_bar_is_diagonal():
    u = ((1, 2), (3,))
    v = SeminormalElement.basis(u)
    assert act_theta_bar(3, v) == v.scale(t_power(-1))
    assert act_theta_bar(2, v) == v.scale(t)
    assert syt_content(u, 1) == 0


def test_index_out_of_range():
    v = basis_elements((2, 1))[0]
    with pytest.raises(ValueError):
        act_T(3, v)
    with pytest.raises(ValueError):
        act_theta_bar(4, v)


@pytest.mark.parametrize("n", range(1, 5))
def test_reduced_words_have_inversion_length(n):
    for perm in permutations(range(1, n + 1)):
        assert len(reduced_word(perm)) == permutation_length(perm)


def test_reduced_word_examples():
    assert reduced_word((1, 2, 3)) == ()
    assert reduced_word((2, 1, 3)) == (1,)
    assert len(reduced_word((3, 2, 1))) == 3
    with pytest.raises(ValueError):
        reduced_word((1, 1))


def test_restrict_syt():
    assert restrict_syt(((1, 2, 3),)) == ((1, 2),)
    assert restrict_syt(((1, 3), (2,))) == ((1,), (2,))
    assert restrict_syt(((1, 2), (3,))) is None
    assert restrict_syt(((1,),)) == ()


def test_restriction_commutes_with_smaller_hecke_algebra():
    base, n = (1,), 3
    for u in standard_tableaux((3, 1)):
        v = SeminormalElement.basis(u)
        for i in range(1, n):
            assert restrict_q(base, n, act_T(i, v)) == act_T(i, restrict_q(base, n, v))


def test_restrict_q_shape_mismatch():
    with pytest.raises(ValueError):
        restrict_q((1,), 3, basis_elements((2, 1))[0])
