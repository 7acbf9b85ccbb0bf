import pytest

from src.classical import (
    as_velement,
    classical_P,
    classical_pieri,
    macdonald_basis,
    partitions_of,
    power_to_monomial,
    z_qt,
)
from src.coeffs import ONE, q, t, t_power
from src.spherical import compute_P_formula
from src.tableaux import enumerate_fillings, stats


def test_partitions_are_ascending():
    assert partitions_of(0) == [()]
    assert partitions_of(3) == [(1, 1, 1), (2, 1), (3,)]
    assert len(partitions_of(5)) == 7


def test_power_to_monomial():
    assert power_to_monomial((1, 1), (2,)) == 1
    assert power_to_monomial((1, 1), (1, 1)) == 2
    assert power_to_monomial((2,), (1, 1)) == 0
    assert power_to_monomial((1, 1, 1), (1, 1, 1)) == 6


def test_z_qt():
    assert z_qt((1,)) == (1 - q) / (1 - t)
    assert z_qt((1, 1), invert_q=True) == 2 * ((1 - ONE / q) / (1 - t)) ** 2


def test_degree_two_polynomials():
    assert classical_P((1, 1)) == {(1, 1): ONE}
    assert classical_P((2,)) == {(2,): ONE, (1, 1): (1 + q) * (1 - t) / (1 - q * t)}
    inv = classical_P((2,), invert_q=True)
    assert inv[(1, 1)] == (q + 1) * (1 - t) / (q - t)


def test_degree_three_coefficient():
    basis = macdonald_basis(3)
    assert basis[(3,)][(3,)] == ONE
    c = basis[(2, 1)][(1, 1, 1)]
    assert c == (1 - t) * (2 + q + t + 2 * q * t) / (1 - q * t**2)


def test_classical_pieri_degree_one():
    expansion = classical_pieri((1,), 1, 2, invert_q=True)
    assert expansion[(2,)] == ONE
    assert expansion[(1, 1)] == (q - 1) * (1 + t) / (q - t)
    assert classical_pieri((1,), 1, 1) == {(2,): ONE}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_one_row_macdonald_is_classical(n):
    for d in range(4 if n < 3 else 3):
        for T in enumerate_fillings((n,), d, "RSSYT"):
            mu = tuple(x for x in T.rows[0] if x)
            expected = as_velement(classical_P(mu, invert_q=True), n).scale(t_power(-stats(T).b))
            assert compute_P_formula(T) == expected
