import pytest

from src.classical import classical_pieri
from src.coeffs import ONE, ZERO, q, t, t_power
from src.limits import OmegaFilling, omega_filling, omega_fillings, rank_of
from src.pieri import (
    bruteforce_expansion,
    candidates,
    coeff_bruteforce,
    coeff_formula,
    expand_in_P_basis,
    pieri_table,
    stable_coeff,
)
from src.spherical import compute_P_formula
from src.tableaux import CertificateError, enumerate_fillings, make_filling, stats, zero_filling


def test_candidates():
    assert candidates(zero_filling((2,)), 1) == [make_filling([[1, 0]])]
    assert candidates(zero_filling((2,)), 2) == [make_filling([[1, 1]])]
    assert set(candidates(make_filling([[1, 0]]), 1)) == {make_filling([[2, 0]]), make_filling([[1, 1]])}
    with pytest.raises(ValueError):
        candidates(make_filling([[1], [1]]), 1)


def test_formula_examples():
    zero = zero_filling((2,))
    assert coeff_formula(make_filling([[1, 0]]), zero, 1) == ONE
    assert coeff_formula(make_filling([[1, 1]]), zero, 2) == t**2

    T = make_filling([[1, 0]])
    assert coeff_formula(make_filling([[2, 0]]), T, 1) == ONE
    assert coeff_formula(make_filling([[1, 1]]), T, 1) == t**2 * (1 + t) * (q - 1) / (q - t)


def test_formula_rejects_bad_targets():
    T = make_filling([[1, 0]])
    with pytest.raises(ValueError):
        coeff_formula(make_filling([[3, 0]]), T, 1)
    with pytest.raises(ValueError):
        coeff_formula(make_filling([[1], [0]]), T, 1)


def test_expand_in_P_basis_round_trip():
    P = compute_P_formula(make_filling([[2, 0]]))
    assert expand_in_P_basis(P, 2) == {make_filling([[2, 0]]): ONE}


def test_expand_outside_span_is_certificate_error():
    P = compute_P_formula(make_filling([[1, 0]]))
    with pytest.raises(CertificateError):
        expand_in_P_basis(P, 2)


def _cases():
    for shape, degree in [((2,), 2), ((3,), 1), ((1, 1), 1), ((2, 1), 1)]:
        for d in range(degree + 1):
            for T in enumerate_fillings(shape, d, "RSSYT"):
                for r in (1, 2):
                    if r <= sum(shape):
                        yield T, r


@pytest.mark.parametrize("T,r", list(_cases()))
def test_formula_matches_oracle(T, r):
    table = pieri_table(T, r)
    assert table
    for entry in table:
        assert entry.agree, (entry.S.to_json(), entry.formula, entry.oracle)
    assert set(bruteforce_expansion(T, r)) <= {e.S for e in table}


def test_table_without_oracle():
    for entry in pieri_table(make_filling([[1, 0]]), 1, with_oracle=False):
        assert entry.oracle is None
        assert entry.agree is None


def test_coeff_bruteforce_outside_support_is_zero():
    T = make_filling([[1, 0]])
    assert coeff_bruteforce(make_filling([[1, 1]]), T, 1) == t**2 * (1 + t) * (q - 1) / (q - t)
    assert coeff_bruteforce(make_filling([[3, 0]]), T, 1) == ZERO


def test_classical_pieri_after_rescaling():
    T = make_filling([[1, 0]])
    classical = classical_pieri((1,), 1, 2, invert_q=True)
    for S in candidates(T, 1):
        mu = tuple(x for x in S.rows[0] if x)
        rescale = t_power(stats(S).b - stats(T).b)
        assert coeff_formula(S, T, 1) == classical[mu] * rescale


@pytest.mark.parametrize("base,T_rows,S_rows,r", [
    ((), [[1]], [[2]], 1),
    ((), [[1]], [[1, 1]], 1),
    ((), [[]], [[1, 1]], 2),
    ((1,), [[1], [0]], [[2], [0]], 1),
    ((1,), [[1], [0]], [[1, 1], [0]], 1),
])
def test_stable_coefficient(base, T_rows, S_rows, r):
    T = omega_filling(base, T_rows)
    S = omega_filling(base, S_rows)
    d = stable_coeff(S, T, r)
    assert d != ZERO


def test_stable_coefficient_values():
    T = omega_filling((), [[1]])
    assert stable_coeff(omega_filling((), [[2]]), T, 1) == ONE
    assert stable_coeff(omega_filling((), [[1, 1]]), T, 1) == t**2 * (1 + t) * (q - 1) / (q - t)
    with pytest.raises(ValueError):
        stable_coeff(omega_filling((1,), [[1], [0]]), T, 1)


# ----------------------------
# Full størrelse (-m slow)
# ----------------------------

@pytest.mark.slow
@pytest.mark.parametrize("base", [(), (1,), (2,), (1, 1)])
@pytest.mark.parametrize("r", [1, 2])
def test_formula_matches_oracle_up_to_rank_five(base, r):
    for degree in range(3):
        for T in omega_fillings(base, degree):
            lo = rank_of(T) + r
            for n in range(lo, 6):
                for entry in pieri_table(T.at_rank(n), r):
                    assert entry.agree, (T.key(), n, entry.S.to_json())
            if lo <= 5:
                for S in candidates(T.at_rank(lo), r):
                    assert stable_coeff(OmegaFilling(base, S), T, r) == coeff_formula(S, T.at_rank(lo), r)
