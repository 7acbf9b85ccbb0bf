import pytest

from src import daha, hecke
from src.classical import partitions_of
from src.coeffs import ONE, q, t, t_power
from src.daha import (
    VElement,
    act_pi,
    act_pi_inv,
    act_sym_mult,
    act_T,
    act_theta,
    act_X_index,
    build_F,
    check_triangularity,
    composition_precedes,
    compositions_up_to,
    relation_suite,
    u_t_closed,
    weight_path_variants,
    weights,
)
from src.tableaux import enumerate_fillings, enumerate_psyt, make_filling, make_tableau

ROW2 = ((1, 2),)
COL2 = ((1,), (2,))


def _ryt(shape, max_degree):
    for d in range(max_degree + 1):
        yield from enumerate_fillings(shape, d, "RYT")


def test_T_on_degree_zero_is_finite_hecke():
    v = VElement.basis((0, 0), COL2)
    assert act_T(1, v) == v.scale(-t)


def test_T_cross_relation_example():
    v = VElement.basis((1, 0), COL2)
    expected = VElement.basis((0, 1), COL2).scale(-t) - VElement.basis((1, 0), COL2).scale(t - 1)
    assert act_T(1, v) == expected


def test_T_fixes_symmetric_monomial():
    v = VElement.basis((1, 1), ROW2)
    assert act_T(1, v) == v


def test_pi_examples():
    one = VElement.basis((0, 0), ROW2)
    assert act_pi(one) == one.scale(t)
    assert act_pi_inv(one) == one.scale(ONE / t)
    u = ((1, 2), (3,))
    x3 = VElement.basis((0, 0, 1), u)
    base = VElement.basis((0, 0, 0), u)
    assert act_pi(x3) == act_X_index(1, act_pi(base)).scale(q)


def test_theta_examples():
    one = VElement.basis((0, 0), ROW2)
    assert act_theta(1, one) == one
    f = VElement.basis((0, 1), ROW2).scale(ONE / t)
    assert act_theta(2, f) == f.scale(q)


def test_weight_vectors_of_one_row():
    lo = make_tableau([[(2, 1), (1, 0)]])
    hi = make_tableau([[(1, 1), (2, 0)]])
    assert build_F(lo).element == VElement.basis((0, 1), ROW2).scale(ONE / t)
    expected = VElement.basis((1, 0), ROW2) + VElement.basis((0, 1), ROW2).scale((t - 1) / (t - q))
    assert build_F(hi).element == expected


def test_standard_tableau_is_degree_zero():
    tau = make_tableau([[(1, 0), (3, 0)], [(2, 0)]])
    assert build_F(tau).element == VElement.basis((0, 0, 0), ((1, 3), (2,)))


@pytest.mark.parametrize("shape,degree", [((2,), 2), ((1, 1), 2), ((2, 1), 2), ((3,), 1)])
def test_spectrum_and_distinct_weights(shape, degree):
    for T in _ryt(shape, degree):
        elems = enumerate_psyt(T)
        seen = set()
        for tau in elems:
            wv = build_F(tau, certify=True)
            assert not wv.element.is_zero()
            seen.add(wv.weights)
        assert len(seen) == len(elems)


@pytest.mark.parametrize("shape,degree", [((2,), 2), ((2, 1), 2)])
def test_construction_paths_agree(shape, degree):
    for T in _ryt(shape, degree):
        for tau in enumerate_psyt(T):
            first, second = weight_path_variants(tau)
            assert first == second


@pytest.mark.parametrize("shape,degree", [((2,), 2), ((1, 1), 2), ((2, 1), 2), ((3,), 2)])
def test_top_is_triangular(shape, degree):
    for T in _ryt(shape, degree):
        assert check_triangularity(T)


def test_u_t_is_closed():
    assert u_t_closed(make_filling([[1, 0], [0]]))
    assert u_t_closed(make_filling([[1, 0]]))


def test_composition_order():
    assert composition_precedes((0, 1), (1, 0))
    assert not composition_precedes((1, 0), (0, 1))
    assert composition_precedes((1, 1, 0), (2, 0, 0))
    assert not composition_precedes((2, 0), (2, 0))
    assert compositions_up_to(2, 1) == [(0, 0), (0, 1), (1, 0)]


def test_symmetric_multiplication():
    v = VElement.basis((0, 0), ROW2)
    e1 = VElement.basis((1, 0), ROW2) + VElement.basis((0, 1), ROW2)
    assert act_sym_mult("e", 1, v) == e1
    assert act_sym_mult("p", 1, v) == e1
    assert act_sym_mult("e", 2, v) == VElement.basis((1, 1), ROW2)
    assert act_sym_mult("e", 3, v).is_zero()
    with pytest.raises(ValueError):
        act_sym_mult("h", 1, v)


def test_shape_mismatch():
    with pytest.raises(ValueError):
        VElement.basis((0, 0), ROW2) + VElement.basis((0, 0), COL2)
    with pytest.raises(ValueError):
        act_T(2, VElement.basis((0, 0), ROW2))


@pytest.mark.parametrize("shape,degree", [((2,), 2), ((1, 1), 1), ((2, 1), 1)])
def test_relation_suite_passes(shape, degree):
    rep = relation_suite(shape, degree)
    assert rep.ok, [(c.name, c.examples) for c in rep.checks if not c.ok]
    assert all(c.checked > 0 for c in rep.checks if c.name not in ("hecke_braid", "hecke_far_commute", "theta_T_commute", "X_T_commute"))


def test_relation_suite_detects_broken_quadratic(monkeypatch):
    def broken(i, u):
        return ((u, ONE * 2),)

    daha.clear_caches()
    monkeypatch.setattr(hecke, "t_block", broken)
    try:
        rep = relation_suite((2,), 0)
        quad = next(c for c in rep.checks if c.name == "hecke_quadratic")
        assert quad.failures > 0
        assert not rep.ok
    finally:
        monkeypatch.undo()
        daha.clear_caches()


def test_weights_of_one_row_top():
    tau = make_tableau([[(1, 1), (2, 0)]])
    assert weights(tau) == (q, t)


def test_certification_runs_once_per_tableau(monkeypatch):
    calls = []
    real = daha.certify_weight

    def counting(tau, v):
        calls.append(tau)
        real(tau, v)

    daha.clear_caches()
    monkeypatch.setattr(daha, "certify_weight", counting)
    tau = make_tableau([[(1, 1), (2, 0)]])
    build_F(tau)
    assert calls == []
    build_F(tau, certify=True)
    build_F(tau, certify=True)
    assert calls == [tau]
    daha.clear_caches()
    build_F(tau, certify=True)
    assert calls == [tau, tau]


def test_theta_matches_inverse_form():
    v = VElement.basis((1, 0, 2), ((1, 3), (2,))) + VElement.basis((0, 1, 0), ((1, 2), (3,))).scale(q)
    n = v.n
    for i in range(1, n + 1):
        w = v
        for k in range(i, n):
            w = act_T(k, w)
        w = act_pi(w)
        for k in range(1, i):
            w = daha.act_T_inv(k, w)
        assert act_theta(i, v) == w.scale(t_power(i - n))


# ----------------------------
# Full størrelse (-m slow)
# ----------------------------

@pytest.mark.slow
@pytest.mark.parametrize("shape", [(2,), (1, 1), (2, 1), (3, 1), (2, 2), (2, 1, 1)])
def test_relations_through_degree_three(shape):
    rep = relation_suite(shape, 3)
    assert rep.ok, [(c.name, c.examples) for c in rep.checks if not c.ok]


def _shapes_up_to(boxes):
    return [p for k in range(1, boxes + 1) for p in partitions_of(k)]


@pytest.mark.slow
@pytest.mark.parametrize("shape", _shapes_up_to(5))
def test_weight_certificates_through_degree_three(shape):
    for T in _ryt(shape, 3):
        for tau in enumerate_psyt(T):
            build_F(tau, certify=True)
        assert check_triangularity(T), T.to_json()
