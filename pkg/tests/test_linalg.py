from src.coeffs import ONE, ZERO, q, t
from src.linalg import in_span, rank, solve


def test_rank():
    assert rank([]) == 0
    assert rank([{"a": ONE}, {"b": q}]) == 2
    assert rank([{"a": ONE, "b": q}, {"a": t, "b": q * t}]) == 1
    assert rank([{"a": ZERO}]) == 0


def test_solve_sets_free_variables_to_zero():
    cols = [{"a": ONE, "b": q}, {"a": t, "b": q * t}]
    assert solve(cols, {"a": 2 * ONE, "b": 2 * q}) == [2 * ONE, ZERO]
    assert solve([], {}) == []


def test_solve_generic_system():
    cols = [{"a": ONE, "b": ONE}, {"a": q, "b": t}]
    x = solve(cols, {"a": ONE + q, "b": ONE + t})
    assert x == [ONE, ONE]


def test_inconsistent_system():
    cols = [{"a": ONE, "b": q}]
    assert solve(cols, {"a": ONE}) is None
    assert not in_span(cols, {"c": t})
    assert in_span(cols, {"a": t, "b": q * t})
