"""
Endeliggenerert Hecke-algebra H_n(t) i Youngs seminormale form.

T_i tilfredsstiller (T_i - 1)(T_i + t) = 0 og flettrelasjonene.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from src.coeffs import ONE, RatFun, Scalar, ZERO, render, t, t_power
from src.tableaux import Partition, Syt, content, extended_shape, standard_tableaux


@lru_cache(maxsize=None)
def _syt_positions(u: Syt) -> Dict[int, Tuple[int, int]]:
    return {i: (r + 1, c + 1) for r, row in enumerate(u) for c, i in enumerate(row)}


def syt_content(u: Syt, i: int) -> int:
    return content(_syt_positions(u)[i])


def syt_size(u: Syt) -> int:
    return sum(len(r) for r in u)


def swap_syt(u: Syt, i: int) -> Optional[Syt]:
    """s_i(u), eller None hvis i og i+1 står i samme rad eller kolonne."""
    a, b = _syt_positions(u)[i], _syt_positions(u)[i + 1]
    if a[0] == b[0] or a[1] == b[1]:
        return None
    return tuple(tuple(i + 1 if k == i else i if k == i + 1 else k for k in row) for row in u)


@lru_cache(maxsize=None)
def t_block(i: int, u: Syt) -> Tuple[Tuple[Syt, RatFun], ...]:
    """T_i u som liste av (tableau, koeffisient)."""
    a_pos, b_pos = _syt_positions(u)[i], _syt_positions(u)[i + 1]
    if a_pos[0] == b_pos[0]:
        return ((u, ONE),)
    if a_pos[1] == b_pos[1]:
        return ((u, -t),)
    ci, cj = content(a_pos), content(b_pos)
    a, b = t_power(ci), t_power(cj)
    diag = (t - 1) * a / (b - a)
    if ci - cj > 1:
        off = ONE
    else:
        off = (t * a - b) * (a - t * b) / ((a - b) * (a - b))
    return ((u, diag), (swap_syt(u, i), off))


class SeminormalElement:
    """Vektor i Specht-modulen S^lambda: {SYT: koeffisient}."""

    __slots__ = ("shape", "coords")

    def __init__(self, shape: Sequence[int], coords: Optional[Dict[Syt, RatFun]] = None):
        self.shape: Partition = tuple(shape)
        self.coords: Dict[Syt, RatFun] = {u: c for u, c in (coords or {}).items() if c}

    @classmethod
    def basis(cls, u: Syt) -> "SeminormalElement":
        return cls(tuple(len(r) for r in u), {u: ONE})

    def __add__(self, other: "SeminormalElement") -> "SeminormalElement":
        out = dict(self.coords)
        for u, c in other.coords.items():
            out[u] = out.get(u, ZERO) + c
        return SeminormalElement(self.shape, out)

    def __sub__(self, other: "SeminormalElement") -> "SeminormalElement":
        return self + other.scale(-ONE)

    def scale(self, c: Scalar) -> "SeminormalElement":
        return SeminormalElement(self.shape, {u: c * x for u, x in self.coords.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SeminormalElement):
            return NotImplemented
        return self.shape == other.shape and self.coords == other.coords

    def items(self) -> List[Tuple[Syt, RatFun]]:
        return sorted(self.coords.items())

    def render(self) -> str:
        if not self.coords:
            return "0"
        return " + ".join(f"[{render(c)}]{u}" for u, c in self.items())


def _check_index(i: int, n: int) -> None:
    if not 1 <= i < n:
        raise ValueError(f"T_{i} out of range for n={n}")


def act_T(i: int, v: SeminormalElement) -> SeminormalElement:
    _check_index(i, sum(v.shape))
    out: Dict[Syt, RatFun] = {}
    for u, c in v.coords.items():
        for u2, c2 in t_block(i, u):
            out[u2] = out.get(u2, ZERO) + c * c2
    return SeminormalElement(v.shape, out)


def act_T_inv(i: int, v: SeminormalElement) -> SeminormalElement:
    """T_i^{-1} = t^{-1}(T_i + t - 1)."""
    return (act_T(i, v) + v.scale(t - 1)).scale(ONE / t)


def act_theta_bar(i: int, v: SeminormalElement) -> SeminormalElement:
    """Jucys-Murphy: u -> t^{c_u(i)} u."""
    n = sum(v.shape)
    if not 1 <= i <= n:
        raise ValueError(f"theta_bar_{i} out of range for n={n}")
    return SeminormalElement(v.shape, {u: c * t_power(syt_content(u, i)) for u, c in v.coords.items()})


def act_word(word: Sequence[int], v: SeminormalElement) -> SeminormalElement:
    """T_{w[0]} T_{w[1]} ... T_{w[-1]} v (siste bokstav virker først)."""
    for i in reversed(word):
        v = act_T(i, v)
    return v


# ----------------------------
# Permutasjoner
# ----------------------------

def permutation_length(perm: Sequence[int]) -> int:
    n = len(perm)
    return sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])


def reduced_word(perm: Sequence[int]) -> Tuple[int, ...]:
    """Leksikografisk første reduserte ord for perm (énlinjenotasjon, 1-basert)."""
    p = list(perm)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation: {tuple(perm)}")
    word: List[int] = []
    while True:
        where = {val: k for k, val in enumerate(p)}
        descent = next((i for i in range(1, len(p)) if where[i] > where[i + 1]), None)
        if descent is None:
            return tuple(word)
        word.append(descent)
        # s_i * p bytter verdiene i og i+1
        a, b = where[descent], where[descent + 1]
        p[a], p[b] = p[b], p[a]


# ----------------------------
# Restriksjon H_{n+1} -> H_n
# ----------------------------

def restrict_syt(u: Syt) -> Optional[Syt]:
    """Fjerner siste boks i første rad hvis den inneholder n+1."""
    n1 = syt_size(u)
    if not u or u[0][-1] != n1:
        return None
    first = u[0][:-1]
    return ((first,) if first else ()) + tuple(u[1:])


def restrict_q(base: Partition, n: int, v: SeminormalElement) -> SeminormalElement:
    """q: S^{lambda^(n+1)} -> S^{lambda^(n)}."""
    big, small = extended_shape(base, n + 1), extended_shape(base, n)
    if v.shape != big:
        raise ValueError(f"shape mismatch: expected {big}, got {v.shape}")
    out: Dict[Syt, RatFun] = {}
    for u, c in v.coords.items():
        u2 = restrict_syt(u)
        if u2 is not None:
            out[u2] = out.get(u2, ZERO) + c
    return SeminormalElement(small, out)


def basis_elements(shape: Partition) -> List[SeminormalElement]:
    return [SeminormalElement.basis(u) for u in standard_tableaux(tuple(shape))]
