"""
Sfærisk del W_lambda = eps V_lambda: symmetrisering, Macdonald-funksjoner P_T,
normaliseringskonstanten K_T og operatorene P_{0,l} / P_{l,0}.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Tuple, Union

from src import daha
from src.coeffs import ONE, RatFun, ZERO, composition_factorial, qt_monomial, t_factorial, t_power
from src.daha import VElement, act_T, act_sym_mult, act_theta, build_F, u_t_basis
from src.hecke import reduced_word
from src.linalg import rank, solve
from src.tableaux import (
    Box,
    CertificateError,
    Filling,
    PeriodicTableau,
    boxes,
    content,
    enumerate_psyt,
    inversion_set,
    inversions,
    min_top,
    require_rssyt,
    require_ryt,
    stats,
)


# ----------------------------
# Symmetrisering
# ----------------------------

def _scale_to_idempotent(v: VElement) -> VElement:
    n = v.n
    return v.scale(t_power(n * (n - 1) // 2) / t_factorial(n))


def epsilon_project(v: VElement) -> VElement:
    """eps = t^{C(n,2)}/[n]_t! sum_sigma t^{-l(sigma)} T_sigma.

    Summen faktoriseres over venstre sideklasser: A_2 A_3 ... A_n, der
    A_k = 1 + x T_{k-1}(1 + x T_{k-2}(... (1 + x T_1))) og x = t^{-1}.
    Vi regner med B_k = t^{k-1} A_k, så t^{C(n,2)} går opp og bare
    1/[n]_t! gjenstår.
    """
    w = v
    for k in range(v.n, 1, -1):
        acc = w
        for i in range(1, k):
            acc = w.scale(t_power(i)) + act_T(i, acc)
        w = acc
    return w.scale(ONE / t_factorial(v.n))


def epsilon_bruteforce(v: VElement) -> VElement:
    """Samme projeksjon, summert over alle permutasjoner i leksikografisk rekkefølge."""
    n = v.n
    total = VElement(v.shape)
    for perm in permutations(range(1, n + 1)):
        word = reduced_word(perm)
        w = v
        for i in reversed(word):
            w = act_T(i, w)
        total = total + w.scale(t_power(-len(word)))
    return _scale_to_idempotent(total)


def is_spherical(v: VElement) -> bool:
    return all(act_T(i, v) == v for i in range(1, v.n))


@dataclass
class SphericalElement:
    element: VElement

    @classmethod
    def certify(cls, v: VElement) -> "SphericalElement":
        if not is_spherical(v):
            raise CertificateError("element is not invariant under T_1..T_{n-1}")
        return cls(v)


# ----------------------------
# Inversjonsfaktorer
# ----------------------------

def _qt(T: Filling, box: Box, shift: int = 0) -> RatFun:
    return qt_monomial(T.value(box), content(box) + shift)


def inversion_A(T: Filling, b1: Box, b2: Box) -> RatFun:
    """(q^{T1}t^{c1+1} - q^{T2}t^{c2}) / (q^{T1}t^{c1} - q^{T2}t^{c2})."""
    return (_qt(T, b1, 1) - _qt(T, b2)) / (_qt(T, b1) - _qt(T, b2))


def inversion_B(T: Filling, b1: Box, b2: Box) -> RatFun:
    """(q^{T1}t^{c1} - q^{T2}t^{c2}) / (q^{T1}t^{c1} - q^{T2}t^{c2+1})."""
    return (_qt(T, b1) - _qt(T, b2)) / (_qt(T, b1) - _qt(T, b2, 1))


def product_A(tau: PeriodicTableau) -> RatFun:
    T = tau.filling()
    out = ONE
    for b1, b2 in inversions(tau):
        out *= inversion_A(T, b1, b2)
    return out


def product_B(tau: PeriodicTableau) -> RatFun:
    T = tau.filling()
    out = ONE
    for b1, b2 in inversions(tau):
        out *= inversion_B(T, b1, b2)
    return out


# ----------------------------
# P_T
# ----------------------------

def p_expansion(T: Filling) -> List[Tuple[PeriodicTableau, RatFun]]:
    """P_T = sum_tau prod_{Inv(tau)} A * F_tau."""
    require_rssyt(T)
    return [(tau, product_A(tau)) for tau in enumerate_psyt(T)]


_P_CACHE: Dict[Filling, VElement] = daha.register_cache({})


def compute_P_formula(T: Filling) -> VElement:
    hit = _P_CACHE.get(T)
    if hit is not None:
        return hit
    out = VElement(T.shape)
    for tau, coeff in p_expansion(T):
        out = out + build_F(tau).element.scale(coeff)
    _P_CACHE[T] = out
    return out


@dataclass
class ProjectionResult:
    dim: int
    element: Optional[VElement]


def compute_P_projection(T: Filling) -> ProjectionResult:
    """eps(U_T): dimensjon og den normaliserte linja (F_Top-koeffisient 1)."""
    require_ryt(T)
    basis = u_t_basis(T)
    images = [epsilon_project(w.element) for w in basis]
    dim = rank([im.terms for im in images])
    if dim == 0:
        return ProjectionResult(dim=0, element=None)
    w = next(im for im in images if not im.is_zero())
    coeffs = solve([b.element.terms for b in basis], w.terms)
    if coeffs is None:
        raise CertificateError(f"eps(U_T) left U_T for {T.to_json()}")
    top = min_top(T)[1]
    k_top = coeffs[[b.tableau for b in basis].index(top)]
    if not k_top:
        raise CertificateError(f"F_Top coefficient vanishes in eps(U_T) for {T.to_json()}")
    return ProjectionResult(dim=dim, element=w.scale(ONE / k_top))


def K_coeff(T: Filling) -> RatFun:
    """K_T = [mu]_t!/[n]_t! prod_{I(T)} (q^{T1}t^{c1} - q^{T2}t^{c2+1})/(q^{T1}t^{c1} - q^{T2}t^{c2})."""
    require_ryt(T)
    st = stats(T)
    out = composition_factorial(st.mu) / t_factorial(len(boxes(T.shape)))
    for b1, b2 in inversion_set(T):
        out *= ONE / inversion_B(T, b1, b2)
    return out


def inverse_K_sum(T: Filling) -> RatFun:
    """sum_{y in PSYT(T)} prod_{Inv(y)} A*B; lik 1/K_T."""
    total = ZERO
    for tau in enumerate_psyt(T):
        total += product_A(tau) * product_B(tau)
    return total


# ----------------------------
# P_{0,l} og P_{l,0}
# ----------------------------

def _spherical(v: Union[VElement, SphericalElement]) -> VElement:
    if isinstance(v, SphericalElement):
        return v.element
    return SphericalElement.certify(v).element


def act_P0l(ell: int, v: Union[VElement, SphericalElement], trailing_epsilon: bool = False) -> VElement:
    """sum_i theta_i^l v for v i W_lambda; et ikke-sfærisk v gir CertificateError."""
    if ell < 1:
        raise ValueError(f"P_(0,{ell}) needs l >= 1")
    v = _spherical(v)
    out = VElement(v.shape)
    for i in range(1, v.n + 1):
        w = v
        for _ in range(ell):
            w = act_theta(i, w)
        out = out + w
    return epsilon_project(out) if trailing_epsilon else out


def eigenvalue_P0l(T: Filling, ell: int) -> RatFun:
    """sum over bokser q^{l T(b)} t^{l c(b)}."""
    out = ZERO
    for b in boxes(T.shape):
        out += qt_monomial(ell * T.value(b), ell * content(b))
    return out


def act_Pl0(ell: int, v: Union[VElement, SphericalElement], trailing_epsilon: bool = False) -> VElement:
    """q^l p_l(X) v."""
    if ell < 1:
        raise ValueError(f"P_({ell},0) needs l >= 1")
    v = _spherical(v)
    out = act_sym_mult("p", ell, v).scale(qt_monomial(ell, 0))
    return epsilon_project(out) if trailing_epsilon else out


def spectrum_distinct(fillings: Sequence[Filling], ell: int) -> bool:
    vals = [eigenvalue_P0l(T, ell) for T in fillings]
    return all(a != b for i, a in enumerate(vals) for b in vals[i + 1:])
