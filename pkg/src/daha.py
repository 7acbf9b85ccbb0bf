"""
Polynomrepresentasjon V_lambda = C[X_1..X_n] (x) S^lambda av den doble
affine Hecke-algebraen, med vektvektorer F_tau.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import combinations, product
from typing import Callable, Dict, List, Optional, Sequence, Set, Tuple

from src import hecke
from src.coeffs import ONE, RatFun, Scalar, ZERO, q, qt_monomial, render, t, t_power
from src.linalg import in_span
from src.tableaux import (
    CertificateError,
    Filling,
    Partition,
    PeriodicTableau,
    Syt,
    min_top,
    enumerate_psyt,
    psi_inv,
    si_move,
    cover_raises,
    standard_tableaux,
    stats,
)

Alpha = Tuple[int, ...]
Key = Tuple[Alpha, Syt]


def _acc(out: Dict[Key, RatFun], key: Key, c: RatFun) -> None:
    if not c:
        return
    s = out.get(key)
    if s is None:
        out[key] = c
        return
    s = s + c
    if s:
        out[key] = s
    else:
        del out[key]


class VElement:
    """Endelig sum  sum c * X^alpha (x) u."""

    __slots__ = ("shape", "n", "terms")

    def __init__(self, shape: Sequence[int], terms: Optional[Dict[Key, RatFun]] = None):
        self.shape: Partition = tuple(shape)
        self.n = sum(self.shape)
        self.terms: Dict[Key, RatFun] = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def basis(cls, alpha: Sequence[int], u: Syt) -> "VElement":
        return cls(tuple(len(r) for r in u), {(tuple(alpha), u): ONE})

    @classmethod
    def zero(cls, shape: Sequence[int]) -> "VElement":
        return cls(shape)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, alpha: Sequence[int], u: Syt) -> RatFun:
        return self.terms.get((tuple(alpha), u), ZERO)

    def __add__(self, other: "VElement") -> "VElement":
        _same_space(self, other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return VElement(self.shape, out)

    def __neg__(self) -> "VElement":
        return VElement(self.shape, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "VElement") -> "VElement":
        return self + (-other)

    def scale(self, c: Scalar) -> "VElement":
        if not c:
            return VElement(self.shape)
        return VElement(self.shape, {k: c * x for k, x in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VElement):
            return NotImplemented
        return self.shape == other.shape and self.terms == other.terms

    def items(self) -> List[Tuple[Key, RatFun]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def degrees(self) -> List[int]:
        return sorted({sum(a) for a, _ in self.terms})

    def render(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"[{render(c)}]X^{a}(x){u}" for (a, u), c in self.items())


def _same_space(a: VElement, b: VElement) -> None:
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")


def _check_index(i: int, lo: int, hi: int, what: str) -> None:
    if not lo <= i <= hi:
        raise ValueError(f"{what}_{i} out of range [{lo}, {hi}]")


# ----------------------------
# Generatorer
# ----------------------------

def act_X(alpha: Sequence[int], v: VElement) -> VElement:
    if len(alpha) != v.n:
        raise ValueError(f"shape mismatch: exponent {tuple(alpha)} for n={v.n}")
    return VElement(v.shape, {
        (tuple(a + b for a, b in zip(al, alpha)), u): c for (al, u), c in v.terms.items()
    })


def act_X_index(i: int, v: VElement) -> VElement:
    _check_index(i, 1, v.n, "X")
    return act_X(tuple(1 if k == i - 1 else 0 for k in range(v.n)), v)


def act_T(i: int, v: VElement) -> VElement:
    """T_i f(X) (x) u = (s_i f)(X) (x) T_i u - (t-1) X_i (f - s_i f)/(X_i - X_{i+1}) (x) u."""
    _check_index(i, 1, v.n - 1, "T")
    out: Dict[Key, RatFun] = {}
    tm1 = t - 1
    for (alpha, u), c in v.terms.items():
        a, b = alpha[i - 1], alpha[i]
        head, tail = alpha[: i - 1], alpha[i + 1:]
        swapped = head + (b, a) + tail
        for u2, c2 in hecke.t_block(i, u):
            _acc(out, (swapped, u2), c * c2)
        if a > b:
            for k in range(a - b):
                _acc(out, (head + (a - k, b + k) + tail, u), -tm1 * c)
        elif a < b:
            for k in range(b - a):
                _acc(out, (head + (b - k, a + k) + tail, u), tm1 * c)
    return VElement(v.shape, out)


def act_T_inv(i: int, v: VElement) -> VElement:
    return (act_T(i, v) + v.scale(t - 1)).scale(ONE / t)


@lru_cache(maxsize=None)
def _pi_image(u: Syt) -> Tuple[Tuple[Syt, RatFun], ...]:
    """t^{n-1} T_1^{-1} ... T_{n-1}^{-1} u."""
    w = hecke.SeminormalElement.basis(u)
    n = hecke.syt_size(u)
    for i in range(n - 1, 0, -1):
        w = hecke.act_T_inv(i, w)
    return tuple(w.scale(t_power(n - 1)).items())


@lru_cache(maxsize=None)
def _pi_inv_image(u: Syt) -> Tuple[Tuple[Syt, RatFun], ...]:
    """t^{1-n} T_{n-1} ... T_1 u."""
    w = hecke.SeminormalElement.basis(u)
    n = hecke.syt_size(u)
    for i in range(1, n):
        w = hecke.act_T(i, w)
    return tuple(w.scale(t_power(1 - n)).items())


def act_pi(v: VElement) -> VElement:
    out: Dict[Key, RatFun] = {}
    for (alpha, u), c in v.terms.items():
        beta = alpha[-1:] + alpha[:-1]
        scal = c * q ** alpha[-1]
        for u2, c2 in _pi_image(u):
            _acc(out, (beta, u2), scal * c2)
    return VElement(v.shape, out)


def act_pi_inv(v: VElement) -> VElement:
    out: Dict[Key, RatFun] = {}
    for (alpha, u), c in v.terms.items():
        beta = alpha[1:] + alpha[:1]
        scal = c / q ** alpha[0]
        for u2, c2 in _pi_inv_image(u):
            _acc(out, (beta, u2), scal * c2)
    return VElement(v.shape, out)


def act_theta(i: int, v: VElement) -> VElement:
    """theta_i = t^{i-n} T_{i-1}^{-1}...T_1^{-1} pi T_{n-1}...T_i.

    T_k^{-1} = t^{-1}(T_k + t - 1); alle t^{-1} samles i en skalering til slutt.
    """
    n = v.n
    _check_index(i, 1, n, "theta")
    w = v
    for k in range(i, n):
        w = act_T(k, w)
    w = act_pi(w)
    tm1 = t - 1
    for k in range(1, i):
        w = act_T(k, w) + w.scale(tm1)
    return w.scale(t_power(1 - n))


_EXTRA_CACHES: List[dict] = []


def register_cache(cache: dict) -> dict:
    """Cache som skal tømmes sammen med F_tau (f.eks. P_T i spherical)."""
    _EXTRA_CACHES.append(cache)
    return cache


def clear_caches() -> None:
    _pi_image.cache_clear()
    _pi_inv_image.cache_clear()
    _F_CACHE.clear()
    _CERTIFIED.clear()
    for cache in _EXTRA_CACHES:
        cache.clear()


# ----------------------------
# Vektvektorer F_tau
# ----------------------------

def weight(tau: PeriodicTableau, i: int) -> RatFun:
    return qt_monomial(tau.w(i), tau.c(i))


def weights(tau: PeriodicTableau) -> Tuple[RatFun, ...]:
    return tuple(weight(tau, i) for i in range(1, tau.n + 1))


def intertwine(i: int, rho: PeriodicTableau, f_rho: VElement) -> VElement:
    """F_{s_i rho} = (t T_i^{-1} + (t-1) beta/(alpha-beta)) F_rho."""
    a, b = weight(rho, i), weight(rho, i + 1)
    if a == b:
        raise ValueError(f"intertwiner undefined at i={i} for {rho.render()}")
    return act_T(i, f_rho) + f_rho.scale((t - 1) * a / (a - b))


def raise_weight(rho: PeriodicTableau, f_rho: VElement) -> VElement:
    """F_{Psi rho} = q^{w_rho(1)} X_n pi^{-1} F_rho."""
    return act_X_index(rho.n, act_pi_inv(f_rho)).scale(q ** rho.w(1))


Chooser = Callable[[PeriodicTableau], Optional[Tuple[int, PeriodicTableau]]]


def _strict_descent_first(tau: PeriodicTableau) -> Optional[Tuple[int, PeriodicTableau]]:
    for i in range(1, tau.n):
        if tau.w(i) > tau.w(i + 1):
            return i, si_move(tau, i)
    return None


def _descent_last(tau: PeriodicTableau) -> Optional[Tuple[int, PeriodicTableau]]:
    """Største i med tau = s_i(rho) > rho, også ved lik potens."""
    for i in range(tau.n - 1, 0, -1):
        rho = si_move(tau, i)
        if rho is not None and cover_raises(rho, i):
            return i, rho
    return None


_F_CACHE: Dict[PeriodicTableau, VElement] = {}
_CERTIFIED: Set[PeriodicTableau] = set()


def _build(tau: PeriodicTableau, choose: Chooser, cache: Dict[PeriodicTableau, VElement]) -> VElement:
    hit = cache.get(tau)
    if hit is not None:
        return hit
    if tau.is_standard():
        v = VElement.basis((0,) * tau.n, tau.syt())
    else:
        step = choose(tau)
        if step is not None:
            i, rho = step
            v = intertwine(i, rho, _build(rho, choose, cache))
        else:
            rho = psi_inv(tau)
            v = raise_weight(rho, _build(rho, choose, cache))
    cache[tau] = v
    return v


@dataclass
class WeightVector:
    tableau: PeriodicTableau
    element: VElement
    weights: Tuple[RatFun, ...] = dc_field(default=())


def certify_weight(tau: PeriodicTableau, v: VElement) -> None:
    if v.is_zero():
        raise CertificateError(f"F is zero for {tau.render()}")
    for i in range(1, tau.n + 1):
        if act_theta(i, v) != v.scale(weight(tau, i)):
            raise CertificateError(f"theta_{i} spectrum check failed for {tau.render()}")


def build_F(tau: PeriodicTableau, certify: bool = False) -> WeightVector:
    """F_tau fra cachen. certify=True sjekker theta-spekteret, én gang per tau."""
    v = _build(tau, _strict_descent_first, _F_CACHE)
    if certify and tau not in _CERTIFIED:
        certify_weight(tau, v)
        _CERTIFIED.add(tau)
    return WeightVector(tableau=tau, element=v, weights=weights(tau))


def weight_path_variants(tau: PeriodicTableau) -> List[VElement]:
    """F_tau bygget langs alternative konstruksjonsveier (egen cache per vei)."""
    out = []
    for choose in (_strict_descent_first, _descent_last):
        out.append(_build(tau, choose, {}))
    return out


# ----------------------------
# Symmetriske funksjoner
# ----------------------------

def act_sym_mult(kind: str, r: int, v: VElement) -> VElement:
    """Multiplikasjon med e_r eller p_r i X_1..X_n."""
    n = v.n
    if kind == "e":
        if r < 0 or r > n:
            return VElement(v.shape)
        monos = [tuple(1 if k in s else 0 for k in range(n)) for s in combinations(range(n), r)]
    elif kind == "p":
        if r < 1:
            raise ValueError(f"p_{r} undefined")
        monos = [tuple(r if k == j else 0 for k in range(n)) for j in range(n)]
    else:
        raise ValueError(f"unknown symmetric function kind: {kind}")
    out = VElement(v.shape)
    for m in monos:
        out = out + act_X(m, v)
    return out


# ----------------------------
# Trianguleritet og U_T
# ----------------------------

def _dominance_le(a: Sequence[int], b: Sequence[int]) -> bool:
    sa, sb = 0, 0
    for x, y in zip(a, b):
        sa, sb = sa + x, sb + y
        if sa > sb:
            return False
    return True


def composition_precedes(beta: Sequence[int], gamma: Sequence[int]) -> bool:
    """beta < gamma i den sammensatte dominans/Bruhat-ordenen (avtagende er toppen)."""
    beta, gamma = tuple(beta), tuple(gamma)
    if beta == gamma or len(beta) != len(gamma) or sum(beta) != sum(gamma):
        return False
    sb, sg = sorted(beta, reverse=True), sorted(gamma, reverse=True)
    if sb != sg:
        return _dominance_le(sb, sg)
    for h in set(beta):
        cb = cg = 0
        for x, y in zip(beta, gamma):
            cb += x >= h
            cg += y >= h
            if cb > cg:
                return False
    return True


def check_triangularity(T: Filling, f_top: Optional[VElement] = None) -> bool:
    """F_Top = t^{-b} X^nu (x) S(T) + nedre ledd."""
    st = stats(T)
    if f_top is None:
        f_top = build_F(min_top(T)[1]).element
    if f_top.coefficient(st.nu, st.S) != t_power(-st.b):
        return False
    for (alpha, u), _ in f_top.terms.items():
        if alpha == st.nu:
            if u != st.S:
                return False
        elif not composition_precedes(alpha, st.nu):
            return False
    return True


def u_t_basis(T: Filling) -> List[WeightVector]:
    return [build_F(tau) for tau in enumerate_psyt(T)]


def u_t_closed(T: Filling) -> bool:
    """span{F_tau} er stabil under T_i og theta_i."""
    basis = [w.element for w in u_t_basis(T)]
    cols = [b.terms for b in basis]
    n = sum(T.shape)
    for v in basis:
        for i in range(1, n):
            if not in_span(cols, act_T(i, v).terms):
                return False
        for i in range(1, n + 1):
            if not in_span(cols, act_theta(i, v).terms):
                return False
    return True


# ----------------------------
# Relasjonssjekk
# ----------------------------

@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: int = 0
    examples: List[str] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failures == 0


@dataclass
class RelationReport:
    n: int
    shape: Partition
    degree: int
    checks: List[CheckResult]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def compositions_up_to(n: int, degree: int) -> List[Alpha]:
    out = [a for a in product(range(degree + 1), repeat=n) if sum(a) <= degree]
    return sorted(out, key=lambda a: (sum(a), a))


def _record(res: CheckResult, ok: bool, what: str) -> None:
    res.checked += 1
    if not ok:
        res.failures += 1
        if len(res.examples) < 10:
            res.examples.append(what)


def relation_suite(shape: Partition, degree: int) -> RelationReport:
    """Sjekker DAHA-relasjonene eksakt på alle X^alpha (x) u med |alpha| <= degree."""
    shape = tuple(shape)
    n = sum(shape)
    vectors = [
        (a, u, VElement.basis(a, u))
        for a in compositions_up_to(n, degree)
        for u in standard_tableaux(shape)
    ]
    names = [
        "hecke_quadratic", "hecke_braid", "hecke_far_commute",
        "theta_commute", "theta_recursion", "theta_T_commute",
        "X_commute", "X_recursion", "X_T_commute",
        "pi_X", "pi_X_n", "pi_inverse",
    ]
    res = {name: CheckResult(name) for name in names}
    tm1 = t - 1

    for a, u, v in vectors:
        tag = f"X^{a}(x){u}"
        thetas = {i: act_theta(i, v) for i in range(1, n + 1)}
        for i in range(1, n):
            Tv = act_T(i, v)
            lhs = act_T(i, Tv) + Tv.scale(tm1) - v.scale(t)
            _record(res["hecke_quadratic"], lhs.is_zero(), f"i={i} {tag}")
            if i + 1 < n:
                l = act_T(i, act_T(i + 1, Tv))
                r = act_T(i + 1, act_T(i, act_T(i + 1, v)))
                _record(res["hecke_braid"], l == r, f"i={i} {tag}")
            for j in range(i + 2, n):
                _record(res["hecke_far_commute"], act_T(i, act_T(j, v)) == act_T(j, Tv), f"i={i} j={j} {tag}")
            rec = act_T_inv(i, act_theta(i, act_T_inv(i, v))).scale(t)
            _record(res["theta_recursion"], rec == thetas[i + 1], f"i={i} {tag}")
            for j in range(1, n + 1):
                if j in (i, i + 1):
                    continue
                _record(res["theta_T_commute"], act_T(i, thetas[j]) == act_theta(j, Tv), f"i={i} j={j} {tag}")
            xi = act_X_index(i, act_T_inv(i, v))
            _record(res["X_recursion"], act_T_inv(i, xi).scale(t) == act_X_index(i + 1, v), f"i={i} {tag}")
            for j in range(1, n + 1):
                if j in (i, i + 1):
                    continue
                _record(res["X_T_commute"], act_T(i, act_X_index(j, v)) == act_X_index(j, Tv), f"i={i} j={j} {tag}")
        for i, j in combinations(range(1, n + 1), 2):
            _record(res["theta_commute"], act_theta(i, thetas[j]) == act_theta(j, thetas[i]), f"i={i} j={j} {tag}")
            _record(res["X_commute"], act_X_index(i, act_X_index(j, v)) == act_X_index(j, act_X_index(i, v)), f"i={i} j={j} {tag}")
        for i in range(1, n):
            _record(res["pi_X"], act_pi(act_X_index(i, v)) == act_X_index(i + 1, act_pi(v)), f"i={i} {tag}")
        _record(res["pi_X_n"], act_pi(act_X_index(n, v)) == act_X_index(1, act_pi(v)).scale(q), tag)
        _record(res["pi_inverse"], act_pi(act_pi_inv(v)) == v and act_pi_inv(act_pi(v)) == v, tag)

    return RelationReport(n=n, shape=shape, degree=degree, checks=[res[name] for name in names])
