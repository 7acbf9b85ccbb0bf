"""
Produkt-sum-identiteten: lukket produktside mot summen over asymptotiske
periodiske standard tableauer, sammenlignet som t-adiske rekker.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from src.coeffs import (
    ONE,
    RatFun,
    TLaurentSeries,
    ZERO,
    composition_factorial,
    qt_monomial,
    t,
    t_power,
    t_series_expand,
)
from src.limits import OmegaFilling, rank_of
from src.spherical import K_coeff
from src.tableaux import (
    CertificateError,
    Filling,
    Partition,
    PeriodicTableau,
    boxes,
    content,
    enumerate_psyt,
    extended_shape,
    inversion_set,
    inversions,
    size,
    stats,
)


# ----------------------------
# Produktsiden
# ----------------------------

def _pair_data(T: Filling, b1, b2) -> Tuple[int, int]:
    """(Delta, Delta_c) = (T(b2) - T(b1), c(b2) - c(b1))."""
    return T.value(b2) - T.value(b1), content(b2) - content(b1)


def lhs_rational(T: OmegaFilling) -> RatFun:
    rk = rank_of(T)
    F = T.at_rank(rk)
    shift = rk - size(T.base)
    out = ONE
    for b in boxes(F.shape):
        out *= 1 - qt_monomial(-F.value(b), shift - content(b))
    out = out / ((1 - t) ** rk * composition_factorial(stats(F).mu))
    for b1, b2 in inversion_set(F):
        d, dc = _pair_data(F, b1, b2)
        out *= (1 - qt_monomial(d, dc)) / (1 - qt_monomial(d, dc + 1))
    return out


def lhs_series(T: OmegaFilling, order: int) -> TLaurentSeries:
    return t_series_expand(lhs_rational(T), order)


# ----------------------------
# Asymptotiske tableauer
# ----------------------------

@dataclass(frozen=True)
class AsymptoticTableau:
    """APSYT i minimal form: tableauet på vinduet lambda^(rank)."""

    base: Partition
    rank: int
    tableau: PeriodicTableau

    def render(self) -> str:
        return f"rk={self.rank}: {self.tableau.render()}"


def _drop_tail(base: Partition, tau: PeriodicTableau, r: int) -> PeriodicTableau:
    width = extended_shape(base, r)[0] if r > 0 else 0
    first = tau.rows[0][:width]
    rows = ((first,) if first else ()) + tau.rows[1:]
    return PeriodicTableau(rows)


def to_asymptotic(base: Partition, tau: PeriodicTableau, floor: int) -> AsymptoticTableau:
    """Minste vindu r >= floor der halen i første rad er r+1, r+2, ... med potens 0."""
    r = tau.n
    lam = size(base)
    while r > floor:
        col = r - lam
        if tau.label((1, col)) != (r, 0):
            break
        r -= 1
    return AsymptoticTableau(base, r, _drop_tail(base, tau, r) if r < tau.n else tau)


def enumerate_apsyt_bounded(T: OmegaFilling, max_inv: int, window: int) -> List[AsymptoticTableau]:
    """APSYT(lambda;T) med rang <= window og inv <= max_inv."""
    floor = rank_of(T)
    if window < floor:
        raise ValueError(f"invalid rank: window {window} < rank_of(T) = {floor}")
    out = []
    for tau in enumerate_psyt(T.at_rank(window)):
        a = to_asymptotic(T.base, tau, floor)
        if len(inversions(a.tableau)) <= max_inv:
            out.append(a)
    return out


def _certify_tail(base: Partition, tau: PeriodicTableau, a: AsymptoticTableau) -> None:
    if a.rank < tau.n and len(inversions(tau)) != len(inversions(a.tableau)):
        raise CertificateError(f"tail inversion found in {tau.render()}")


# ----------------------------
# Sumsiden
# ----------------------------

def _factor_valuation(d: int, k: int) -> Optional[int]:
    """t-valuasjon av 1 - q^d t^k, eller None hvis faktoren er 0."""
    if d == 0 and k == 0:
        return None
    return min(0, k)


def term_factors(tau: PeriodicTableau) -> List[Tuple[int, int]]:
    T = tau.filling()
    return [_pair_data(T, b1, b2) for b1, b2 in inversions(tau)]


def term_valuation(tau: PeriodicTableau) -> Optional[int]:
    """Eksakt t-valuasjon av t^inv prod (1 - q^D t^{Dc-1})/(1 - q^D t^{Dc+1}); None for nulledd."""
    factors = term_factors(tau)
    v = len(factors)
    for d, dc in factors:
        num = _factor_valuation(d, dc - 1)
        den = _factor_valuation(d, dc + 1)
        if num is None:
            return None
        if den is None:
            raise ZeroDivisionError(f"vanishing denominator in term for {tau.render()}")
        v += num - den
    return v


def term_rational(tau: PeriodicTableau) -> RatFun:
    out = ONE
    factors = term_factors(tau)
    for d, dc in factors:
        out *= (1 - qt_monomial(d, dc - 1)) / (1 - qt_monomial(d, dc + 1))
    return out * t_power(len(factors))


def finite_window_sum(T: OmegaFilling, m: int) -> RatFun:
    """Eksakt sum over PSYT(lambda^(m); T); lik 1/K_{T|lambda^(m)}."""
    total = ZERO
    for tau in enumerate_psyt(T.at_rank(m)):
        total += term_rational(tau)
    return total


def finite_window_identity(T: OmegaFilling, m: int) -> bool:
    return finite_window_sum(T, m) * K_coeff(T.at_rank(m)) == ONE


class _FactorCache:
    def __init__(self) -> None:
        self._store: Dict[Tuple[int, int, int], TLaurentSeries] = {}

    def get(self, d: int, dc: int, order: int) -> TLaurentSeries:
        key = (d, dc, order)
        hit = self._store.get(key)
        if hit is None:
            f = (1 - qt_monomial(d, dc - 1)) / (1 - qt_monomial(d, dc + 1))
            hit = t_series_expand(f, order)
            self._store[key] = hit
        return hit


def term_series(tau: PeriodicTableau, order: int, cache: Optional[_FactorCache] = None) -> TLaurentSeries:
    cache = cache or _FactorCache()
    v_term = term_valuation(tau)
    if v_term is None or v_term > order:
        return TLaurentSeries.zero(order)
    factors = term_factors(tau)
    inv = len(factors)
    out = TLaurentSeries.monomial(ONE, inv, order - v_term + inv)
    for d, dc in factors:
        v_j = _factor_valuation(d, dc - 1) - _factor_valuation(d, dc + 1)
        out = out * cache.get(d, dc, order - v_term + v_j)
    return out


@dataclass
class IdentityReport:
    T: OmegaFilling
    order: int
    lhs: TLaurentSeries
    rhs: TLaurentSeries
    status: str
    windows: int
    terms: List[AsymptoticTableau] = field(default_factory=list)
    first_mismatch: Optional[int] = None

    @property
    def verdict(self) -> Optional[bool]:
        if self.status == "inconclusive":
            return None
        return self.status == "pass"


def rhs_series(T: OmegaFilling, order: int, window_cap: int) -> Tuple[TLaurentSeries, List[AsymptoticTableau], int, bool]:
    """Summerer ledd med valuasjon <= order til to vinduer på rad ikke gir nye ledd."""
    floor = rank_of(T)
    cache = _FactorCache()
    total = TLaurentSeries.zero(order)
    used: List[AsymptoticTableau] = []
    quiet = 0
    m = floor
    while m <= window_cap:
        fresh = False
        for tau in enumerate_psyt(T.at_rank(m)):
            a = to_asymptotic(T.base, tau, floor)
            _certify_tail(T.base, tau, a)
            if a.rank != m:
                continue
            v = term_valuation(a.tableau)
            if v is None or v > order:
                continue
            fresh = True
            used.append(a)
            total = total + term_series(a.tableau, order, cache)
        quiet = 0 if fresh else quiet + 1
        if quiet >= 2:
            return total, used, m, True
        m += 1
    return total, used, window_cap, False


def verify_identity(T: OmegaFilling, order: int, window_cap: int = 40) -> IdentityReport:
    lhs = lhs_series(T, order)
    rhs, used, windows, settled = rhs_series(T, order, window_cap)
    if not settled:
        return IdentityReport(T, order, lhs, rhs, "inconclusive", windows, used)
    mismatch = None
    for k in range(min(lhs.valuation, rhs.valuation), order + 1):
        if lhs.coefficient(k) != rhs.coefficient(k):
            mismatch = k
            break
    status = "pass" if mismatch is None else "fail"
    return IdentityReport(T, order, lhs, rhs, status, windows, used, mismatch)
