from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Sequence, Tuple, Union

from sympy import Rational
from sympy.polys.domains import ZZ
from sympy.polys.fields import FracElement, field

# Eksakt kropp Q(q,t). Alle koeffisienter i prosjektet lever her.
QT, q, t = field("q,t", ZZ)
QT_DOMAIN = QT.to_domain()
ONE = QT.one
ZERO = QT.zero
_Q_SYM, _T_SYM = QT.symbols

RatFun = FracElement
Scalar = Union[int, FracElement]

_OPS: Dict[str, Callable[[RatFun, RatFun], RatFun]] = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def field_op(a: Scalar, b: Scalar, op: str) -> RatFun:
    """add/sub/mul/div i Q(q,t). Deling på 0 gir ZeroDivisionError."""
    if op not in _OPS:
        raise ValueError(f"unknown field operation: {op}")
    if op == "div" and not b:
        raise ZeroDivisionError("division by zero in Q(q,t)")
    return _OPS[op](ONE * a, ONE * b)


def ratfun_equal(a: Scalar, b: Scalar) -> bool:
    """Kryssmultiplikasjon: a.num*b.den == b.num*a.den."""
    a, b = ONE * a, ONE * b
    return a.numer * b.denom == b.numer * a.denom


def qt_monomial(a: int, b: int) -> RatFun:
    """q^a t^b, negative eksponenter tillatt."""
    num = q ** max(a, 0) * t ** max(b, 0)
    den = q ** max(-a, 0) * t ** max(-b, 0)
    return num / den


def t_power(k: int) -> RatFun:
    return qt_monomial(0, k)


def q_int(k: int) -> RatFun:
    """[k]_t = 1 + t + ... + t^(k-1)."""
    out = ZERO
    for i in range(k):
        out += t ** i
    return out


def t_factorial(k: int) -> RatFun:
    out = ONE
    for i in range(1, k + 1):
        out *= q_int(i)
    return out


def composition_factorial(mu: Sequence[int]) -> RatFun:
    """[mu]_t! = prod [mu_i]_t!."""
    out = ONE
    for part in mu:
        out *= t_factorial(part)
    return out


def gaussian_binomial(n: int, r: int) -> RatFun:
    if r < 0 or r > n:
        return ZERO
    return t_factorial(n) / (t_factorial(r) * t_factorial(n - r))


def elementary_principal(r: int, n: int) -> RatFun:
    """e_r(1, t, ..., t^(n-1)), regnet direkte med rekursjon over variablene."""
    e: List[RatFun] = [ONE] + [ZERO] * r
    for i in range(n):
        x = t ** i
        for k in range(r, 0, -1):
            e[k] = e[k] + x * e[k - 1]
    return e[r]


def evaluate(f: Scalar, q_value, t_value) -> Fraction:
    """Evaluerer f i rasjonale punkter. Pol i punktet gir ZeroDivisionError."""
    f = ONE * f
    qv, tv = Fraction(q_value), Fraction(t_value)
    subs = {
        _Q_SYM: Rational(qv.numerator, qv.denominator),
        _T_SYM: Rational(tv.numerator, tv.denominator),
    }
    den = f.denom.as_expr().subs(subs)
    if den == 0:
        raise ZeroDivisionError(f"pole at q={qv}, t={tv}")
    val = f.numer.as_expr().subs(subs) / den
    return Fraction(int(val.p), int(val.q))


# ----------------------------
# Kanonisk tekstform
# ----------------------------

def render_poly(p) -> str:
    """Ledd c*q^a*t^b sortert etter (a, b), skilt med '+'."""
    terms = sorted(p.terms(), key=lambda mc: mc[0])
    if not terms:
        return "0"
    return "+".join(f"{int(c)}*q^{m[0]}*t^{m[1]}" for m, c in terms)


def render(f: Scalar) -> str:
    f = ONE * f
    num = render_poly(f.numer)
    if f.denom == QT.ring.one:
        return num
    return f"({num})/({render_poly(f.denom)})"


# ----------------------------
# t-adiske Laurentrekker med koeffisienter i Q(q)
# ----------------------------

def _t_slices(poly) -> Dict[int, RatFun]:
    """Deler et polynom i Z[q,t] etter t-grad: {k: koeff av t^k i Q(q)}."""
    out: Dict[int, RatFun] = {}
    for (qe, te), c in poly.terms():
        out[te] = out.get(te, ZERO) + int(c) * q ** qe
    return {k: v for k, v in out.items() if v}


@dataclass(frozen=True)
class TLaurentSeries:
    """sum_{k=valuation}^{order} coeffs[k-valuation] t^k + O(t^(order+1)).

    Kanonisk form: ledende koeffisient er ulik 0, eller rekka er 0 modulo
    t^(order+1) og da er valuation = order + 1 og coeffs tom.
    """

    valuation: int
    coeffs: Tuple[RatFun, ...]
    order: int

    @classmethod
    def build(cls, valuation: int, coeffs: Sequence[RatFun], order: int) -> "TLaurentSeries":
        cs = list(coeffs)[: max(order - valuation + 1, 0)]
        v = valuation
        while cs and not cs[0]:
            cs.pop(0)
            v += 1
        if not cs:
            return cls(order + 1, (), order)
        return cls(v, tuple(cs), order)

    @classmethod
    def zero(cls, order: int) -> "TLaurentSeries":
        return cls(order + 1, (), order)

    @classmethod
    def monomial(cls, coeff: Scalar, power: int, order: int) -> "TLaurentSeries":
        return cls.build(power, [ONE * coeff], order)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> RatFun:
        if k > self.order:
            raise ValueError(f"coefficient t^{k} beyond truncation order {self.order}")
        i = k - self.valuation
        if i < 0 or i >= len(self.coeffs):
            return ZERO
        return self.coeffs[i]

    def truncate(self, order: int) -> "TLaurentSeries":
        if order > self.order:
            raise ValueError(f"cannot raise truncation order {self.order} to {order}")
        return TLaurentSeries.build(self.valuation, self.coeffs, order)

    def __add__(self, other: "TLaurentSeries") -> "TLaurentSeries":
        order = min(self.order, other.order)
        v = min(self.valuation, other.valuation)
        cs = [self.coefficient(k) + other.coefficient(k) for k in range(v, order + 1)]
        return TLaurentSeries.build(v, cs, order)

    def __neg__(self) -> "TLaurentSeries":
        return TLaurentSeries(self.valuation, tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other: "TLaurentSeries") -> "TLaurentSeries":
        return self + (-other)

    def __mul__(self, other: "TLaurentSeries") -> "TLaurentSeries":
        order = min(self.order + other.valuation, other.order + self.valuation)
        if self.is_zero() or other.is_zero():
            return TLaurentSeries.zero(order)
        v = self.valuation + other.valuation
        cs: List[RatFun] = []
        for k in range(v, order + 1):
            acc = ZERO
            for i, a in enumerate(self.coeffs):
                j = k - (self.valuation + i) - other.valuation
                if j < 0:
                    break
                if j < len(other.coeffs):
                    acc += a * other.coeffs[j]
            cs.append(acc)
        return TLaurentSeries.build(v, cs, order)

    def agrees_with(self, other: "TLaurentSeries", order: int) -> bool:
        return all(
            self.coefficient(k) == other.coefficient(k)
            for k in range(min(self.valuation, other.valuation), order + 1)
        )

    def render(self) -> str:
        if self.is_zero():
            return f"O(t^{self.order + 1})"
        parts = [
            f"[{render(c)}]*t^{self.valuation + i}"
            for i, c in enumerate(self.coeffs)
            if c
        ]
        return " + ".join(parts) + f" + O(t^{self.order + 1})"


def t_series_expand(f: Scalar, order: int) -> TLaurentSeries:
    """t-adisk utvikling av f i Q(q)((t)) til og med t^order."""
    f = ONE * f
    if not f:
        return TLaurentSeries.zero(order)
    num = _t_slices(f.numer)
    den = _t_slices(f.denom)
    a, b = min(num), min(den)
    d0 = den[b]
    if not d0:
        raise ValueError(f"not expandable in t: {render(f)}")
    v = a - b
    length = order - v + 1
    if length <= 0:
        return TLaurentSeries.zero(order)
    num_c = [num.get(a + k, ZERO) for k in range(length)]
    den_c = [den.get(b + k, ZERO) for k in range(length)]
    out: List[RatFun] = []
    for k in range(length):
        acc = num_c[k]
        for j in range(1, k + 1):
            if den_c[j]:
                acc -= den_c[j] * out[k - j]
        out.append(acc / d0)
    return TLaurentSeries.build(v, out, order)
