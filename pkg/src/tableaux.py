from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

Partition = Tuple[int, ...]
Box = Tuple[int, int]              # (rad, kolonne), 1-basert
Label = Tuple[int, int]            # (indeks, potens)
Syt = Tuple[Tuple[int, ...], ...]  # standard tableau, rader av indekser


class CertificateError(RuntimeError):
    """Et internt sertifikat feilet (spektrum, Min/Top, hale-inversjoner, ...)."""


# ----------------------------
# Partisjoner og bokser
# ----------------------------

def partition(parts: Iterable[int]) -> Partition:
    p = tuple(int(x) for x in parts)
    if any(x <= 0 for x in p):
        raise ValueError(f"partition parts must be positive: {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"partition must be weakly decreasing: {p}")
    return p


def size(shape: Sequence[int]) -> int:
    return sum(shape)


def n_lambda(base: Partition) -> int:
    """Minste n der lambda^(n) er en partisjon."""
    return size(base) + (base[0] if base else 0)


def extended_shape(base: Partition, n: int) -> Partition:
    """lambda^(n) = (n - |lambda|, lambda_1, lambda_2, ...)."""
    if n < n_lambda(base):
        raise ValueError(f"invalid rank: n={n} < n_lambda={n_lambda(base)} for base {base}")
    first = n - size(base)
    return tuple(p for p in (first,) + tuple(base) if p > 0)


def boxes(shape: Sequence[int]) -> List[Box]:
    """Bokser i radvis rekkefølge."""
    return [(r + 1, c + 1) for r, length in enumerate(shape) for c in range(length)]


def content(box: Box) -> int:
    return box[1] - box[0]


def column_standard_order(shape: Sequence[int]) -> List[Box]:
    return sorted(boxes(shape), key=lambda b: (b[1], b[0]))


def _neighbours_before(box: Box) -> List[Box]:
    r, c = box
    out = []
    if c > 1:
        out.append((r, c - 1))
    if r > 1:
        out.append((r - 1, c))
    return out


# ----------------------------
# Fyllinger
# ----------------------------

@dataclass(frozen=True)
class Filling:
    """Ikke-negativ heltallsfylling av en partisjonsform."""

    rows: Tuple[Tuple[int, ...], ...]

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def degree(self) -> int:
        return sum(sum(r) for r in self.rows)

    def value(self, box: Box) -> int:
        return self.rows[box[0] - 1][box[1] - 1]

    def to_json(self) -> List[List[int]]:
        return [list(r) for r in self.rows]


def make_filling(rows: Iterable[Iterable[int]]) -> Filling:
    rs = tuple(tuple(int(x) for x in row) for row in rows)
    rs = tuple(r for r in rs if r)
    partition(len(r) for r in rs)
    if any(x < 0 for r in rs for x in r):
        raise ValueError(f"malformed filling: negative entry in {rs}")
    return Filling(rs)


def zero_filling(shape: Sequence[int]) -> Filling:
    return Filling(tuple(tuple(0 for _ in range(length)) for length in shape))


def is_ryt(T: Filling) -> bool:
    """Svakt avtagende langs rader og nedover kolonner."""
    for (r, c) in boxes(T.shape):
        for nb in _neighbours_before((r, c)):
            if T.value(nb) < T.value((r, c)):
                return False
    return True


def is_rssyt(T: Filling) -> bool:
    """RYT med strengt avtagende kolonner."""
    if not is_ryt(T):
        return False
    for (r, c) in boxes(T.shape):
        if r > 1 and T.value((r - 1, c)) == T.value((r, c)):
            return False
    return True


def require_ryt(T: Filling) -> None:
    if not is_ryt(T):
        raise ValueError(f"malformed filling: not a reverse Young tableau: {T.to_json()}")


def require_rssyt(T: Filling) -> None:
    if not is_rssyt(T):
        raise ValueError(f"malformed filling: not a reverse semistandard tableau: {T.to_json()}")


def enumerate_fillings(shape: Sequence[int], degree: int, kind: str = "RSSYT") -> List[Filling]:
    """Alle RYT/RSSYT av gitt form og grad, i leksikografisk radvis rekkefølge."""
    if kind not in ("RYT", "RSSYT"):
        raise ValueError(f"unknown filling kind: {kind}")
    strict = kind == "RSSYT"
    cells = boxes(shape)
    vals: Dict[Box, int] = {}
    out: List[Filling] = []

    def place(k: int, remaining: int) -> None:
        if k == len(cells):
            if remaining == 0:
                out.append(Filling(tuple(
                    tuple(vals[(r + 1, c + 1)] for c in range(length))
                    for r, length in enumerate(shape)
                )))
            return
        r, c = cells[k]
        hi = remaining
        if c > 1:
            hi = min(hi, vals[(r, c - 1)])
        if r > 1:
            hi = min(hi, vals[(r - 1, c)] - (1 if strict else 0))
        for v in range(0, hi + 1):
            vals[(r, c)] = v
            place(k + 1, remaining - v)
        vals.pop((r, c), None)

    place(0, degree)
    return out


def restrict_filling(T: Filling, shape: Sequence[int]) -> Filling:
    """Restriksjon til en mindre form (krever 0 i de fjernede boksene)."""
    for box in boxes(T.shape):
        r, c = box
        inside = r <= len(shape) and c <= shape[r - 1]
        if not inside and T.value(box) != 0:
            raise ValueError(f"shape mismatch: nonzero entry at {box} outside {tuple(shape)}")
    return Filling(tuple(
        tuple(T.rows[r][c] for c in range(length)) for r, length in enumerate(shape)
    ))


def extend_filling(T: Filling, shape: Sequence[int]) -> Filling:
    """Nullutvidelse til en større form."""
    rows = []
    for r, length in enumerate(shape):
        old = T.rows[r] if r < len(T.rows) else ()
        if len(old) > length:
            raise ValueError(f"shape mismatch: {T.shape} does not fit in {tuple(shape)}")
        rows.append(tuple(old) + (0,) * (length - len(old)))
    if len(T.rows) > len(shape):
        raise ValueError(f"shape mismatch: {T.shape} does not fit in {tuple(shape)}")
    return Filling(tuple(rows))


# ----------------------------
# Periodiske standard tableauer
# ----------------------------

def label_less(a: Label, b: Label) -> bool:
    """(i,m) < (k,l) hvis m > l, eller m == l og i < k."""
    return a[1] > b[1] or (a[1] == b[1] and a[0] < b[0])


@lru_cache(maxsize=None)
def _positions(rows) -> Dict[int, Box]:
    return {lab[0]: (r + 1, c + 1) for r, row in enumerate(rows) for c, lab in enumerate(row)}


@dataclass(frozen=True)
class PeriodicTableau:
    """Bijeksjon bokser -> {1..n} med potens per boks."""

    rows: Tuple[Tuple[Label, ...], ...]

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    def label(self, box: Box) -> Label:
        return self.rows[box[0] - 1][box[1] - 1]

    def position(self, index: int) -> Box:
        return _positions(self.rows)[index]

    def w(self, index: int) -> int:
        return self.label(self.position(index))[1]

    def c(self, index: int) -> int:
        return content(self.position(index))

    def weights(self) -> Tuple[int, ...]:
        return tuple(self.w(i) for i in range(1, self.n + 1))

    def filling(self) -> Filling:
        return Filling(tuple(tuple(lab[1] for lab in row) for row in self.rows))

    def syt(self) -> Syt:
        return tuple(tuple(lab[0] for lab in row) for row in self.rows)

    def is_standard(self) -> bool:
        return all(lab[1] == 0 for row in self.rows for lab in row)

    def to_json(self) -> List[List[Dict[str, int]]]:
        return [[{"i": lab[0], "b": lab[1]} for lab in row] for row in self.rows]

    def render(self) -> str:
        return " / ".join(" ".join(f"{i}q{b}" for i, b in row) for row in self.rows)


def tableau_from_labels(shape: Sequence[int], labels: Dict[Box, Label]) -> PeriodicTableau:
    return PeriodicTableau(tuple(
        tuple(labels[(r + 1, c + 1)] for c in range(length)) for r, length in enumerate(shape)
    ))


def make_tableau(rows: Iterable[Iterable[Tuple[int, int]]]) -> PeriodicTableau:
    return PeriodicTableau(tuple(tuple((int(i), int(b)) for i, b in row) for row in rows))


def from_syt(u: Syt) -> PeriodicTableau:
    return PeriodicTableau(tuple(tuple((i, 0) for i in row) for row in u))


def is_psyt(tau: PeriodicTableau) -> bool:
    idx = sorted(lab[0] for row in tau.rows for lab in row)
    if idx != list(range(1, tau.n + 1)):
        return False
    if any(lab[1] < 0 for row in tau.rows for lab in row):
        return False
    for box in boxes(tau.shape):
        for nb in _neighbours_before(box):
            if not label_less(tau.label(nb), tau.label(box)):
                return False
    return True


def enumerate_psyt(T: Filling) -> List[PeriodicTableau]:
    """PSYT(lambda;T) i leksikografisk rekkefølge av indeksvektoren (radvis)."""
    require_ryt(T)
    shape = T.shape
    n = size(shape)
    cells = boxes(shape)
    used = [False] * (n + 1)
    assign: Dict[Box, int] = {}
    out: List[PeriodicTableau] = []

    def place(k: int) -> None:
        if k == len(cells):
            out.append(tableau_from_labels(shape, {b: (assign[b], T.value(b)) for b in cells}))
            return
        box = cells[k]
        p = T.value(box)
        lo = 0
        for nb in _neighbours_before(box):
            if T.value(nb) == p:
                lo = max(lo, assign[nb])
        for idx in range(lo + 1, n + 1):
            if used[idx]:
                continue
            used[idx] = True
            assign[box] = idx
            place(k + 1)
            used[idx] = False
        assign.pop(box, None)

    place(0)
    return out


@lru_cache(maxsize=None)
def standard_tableaux(shape: Partition) -> Tuple[Syt, ...]:
    return tuple(tau.syt() for tau in enumerate_psyt(zero_filling(shape)))


def psi(tau: PeriodicTableau) -> PeriodicTableau:
    """(1,m) -> (n,m+1), (i,m) -> (i-1,m) for i > 1."""
    n = tau.n
    return PeriodicTableau(tuple(
        tuple((n, b + 1) if i == 1 else (i - 1, b) for i, b in row) for row in tau.rows
    ))


def psi_inv(tau: PeriodicTableau) -> PeriodicTableau:
    n = tau.n
    if tau.w(n) < 1:
        raise ValueError(f"psi_inv undefined: index {n} has power 0 in {tau.render()}")
    return PeriodicTableau(tuple(
        tuple((1, b - 1) if i == n else (i + 1, b) for i, b in row) for row in tau.rows
    ))


def si_move(tau: PeriodicTableau, i: int) -> Optional[PeriodicTableau]:
    """Bytter indeksene i og i+1, eller None hvis resultatet ikke er PSYT."""
    if not 1 <= i < tau.n:
        raise ValueError(f"s_{i} out of range for n={tau.n}")
    a, b = tau.position(i), tau.position(i + 1)
    if tau.label(a)[1] == tau.label(b)[1]:
        dr, dc = abs(a[0] - b[0]), abs(a[1] - b[1])
        if (dr, dc) in ((0, 1), (1, 0)):
            return None
    return PeriodicTableau(tuple(
        tuple((i + 1, m) if k == i else (i, m) if k == i + 1 else (k, m) for k, m in row)
        for row in tau.rows
    ))


def cover_raises(tau: PeriodicTableau, i: int) -> bool:
    """s_i(tau) > tau (forutsetter at s_i(tau) er gyldig)."""
    wi, wj = tau.w(i), tau.w(i + 1)
    if wi != wj:
        return wi < wj
    return tau.c(i) - tau.c(i + 1) > 1


def raising_covers(tau: PeriodicTableau) -> List[int]:
    return [i for i in range(1, tau.n) if si_move(tau, i) is not None and cover_raises(tau, i)]


def lowering_covers(tau: PeriodicTableau) -> List[int]:
    out = []
    for i in range(1, tau.n):
        s = si_move(tau, i)
        if s is not None and cover_raises(s, i):
            out.append(i)
    return out


# ----------------------------
# S(T), Min, Top, statistikk
# ----------------------------

@lru_cache(maxsize=None)
def s_order(T: Filling) -> Dict[Box, int]:
    """Boks -> indeks i S(T): synkende T, likt T i kolonnestandard rekkefølge."""
    order = sorted(boxes(T.shape), key=lambda b: (-T.value(b), b[1], b[0]))
    return {b: k + 1 for k, b in enumerate(order)}


def top_tableau(T: Filling) -> PeriodicTableau:
    require_ryt(T)
    rank = s_order(T)
    return tableau_from_labels(T.shape, {b: (rank[b], T.value(b)) for b in rank})


def min_tableau(T: Filling) -> PeriodicTableau:
    require_ryt(T)
    order = sorted(boxes(T.shape), key=lambda b: (T.value(b), b[0], b[1]))
    return tableau_from_labels(T.shape, {b: (k + 1, T.value(b)) for k, b in enumerate(order)})


def min_top(T: Filling) -> Tuple[PeriodicTableau, PeriodicTableau]:
    """Lukkede former for Min/Top, sertifisert lokalt; uttømmende søk som reserve."""
    lo, hi = min_tableau(T), top_tableau(T)
    if is_psyt(lo) and is_psyt(hi) and not lowering_covers(lo) and not raising_covers(hi):
        return lo, hi
    elems = enumerate_psyt(T)
    bottoms = [x for x in elems if not lowering_covers(x)]
    tops = [x for x in elems if not raising_covers(x)]
    if len(bottoms) != 1 or len(tops) != 1:
        raise CertificateError(f"no unique extremum in PSYT for {T.to_json()}")
    return bottoms[0], tops[0]


def interval_closed(T: Filling) -> bool:
    """Alle tau i PSYT(T) nås opp fra Min og ned fra Top via dekkrelasjoner."""
    elems = set(enumerate_psyt(T))
    lo, hi = min_top(T)

    def reach(start: PeriodicTableau, upward: bool) -> set:
        seen = {start}
        todo = [start]
        while todo:
            cur = todo.pop()
            steps = raising_covers(cur) if upward else lowering_covers(cur)
            for i in steps:
                nxt = si_move(cur, i)
                if nxt not in seen:
                    seen.add(nxt)
                    todo.append(nxt)
        return seen

    return reach(lo, True) == elems and reach(hi, False) == elems


@dataclass(frozen=True)
class Stats:
    S: Syt
    nu: Tuple[int, ...]
    b: int
    mu: Tuple[int, ...]


def stats(T: Filling) -> Stats:
    require_ryt(T)
    rank = s_order(T)
    n = size(T.shape)
    by_index = {k: b for b, k in rank.items()}
    S = tuple(tuple(rank[(r + 1, c + 1)] for c in range(length)) for r, length in enumerate(T.shape))
    nu = tuple(T.value(by_index[i]) for i in range(1, n + 1))
    b = sum(nu[i - 1] * (content(by_index[i]) + i - 1) for i in range(1, n + 1))

    # mu: blokker av i, i+1 i samme rad av Min(T) med lik potens
    lo = min_tableau(T)
    mu: List[int] = []
    run = 1
    for i in range(1, n):
        a, c = lo.position(i), lo.position(i + 1)
        if a[0] == c[0] and lo.w(i) == lo.w(i + 1):
            run += 1
        else:
            mu.append(run)
            run = 1
    if n:
        mu.append(run)
    return Stats(S=S, nu=nu, b=b, mu=tuple(mu))


def filling_from_stats(shape: Sequence[int], S: Syt, nu: Sequence[int]) -> Filling:
    """Inversen av T -> (S(T), nu(T))."""
    return Filling(tuple(tuple(nu[S[r][c] - 1] for c in range(length)) for r, length in enumerate(shape)))


def inversions(tau: PeriodicTableau) -> Tuple[Tuple[Box, Box], ...]:
    """Par (b1,b2) med S(b1) < S(b2) og indeks(b1) > indeks(b2), sortert etter S."""
    rank = s_order(tau.filling())
    order = sorted(rank, key=rank.get)
    out = []
    for b1, b2 in combinations(order, 2):
        if tau.label(b1)[0] > tau.label(b2)[0]:
            out.append((b1, b2))
    return tuple(out)


def inversion_set(T: Filling) -> Tuple[Tuple[Box, Box], ...]:
    """I(T) = Inv(Min(T))."""
    return inversions(min_tableau(T))
