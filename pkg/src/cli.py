from __future__ import annotations

import argparse
import io
import json
import random
from contextlib import redirect_stdout
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Tuple

from src.coeffs import evaluate, render
from src.config import DEFAULTS, LIMITS, InfeasibleRequest, check_limit
from src.daha import build_F, check_triangularity
from src.limits import (
    OmegaFilling,
    delta_eigenvalue,
    delta_truncated,
    intertwine_check,
    macdonald_family,
    omega_filling,
    phi_map,
    rank_of,
    top_family,
)
from src.pieri import pieri_table, stable_coeff
from src.report import (
    canonical_json,
    encode_filling,
    encode_series,
    encode_tableau,
    encode_velement,
    render_table,
    render_text,
    render_velement_table,
    write_report,
)
from src.selftest import build_checks, run_checks
from src.series import verify_identity
from src.spherical import K_coeff, compute_P_formula, compute_P_projection, p_expansion
from src.tableaux import (
    CertificateError,
    Filling,
    enumerate_fillings,
    enumerate_psyt,
    inversion_set,
    make_filling,
    make_tableau,
    min_top,
    partition,
    psi,
    stats,
)

EXIT_OK = 0
EXIT_FAIL = 2
EXIT_INCONCLUSIVE = 3


# ----------------------------
# Parsing
# ----------------------------

def parse_shape(text: str) -> Tuple[int, ...]:
    s = (text or "").strip().strip("[]()")
    if not s:
        return ()
    return partition(int(x) for x in s.split(",") if x.strip())


def parse_rows(text: str) -> List[List[int]]:
    data = json.loads(text)
    if not isinstance(data, list):
        raise ValueError(f"malformed filling: {text!r}")
    if all(isinstance(x, int) for x in data):
        return [data]
    return [list(r) for r in data]


def _filling(args) -> Filling:
    if args.T is None:
        raise ValueError("missing --T")
    T = make_filling(parse_rows(args.T))
    if args.shape is not None and T.shape != parse_shape(args.shape):
        raise ValueError(f"shape mismatch: T has shape {T.shape}, --shape is {parse_shape(args.shape)}")
    return T


def _omega(args) -> OmegaFilling:
    return omega_filling(parse_shape(args.base), parse_rows(args.T))


# ----------------------------
# Kommandoer
# ----------------------------

def _enumerate_rssyt(shape: Tuple[int, ...], degree: int, unsafe: bool) -> Dict[str, Any]:
    check_limit("max_boxes", sum(shape), unsafe)
    check_limit("max_degree", degree, unsafe)
    by_degree = {d: [F.to_json() for F in enumerate_fillings(shape, d, "RSSYT")] for d in range(degree + 1)}
    return {
        "shape": list(shape),
        "degree": degree,
        "counts": [len(by_degree[d]) for d in range(degree + 1)],
        "fillings": [F for d in range(degree + 1) for F in by_degree[d]],
    }


def cmd_tableaux(args) -> Tuple[int, Dict[str, Any], str]:
    if args.T is None:
        if args.shape is None or args.degree is None:
            raise ValueError("tableaux needs --T, or --shape together with --degree")
        listing = _enumerate_rssyt(parse_shape(args.shape), args.degree, args.unsafe_large)
        text = render_text(f"[tableaux] RSSYT shape={tuple(listing['shape'])} degree<={args.degree}", [
            ("antall per grad", listing["counts"]),
            ("RSSYT", "\n".join(str(F) for F in listing["fillings"]) or "(ingen)"),
        ])
        return EXIT_OK, {"rssyt": listing}, text

    T = _filling(args)
    st = stats(T)
    lo, hi = min_top(T)
    result = {
        "shape": list(T.shape),
        "T": encode_filling(T),
        "S": [list(r) for r in st.S],
        "nu": list(st.nu),
        "b": st.b,
        "mu": list(st.mu),
        "min": encode_tableau(lo),
        "top": encode_tableau(hi),
        "psi_top": encode_tableau(psi(hi)),
        "inversions": [[list(b1), list(b2)] for b1, b2 in inversion_set(T)],
    }
    sections = [
        ("S(T)", st.S), ("nu", st.nu), ("b_T", st.b), ("mu(T)", st.mu),
        ("Min(T)", lo.render()), ("Top(T)", hi.render()), ("Psi(Top)", psi(hi).render()),
        ("I(T)", len(result["inversions"])),
    ]
    if args.psyt:
        check_limit("max_boxes", sum(T.shape), args.unsafe_large)
        taus = enumerate_psyt(T)
        result["psyt"] = [encode_tableau(tau) for tau in taus]
        sections.append((f"PSYT(T) ({len(taus)})", "\n".join(tau.render() for tau in taus)))
    if args.degree is not None:
        result["rssyt"] = _enumerate_rssyt(T.shape, args.degree, args.unsafe_large)
        sections.append(("RSSYT per grad", result["rssyt"]["counts"]))
    return EXIT_OK, result, render_text("[tableaux] " + str(T.to_json()), sections)


def cmd_weight(args) -> Tuple[int, Dict[str, Any], str]:
    if args.tau:
        taus = [make_tableau(parse_tau(args.tau))]
    else:
        T = _filling(args)
        check_limit("max_boxes", sum(T.shape), args.unsafe_large)
        lo, hi = min_top(T)
        taus = {"top": [hi], "min": [lo], "all": enumerate_psyt(T)}[args.which]
    out = []
    sections = []
    for tau in taus:
        wv = build_F(tau, certify=True)
        out.append({
            "tableau": encode_tableau(tau),
            "weights": [render(w) for w in wv.weights],
            "F": encode_velement(wv.element),
        })
        sections.append((tau.render(), render_velement_table(wv.element)))
    result = {"vectors": out}
    return EXIT_OK, result, render_text("[weight] theta-spektrum sertifisert", sections)


def parse_tau(text: str):
    data = json.loads(text)
    return [[(int(i), int(b)) for i, b in row] for row in data]


def cmd_macdonald(args) -> Tuple[int, Dict[str, Any], str]:
    T = _filling(args)
    n = sum(T.shape)
    check_limit("max_boxes", n, args.unsafe_large)
    P = compute_P_formula(T)
    result: Dict[str, Any] = {
        "T": encode_filling(T),
        "K": render(K_coeff(T)),
        "expansion": [{"tableau": encode_tableau(tau), "coeff": render(c)} for tau, c in p_expansion(T)],
        "P": encode_velement(P),
        "triangular": check_triangularity(T),
    }
    code = EXIT_OK if result["triangular"] else EXIT_FAIL
    sections = [("K_T", result["K"]), ("P_T", render_velement_table(P))]
    if args.check_projection:
        check_limit("max_rank_epsilon", n, args.unsafe_large)
        proj = compute_P_projection(T)
        agree = proj.dim == 1 and proj.element == P
        result["projection"] = {"dim": proj.dim, "agree": agree}
        sections.append(("eps-projeksjon", f"dim={proj.dim} agree={agree}"))
        if not agree:
            code = EXIT_FAIL
    if args.evaluate:
        rng = random.Random(args.seed)
        point = (Fraction(rng.randint(2, 9), rng.randint(1, 5)), Fraction(rng.randint(2, 9), rng.randint(6, 11)))
        values = [
            {"alpha": list(a), "tableau": [list(r) for r in u], "value": str(evaluate(c, *point))}
            for (a, u), c in P.items()
        ]
        result["evaluation"] = {"q": str(point[0]), "t": str(point[1]), "values": values}
        sections.append((f"verdier i q={point[0]}, t={point[1]}", render_table(values, ["alpha", "tableau", "value"])))
    return code, result, render_text("[macdonald] " + str(T.to_json()), sections)


def cmd_phi(args) -> Tuple[int, Dict[str, Any], str]:
    T = _omega(args)
    n = args.n
    if n < rank_of(T):
        raise ValueError(f"invalid rank: n={n} < rank_of(T) = {rank_of(T)}")
    if args.window < 1:
        raise ValueError(f"invalid rank window: {args.window}")
    ranks = list(range(n, n + args.window + 1))
    span_degree = args.span_degree if args.span_degree is not None else T.degree
    check_limit("max_boxes", ranks[-1], args.unsafe_large)
    check_limit("max_degree", span_degree, args.unsafe_large)

    fam = macdonald_family(T, ranks)
    tops = top_family(T, ranks)
    bad_P, bad_top = set(fam.check()), set(tops.check())
    rows = []
    ok = not bad_P and not bad_top
    for m in ranks:
        P = fam.entries[m]
        row: Dict[str, Any] = {"n": m}
        if m + 1 in fam.entries:
            row["P_compatible"] = m not in bad_P
            row["top_compatible"] = m not in bad_top
        for ell in (1, 2):
            ev = delta_eigenvalue(T, ell)
            good = delta_truncated(T.base, m, ell, P) == P.scale(ev)
            row[f"delta{ell}"] = render(ev)
            row[f"delta{ell}_ok"] = good
            ok = ok and good
            if m + 1 in fam.entries:
                rep = intertwine_check(T.base, m, ell, span_degree)
                row[f"intertwine{ell}"] = f"{rep.checked - len(rep.failures)}/{rep.checked}"
                ok = ok and rep.ok
        rows.append(row)

    result = {
        "base": list(T.base),
        "T": encode_filling(T.canonical().filling),
        "ranks": ranks,
        "span_degree": span_degree,
        "phi": encode_velement(phi_map(T.base, n, fam.entries[n + 1])),
        "agree": not bad_P,
        "rows": rows,
        "ok": ok,
    }
    cols = ["n", "P_compatible", "top_compatible", "delta1_ok", "delta2_ok", "intertwine1", "intertwine2"]
    text = render_text(f"[phi] ranks={ranks[0]}..{ranks[-1]} ok={ok}", [
        ("per rang", render_table(rows, cols)),
        ("Delta_1, Delta_2", f"{rows[0]['delta1']} ; {rows[0]['delta2']}"),
    ])
    return (EXIT_OK if ok else EXIT_FAIL), result, text


def cmd_pieri(args) -> Tuple[int, Dict[str, Any], str]:
    T = _omega(args)
    n = args.n if args.n is not None else rank_of(T) + args.r
    check_limit("max_boxes", n, args.unsafe_large)
    check_limit("max_rank_epsilon", n, args.unsafe_large)
    F = T.at_rank(n)
    entries = pieri_table(F, args.r, with_oracle=not args.no_oracle)
    rows = []
    ok = True
    for e in entries:
        row = {"S": str(e.S.to_json()), "formula": render(e.formula)}
        if e.oracle is not None:
            row["oracle"] = render(e.oracle)
            row["agree"] = e.agree
            ok = ok and bool(e.agree)
        if args.stable:
            row["stable"] = render(stable_coeff(OmegaFilling(T.base, e.S), T, args.r))
        rows.append(row)
    result = {"base": list(T.base), "n": n, "r": args.r, "T": encode_filling(F), "entries": rows, "ok": ok}
    cols = [c for c in ("S", "formula", "oracle", "agree", "stable") if any(c in r for r in rows)]
    text = render_text(f"[pieri] T={F.to_json()} r={args.r} entries={len(rows)} ok={ok}", [("d_(S,T)", render_table(rows, cols))])
    return (EXIT_OK if ok else EXIT_FAIL), result, text


def cmd_identity(args) -> Tuple[int, Dict[str, Any], str]:
    T = _omega(args)
    order = args.order if args.order is not None else int(DEFAULTS.get("order", 12))
    check_limit("max_order", order, args.unsafe_large)
    cap = int(LIMITS.get("window_cap", 40)) if not args.unsafe_large else max(order * 4, 40)
    rep = verify_identity(T, order, window_cap=cap)
    result = {
        "base": list(T.base),
        "T": encode_filling(T.canonical().filling),
        "order": order,
        "status": rep.status,
        "windows": rep.windows,
        "terms": len(rep.terms),
        "lhs": encode_series(rep.lhs),
        "rhs": encode_series(rep.rhs),
        "first_mismatch": rep.first_mismatch,
    }
    text = render_text(f"[identity] status={rep.status} order={order} windows={rep.windows}", [
        ("venstre side", rep.lhs.render()),
        ("høyre side", rep.rhs.render()),
        ("ledd brukt", len(rep.terms)),
    ])
    code = {"pass": EXIT_OK, "fail": EXIT_FAIL, "inconclusive": EXIT_INCONCLUSIVE}[rep.status]
    return code, result, text


def cmd_selftest(args) -> Tuple[int, Dict[str, Any], str]:
    shape = parse_shape(args.shape)
    if args.n is not None and sum(shape) != args.n:
        raise ValueError(f"shape mismatch: |{shape}| != n={args.n}")
    check_limit("max_rank_epsilon", sum(shape), args.unsafe_large)
    check_limit("max_relation_degree", args.degree, args.unsafe_large)
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = run_checks(build_checks(shape, args.degree, args.relations_only))
    text = buf.getvalue()
    result = {
        "shape": list(shape),
        "degree": args.degree,
        "relations_only": args.relations_only,
        "ok": code == EXIT_OK,
        "report": text.strip().splitlines(),
    }
    return code, result, text


COMMANDS = {
    "tableaux": cmd_tableaux,
    "weight": cmd_weight,
    "macdonald": cmd_macdonald,
    "phi": cmd_phi,
    "pieri": cmd_pieri,
    "identity": cmd_identity,
    "selftest": cmd_selftest,
}


def parse_args(argv=None) -> argparse.Namespace:
    p = argparse.ArgumentParser(description="Exact computations with vector-valued Macdonald polynomials.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default=DEFAULTS.get("format", "text"), help="Output format.")
    common.add_argument("--out", default=None, help="Write the report to this file instead of stdout.")
    common.add_argument("--seed", type=int, default=int(DEFAULTS.get("seed", 0)), help="Seed for randomized spot checks.")
    common.add_argument("--unsafe-large", action="store_true", help="Skip the feasibility limits in config/limits.yml.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("tableaux", parents=[common], help="PSYT/RSSYT enumeration, statistics, Min/Top and inversions.")
    s.add_argument("--shape", default=None, help="Partition, e.g. 6,5,4,2.")
    s.add_argument("--T", default=None, help="Filling as JSON rows.")
    s.add_argument("--degree", type=int, default=None, help="Also list every RSSYT of the shape up to this degree.")
    s.add_argument("--psyt", action="store_true", help="List every PSYT of the filling (bounded by max_boxes).")

    s = sub.add_parser("weight", parents=[common], help="Weight vectors F_tau with certified spectrum.")
    s.add_argument("--shape", default=None)
    s.add_argument("--T", default=None, help="Filling as JSON rows.")
    s.add_argument("--tau", default=None, help="Periodic tableau as JSON rows of [index, power].")
    s.add_argument("--which", choices=["top", "min", "all"], default="top")

    s = sub.add_parser("macdonald", parents=[common], help="P_T by the closed formula.")
    s.add_argument("--shape", default=None)
    s.add_argument("--T", required=True)
    s.add_argument("--check-projection", action="store_true", help="Compare with the eps-projection oracle.")
    s.add_argument("--evaluate", action="store_true", help="Evaluate coefficients at a seeded rational point.")

    s = sub.add_parser("phi", parents=[common], help="Stability and intertwining checks for Phi over ranks n..n+window.")
    s.add_argument("--base", default="", help="Base partition lambda (empty for the empty partition).")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--T", required=True)
    s.add_argument("--window", type=int, default=2, help="Number of Phi steps above n.")
    s.add_argument("--span-degree", type=int, default=None, help="Degree bound of the spanning set for the intertwining check (default: degree of T).")

    s = sub.add_parser("pieri", parents=[common], help="Pieri coefficients d_(S,T) for e_r.")
    s.add_argument("--base", default="")
    s.add_argument("--n", type=int, default=None)
    s.add_argument("--T", required=True)
    s.add_argument("--r", type=int, default=1)
    s.add_argument("--no-oracle", action="store_true", help="Skip the exact linear-algebra oracle.")
    s.add_argument("--stable", action="store_true", help="Also report the certified stable coefficient.")

    s = sub.add_parser("identity", parents=[common], help="Verify the product-sum identity to order N.")
    s.add_argument("--base", default="")
    s.add_argument("--T", required=True)
    s.add_argument("--order", type=int, default=None)

    s = sub.add_parser("selftest", parents=[common], help="Exact relation and invariant checks.")
    s.add_argument("--n", type=int, default=None)
    s.add_argument("--shape", default="2,1")
    s.add_argument("--degree", type=int, default=int(DEFAULTS.get("degree", 2)))
    s.add_argument("--relations-only", action="store_true", help="Only the DAHA relation checks.")
    return p.parse_args(argv)


def main(argv=None) -> int:
    args = parse_args(argv)
    try:
        code, result, text = COMMANDS[args.command](args)
    except InfeasibleRequest as e:
        raise SystemExit(str(e))
    except CertificateError as e:
        print(f"[{args.command}] CERTIFICATE FAILED: {e}")
        return EXIT_FAIL
    except (ValueError, ZeroDivisionError) as e:
        raise SystemExit(f"[{args.command}] error: {e}")

    payload = {"command": args.command, "exit": code, "result": result}
    body = canonical_json(payload) + "\n" if args.format == "json" else text
    if args.out:
        write_report(Path(args.out), body)
        print(f"[{args.command}] wrote {args.out} exit={code}")
    else:
        print(body, end="")
    return code


if __name__ == "__main__":
    raise SystemExit(main())
