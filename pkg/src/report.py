from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Any, Dict, List, Sequence

import pandas as pd

from src.coeffs import TLaurentSeries, render
from src.daha import VElement
from src.tableaux import Filling, PeriodicTableau


def canonical_json(d: Any) -> str:
    return json.dumps(d, ensure_ascii=False, sort_keys=True, separators=(",", ":"))


def sha256_text(s: str) -> str:
    return hashlib.sha256(s.encode("utf-8")).hexdigest()


# ----------------------------
# Koding av objekter
# ----------------------------

def encode_velement(v: VElement) -> List[Dict[str, Any]]:
    return [
        {"alpha": list(alpha), "tableau": [list(r) for r in u], "coeff": render(c)}
        for (alpha, u), c in v.items()
    ]


def encode_series(s: TLaurentSeries) -> Dict[str, Any]:
    return {
        "valuation": s.valuation,
        "order": s.order,
        "coeffs": [render(c) for c in s.coeffs],
        "text": s.render(),
    }


def encode_tableau(tau: PeriodicTableau) -> List[List[Dict[str, int]]]:
    return tau.to_json()


def encode_filling(T: Filling) -> List[List[int]]:
    return T.to_json()


# ----------------------------
# Tekst
# ----------------------------

def render_table(rows: Sequence[Dict[str, Any]], columns: Sequence[str]) -> str:
    if not rows:
        return "(ingen rader)"
    df = pd.DataFrame(list(rows), columns=list(columns))
    return df.to_string(index=False)


def render_velement_table(v: VElement) -> str:
    rows = [
        {"alpha": str(tuple(alpha)), "tableau": str(u), "coeff": render(c)}
        for (alpha, u), c in v.items()
    ]
    return render_table(rows, ["alpha", "tableau", "coeff"])


def render_text(title: str, sections: Sequence[tuple]) -> str:
    """title + (overskrift, tekst)-seksjoner adskilt med streker."""
    out = [title, "-" * 60]
    for head, body in sections:
        out.append(f"{head}:")
        out.append(str(body))
        out.append("")
    return "\n".join(out).rstrip() + "\n"


def write_report(path: Path, text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
