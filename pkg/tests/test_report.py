import pytest

from src import config
from src.coeffs import ONE, TLaurentSeries, q
from src.daha import VElement
from src.report import (
    canonical_json,
    encode_series,
    encode_velement,
    render_table,
    render_text,
    sha256_text,
    write_report,
)
from src.selftest import Check, run_checks


def test_canonical_json_is_stable():
    assert canonical_json({"b": 1, "a": "ø"}) == '{"a":"ø","b":1}'
    assert canonical_json({"a": [1, 2]}) == canonical_json({"a": [1, 2]})


def test_sha256_text():
    assert sha256_text("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"


def test_encode_velement_and_series():
    v = VElement.basis((1, 0), ((1, 2),)).scale(q)
    (entry,) = encode_velement(v)
    assert entry["alpha"] == [1, 0]
    assert entry["tableau"] == [[1, 2]]

    s = TLaurentSeries.monomial(ONE, 1, 3)
    enc = encode_series(s)
    assert enc["valuation"] == 1 and enc["order"] == 3
    assert enc["text"] == s.render()


def test_render_table():
    assert render_table([], ["a"]) == "(ingen rader)"
    text = render_table([{"a": 1, "b": "x"}, {"a": 22, "b": "y"}], ["a", "b"])
    assert text.splitlines()[0].split() == ["a", "b"]
    assert len(text.splitlines()) == 3


def test_render_text_sections():
    text = render_text("[x] title", [("K", "1"), ("n", 2)])
    lines = text.splitlines()
    assert lines[0] == "[x] title"
    assert "K:" in lines and "n:" in lines
    assert text.endswith("\n")


def test_write_report_creates_dirs(tmp_path):
    target = tmp_path / "a" / "b" / "r.txt"
    write_report(target, "hei\n")
    assert target.read_text(encoding="utf-8") == "hei\n"


def test_load_limits(tmp_path):
    path = tmp_path / "limits.yml"
    path.write_text("limits:\n  max_boxes: 3\ndefaults:\n  order: 5\n", encoding="utf-8")
    data = config.load_limits(path)
    assert data["limits"] == {"max_boxes": 3}
    assert data["defaults"] == {"order": 5}

    empty = tmp_path / "empty.yml"
    empty.write_text("", encoding="utf-8")
    assert config.load_limits(empty) == {"limits": {}, "defaults": {}}


def test_check_limit(monkeypatch):
    monkeypatch.setitem(config.LIMITS, "max_boxes", 4)
    config.check_limit("max_boxes", 4)
    with pytest.raises(config.InfeasibleRequest):
        config.check_limit("max_boxes", 5)
    config.check_limit("max_boxes", 5, unsafe=True)
    config.check_limit("no_such_limit", 10**6)
    assert issubclass(config.InfeasibleRequest, ValueError)


def test_run_checks_report(capsys):
    checks = [
        Check("ok", lambda: (0, [])),
        Check("varsel", lambda: (1, ["w"]), warn_only=True),
    ]
    assert run_checks(checks) == 0
    out = capsys.readouterr().out
    assert "OK    ok: 0" in out
    assert "WARN  varsel: 1" in out
    assert "All critical checks passed" in out


def test_run_checks_failure(capsys):
    checks = [Check("feil", lambda: (2, ["a", "b"]))]
    assert run_checks(checks) == 2
    out = capsys.readouterr().out
    assert "FAIL  feil: 2" in out
    assert "FAILED checks (1):" in out
    assert "Eksempler:" in out
