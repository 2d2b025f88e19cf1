import io
import json
import subprocess
import sys

import pytest

from merozeta.cli import main

EX2_NUM = "x*y*z + x^7 + y^6 + z^5"
EX2_DEN = "x^4 + y^4 + z^4"


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_pair_example1_text(capsys):
    code, out, _ = run(["pair", "--num", "x^3 - x*y", "--den", "y", "--vars", "x,y"], capsys)
    assert code == 0
    assert out.splitlines() == ["zeta0 = (1-t)^-1", "zetaInf = 1"]


def test_pair_example2_json(capsys):
    code, out, _ = run(["pair", "--num", EX2_NUM, "--den", EX2_DEN, "--vars", "x,y,z", "--json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["zeta0"] == {"factors": [{"m": 1, "e": 1}, {"m": 2, "e": 1}, {"m": 3, "e": 1}]}
    assert data["zetaInf"] == {"factors": [{"m": 1, "e": 16}]}
    assert data["assumptions"] == ["newton-nondegenerate"]
    assert "trace" not in data


def test_vars_are_inferred(capsys):
    _, explicit, _ = run(["pair", "--num", EX2_NUM, "--den", EX2_DEN, "--vars", "x,y,z"], capsys)
    _, inferred, _ = run(["pair", "--num", EX2_NUM, "--den", EX2_DEN], capsys)
    assert explicit == inferred


def test_num_from_file(tmp_path, capsys):
    f = tmp_path / "p.txt"
    f.write_text("x^3 - x*y\n")
    code, out, _ = run(["pair", "--num", f"@{f}", "--den", "y", "--vars", "x,y"], capsys)
    assert code == 0 and out.startswith("zeta0 = (1-t)^-1")


def test_trace_does_not_change_values(capsys):
    base = ["pair", "--num", EX2_NUM, "--den", EX2_DEN, "--vars", "x,y,z", "--json"]
    _, plain, _ = run(base, capsys)
    _, traced, _ = run(base + ["--trace"], capsys)
    plain, traced = json.loads(plain), json.loads(traced)
    assert traced.pop("trace")
    assert plain == traced


def test_trace_text_table(capsys):
    code, out, _ = run(["pair", "--num", "x^3 - x*y", "--den", "y", "--vars", "x,y", "--trace"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "I = {0, 1}"
    assert "(l-1)!V_a" in lines[1]
    assert lines[2].split() == ["(1,2)", "3", "2", "1", "0"]
    assert lines[-2:] == ["zeta0 = (1-t)^-1", "zetaInf = 1"]


def test_powerdenom(capsys):
    code, out, _ = run(["powerdenom", "--num", "x^2 + y^3", "--degree", "9", "--axis", "x"], capsys)
    assert code == 0
    assert out.splitlines() == ["zeta0 = 1", "zetaInf = (1-t^7)(1-t^21)^-1"]


def test_powerdenom_axis_order(capsys):
    _, a, _ = run(["powerdenom", "--num", "x^2 + y^3", "--degree", "1", "--axis", "x", "--vars", "x,y"], capsys)
    _, b, _ = run(["powerdenom", "--num", "x^2 + y^3", "--degree", "1", "--axis", "x", "--vars", "y,x"], capsys)
    assert a == b == "zeta0 = (1-t)(1-t^3)^-1\nzetaInf = 1\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["powerdenom", "--num", "x^2", "--degree", "0", "--axis", "x"],
        ["powerdenom", "--num", "x^2", "--degree", "1", "--axis", "w", "--vars", "x"],
        ["pair", "--num", "x^-1", "--den", "y", "--vars", "x,y"],
        ["pair", "--num", "1 + x", "--den", "y", "--vars", "x,y"],
        ["pair", "--num", "x", "--den", "w", "--vars", "x,y"],
        ["pair", "--num", "0", "--den", "y", "--vars", "x,y"],
        ["pair", "--num", "@/nonexistent/file", "--den", "y", "--vars", "x,y"],
        ["acampo", "/nonexistent.json"],
    ],
)
def test_bad_input_exit_code(argv, capsys):
    code, out, err = run(argv, capsys)
    assert code == 2
    assert out == "" and err.startswith("error:")


def test_acampo_file(fixtures_dir, capsys):
    code, out, _ = run(["acampo", str(fixtures_dir / "acampo_small.json")], capsys)
    assert code == 0
    assert out.splitlines() == ["zeta0 = (1-t)^3", "zetaInf = 1"]


def test_acampo_stdin(capsys, monkeypatch):
    data = json.dumps({"strata": [{"k": 1, "l": 3, "chi": -1}]})
    code, out, _ = run(["acampo", "-", "--json"], capsys, stdin=data, monkeypatch=monkeypatch)
    assert code == 0
    assert json.loads(out) == {
        "zeta0": {"factors": []},
        "zetaInf": {"factors": [{"m": 2, "e": -1}]},
        "assumptions": [],
    }


@pytest.mark.parametrize(
    "payload",
    [
        "[]",
        "{}",
        '{"strata": [{"k": 1, "l": 2}]}',
        '{"strata": [{"k": -1, "l": 2, "chi": 1}]}',
        '{"strata": [{"k": 1.5, "l": 2, "chi": 1}]}',
        "not json",
    ],
)
def test_acampo_schema_errors(payload, capsys, monkeypatch):
    code, _, err = run(["acampo", "-"], capsys, stdin=payload, monkeypatch=monkeypatch)
    assert code == 2 and err.startswith("error:")


def test_partial_fixture_matches_pair(fixtures_dir, capsys):
    _, partial, _ = run(["partial", str(fixtures_dir / "example2_partial.json"), "--json"], capsys)
    _, pair, _ = run(["pair", "--num", EX2_NUM, "--den", EX2_DEN, "--json"], capsys)
    partial, pair = json.loads(partial), json.loads(pair)
    assert partial["assumptions"] == []
    assert (partial["zeta0"], partial["zetaInf"]) == (pair["zeta0"], pair["zetaInf"])


def test_partial_schema_error(capsys, monkeypatch):
    bad = '{"strata": [{"chi": 1, "zeta0": {"factors": [{"m": 0, "e": 1}]}, "zetaInf": {"factors": []}}]}'
    code, _, err = run(["partial", "-"], capsys, stdin=bad, monkeypatch=monkeypatch)
    assert code == 2 and "stratum 0" in err


def test_mixvol(fixtures_dir, capsys):
    code, out, _ = run(["mixvol", str(fixtures_dir / "mixvol_segments.json")], capsys)
    assert code == 0
    assert out.strip() == "1/2 (oracle: 1/2)"
    _, out, _ = run(["mixvol", str(fixtures_dir / "mixvol_segments.json"), "--json"], capsys)
    assert json.loads(out) == {"mixed_volume": "1/2", "oracle": "1/2"}


def test_mixvol_dimension_error(capsys, monkeypatch):
    data = json.dumps({"dim": 1, "bodies": [[[0, 0], [1, 0]], [[0, 0], [0, 1]]]})
    code, _, err = run(["mixvol", "-"], capsys, stdin=data, monkeypatch=monkeypatch)
    assert code == 2 and err.startswith("error:")


def test_integrality_exit_code(capsys, monkeypatch):
    from merozeta import cli
    from merozeta.engine import IntegralityError

    def boom(*a, **k):
        raise IntegralityError("(l-1)!·V_a = 1/2 is not an integer")

    monkeypatch.setattr(cli, "zeta_newton_pair", boom)
    code, _, err = run(["pair", "--num", "x", "--den", "y"], capsys)
    assert code == 3 and "internal error" in err


def test_mismatch_exit_code(capsys, monkeypatch):
    from merozeta import cli
    from merozeta.engine import RouteMismatchError

    def boom(*a, **k):
        raise RouteMismatchError("routes differ")

    monkeypatch.setattr(cli, "zeta_power_denominator_checked", boom)
    code, _, _ = run(["powerdenom", "--num", "x^2", "--degree", "1", "--axis", "x"], capsys)
    assert code == 4


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "merozeta", "pair", "--num", "x^3 - x*y", "--den", "y"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "zeta0 = (1-t)^-1"
