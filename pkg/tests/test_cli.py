import json
import shutil
import subprocess

import pytest

from cobloc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_theta(capsys):
    assert run(capsys, "theta", "mobius") == (0, "1\n", "")


def test_compose(capsys):
    code, out, _ = run(capsys, "compose", "pants_in o pants_out")
    assert code == 0
    assert "g=1" in out and "chi=-2 theta=2 omega=0" in out


def test_loc(capsys):
    assert run(capsys, "loc", "--cat", "barN", "conn(0,2,3; 1->1)")[1] == "barN: (2,3)\n"
    assert run(capsys, "loc", "--cat", "N", "pants_in o pants_out")[1] == "N: 2\n"
    code, _, err = run(capsys, "loc", "--cat", "O", "mobius")
    assert code == 2 and "not a morphism of O" in err


def test_tft(capsys):
    assert run(capsys, "tft", "--mu", "symbolic", "rp2_cyl")[1].strip() == "mu0^-1"
    assert run(capsys, "tft", "--mu", "mu0=2", "disc_out o disc_in")[1] == "4\n"


def test_gc(capsys, tmp_path):
    f = tmp_path / "n1plus.txt"
    f.write_text("generators: h t\n2t = 0\n")
    code, out, _ = run(capsys, "gc", str(f))
    assert code == 0
    assert "group: Z/2 x Z" in out
    assert run(capsys, "gc", str(tmp_path / "missing.txt"))[0] == 2


def test_serialize_round_trip(capsys, tmp_path, monkeypatch):
    code, out, _ = run(capsys, "serialize", "pants_in o (id(1,0) * mobius)")
    assert code == 0 and json.loads(out)["components"][0]["crosscaps"] == 1
    f = tmp_path / "c.json"
    f.write_text(out)
    code, again, _ = run(capsys, "deserialize", "--canonical", str(f))
    assert code == 0 and again == out
    code, text, _ = run(capsys, "deserialize", str(f))
    assert text.startswith("Cobordism((1,0)->(1,0)")


def test_errors(capsys):
    code, _, err = run(capsys, "compose", "cyl o")
    assert code == 2 and "error:" in err
    assert run(capsys, "compose", "disc_in o ocyl")[0] == 2
    with pytest.raises(SystemExit):
        main(["verify", "nonsense"])


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "thm3.9", "-v", "--timing")
    assert code == 0
    assert out.startswith("thm3.9: 31/31 passed")
    assert "[ok] genus one = two windows" in out and "elapsed" in out


def test_verify_reports_failures(capsys, monkeypatch):
    from cobloc import suites
    monkeypatch.setitem(suites.SUITES, "thmS", lambda: [suites.Case("broken", False, "why")])
    code, out, _ = run(capsys, "verify", "thmS")
    assert code == 1
    assert "thmS: 0/1 passed, 1 FAILED" in out and "first failure in thmS: broken" in out


@pytest.mark.skipif(shutil.which("surfc") is None, reason="console script not installed")
def test_console_script():
    out = subprocess.run(["surfc", "theta", "conn(0,2,3; 1->1)"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout == "5\n"
