import json
import subprocess
import sys

from plmobius import cli


def run(*args, env=None):
    return subprocess.run([sys.executable, "-m", "plmobius", *args], capture_output=True, text=True, env=env)


def test_verify_all_json(capsys):
    assert cli.main(["verify", "all", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema"] == "plmobius.claims/1"
    assert len(doc["claims"]) >= 30
    by_id = {c["claim_id"]: c["verdict"] for c in doc["claims"]}
    assert by_id["REM18.area"] == "CONFIRMED"


def test_verify_selected_text(capsys):
    assert cli.main(["verify", "EQ2.curve", "--claims", "THM6.rainbow"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].split()[:2] == ["EQ2.curve", "CORRECTED"]
    assert out[1].split()[:2] == ["THM6.rainbow", "CONFIRMED"]


def test_unknown_claim_is_usage_error(capsys):
    assert cli.main(["verify", "NOPE.claim"]) == 2
    assert "NOPE.claim" in capsys.readouterr().err


def test_bad_arguments():
    assert cli.main(["frobnicate"]) == 2
    assert cli.main(["export", "stl"]) == 2


def test_export(tmp_path, capsys):
    assert cli.main(["export", "mesh-off", "--out", str(tmp_path)]) == 0
    assert (tmp_path / "strip_M1.off").read_text().startswith("OFF\n12 12 0\n")
    assert cli.main(["export", "euler-csv", "--out", str(tmp_path)]) == 0
    assert (tmp_path / "euler_square.csv").read_text().count("\n") == 5


def test_export_io_error(tmp_path, capsys):
    blocker = tmp_path / "file"
    blocker.write_text("")
    assert cli.main(["export", "graph-dot", "--out", str(blocker)]) == 3
    assert str(blocker) in capsys.readouterr().err


def test_enumerate(capsys):
    assert cli.main(["enumerate", "toroidal-subgraphs", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["count"] == 12 and len(doc["entries"]) == 12
    assert cli.main(["enumerate", "rainbow-factorizations", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["count"] == 48 and sum(e["canonical"] for e in doc["entries"]) == 1


def test_enumerate_is_deterministic():
    a = run("enumerate", "rainbow-factorizations")
    b = run("enumerate", "rainbow-factorizations")
    assert a.returncode == 0 and a.stdout == b.stdout


def test_workers_env_does_not_change_output(tmp_path):
    import os

    env = dict(os.environ, PLMOBIUS_WORKERS="3")
    a = run("verify", "--format", "json")
    b = run("verify", "--format", "json", env=env)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


def test_list(capsys):
    assert cli.main(["list"]) == 0
    assert "COR11.twelve\tstated" in capsys.readouterr().out
