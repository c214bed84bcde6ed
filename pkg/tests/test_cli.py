import json
import subprocess
import sys
from pathlib import Path

import pytest

from corank.cli import EXIT_FAILED, EXIT_INCONCLUSIVE, EXIT_INVALID, EXIT_OK, dispatch, main

HERE = Path(__file__).resolve().parent
sys.path.insert(0, str(HERE))
from regen_golden import RUNS, golden_name  # noqa: E402

EXIT_CODES = json.loads((HERE / "golden" / "exit_codes.json").read_text())


def fixture(stem):
    return (HERE / "fixtures" / f"{stem}.json").read_text()


def run(*args, stdin=None):
    return subprocess.run([sys.executable, "-m", "corank", *args], cwd=HERE, capture_output=True,
                          text=True, input=stdin)


@pytest.mark.parametrize("stem,command,flags", RUNS, ids=[golden_name(*r) for r in RUNS])
def test_golden(stem, command, flags):
    name = golden_name(stem, command, flags)
    out = run(command, f"fixtures/{stem}.json", *flags)
    assert out.stdout == (HERE / "golden" / name).read_text()
    assert out.returncode == EXIT_CODES[name]


def test_every_fixture_has_a_golden_run():
    stems = {p.stem for p in (HERE / "fixtures").glob("*.json")}
    assert stems == {stem for stem, _, _ in RUNS}


def test_worked_examples_through_dispatch():
    res, code = dispatch("present", fixture("aug1"))
    assert code == EXIT_OK
    assert res["summary"] == "4 generators, 20 relations"
    res, code = dispatch("check-input", fixture("aug1"))
    assert res["summary"] == "two-sided ideal, co-rank 1"
    res, _ = dispatch("check-input", fixture("rnt"))
    assert res["outputs"]["classification"] == "right ideal (not two-sided)"
    res, code = dispatch("check-input", fixture("broken_v2"))
    assert code == EXIT_INVALID and any(d.startswith("V2 violated") for d in res["diagnostics"])


def test_exit_codes():
    assert dispatch("present", "{")[1] == EXIT_INVALID
    assert dispatch("compose", fixture("compose_cap0"))[1] == EXIT_INCONCLUSIVE
    assert dispatch("generate", fixture("aug1"))[1] == EXIT_INVALID
    with pytest.raises(ValueError):
        dispatch("frobnicate", fixture("aug1"))


def test_verify_failure_exits_one():
    pres = json.loads((HERE / "golden" / "aug1.present.json").read_text())
    pres["outputs"]["presentation"]["relations"][2] += " + t[x,x,1]"
    res, code = dispatch("verify", fixture("aug1"), extra={"presentation": pres}, overrides={"deg_cap": 3})
    assert code == EXIT_FAILED and res["outputs"]["sound"] is False


def test_overrides_beat_document_parameters():
    res, _ = dispatch("compose", fixture("compose_q"), overrides={"deg_cap": 2})
    assert res["parameters"]["deg_cap"] == 2


def test_stdin_and_out_file(tmp_path):
    out = run("check-input", "-", stdin=fixture("aug1"))
    assert out.returncode == 0 and json.loads(out.stdout)["input"] == "-"
    target = tmp_path / "r.json"
    assert main(["present", str(HERE / "fixtures" / "aug1.json"), "--out", str(target)]) == EXIT_OK
    assert target.read_text() == (HERE / "golden" / "aug1.present.json").read_text()


def test_missing_file_is_invalid_input(capsys):
    assert main(["present", str(HERE / "fixtures" / "nope.json")]) == EXIT_INVALID
    assert json.loads(capsys.readouterr().out)["status"] == "invalid_input"


def test_repeated_runs_are_byte_identical():
    a = run("verify", "fixtures/rnt.json", "--seed", "7")
    b = run("verify", "fixtures/rnt.json", "--seed", "7")
    assert a.stdout == b.stdout and a.returncode == b.returncode == 0


def test_timings_are_opt_in():
    res = json.loads(run("present", "fixtures/aug1.json", "--timings").stdout)
    assert "total_s" in res["timings"]
