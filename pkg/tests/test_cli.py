"""CLI contract: exit codes, determinism of JSON reports, ingest."""

import json

import pytest

from hopfcheck import catalogue, cli
from hopfcheck.catalogue import CheckCrashed, catalogue_ids
from hopfcheck.hopf import taft
from hopfcheck.serialize import hopf_to_json

CHEAP = ["--id", "S3-taft-axioms", "--id", "A-pivotal-taft", "--p", "2"]


def test_run_cheap_selection_passes(capsys):
    code = cli.main(["run"] + CHEAP)
    out = capsys.readouterr().out
    assert code == 0
    assert "S3-taft-axioms" in out
    assert "2/2 pass" in out


def test_unknown_id_is_usage_error(capsys):
    code = cli.main(["run", "--id", "nope"])
    assert code == 2
    assert "unknown check ids" in capsys.readouterr().err


def test_all_and_id_conflict(capsys):
    code = cli.main(["run", "--all", "--id", "S3-taft-axioms"])
    assert code == 2


def test_bad_p_flag(capsys):
    assert cli.main(["run", "--p", "two"] + CHEAP[:2]) == 2
    assert cli.main(["run", "--p", "1", "--id", "S3-taft-axioms"]) == 2


def test_malformed_config(tmp_path, capsys):
    bad = tmp_path / "cfg.json"
    bad.write_text("{ not json")
    assert cli.main(["run", "--config", str(bad)] + CHEAP) == 2
    bad.write_text(json.dumps({"p": "2"}))
    assert cli.main(["run", "--config", str(bad)] + CHEAP) == 2
    bad.write_text(json.dumps({"mystery": 1}))
    assert cli.main(["run", "--config", str(bad)] + CHEAP) == 2


def test_config_file_sets_p_and_flags_override(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"p": [2]}))
    # config alone: no odd p, so the quantum-sl2 check cannot run -> not pass
    code = cli.main(["run", "--id", "S3.2-uqsl2", "--config", str(cfg)])
    assert code == 1
    assert "precondition-failed" in capsys.readouterr().out
    # flag overrides the file
    code = cli.main(["run", "--id", "S3.2-uqsl2", "--p", "3", "--config", str(cfg)])
    assert code == 0


def test_env_var_supplies_config(tmp_path, monkeypatch, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"p": [2]}))
    monkeypatch.setenv(cli.CONFIG_ENV_VAR, str(cfg))
    assert cli.main(["run", "--id", "S3.2-uqsl2"]) == 1
    monkeypatch.setenv(cli.CONFIG_ENV_VAR, str(tmp_path / "missing.json"))
    assert cli.main(["run"] + CHEAP) == 2


def _stripped(path):
    doc = json.loads(path.read_text())
    for check in doc["checks"]:
        check.pop("elapsed", None)
    return json.dumps(doc, sort_keys=True)


def test_json_reports_are_deterministic(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    ids = ["--id", "L3.1-self-duality", "--id", "S3-S-squared", "--p", "2"]
    assert cli.main(["run", "--json", str(a)] + ids) == 0
    assert cli.main(["run", "--json", str(b)] + ids) == 0
    assert _stripped(a) == _stripped(b)
    doc = json.loads(a.read_text())
    assert set(doc) == {"checks", "summary"}
    assert doc["summary"]["all-pass"] is True
    assert [c["id"] for c in doc["checks"]] == sorted(
        ["L3.1-self-duality", "S3-S-squared"]
    )


def test_list_shows_all_ids(capsys):
    assert cli.main(["list"]) == 0
    out = capsys.readouterr().out
    for check_id in catalogue_ids():
        assert check_id in out


def test_ingest_round_trip(tmp_path, capsys):
    path = tmp_path / "t2.json"
    path.write_text(json.dumps(hopf_to_json(taft(2))))
    assert cli.main(["ingest", str(path)]) == 0
    assert "hopf algebra, dim 4" in capsys.readouterr().out


def test_ingest_corrupted_antipode(tmp_path, capsys):
    doc = hopf_to_json(taft(2))
    doc["antipode"]["entries"][0][0] = {"order": 1, "coeffs": [["7", "1"]]}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    assert cli.main(["ingest", str(path)]) == 2
    assert "antipode" in capsys.readouterr().err


def test_ingest_missing_file(capsys):
    assert cli.main(["ingest", "/nonexistent/path.json"]) == 2


def test_internal_error_exit_code(monkeypatch, capsys):
    def boom(ids, ctx):
        raise CheckCrashed("S3-taft-axioms", RuntimeError("boom"))

    monkeypatch.setattr(cli, "run_checks", boom)
    assert cli.main(["run", "--id", "S3-taft-axioms"]) == 3
    assert "internal error" in capsys.readouterr().err


def test_usage_errors_from_argparse():
    # argparse handles unknown subcommands/flags with its own exit code 2
    assert cli.main(["frobnicate"]) == 2
    assert cli.main([]) == 2
