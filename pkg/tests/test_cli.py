import io
import json

import pytest

from overq.cli import main
from overq.identities import IdentityCase
from overq.expr import eta_series


def run_cli(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


# --- identities ----------------------------------------------------------------


def test_identities_single_key():
    code, text = run_cli(["identities", "--only", "D4", "--order", "300"])
    assert code == 0
    rows = [line for line in text.splitlines() if line.startswith("D4")]
    assert len(rows) == 1 and "PASS" in rows[0]


def test_identities_all_pass_small_order():
    code, text = run_cli(["identities", "--order", "60"])
    assert code == 0
    assert "17/17 identities passed" in text


def test_identities_unknown_key_is_usage_error():
    code, _ = run_cli(["identities", "--only", "nope"])
    assert code == 2


def test_identities_zero_order_is_usage_error():
    code, _ = run_cli(["identities", "--order", "0"])
    assert code == 2


def test_identities_failure_exits_one(monkeypatch):
    import overq.cli as cli

    bad = IdentityCase(key="bogus", lhs=eta_series("f1"), rhs=eta_series("f2"))
    monkeypatch.setattr(cli, "builtin_identities", lambda: (bad,))
    monkeypatch.setattr(cli, "identity_registry", lambda: {"bogus": bad})
    code, text = run_cli(["identities", "--order", "10"])
    assert code == 1
    assert "FAIL" in text


# --- verify ----------------------------------------------------------------------


def test_verify_single_family():
    code, text = run_cli(["verify", "pbar-8n+7-mod32", "--t-max", "6", "--n-max", "25"])
    assert code == 0
    assert "pbar-8n+7-mod32" in text and "pass" in text


def test_verify_unknown_key():
    code, _ = run_cli(["verify", "no-such-key"])
    assert code == 2


def test_verify_requires_keys():
    code, _ = run_cli(["verify"])
    assert code == 2


def test_verify_all_small_grid():
    code, text = run_cli(
        ["verify", "all", "--t-max", "4", "--n-max", "6", "--alpha-max", "0",
         "--i-max", "1", "--j-max", "1"]
    )
    assert code == 0
    assert "0 blocking failure(s)" in text


def test_verify_json_is_versioned_and_deterministic():
    argv = [
        "verify", "all", "--include-conjectures", "--format", "json",
        "--t-max", "3", "--n-max", "5", "--alpha-max", "0",
        "--i-max", "1", "--j-max", "1",
    ]
    code1, text1 = run_cli(argv)
    code2, text2 = run_cli(argv)
    assert code1 == code2 == 0  # conjecture failures never block
    assert text1 == text2
    doc = json.loads(text1)
    assert doc["schema"] == "overq-report/1"
    verdicts = {row["key"]: row["verdict"] for row in doc["results"]}
    assert verdicts["opt-8n+4-mod-2^{2i+4}"] == "conjecture-fail"
    assert verdicts["pbar-8n+7-mod32"] == "pass"
    failing = next(r for r in doc["results"] if r["key"] == "opt-8n+4-mod-2^{2i+4}")
    assert failing["witnesses"][0]["n"] == 0
    assert failing["witnesses"][0]["value"] == 32


def test_verify_excludes_conjectures_by_default():
    code, text = run_cli(
        ["verify", "all", "--format", "json", "--t-max", "2", "--n-max", "4",
         "--alpha-max", "0", "--i-max", "1", "--j-max", "1"]
    )
    assert code == 0
    doc = json.loads(text)
    keys = {row["key"] for row in doc["results"]}
    assert "opt-8n+4-mod-2^{2i+4}" not in keys
    assert "pbar-8n+7-mod32" in keys


def test_verify_csv_lists_witnesses():
    code, text = run_cli(
        ["verify", "opt-8n+4-mod-2^{2i+4}", "--include-conjectures", "--format", "csv",
         "--i-max", "1", "--n-max", "5"]
    )
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "key,params,n,value,modulus,expected"
    assert any(line.startswith("opt-8n+4-mod-2^{2i+4},i=1;r=1,0,32,64,0") for line in lines[1:])


# --- oracle ----------------------------------------------------------------------


def test_oracle_zero_tuple_csv():
    code, text = run_cli(["oracle", "--t", "0", "--upto", "5", "--format", "csv"])
    assert code == 0
    assert text.splitlines() == [
        "family,parameter,n,count",
        "overpartition-tuples,0,0,1",
        "overpartition-tuples,0,1,0",
        "overpartition-tuples,0,2,0",
        "overpartition-tuples,0,3,0",
        "overpartition-tuples,0,4,0",
        "overpartition-tuples,0,5,0",
    ]


def test_oracle_cross_checks_both_families():
    code, text = run_cli(["oracle", "--t", "1", "--opt", "1", "--upto", "40"])
    assert code == 0
    assert "all counts match" in text


def test_oracle_default_runs_small_parameters():
    code, text = run_cli(["oracle", "--upto", "12"])
    assert code == 0
    assert text.count("PASS") == 14  # overpartition and odd-part, sizes 0..6


# --- replay ----------------------------------------------------------------------


def test_replay_width_32_only():
    code, text = run_cli(["replay", "--width", "32"])
    assert code == 0
    lines = text.splitlines()
    assert len(lines) == 1 and "rows  16" in lines[0] and "PASS" in lines[0]


def test_replay_width_16_only():
    code, text = run_cli(["replay", "--width", "16"])
    assert code == 0
    assert "rows   8" in text and "PASS" in text


def test_replay_single_step():
    code, text = run_cli(["replay", "--step", "G4-odd", "--t", "7", "--order", "200"])
    assert code == 0
    assert "G4-odd" in text and "PASS" in text


def test_replay_step_missing_parameter():
    code, _ = run_cli(["replay", "--step", "G4-odd"])
    assert code == 2


def test_replay_step_out_of_domain():
    code, _ = run_cli(["replay", "--step", "G4-even", "--t", "3"])
    assert code == 2


def test_replay_unknown_step():
    code, _ = run_cli(["replay", "--step", "nope", "--t", "1"])
    assert code == 2


def test_replay_everything_small_order():
    code, text = run_cli(["replay", "--order", "80"])
    assert code == 0
    assert "table mod 16" in text and "table mod 32" in text
    assert "opt-4n+3-i1" in text
    assert "FAIL" not in text


# --- config file and output files -------------------------------------------------


def test_config_file_supplies_defaults(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("t-max=3\nn-max=5\nformat=json\n# comment\n")
    code, text = run_cli(["verify", "pbar-8n+7-mod32", "--config", str(cfg)])
    assert code == 0
    doc = json.loads(text)
    assert doc["config"]["t_max"] == 3
    assert doc["config"]["n_max"] == 5


def test_flags_win_over_config(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("t-max=3\nformat=json\n")
    code, text = run_cli(
        ["verify", "pbar-8n+7-mod32", "--config", str(cfg), "--format", "table", "--n-max", "4"]
    )
    assert code == 0
    with pytest.raises(json.JSONDecodeError):
        json.loads(text)


def test_bad_config_file_is_usage_error(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("nonsense=1\n")
    code, _ = run_cli(["verify", "pbar-8n+7-mod32", "--config", str(cfg)])
    assert code == 2
    cfg.write_text("order=zero\n")
    code, _ = run_cli(["verify", "pbar-8n+7-mod32", "--config", str(cfg)])
    assert code == 2


def test_out_dir_writes_report_file(tmp_path):
    out_dir = tmp_path / "reports"
    code, text = run_cli(
        ["identities", "--only", "D1", "--order", "50", "--format", "json",
         "--out", str(out_dir)]
    )
    assert code == 0
    written = (out_dir / "identities.json").read_text()
    assert written.strip() == text.strip()
    assert json.loads(written)["schema"] == "overq-report/1"


def test_jobs_flag_keeps_output_deterministic():
    argv = ["identities", "--order", "40", "--format", "csv"]
    _, serial = run_cli(argv)
    _, parallel = run_cli(argv + ["--jobs", "4"])
    assert serial == parallel
