import json
import subprocess
import sys

from voacensus import cli, gf2code

RUN = [sys.executable, "-m", "voacensus.cli"]


def invoke(args):
    proc = subprocess.run(RUN + args, capture_output=True, text=True)
    return proc.returncode, proc.stdout


def invoke_json(args):
    code, out = invoke(args)
    return code, json.loads(out)


def test_census_code_report():
    code, data = invoke_json(["census", "code", "rm24"])
    assert code == 0
    assert data["results"]["count"] == 496
    assert data["results"]["frames"] == 16
    assert data["results"]["hamming_points"] == 480


def test_census_commutant_report():
    code, data = invoke_json(
        ["census", "commutant", "E8", "--orthogonal-to", "wtilde"])
    assert code == 0
    assert data["results"]["count"] == 255


def test_group_report():
    code, data = invoke_json(["group", "--census", "me7"])
    assert code == 0
    res = data["results"]
    assert res["point_count"] == 63
    assert res["group_order"] == "1451520"
    assert res["is_3transposition"] is True
    assert res["symplectic_type"] is True


def test_characters_verify_exit_codes():
    code, data = invoke_json(["characters", "verify", "--cutoff", "4"])
    assert code == 0
    assert data["ok"] is True
    assert data["results"]["failures"] == []


def test_characters_empty_cutoff_via_env(monkeypatch):
    import os
    env = dict(**__import__("os").environ, VOA_CUTOFF="4")
    proc = subprocess.run(RUN + ["characters", "show", "minimal:1:1:1"],
                          capture_output=True, text=True, env=env)
    data = json.loads(proc.stdout)
    assert data["results"]["terms"][-1][0] == "4"


def test_usage_error_exit_2():
    code, out = invoke(["census", "code", "no_such_tag"])
    assert code == 2
    code2, _ = invoke(["bogus-subcommand"])
    assert code2 == 2


def test_seed_has_no_effect_and_deterministic():
    _, a = invoke(["--seed", "1", "group", "--census", "ma3"])
    _, b = invoke(["--seed", "99", "group", "--census", "ma3"])
    da, db = json.loads(a), json.loads(b)
    da.pop("wall_time_s"), db.pop("wall_time_s")
    assert da == db


def test_byte_determinism_modulo_walltime():
    _, a = invoke_json(["census", "lattice", "E6", "--gram"])
    _, b = invoke_json(["census", "lattice", "E6", "--gram"])
    a.pop("wall_time_s"), b.pop("wall_time_s")
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_code_file_roundtrip(tmp_path):
    path = tmp_path / "code.txt"
    path.write_text(gf2code.format_code_text(gf2code.hamming8_code()))
    code, data = invoke_json(["census", "code", f"file:{path}"])
    assert code == 0
    assert data["results"]["count"] == 24


def test_tsv_format():
    code, out = invoke(["--format", "tsv", "griess", "build", "A2"])
    assert code == 0
    assert "results.dimension\t6" in out


def test_griess_product_inner():
    code, data = invoke_json(["griess", "inner", "E8", "wtilde", "phi:alpha0"])
    assert code == 0
    assert data["results"]["inner"] == "1/32"
    code, data = invoke_json(["griess", "commutant", "E7", "wtilde"])
    assert data["results"]["dimension"] == 63


def test_griess_verify_subcommands():
    code, data = invoke_json(["griess", "verify", "twist-chain"])
    assert code == 0 and data["ok"] is True
    code, data = invoke_json(["griess", "verify", "orthogonal-split"])
    assert code == 0 and data["ok"] is True


def test_main_in_process():
    assert cli.main(["census", "lattice", "A2"]) == 0
    assert cli.main(["census", "code", "unknown!"]) == 2


def test_code_emission_roundtrip(tmp_path):
    path = tmp_path / "out.txt"
    code, _ = invoke(["--output", str(path), "code", "rm14"])
    assert code == 0
    parsed = gf2code.parse_code_text(path.read_text())
    assert parsed == gf2code.named_code("reed_muller", 1, 4)
