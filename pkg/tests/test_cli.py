import json

import numpy as np
import pytest

from fmspace.catalog import GeneratorId, get_generator
from fmspace.cli import main
from fmspace.matrices import Mat4


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_json_contract(capsys):
    code, out, _ = run_cli(
        capsys, "eval", "--gen", "B1", "--param", "0.7", "--q", "1.2", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["method"] == "closed_form"
    assert len(payload["matrix"]) == 4 and len(payload["matrix"][0]) == 4
    assert payload["invariance_residual"] <= 1e-12


def test_eval_series_method(capsys):
    code, out, _ = run_cli(
        capsys, "eval", "--gen", "T1", "--param", "1.0", "--q", "0.8",
        "--method", "series", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["method"] == "series"


def test_output_determinism(capsys):
    argv = ("eval", "--gen", "D2", "--param", "0.3", "--q", "1.7", "--format", "json")
    _, first, _ = run_cli(capsys, *argv)
    _, second, _ = run_cli(capsys, *argv)
    assert first == second

    argv = ("tables", "--kind", "product", "--set", "metamorphic")
    _, first, _ = run_cli(capsys, *argv)
    _, second, _ = run_cli(capsys, *argv)
    assert first == second


def test_tables_text_layout(capsys):
    code, out, _ = run_cli(capsys, "tables", "--kind", "half_commutator", "--set", "isometric")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split()[1:] == ["B0", "B2", "D2", "B0p", "B1", "D1"]
    assert len(lines) == 7


def test_tables_json_round_trip(capsys):
    code, out, _ = run_cli(capsys, "tables", "--kind", "product", "--set", "shift", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["rows"] == ["T0", "T1", "T2", "T3"]
    # cell (1,1): t1.t1 = 8 pi t2
    cell = payload["cells"][1][1]
    assert list(cell) == ["T2"]
    assert cell["T2"]["terms"] == [{"num": "8", "den": "1", "q": 0, "pi": 1}]


def test_dump_generators_round_trip(capsys):
    code, out, _ = run_cli(capsys, "dump-generators")
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {gid.value for gid in GeneratorId}
    for gid in GeneratorId:
        assert Mat4.from_json_dict(payload[gid.value]) == get_generator(gid)


def test_decompose_product(capsys):
    code, out, _ = run_cli(capsys, "decompose", "--product", "B0,F2")
    assert code == 0
    assert out.strip() == "H2"


def test_decompose_json_stdin_equivalent(tmp_path, capsys):
    path = tmp_path / "mat.json"
    path.write_text(json.dumps(get_generator(GeneratorId.P3).to_json_dict()))
    code, out, _ = run_cli(capsys, "decompose", "--json", str(path))
    assert code == 0
    assert out.strip() == "P3"


def test_weights_and_mayer(capsys):
    code, out, _ = run_cli(capsys, "weights", "--R", "1", "--q", "2", "--format", "json")
    assert code == 0
    w = json.loads(out)
    assert len(w) == 4
    code, out, _ = run_cli(capsys, "mayer", "--Ra", "1", "--Rb", "1", "--q", "2", "--format", "json")
    payload = json.loads(out)
    assert payload["bond"] == pytest.approx(payload["step_hat_sum"], rel=1e-11)


def test_kernel_json(capsys):
    code, out, _ = run_cli(capsys, "kernel", "--R", "1", "--q", "0.8", "--format", "json")
    assert code == 0
    k = np.array(json.loads(out))
    assert k.shape == (4, 4)


def test_profile_csv(capsys):
    code, out, _ = run_cli(
        capsys, "profile", "--R", "1", "--rmax", "2", "--points", "5",
        "--qmax", "80", "--panels", "4000",
    )
    assert code == 0
    rows = [line.split(",") for line in out.strip().splitlines()]
    assert len(rows) == 5
    assert float(rows[0][1]) == pytest.approx(1.0, abs=5e-3)
    assert float(rows[-1][1]) == pytest.approx(0.0, abs=5e-3)


def test_verify_fast_suites_exit_zero(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "metric")
    assert code == 0
    assert "metric: PASS" in out
    code, out, _ = run_cli(capsys, "verify", "--suite", "tables")
    assert code == 0
    assert "0 mismatches" in out


def test_verify_errata_lists_b2_entry(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "metric", "--errata")
    assert code == 0
    assert "B2 transform, entry (3, 1)" in out
    assert "isometric products [B2, D2]" in out


def test_domain_error_exit_one(capsys):
    code, _, err = run_cli(capsys, "eval", "--gen", "B1", "--param", "1", "--q", "-3")
    assert code == 1
    assert "error:" in err
    code, _, err = run_cli(capsys, "eval", "--gen", "XYZ", "--param", "1", "--q", "1")
    assert code == 1


def test_usage_error_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["eval", "--gen", "B1"])
    assert exc.value.code == 2
