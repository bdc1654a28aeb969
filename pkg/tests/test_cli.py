import json

import pytest

from building_homology.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_dims_twisted_matches_interface(capsys):
    code, out = run_cli(capsys, "dims", "--n", "3", "--q", "2", "--k", "1")
    assert code == 0
    report = json.loads(out)
    assert report["degrees"] == {"1": 3, "0": 0}
    assert report["theorem4_ok"] is True
    assert report["n"] == 3 and report["q"] == 2 and report["k"] == 1


def test_dims_untwisted(capsys):
    code, out = run_cli(capsys, "dims", "--n", "3", "--q", "2")
    assert code == 0
    report = json.loads(out)
    assert report["degrees"] == {"1": 8, "0": 0}
    assert report["theorem1_ok"] is True


def test_min_support_report(capsys):
    code, out = run_cli(
        capsys, "min-support", "--n", "3", "--q", "2", "--k", "2", "--degree", "0"
    )
    assert code == 0
    report = json.loads(out)
    assert report["min_weight"] == 3 and report["exhaustive"] is True
    assert report["classes_examined"] == 15
    assert report["expected"] == 3


def test_min_support_witness(capsys):
    code, out = run_cli(
        capsys,
        "min-support", "--n", "3", "--q", "2", "--k", "2", "--degree", "0",
        "--witness",
    )
    report = json.loads(out)
    witness = report["witness"]
    assert len(witness) == 3
    for serial, coeff in witness.items():
        assert coeff["grade"] == 2 and coeff["coords"]


def test_export_complex(capsys):
    code, out = run_cli(capsys, "export-complex", "--n", "2", "--q", "3", "--degree", "0")
    assert code == 0
    report = json.loads(out)
    assert report["degree"] == 0
    assert sorted(report["simplices"]) == [
        ["2:3:01"], ["2:3:10"], ["2:3:11"], ["2:3:12"],
    ]


def test_formulas_csv(capsys):
    code, out = run_cli(capsys, "formulas", "--max-n", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,k,q,product_sum,alternating_sum,match"
    assert "2,1,2,1,1,true" in lines
    assert all(line.endswith("true") for line in lines[1:])


def test_basis_d1(capsys):
    code, out = run_cli(capsys, "basis", "d1", "--n", "3", "--q", "2")
    assert code == 0
    report = json.loads(out)
    assert report["count"] == report["rank"] == report["rank_expected"] == 3
    assert report["cycles_ok"] is True
    assert len(report["cycles"]) == 3


def test_basis_apartment(capsys):
    code, out = run_cli(capsys, "basis", "apartment", "--n", "3", "--q", "2")
    assert code == 0
    report = json.loads(out)
    assert report["count"] == report["rank"] == 8


def test_deterministic_output(capsys):
    _, first = run_cli(capsys, "min-support", "--n", "3", "--q", "2", "--k", "1")
    _, second = run_cli(capsys, "min-support", "--n", "3", "--q", "2", "--k", "1")
    assert first == second
    _, a = run_cli(capsys, "basis", "d1", "--n", "3", "--q", "2")
    _, b = run_cli(capsys, "basis", "d1", "--n", "3", "--q", "2")
    assert a == b


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["dims", "--n", "3"])  # missing --q
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_verify_all_small_grid(capsys):
    code, out = run_cli(capsys, "verify-all", "--max-n", "2", "--q", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "10/10 checks passed"
    names = [line.split()[1] for line in lines[:-1]]
    assert names == sorted(names)


def test_verify_all_respects_thread_cap(capsys, monkeypatch):
    monkeypatch.setenv("BUILDING_HOMOLOGY_THREADS", "1")
    code, single = run_cli(capsys, "verify-all", "--max-n", "2", "--q", "2")
    assert code == 0
    monkeypatch.delenv("BUILDING_HOMOLOGY_THREADS")
    _, multi = run_cli(capsys, "verify-all", "--max-n", "2", "--q", "2")
    assert single == multi
