import csv
import io
import json

import pytest

from wlpci.cli import CSV_HEADER, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_reports_decomposition(capsys):
    code, out, _ = run(capsys, "classify", "--p", "3", "--n", "4", "--d", "5")
    assert code == 0
    assert "HasWLP" in out and "k=1, q=3 (e=1), r=2" in out
    code, out, _ = run(capsys, "classify", "--p", "3", "--n", "4", "--d", "5", "--json")
    rep = json.loads(out)
    assert rep["decision"] == "HasWLP"
    assert rep["decomposition"] == {"k": 1, "e": 1, "q": 3, "r": 2}


def test_classify_no_wlp_and_unsupported(capsys):
    code, out, _ = run(capsys, "classify", "--p", "2", "--n", "4", "--d", "2")
    assert code == 0 and "NoWLP" in out
    code, out, _ = run(capsys, "classify", "--p", "3", "--n", "3", "--d", "4")
    assert code == 0 and "Unsupported" in out


def test_verify_mixed_tuple(capsys):
    code, out, _ = run(capsys, "verify", "--p", "5", "--n", "3", "--a", "2,3,4", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["verdict"]["decision"] == "HasWLP"
    assert rep["equivalence"]["conditions"] == [True] * 5


def test_verify_reports_witness(capsys):
    code, out, _ = run(capsys, "verify", "--p", "2", "--n", "4", "--a", "2,2,2,2", "--json")
    rep = json.loads(out)
    assert rep["verdict"]["decision"] == "NoWLP"
    assert rep["verdict"]["witness"]["degree"] == 2
    assert rep["equivalence"]["conditions"] == [False] * 5
    code, out, _ = run(capsys, "verify", "--p", "2", "--a", "2,2,2,2", "--all-degrees")
    assert code == 0 and "kernel witness in degree 2" in out


def test_det_subcommand(capsys):
    code, out, _ = run(capsys, "det", "--t", "3", "--b", "1", "--s", "2")
    assert code == 0 and out.strip().endswith("= 6")
    code, out, _ = run(capsys, "det", "--t", "3", "--b", "1", "--s", "2", "--mod", "3", "--json")
    assert json.loads(out)["mod"]["residue"] == 0
    code, out, _ = run(capsys, "det", "--t", "4", "--b", "2", "--s", "2", "--valuation", "3", "--json")
    val = json.loads(out)["valuation"]
    assert val["order"] == val["counted"] == 0
    assert val["witnesses"][0]["lam"] == 1


def test_sweep_csv(tmp_path, capsys):
    out_file = tmp_path / "grid.csv"
    code, out, _ = run(capsys, "sweep", "--p", "3", "--n", "4", "--d", "8", "--out", str(out_file))
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out_file.read_text())))
    assert list(rows[0].keys()) == CSV_HEADER
    assert [int(r["d"]) for r in rows if r["oracle"] == "HasWLP"] == [1, 2, 4, 5]
    assert all(r["agree"] == "true" for r in rows)
    assert all(r["witness_degree"] == "" for r in rows if r["oracle"] == "HasWLP")


def test_sweep_json_is_deterministic_and_round_trips(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for f in (a, b):
        assert run(capsys, "sweep", "--p", "2,5", "--n", "5", "--d", "3",
                   "--format", "json", "--out", str(f))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    rows = json.loads(a.read_text())
    assert json.loads(json.dumps(rows)) == rows
    assert [(r["p"], r["d"], r["oracle"]) for r in rows] == [
        (2, 1, "HasWLP"), (2, 2, "NoWLP"), (2, 3, "NoWLP"),
        (5, 1, "HasWLP"), (5, 2, "HasWLP"), (5, 3, "NoWLP"),
    ]


def test_construct_outputs(capsys):
    code, out, _ = run(capsys, "construct", "g-relation", "--p", "5", "--k", "2", "--verify")
    assert code == 0
    assert "v1 = x2 - x3" in out and "degree 3" in out and "non-Koszul: True" in out
    code, out, _ = run(capsys, "construct", "power", "--p", "3", "--n", "4", "--d", "3", "--e", "1", "--json")
    rel = json.loads(out)["relation"]
    assert rel["entries"] == ["1", "1", "1", "2"] and rel["total_degree"] == 3
    code, out, _ = run(capsys, "construct", "frobenius-general", "--p", "3", "--n", "5", "--d", "4",
                       "--l", "0", "--verify", "--json")
    rep = json.loads(out)
    assert rep["relation"]["total_degree"] == 8
    assert rep["verified"] == {"annihilates": True, "non_koszul": True, "E": 9}


def test_construct_high_n_reports_case(capsys):
    code, out, _ = run(capsys, "construct", "high-n", "--p", "5", "--n", "6", "--d", "6", "--json")
    rep = json.loads(out)
    assert rep["case"] == 7 and rep["params"] == {"l": 2, "e": 1}


@pytest.mark.parametrize("argv", [
    ["classify", "--p", "4", "--n", "4", "--d", "2"],
    ["classify", "--p", "3"],
    ["verify", "--p", "3", "--a", "2,x"],
    ["det", "--t", "2", "--b", "3", "--s", "1"],
    ["construct", "g-relation", "--p", "5", "--k", "4"],
    ["construct", "power", "--p", "5", "--n", "4"],
    ["bogus"],
])
def test_argument_errors_exit_two(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_budget_exit_code(capsys):
    code, _, err = run(capsys, "verify", "--p", "5", "--a", "9,9,9,9,9", "--budget", "100")
    assert code == 3 and "exceeds budget 100" in err


def test_sweep_flags_disagreement(monkeypatch, capsys):
    from wlpci import cli
    from wlpci.lefschetz import Decision, WlpVerdict

    monkeypatch.setattr(cli.cl, "classify", lambda p, n, d: WlpVerdict(Decision.NO_WLP))
    code, out, _ = run(capsys, "sweep", "--p", "3", "--n", "4", "--d", "2")
    assert code == 1 and "false" in out
