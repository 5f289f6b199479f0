import json

import pytest

from mstint.cli import main

T3 = "3 3\n0 1 1 1\n1 2 2 1\n0 2 3 1\n"
P2 = "2 1\n0 1 5 3\n"


@pytest.fixture
def t3_file(tmp_path):
    p = tmp_path / "t3.txt"
    p.write_text(T3)
    return str(p)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_mst(capsys, t3_file):
    code, out, _ = run(capsys, ["mst", t3_file, "--json"])
    assert code == 0
    assert json.loads(out) == {"weight": "3", "edges": [0, 1]}


def test_eps_increase(capsys, t3_file):
    code, out, _ = run(capsys, ["eps-increase", t3_file, "--json"])
    assert code == 0
    record = json.loads(out)
    assert record["edges"] == [0]
    assert record["cost"] == "1"
    assert record["profit"] == "2"


def test_stdin_instance(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(P2))
    code, out, _ = run(capsys, ["eps-increase", "-", "--json"])
    assert code == 0
    record = json.loads(out)
    assert record["cost"] == "3"
    assert record["profit"] == "inf"


def test_budget_and_fast(capsys, t3_file):
    for extra in ([], ["--fast"]):
        code, out, _ = run(capsys, ["budget", t3_file, "--delta", "2", "--json"] + extra)
        assert code == 0
        record = json.loads(out)
        assert record["edges"] == [0]
        assert record["profit"] == "2"


def test_profit(capsys, t3_file):
    code, out, _ = run(capsys, ["profit", t3_file, "--budget", "1", "--json"])
    assert code == 0
    assert json.loads(out)["profit"] == "2"


def test_certify_ok(capsys, t3_file):
    code, out, _ = run(capsys, ["certify", t3_file, "--edges", "0", "--json"])
    assert code == 0
    record = json.loads(out)
    assert record["ok"] is True
    assert record["cost_sum"] == "1"


def test_oracles(capsys, t3_file):
    code, out, _ = run(capsys, ["oracle-eps", t3_file, "--json"])
    assert code == 0 and json.loads(out)["cost"] == "1"
    code, out, _ = run(capsys, ["oracle-budget", t3_file, "--delta", "2", "--json"])
    assert code == 0 and json.loads(out)["cost"] == "1"
    code, out, _ = run(capsys, ["oracle-profit", t3_file, "--budget", "2", "--json"])
    assert code == 0 and json.loads(out)["profit"] == "inf"
    code, out, _ = run(
        capsys, ["oracle-profit", t3_file, "--budget", "2", "--finite-only", "--json"]
    )
    assert code == 0 and json.loads(out)["profit"] == "2"


def test_protect(capsys, tmp_path):
    p = tmp_path / "t3p.txt"
    p.write_text(T3 + "protect 2\n0 1 1 2 4\n1 2 2 3 4\n")
    code, out, _ = run(capsys, ["protect", str(p), "--json"])
    assert code == 0
    record = json.loads(out)
    assert record["chosen_candidates"] == [0, 1]
    assert record["eps_cost_before"] == "1"
    assert record["eps_cost_after"] > record["eps_cost_before"]


def test_gen_random_pipes_to_mst(capsys, tmp_path):
    code, out, _ = run(capsys, ["gen", "random", "--seed", "1", "--n", "5", "--m", "7"])
    assert code == 0
    p = tmp_path / "gen.txt"
    p.write_text(out)
    code, out, _ = run(capsys, ["mst", str(p), "--json"])
    assert code == 0
    assert len(json.loads(out)["edges"]) == 4


def test_gen_bad(capsys, tmp_path):
    code, out, _ = run(capsys, ["gen", "bad"])
    assert code == 0
    assert out.startswith("# recommended budget: 4.5")
    p = tmp_path / "bad.txt"
    p.write_text(out)
    code, out, _ = run(capsys, ["mst", str(p), "--json"])
    assert json.loads(out)["weight"] == "101"


def test_bench(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(
        json.dumps(
            {
                "suites": [
                    {
                        "kind": "eps",
                        "seeds": [1, 2],
                        "n": 5,
                        "m": 8,
                        "max_weight": 4,
                        "max_cost": 4,
                    }
                ]
            }
        )
    )
    code, out, _ = run(capsys, ["bench", "--config", str(cfg)])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("instance\talgorithm")
    assert lines[-1].endswith("2/2 rows satisfied their bound")


def test_input_errors(capsys, tmp_path, t3_file):
    assert run(capsys, ["mst", str(tmp_path / "missing.txt")])[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("not an instance\n")
    assert run(capsys, ["mst", str(bad)])[0] == 2
    assert run(capsys, ["budget", t3_file, "--delta", "-1"])[0] == 2
    assert run(capsys, ["budget", t3_file, "--delta", "abc"])[0] == 2
    assert run(capsys, ["certify", t3_file, "--edges", "9"])[0] == 2
    # removal set that disconnects the graph is an input error for certify
    assert run(capsys, ["certify", t3_file, "--edges", "0,1"])[0] == 2


def test_human_output_default(capsys, t3_file):
    code, out, _ = run(capsys, ["eps-increase", t3_file])
    assert code == 0
    assert "edges: 0" in out
    assert "cost: 1" in out
