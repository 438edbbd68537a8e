import json

import pytest

from rootdom.cli import main
from rootdom.graph import format_edge_list, read_edge_list
from rootdom.families import path_graph, cycle_graph


@pytest.fixture()
def p4_file(tmp_path):
    path = tmp_path / "p4.el"
    path.write_text(format_edge_list(path_graph(4)), encoding="utf-8")
    return str(path)


def _strip_meta(path):
    data = json.loads(open(path, encoding="utf-8").read())
    data.pop("meta", None)
    return data


class TestSolve:
    def test_gamma_output(self, p4_file, capsys):
        assert main(["solve", "--param", "gamma", p4_file]) == 0
        out = capsys.readouterr().out
        assert "gamma = 2" in out
        assert "witness = {0, 2}" in out

    def test_roman_json(self, p4_file, tmp_path, capsys):
        out = tmp_path / "r.json"
        code = main(["solve", "--param", "roman", p4_file, "--out", str(out)])
        assert code == 0
        data = _strip_meta(out)
        assert data["value"] == 3
        assert data["witness"] == {"b1": [3], "b2": [1]}

    def test_enumerate_and_classify(self, tmp_path, capsys):
        c3 = tmp_path / "c3.el"
        c3.write_text(format_edge_list(cycle_graph(3)), encoding="utf-8")
        out = tmp_path / "s.json"
        code = main(
            ["solve", "--param", "gamma", str(c3), "--enumerate", "--classify-root", "0", "--out", str(out)]
        )
        assert code == 0
        data = _strip_meta(out)
        assert data["optimal_count"] == 3
        assert data["classification"]["membership"] == "IN_SOME"

    def test_quiet(self, p4_file, capsys):
        assert main(["--quiet", "solve", "--param", "gamma", p4_file]) == 0
        assert capsys.readouterr().out == ""

    def test_missing_file(self, capsys):
        assert main(["solve", "--param", "gamma", "no-such-file.el"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_malformed_file(self, tmp_path, capsys):
        bad = tmp_path / "bad.el"
        bad.write_text("2 1\n0 x\n", encoding="utf-8")
        assert main(["solve", "--param", "gamma", str(bad)]) == 2
        err = capsys.readouterr().err
        assert "bad.el:2" in err

    def test_budget_env(self, p4_file, monkeypatch, capsys):
        monkeypatch.setenv("ROOTDOM_BUDGET", "3")
        assert main(["solve", "--param", "gamma", p4_file]) == 2
        assert "budget" in capsys.readouterr().err


class TestGen:
    def test_round_trip(self, tmp_path):
        out = tmp_path / "t.el"
        assert main(["--quiet", "gen", "--family", "random-tree", "--n", "8", "--seed", "5", "-o", str(out)]) == 0
        g, root = read_edge_list(str(out))
        assert g.n == 8 and g.m == 7 and root is None

    def test_rooted_family_comment(self, tmp_path):
        out = tmp_path / "s.el"
        assert main(["--quiet", "gen", "--family", "star", "--m", "3", "-o", str(out)]) == 0
        text = out.read_text(encoding="utf-8")
        assert text.strip().endswith("# root 0")
        g, root = read_edge_list(str(out))
        assert root == 0

    def test_deterministic_bytes(self, tmp_path):
        a, b = tmp_path / "a.el", tmp_path / "b.el"
        for target in (a, b):
            main(["--quiet", "gen", "--family", "random-connected", "--n", "7",
                  "--p", "0.4", "--seed", "9", "-o", str(target)])
        assert a.read_bytes() == b.read_bytes()

    def test_invalid_size(self, capsys):
        assert main(["gen", "--family", "cycle", "--n", "2"]) == 2


class TestProduct:
    def test_product_files(self, tmp_path, p4_file):
        c3 = tmp_path / "c3.el"
        c3.write_text(format_edge_list(cycle_graph(3)), encoding="utf-8")
        out = tmp_path / "prod.el"
        code = main(["--quiet", "product", p4_file, str(c3), "--root", "0", "-o", str(out)])
        assert code == 0
        g, _ = read_edge_list(str(out))
        assert g.n == 12 and g.m == 15
        sidecar = _strip_meta(str(out) + ".map.json")
        assert sidecar["base"] == [0, 1, 2, 3]
        assert len(sidecar["copies"]) == 4
        assert all(len(c) == 3 for c in sidecar["copies"])

    def test_root_out_of_range(self, tmp_path, p4_file, capsys):
        c3 = tmp_path / "c3.el"
        c3.write_text(format_edge_list(cycle_graph(3)), encoding="utf-8")
        assert main(["product", p4_file, str(c3), "--root", "7"]) == 2


class TestVerify:
    def test_clean_theorem(self, tmp_path, capsys):
        out = tmp_path / "d2.json"
        code = main(["verify", "--theorem", "D2", "--trials", "12", "--seed", "42", "--out", str(out)])
        assert code == 0
        data = _strip_meta(out)
        assert data["results"][0]["pass"] == 12
        assert "D2" in capsys.readouterr().out

    def test_failing_paper_claim_still_exits_zero(self, tmp_path):
        out = tmp_path / "s1.json"
        code = main(["--quiet", "verify", "--theorem", "S1", "--trials", "40", "--seed", "42", "--out", str(out)])
        assert code == 0  # S1 is not a must-hold theorem
        data = _strip_meta(out)
        assert data["results"][0]["fail"] > 0

    def test_witness_files_reproduce(self, tmp_path):
        out = tmp_path / "s1.json"
        main(["--quiet", "verify", "--theorem", "S1", "--trials", "40", "--seed", "42", "--out", str(out)])
        witness_files = sorted(tmp_path.glob("s1-witness-*.json"))
        assert witness_files
        assert main(["verify", "--witness", str(witness_files[0])]) == 0

    def test_unreproduced_witness_fails(self, tmp_path):
        # A witness claiming a passing instance fails reproduction.
        payload = {"theorem": "I6", "closed_form": {"family": "caterpillar", "n": 3, "m": 2}}
        path = tmp_path / "w.json"
        path.write_text(json.dumps(payload), encoding="utf-8")
        assert main(["--quiet", "verify", "--witness", str(path)]) == 1

    def test_verify_needs_theorem_or_witness(self, capsys):
        assert main(["verify"]) == 2


class TestCampaign:
    def test_campaign_deterministic_output(self, tmp_path):
        cfg = {"theorems": ["D2", "S1"], "trials": 10, "seed": 42}
        cfg_path = tmp_path / "c.json"
        cfg_path.write_text(json.dumps(cfg), encoding="utf-8")
        out_a, out_b = tmp_path / "a.json", tmp_path / "b.json"
        assert main(["--quiet", "campaign", "--config", str(cfg_path), "--out", str(out_a)]) == 0
        assert main(["--quiet", "campaign", "--config", str(cfg_path), "--out", str(out_b)]) == 0
        assert _strip_meta(out_a) == _strip_meta(out_b)

    def test_bad_config(self, tmp_path, capsys):
        cfg_path = tmp_path / "c.json"
        cfg_path.write_text(json.dumps({"bogus": 1}), encoding="utf-8")
        assert main(["campaign", "--config", str(cfg_path)]) == 2


def test_unknown_subcommand_exits_two():
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2
