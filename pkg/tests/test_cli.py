import json

import pytest

from symplie import cli
from symplie.documents import dumps_document, parse_document


def run(capsys, *argv):
    rc = cli.main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


class TestVerify:
    def test_flat_catalog_entry(self, capsys):
        rc, out, _ = run(capsys, "verify", "--catalog", "g6_2")
        assert rc == 0
        assert "input: g6_2 (dim 6)" in out
        assert "flat: yes" in out
        assert "claims:" in out
        assert "FAIL" not in out

    def test_non_flat_entry(self, capsys):
        rc, out, _ = run(capsys, "verify", "--catalog", "aff1",
                         "--report", "flat")
        assert rc == 2
        assert "flat: no" in out
        assert "first_violation_at: (0, 1)" in out

    def test_structure_only_report_passes_on_aff1(self, capsys):
        # every applicable structural claim holds even though aff1 is not flat
        rc, out, _ = run(capsys, "verify", "--catalog", "aff1",
                         "--report", "structure")
        assert rc == 0
        assert "nilpotency_class: none" in out
        assert "n/a" in out

    def test_parametrized_entry(self, capsys):
        rc, out, _ = run(capsys, "verify", "--catalog", "g6_1",
                         "--param", "lam=3")
        assert rc == 0
        assert "flat: yes" in out

    def test_document_file(self, capsys, tmp_path):
        path = tmp_path / "alg.json"
        rc, _, _ = run(capsys, "catalog", "export", "r3_h3",
                       "--out", str(path))
        assert rc == 0
        rc, out, _ = run(capsys, "verify", str(path))
        assert rc == 0
        assert f"input: {path}" in out

    def test_missing_file(self, capsys):
        rc, _, err = run(capsys, "verify", "does-not-exist.json")
        assert rc == 1
        assert "error:" in err

    def test_invalid_json(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{nope")
        rc, _, err = run(capsys, "verify", str(path))
        assert rc == 1
        assert "not valid JSON" in err

    def test_axiom_violations_reported(self, capsys, tmp_path):
        doc = {
            "dim": 4,
            "basis": ["x1", "x2", "x3", "x4"],
            "brackets": [{"u": "x1", "v": "x2", "value": {"x3": "1"}}],
            "omega": [{"u": "x1", "v": "x2", "value": "1"},
                      {"u": "x3", "v": "x4", "value": "1"}],
        }
        path = tmp_path / "notclosed.json"
        path.write_text(dumps_document(doc))
        rc, _, err = run(capsys, "verify", str(path))
        assert rc == 1
        assert "not closed" in err

    def test_file_and_catalog_conflict(self, capsys, tmp_path):
        path = tmp_path / "x.json"
        path.write_text("{}")
        rc, _, err = run(capsys, "verify", str(path), "--catalog", "g6_2")
        assert rc == 1
        assert "not both" in err

    def test_no_input(self, capsys):
        rc, _, err = run(capsys, "verify")
        assert rc == 1
        assert "--catalog" in err


class TestCatalog:
    def test_list(self, capsys):
        rc, out, _ = run(capsys, "catalog", "list")
        assert rc == 0
        lines = out.strip().splitlines()
        assert len(lines) == 13
        assert any(line.startswith("r_h3_dim4") for line in lines)
        assert any("not flat" in line or "class -" in line for line in lines)

    def test_show(self, capsys):
        rc, out, _ = run(capsys, "catalog", "show", "g6_3")
        assert rc == 0
        assert "[x1, x2] = x4" in out
        assert "omega(x2, x5) = 1/2" in out
        assert "class: g6_3" in out

    def test_show_with_param(self, capsys):
        rc, out, _ = run(capsys, "catalog", "show", "g6_1",
                         "--param", "lam=3")
        assert rc == 0
        assert "lam=3" in out
        assert "omega(x3, x4) = 2" in out

    def test_show_needs_name(self, capsys):
        rc, _, err = run(capsys, "catalog", "show")
        assert rc == 1
        assert "needs an entry name" in err

    def test_unknown_entry(self, capsys):
        rc, _, err = run(capsys, "catalog", "show", "nope")
        assert rc == 1
        assert "unknown catalog entry" in err

    def test_constraint_violation(self, capsys):
        rc, _, err = run(capsys, "catalog", "export", "g6_1",
                         "--param", "lam=0")
        assert rc == 1
        assert "outside {0, 1}" in err

    def test_bad_param_syntax(self, capsys):
        rc, _, err = run(capsys, "catalog", "show", "g6_1",
                         "--param", "lam")
        assert rc == 1
        assert "key=value" in err

    def test_export_round_trips(self, capsys, tmp_path):
        path = tmp_path / "out.json"
        rc, _, _ = run(capsys, "catalog", "export", "g6_2", "--out", str(path))
        assert rc == 0
        doc = parse_document(path.read_text())
        assert doc["meta"]["name"] == "g6_2"
        assert doc["dim"] == 6

    def test_export_to_stdout(self, capsys):
        rc, out, _ = run(capsys, "catalog", "export", "abelian2")
        assert rc == 0
        assert json.loads(out)["dim"] == 2


class TestExtend:
    def test_zero_pair_from_zero_base(self, capsys):
        rc, out, _ = run(capsys, "extend", "--catalog", "zero",
                         "--xi", "zero", "--b0", "zero")
        assert rc == 0
        doc = json.loads(out)
        assert doc["dim"] == 2
        assert doc["meta"]["extended_from"] == "zero"

    def test_inline_xi(self, capsys, tmp_path):
        path = tmp_path / "ext.json"
        rc, _, _ = run(capsys, "extend", "--catalog", "abelian2",
                       "--xi", "[[0, 1], [0, 0]]", "--b0", "1,0",
                       "--out", str(path))
        assert rc == 0
        rc, out, _ = run(capsys, "classify", str(path))
        assert rc == 0
        assert "class: RxH3" in out

    def test_xi_from_file_with_rational_strings(self, capsys, tmp_path):
        xi_path = tmp_path / "xi.json"
        xi_path.write_text('[["0", "1/2"], ["0", "0"]]')
        rc, out, _ = run(capsys, "extend", "--catalog", "abelian2",
                         "--xi", str(xi_path), "--b0=-2,0")
        assert rc == 0
        assert json.loads(out)["dim"] == 4

    def test_inadmissible_pair(self, capsys):
        rc, _, err = run(capsys, "extend", "--catalog", "abelian2",
                         "--xi", "[[1, 0], [0, 0]]", "--b0", "zero")
        assert rc == 2
        assert "check failed" in err
        assert "commutator_with_adjoint" in err

    def test_non_flat_base(self, capsys):
        rc, _, err = run(capsys, "extend", "--catalog", "aff1",
                         "--xi", "zero", "--b0", "zero")
        assert rc == 2
        assert "flat" in err

    def test_argument_validation(self, capsys, tmp_path):
        rc, _, err = run(capsys, "extend", "--catalog", "abelian2",
                         "--xi", "zero")
        assert rc == 1 and "--b0" in err
        rc, _, err = run(capsys, "extend", "--catalog", "abelian2",
                         "--xi", "[[0,1]]", "--b0", "zero")
        assert rc == 1 and "2x2" in err
        rc, _, err = run(capsys, "extend", "--catalog", "abelian2",
                         "--xi", "zero", "--b0", "1,2,3")
        assert rc == 1 and "comma-separated" in err
        pair_path = tmp_path / "pair.json"
        pair_path.write_text(dumps_document(
            {"base_dim": 4, "xi": [["0"] * 4] * 4, "b0": ["0"] * 4}))
        rc, _, err = run(capsys, "extend", "--catalog", "abelian2",
                         "--pair", str(pair_path))
        assert rc == 1 and "base dimension 4" in err


class TestReduce:
    def test_single_step(self, capsys, tmp_path):
        base_path = tmp_path / "base.json"
        pair_path = tmp_path / "pair.json"
        rc, _, _ = run(capsys, "reduce", "--catalog", "r_h3_dim4",
                       "--out", str(base_path), "--pair-out", str(pair_path))
        assert rc == 0
        base_doc = parse_document(base_path.read_text())
        assert base_doc["dim"] == 2
        assert base_doc["brackets"] == []
        pair_doc = parse_document(pair_path.read_text())
        assert pair_doc == {"base_dim": 2, "xi": [["0", "0"], ["0", "0"]],
                            "b0": ["0", "-1"]}

    def test_center_index(self, capsys, tmp_path):
        out_path = tmp_path / "b.json"
        rc, _, _ = run(capsys, "reduce", "--catalog", "r3_h3",
                       "--center-index", "3", "--out", str(out_path))
        assert rc == 0
        assert parse_document(out_path.read_text())["dim"] == 4
        rc, _, err = run(capsys, "reduce", "--catalog", "r3_h3",
                         "--center-index", "9")
        assert rc == 1
        assert "center dimension 4" in err

    def test_non_flat_input(self, capsys):
        rc, _, err = run(capsys, "reduce", "--catalog", "aff1")
        assert rc == 2
        assert "flat" in err

    def test_auto_tower(self, capsys, tmp_path):
        tower_path = tmp_path / "tower.json"
        rc, _, err = run(capsys, "reduce", "--catalog", "g6_3", "--auto",
                         "--pair-out", str(tower_path))
        assert rc == 0
        assert "reduced g6_3 to dimension 0 in 3 step(s)" in err
        doc = parse_document(tower_path.read_text())
        assert [step["base_dim"] for step in doc["steps"]] == [0, 2, 4]

    def test_auto_then_rebuild_pipeline(self, capsys, tmp_path):
        # reduce to a tower, then re-extend stage by stage and classify
        tower_path = tmp_path / "tower.json"
        rc, _, _ = run(capsys, "reduce", "--catalog", "g6_2", "--auto",
                       "--pair-out", str(tower_path))
        assert rc == 0
        steps = parse_document(tower_path.read_text())["steps"]

        cur = tmp_path / "stage0.json"
        rc, _, _ = run(capsys, "catalog", "export", "zero", "--out", str(cur))
        assert rc == 0
        for k, step in enumerate(steps):
            pair_path = tmp_path / f"pair{k}.json"
            pair_path.write_text(dumps_document(step))
            nxt = tmp_path / f"stage{k + 1}.json"
            rc, _, _ = run(capsys, "extend", "--base", str(cur),
                           "--pair", str(pair_path), "--out", str(nxt))
            assert rc == 0
            cur = nxt
        rc, out, _ = run(capsys, "classify", str(cur))
        assert rc == 0
        assert "class: g6_2" in out


class TestClassify:
    def test_catalog_entries(self, capsys):
        for name, cls in (("abelian6", "R^6"), ("r_h3_dim4", "RxH3"),
                          ("g6_1", "g6_1")):
            rc, out, _ = run(capsys, "classify", "--catalog", name)
            assert rc == 0
            assert f"class: {cls}" in out

    def test_non_flat(self, capsys):
        rc, out, _ = run(capsys, "classify", "--catalog", "aff1")
        assert rc == 2
        assert "flat: no" in out
        assert "not applicable" in out

    def test_unsupported_dimension(self, capsys, tmp_path):
        doc = {
            "dim": 8,
            "basis": [f"x{k}" for k in range(1, 9)],
            "brackets": [],
            "omega": [{"u": f"x{k}", "v": f"x{9 - k}", "value": "1"}
                      for k in range(1, 5)],
        }
        path = tmp_path / "dim8.json"
        path.write_text(dumps_document(doc))
        rc, _, err = run(capsys, "classify", str(path))
        assert rc == 1
        assert "dimensions 0, 2, 4, 6" in err


class TestUsage:
    def test_no_command(self, capsys):
        rc, _, err = run(capsys)
        assert rc == 1
        assert "error:" in err

    def test_unknown_command(self, capsys):
        rc, _, err = run(capsys, "frobnicate")
        assert rc == 1
        assert "error:" in err

    def test_bad_report_choice(self, capsys):
        rc, _, err = run(capsys, "verify", "--catalog", "g6_2",
                         "--report", "everything")
        assert rc == 1
        assert "invalid choice" in err
