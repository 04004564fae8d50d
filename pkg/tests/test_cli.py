import json

import pytest
import sympy

from lieindex import cli
from lieindex.algebra import LieAlgebra
from lieindex.free_nilpotent import build_free_nilpotent
from lieindex.serialize import algebra_to_dict, dumps
from lieindex.verify import VerificationCase


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_algebra(tmp_path, alg, name="alg.json"):
    path = tmp_path / name
    path.write_text(dumps(algebra_to_dict(alg)))
    return str(path)


def heisenberg():
    return LieAlgebra(3, None, {(0, 1): {2: 1}})


class TestConstruct:
    def test_free_to_stdout(self, capsys):
        code, out, _ = run(capsys, "construct", "free", "--generators", "3", "--class", "3")
        assert code == 0
        assert json.loads(out)["dim"] == 14

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "fil.json"
        code, out, _ = run(
            capsys, "construct", "filiform", "--family", "Q", "--dim", "8", "--out", str(target)
        )
        assert code == 0 and out == ""
        assert json.loads(target.read_text())["dim"] == 8

    def test_metabelian(self, capsys):
        code, out, _ = run(capsys, "construct", "metabelian", "--generators", "3", "--class", "4")
        assert code == 0
        assert json.loads(out)["dim"] == 29

    def test_graph(self, capsys, tmp_path):
        gpath = tmp_path / "k4.json"
        edges = [[i, j] for i in range(4) for j in range(i + 1, 4)]
        gpath.write_text(json.dumps({"vertices": 4, "edges": edges}))
        code, out, _ = run(capsys, "construct", "graph", "--input", str(gpath))
        assert code == 0
        assert json.loads(out)["dim"] == 10

    def test_g_family_needs_k(self, capsys):
        code, _, err = run(capsys, "construct", "filiform", "--family", "G", "--dim", "9")
        assert code == 2 and "--k" in err
        code, _, _ = run(capsys, "construct", "filiform", "--family", "G", "--dim", "9", "--k", "5")
        assert code == 0

    def test_k_rejected_elsewhere(self, capsys):
        code, _, _ = run(capsys, "construct", "filiform", "--family", "L", "--dim", "7", "--k", "3")
        assert code == 2

    def test_missing_params(self, capsys):
        assert run(capsys, "construct", "free", "--generators", "3")[0] == 2
        assert run(capsys, "construct", "filiform", "--family", "L")[0] == 2
        assert run(capsys, "construct", "graph")[0] == 2

    def test_invalid_params(self, capsys):
        code, _, err = run(capsys, "construct", "free", "--generators", "0", "--class", "3")
        assert code == 2 and err

    def test_resource_guard(self, capsys):
        code, _, err = run(capsys, "construct", "free", "--generators", "5", "--class", "5")
        assert code == 3 and "829" in err


class TestIndex:
    def test_report(self, capsys, tmp_path):
        path = write_algebra(tmp_path, build_free_nilpotent(2, 3).algebra)
        code, out, _ = run(capsys, "index", path)
        assert code == 0
        rep = json.loads(out)
        assert rep["dim"] == 5 and rep["index"] == 3 and rep["generic_rank"] == 2
        assert rep["witness"] is None
        assert rep["method"]["mode"] == "randomized"

    def test_witness_and_certify(self, capsys, tmp_path):
        path = write_algebra(tmp_path, heisenberg())
        code, out, _ = run(capsys, "index", path, "--certify", "--witness")
        assert code == 0
        rep = json.loads(out)
        assert rep["method"]["mode"] == "certified"
        assert len(rep["witness"]) == 3

    def test_deterministic_output(self, capsys, tmp_path):
        path = write_algebra(tmp_path, build_free_nilpotent(3, 2).algebra)
        _, first, _ = run(capsys, "index", path)
        _, second, _ = run(capsys, "index", path)
        assert first == second

    def test_jacobi_gate(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(
            json.dumps(
                {
                    "dim": 3,
                    "brackets": [
                        {"i": 0, "j": 1, "c": {"2": "1"}},
                        {"i": 0, "j": 2, "c": {"1": "1"}},
                        {"i": 1, "j": 2, "c": {"1": "1"}},
                    ],
                }
            )
        )
        code, _, err = run(capsys, "index", str(bad))
        assert code == 4 and "Jacobi" in err

    def test_parse_errors(self, capsys, tmp_path):
        broken = tmp_path / "broken.json"
        broken.write_text("{not json")
        assert run(capsys, "index", str(broken))[0] == 2
        assert run(capsys, "index", str(tmp_path / "missing.json"))[0] == 2
        empty = tmp_path / "wrong.json"
        empty.write_text('{"dim": "x"}')
        assert run(capsys, "index", str(empty))[0] == 2

    def test_certify_gate(self, capsys, tmp_path):
        path = write_algebra(tmp_path, LieAlgebra(41))
        code, _, err = run(capsys, "index", path, "--certify")
        assert code == 5 and "41" in err

    def test_pretty(self, capsys, tmp_path):
        path = write_algebra(tmp_path, heisenberg())
        _, out, _ = run(capsys, "index", path, "--pretty")
        assert out.startswith("{\n")


class TestInvariants:
    def test_two_generator_class_three(self, capsys, tmp_path):
        path = write_algebra(tmp_path, build_free_nilpotent(2, 3).algebra)
        code, out, _ = run(capsys, "invariants", path)
        assert code == 0
        inv = json.loads(out)
        assert inv == {
            "center_dim": 2,
            "derived_dims": [3, 0],
            "dim": 5,
            "lower_central_series": [5, 3, 2, 0],
            "nilpotency_class": 3,
        }

    def test_non_nilpotent(self, capsys, tmp_path):
        path = write_algebra(tmp_path, LieAlgebra(2, None, {(0, 1): {1: 1}}))
        code, out, _ = run(capsys, "invariants", path)
        assert code == 0
        assert json.loads(out)["nilpotency_class"] is None


class TestStabilizer:
    def test_center_functional(self, capsys, tmp_path):
        apath = write_algebra(tmp_path, heisenberg())
        lpath = tmp_path / "ell.json"
        lpath.write_text(json.dumps({"coords": ["0", "0", "1"]}))
        code, out, _ = run(capsys, "stabilizer", apath, "--ell", str(lpath))
        assert code == 0
        res = json.loads(out)
        assert res["stabilizer_dim"] == 1 and res["form_rank"] == 2
        assert res["stabilizer_basis"] == [["0", "0", "1"]]

    def test_length_mismatch(self, capsys, tmp_path):
        apath = write_algebra(tmp_path, heisenberg())
        lpath = tmp_path / "ell.json"
        lpath.write_text(json.dumps({"coords": ["1", "1"]}))
        assert run(capsys, "stabilizer", apath, "--ell", str(lpath))[0] == 2


class TestGraphIndex:
    def test_complete_four(self, capsys, tmp_path):
        gpath = tmp_path / "k4.json"
        edges = [[i, j] for i in range(4) for j in range(i + 1, 4)]
        gpath.write_text(json.dumps({"vertices": 4, "edges": edges}))
        code, out, _ = run(capsys, "graph-index", str(gpath))
        assert code == 0
        res = json.loads(out)
        assert res["via_matching"] == res["via_rank"] == 6
        assert len(res["matching"]) == 2
        assert res["report"]["dim"] == 10

    def test_bad_graph(self, capsys, tmp_path):
        gpath = tmp_path / "bad.json"
        gpath.write_text(json.dumps({"vertices": 2, "edges": [[0, 0]]}))
        assert run(capsys, "graph-index", str(gpath))[0] == 2


class TestVerify:
    def test_one_section_passes(self, capsys):
        code, out, err = run(capsys, "verify-paper", "--section", "4")
        assert code == 0
        cases = json.loads(out)
        assert cases and all(c["status"] == "pass" for c in cases)
        assert all(c["section"] == 4 for c in cases)
        assert "failed" in err.splitlines()[-1]

    def test_failure_sets_exit_code(self, capsys, monkeypatch):
        fake = [
            VerificationCase("made-up/1", 9, expected=1, computed=2, method="direct")
        ]
        monkeypatch.setattr(cli, "all_cases", lambda section=None: fake)
        code, out, err = run(capsys, "verify-paper")
        assert code == 1
        assert json.loads(out)[0]["status"] == "fail"
        assert "FAIL" in err


class TestEnvironmentPrime:
    def test_valid_override(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("LIEINDEX_PRIME", str(sympy.nextprime(1 << 61)))
        path = write_algebra(tmp_path, heisenberg())
        code, out, _ = run(capsys, "index", path)
        assert code == 0
        assert json.loads(out)["method"]["prime"] == int(sympy.nextprime(1 << 61))

    def test_small_prime_rejected(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("LIEINDEX_PRIME", "101")
        path = write_algebra(tmp_path, heisenberg())
        assert run(capsys, "index", path)[0] == 2

    def test_garbage_rejected(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("LIEINDEX_PRIME", "not-a-number")
        path = write_algebra(tmp_path, heisenberg())
        assert run(capsys, "index", path)[0] == 2


class TestParser:
    def test_no_arguments(self, capsys):
        assert cli.main([]) == 2

    def test_help_exits_zero(self, capsys):
        assert cli.main(["--help"]) == 0

    def test_unknown_command(self, capsys):
        assert cli.main(["frobnicate"]) == 2
