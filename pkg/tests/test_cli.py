"""Command line surface: parsing, output shapes, exit codes."""

import json
import shutil
import subprocess
import sys
from itertools import combinations

import pytest

from bergeham import Hypergraph, example2, load_bhg, read_bhg, save_bhg
from bergeham.cli import USAGE_ERROR, main

H2_SEQ = "seq:6,6,6,6,6,18,18,18,18"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCheck:
    def test_satisfied_inline_sequence(self, capsys):
        code, out, _ = run(
            capsys, "check", "seq:2,3,4,7,7,7,7,7,7", "--theorem", "r-uniform", "--r", "3"
        )
        assert code == 0
        assert "theorem: r-uniform" in out
        assert "n: 9" in out and "r: 3" in out
        assert "satisfied: yes" in out

    def test_violated_inline_sequence(self, capsys):
        code, out, _ = run(capsys, "check", H2_SEQ, "--theorem", "r-uniform", "--r", "3")
        assert code == 1
        assert "satisfied: no" in out
        assert (
            "violation: tag 2 at index 4: degree 6 does not beat 6 "
            "(d_4 = 6 is not > C(4, 2) = 6)" in out
        )

    def test_graph_theorems(self, capsys):
        assert run(capsys, "check", "seq:2,3,3,3,3", "--theorem", "posa")[0] == 0
        assert run(capsys, "check", "seq:2,2,3,3,3", "--theorem", "posa")[0] == 1
        assert run(capsys, "check", "seq:2,2,3,3,3", "--theorem", "chvatal")[0] == 0

    def test_conjecture_theorem(self, capsys):
        code, out, _ = run(capsys, "check", H2_SEQ, "--theorem", "conjecture", "--r", "3")
        assert code == 1
        assert "tag C2 at index 4" in out

    def test_nonuniform_gate_and_force(self, capsys):
        code, _, err = run(capsys, "check", "seq:3,5,10,17,17,17,17,17", "--theorem", "non-uniform")
        assert code == USAGE_ERROR
        assert "proved for n > 40" in err
        code, out, _ = run(
            capsys, "check", "seq:3,5,10,17,17,17,17,17", "--theorem", "non-uniform", "--force"
        )
        assert code == 0
        assert "forced: yes (below the proven range)" in out

    def test_hypergraph_file_input(self, capsys, tmp_path):
        hg, _ = example2(9, 3, 4)
        path = tmp_path / "h2.bhg"
        save_bhg(hg, path)
        code, out, _ = run(capsys, "check", str(path), "--theorem", "r-uniform", "--r", "3")
        assert code == 1
        assert "tag 2 at index 4" in out

    def test_plain_integer_file_input(self, capsys, tmp_path):
        path = tmp_path / "degrees.txt"
        path.write_text("2 3 4 7 7 7 7 7 7\n")
        assert run(capsys, "check", str(path), "--theorem", "r-uniform", "--r", "3")[0] == 0

    def test_uniform_checker_needs_r(self, capsys):
        code, _, err = run(capsys, "check", H2_SEQ, "--theorem", "r-uniform")
        assert code == USAGE_ERROR
        assert "needs --r" in err

    def test_json_output(self, capsys):
        code, out, _ = run(
            capsys, "check", H2_SEQ, "--theorem", "r-uniform", "--r", "3", "--json"
        )
        assert code == 1
        payload = json.loads(out)
        assert payload["satisfied"] is False
        assert payload["n"] == 9 and payload["r"] == 3
        (v,) = payload["violations"]
        assert (v["tag"], v["index"], v["bound"], v["actual"]) == ("2", 4, 6, 6)

    def test_malformed_inline_sequence(self, capsys):
        code, _, err = run(capsys, "check", "seq:1,two", "--theorem", "posa")
        assert code == USAGE_ERROR and "non-integer" in err


class TestGenerate:
    def test_out_file_round_trips(self, capsys, tmp_path):
        target = tmp_path / "h2.bhg"
        code, out, _ = run(
            capsys, "generate", "--family", "H2", "--n", "9", "--r", "3", "--k", "4",
            "--out", str(target),
        )
        assert code == 0
        hg, _ = example2(9, 3, 4)
        assert load_bhg(target) == hg

    def test_stdout_emits_bhg(self, capsys):
        code, out, _ = run(capsys, "generate", "--family", "h3", "--n", "10", "--r", "3")
        assert code == 0
        hg = read_bhg(out)
        assert hg.n == 10
        assert out.startswith("# H3(n=10, r=3)")

    def test_predict_mode(self, capsys):
        code, out, _ = run(
            capsys, "generate", "--family", "H2", "--n", "9", "--r", "3", "--k", "4",
            "--predict",
        )
        assert code == 0
        assert "construction: H2(n=9, r=3, k=4)" in out
        assert "edges: 34" in out
        assert "predicted degrees: 6 6 6 6 6 18 18 18 18" in out
        assert "designated violation: tag 2" in out

    def test_json_payload(self, capsys):
        code, out, _ = run(
            capsys, "generate", "--family", "H1", "--n", "8", "--r", "3", "--k", "2",
            "--json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["edges"] == 22
        assert payload["designated_tag"] == "1"
        assert payload["predicted_degrees"] == [2, 2, 10, 10, 10, 10, 11, 11]

    def test_missing_k(self, capsys):
        code, _, err = run(capsys, "generate", "--family", "H1", "--n", "8", "--r", "3")
        assert code == USAGE_ERROR and "needs k" in err

    def test_out_of_domain_parameters(self, capsys):
        code, _, err = run(
            capsys, "generate", "--family", "H3", "--n", "9", "--r", "3"
        )
        assert code == USAGE_ERROR and "even" in err


class TestSolveAndCertificates:
    @pytest.fixture()
    def complete5(self, tmp_path):
        path = tmp_path / "k5.bhg"
        save_bhg(Hypergraph(5, combinations(range(5), 3)), path)
        return path

    def test_solve_finds_cycle(self, capsys, complete5):
        code, out, _ = run(capsys, "solve", str(complete5))
        assert code == 0
        assert "status: cycle" in out
        assert "vertices: " in out and "edge ids: " in out

    def test_certificate_chain(self, capsys, tmp_path, complete5):
        cert = tmp_path / "k5.cert"
        code, out, _ = run(capsys, "solve", str(complete5), "--certificate", str(cert))
        assert code == 0
        assert f"certificate written to {cert}" in out
        code, out, _ = run(capsys, "verify-cert", str(cert), "--hypergraph", str(complete5))
        assert code == 0
        assert "type: cycle" in out and "valid: yes" in out

    def test_tampered_certificate_rejected(self, capsys, tmp_path, complete5):
        cert = tmp_path / "k5.cert"
        run(capsys, "solve", str(complete5), "--certificate", str(cert))
        text = cert.read_text()
        first_line = next(
            ln for ln in text.splitlines() if ln.startswith("vertices: ")
        )
        vals = first_line.split()[1:]
        vals[-1], vals[-2] = vals[-2], vals[-1]
        cert.write_text(text.replace(first_line, "vertices: " + " ".join(vals)))
        code, out, _ = run(capsys, "verify-cert", str(cert), "--hypergraph", str(complete5))
        assert code == 1
        assert "valid: no" in out and "reason: " in out

    def test_certificate_standalone_check(self, capsys, tmp_path, complete5):
        cert = tmp_path / "k5.cert"
        run(capsys, "solve", str(complete5), "--certificate", str(cert))
        code, out, _ = run(capsys, "verify-cert", str(cert))
        assert code == 0 and "valid: yes" in out

    def test_solve_refutes_tight_instance(self, capsys, tmp_path):
        path = tmp_path / "h2.bhg"
        save_bhg(example2(9, 3, 4)[0], path)
        code, out, _ = run(capsys, "solve", str(path))
        assert code == 1
        assert "status: none" in out

    def test_solve_budget_exhaustion(self, capsys, tmp_path):
        path = tmp_path / "k7.bhg"
        save_bhg(Hypergraph(7, combinations(range(7), 3)), path)
        code, out, _ = run(capsys, "solve", str(path), "--budget-nodes", "1")
        assert code == 2
        assert "status: unknown" in out

    def test_solve_json(self, capsys, complete5):
        code, out, _ = run(capsys, "solve", str(complete5), "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["status"] == "cycle"
        assert sorted(payload["vertices"]) == [0, 1, 2, 3, 4]


class TestRotate:
    @pytest.fixture()
    def complete5(self, tmp_path):
        path = tmp_path / "k5.bhg"
        save_bhg(Hypergraph(5, combinations(range(5), 3)), path)
        return path

    def test_closure_report(self, capsys, complete5):
        code, out, _ = run(
            capsys, "rotate", str(complete5), "--path", "0,0,1,6,2,3,3,5,4"
        )
        assert code == 0
        assert "start: 0" in out
        assert "fixed end: 4" in out
        assert "reachable ends: 0 1 2 3" in out
        assert "guaranteed ends: 0 1 2 3" in out
        assert "lower bound contained: yes" in out

    def test_json(self, capsys, complete5):
        code, out, _ = run(
            capsys, "rotate", str(complete5), "--path", "0,0,1,6,2,3,3,5,4", "--json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["lower_bound_contained"] is True
        assert payload["reachable_ends"] == [0, 1, 2, 3]

    def test_walk_spec_must_alternate(self, capsys, complete5):
        code, _, err = run(capsys, "rotate", str(complete5), "--path", "0,1,2,3")
        assert code == USAGE_ERROR
        assert "alternates" in err

    def test_walk_must_be_hamiltonian(self, capsys, complete5):
        code, _, err = run(capsys, "rotate", str(complete5), "--path", "0,0,1,6,2")
        assert code == USAGE_ERROR
        assert "rotations need" in err


class TestCampaign:
    def test_verify_counts_and_report(self, capsys, tmp_path):
        rep = tmp_path / "report.txt"
        code, out, _ = run(
            capsys, "campaign", "verify", "--n", "8", "--r", "3",
            "--samples", "6", "--seed", "5", "--report", str(rep),
        )
        assert code == 0
        assert "kind: verify" in out
        assert "counts: pass=6 fail=0 unknown=0 skip=0" in out
        text = rep.read_text()
        assert text.startswith("campaign-report v1\n")
        assert text.count("trial ") == 6

    def test_report_bytes_are_reproducible(self, capsys, tmp_path):
        a, b = tmp_path / "a.txt", tmp_path / "b.txt"
        args = ["campaign", "verify", "--n", "8", "--r", "3", "--samples", "5", "--seed", "9"]
        run(capsys, *args, "--report", str(a))
        run(capsys, *args, "--report", str(b))
        assert a.read_bytes() == b.read_bytes()

    def test_sharpness_json(self, capsys):
        code, out, _ = run(
            capsys, "campaign", "sharpness", "--family", "H3", "--n-max", "10", "--json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["kind"] == "sharpness"
        assert payload["counts"]["pass"] == payload["trials"] == 3

    def test_conjecture_run(self, capsys):
        code, out, _ = run(
            capsys, "campaign", "conjecture", "--n", "9", "--r", "3",
            "--samples", "10", "--seed", "42",
            "--edge-probability", "0.85", "--starved", "4",
            "--starved-probability", "0.12",
        )
        assert code == 0
        assert "kind: conjecture" in out

    def test_verify_needs_size_arguments(self, capsys):
        code, _, err = run(capsys, "campaign", "verify", "--r", "3")
        assert code == USAGE_ERROR and "needs --n" in err
        code, _, err = run(capsys, "campaign", "verify", "--n", "9")
        assert code == USAGE_ERROR and "--non-uniform" in err

    def test_sharpness_needs_family(self, capsys):
        code, _, err = run(capsys, "campaign", "sharpness")
        assert code == USAGE_ERROR and "needs --family" in err

    def test_unknown_kind_is_a_usage_error(self, capsys):
        assert run(capsys, "campaign", "stress")[0] == USAGE_ERROR


class TestTopLevel:
    def test_no_arguments(self, capsys):
        assert run(capsys)[0] == USAGE_ERROR

    def test_unknown_subcommand(self, capsys):
        assert run(capsys, "frobnicate")[0] == USAGE_ERROR

    def test_unknown_theorem_choice(self, capsys):
        assert run(capsys, "check", "seq:1,2,3", "--theorem", "bogus")[0] == USAGE_ERROR

    def test_help_exits_zero(self, capsys):
        assert run(capsys, "--help")[0] == 0

    def test_parse_error_names_location(self, capsys, tmp_path):
        bad = tmp_path / "bad.bhg"
        bad.write_text("3 2\n0 1\n")
        code, _, err = run(capsys, "solve", str(bad))
        assert code == USAGE_ERROR
        assert "error: line 2, column 1:" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "solve", "/nonexistent/x.bhg")
        assert code == USAGE_ERROR and "error:" in err

    def test_console_entry_point(self, tmp_path):
        exe = shutil.which("bergeham")
        if exe is None:
            pytest.skip("console script not on PATH")
        proc = subprocess.run(
            [exe, "check", "seq:2,3,4,7,7,7,7,7,7", "--theorem", "r-uniform", "--r", "3"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "satisfied: yes" in proc.stdout

    def test_module_execution(self):
        proc = subprocess.run(
            [sys.executable, "-m", "bergeham.cli", "check", H2_SEQ,
             "--theorem", "r-uniform", "--r", "3"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 1
        assert "tag 2 at index 4" in proc.stdout
