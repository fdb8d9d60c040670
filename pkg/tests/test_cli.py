import json
import subprocess
import sys

import pytest

from tclass.cli import FALSE, OK, UNDECIDED, USAGE, main

from conftest import CONFIGS


def cfg(name):
    return str(CONFIGS / f"{name}.json")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_suite_exit_zero(capsys):
    code, out, _ = run(capsys, "suite", "thm26", "--domain", cfg("ns23"), "--seed", "7", "--n", "200")
    assert code == OK
    assert "pass" in out


def test_check_false_has_no_witness(capsys):
    code, out, _ = run(capsys, "check", "boole", "--domain", cfg("zsqrtm5"), "--ideal", "(2, 1+w)", "--json")
    assert code == FALSE
    d = json.loads(out)
    assert d["result"] is False and d["witness"] is None


def test_check_true_with_witness(capsys):
    code, out, _ = run(capsys, "check", "boole", "--domain", cfg("zsqrtm3"), "--ideal", "(2, 2w)")
    assert code == OK
    assert "witness: 2" in out


def test_semigroup_json(capsys):
    code, out, _ = run(capsys, "semigroup", "--domain", cfg("z3i"), "--json")
    assert code == OK
    S = json.loads(out)["semigroup"]
    assert len(S["table"]) == 3
    assert S["idempotents"] == [0, 2]


def test_eval_lines(capsys):
    code, out, _ = run(capsys, "eval", "--domain", cfg("pullback_xy"), "-e", "(R : M)", "-e", "t(M*M)")
    assert code == OK
    assert out.splitlines() == ["(R : M) = B([1])", "t(M*M) = B([x, y])"]


def test_let_bindings_and_inline_domain(capsys):
    dom = '{"kind": "numerical_semigroup", "generators": [2, 3]}'
    code, out, _ = run(capsys, "eval", "--domain", dom, "--let", "I={3,...}", "--let", "J=I*I", "-e", "J", "--json")
    assert code == OK
    assert json.loads(out) == [{"expr": "J", "result": "{6,...}"}]


def test_unrepresentable_exits_three(capsys):
    code, _, err = run(capsys, "eval", "--domain", cfg("pullback_xy"), "-e", "P(x) + B([y])")
    assert code == UNDECIDED
    assert "unrepresentable" in err


def test_not_t_ideal_and_close(capsys):
    code, _, err = run(capsys, "check", "clifford", "--domain", cfg("monomial2"), "--ideal", "M")
    assert code == USAGE and "--close" in err
    code, out, _ = run(capsys, "check", "clifford", "--domain", cfg("monomial2"), "--ideal", "M", "--close")
    assert code == OK


@pytest.mark.parametrize(
    "argv",
    [
        ["eval", "--domain", "configs/none.json", "-e", "M"],
        ["eval", "--domain", "{\"kind\": \"ns\"", "-e", "M"],
        ["nosuch"],
        ["suite", "thm99", "--domain", "x.json"],
        ["eval", "--domain", "ns23"],
        ["check", "boole", "--domain", "PLACEHOLDER", "--ideal", "(M : M"],
        ["eval", "--domain", "PLACEHOLDER", "-e", "Q"],
        ["eval", "--domain", "PLACEHOLDER", "--let", "1x=M", "-e", "M"],
        ["suite", "thm26", "--domain", "PULLBACK", "--n", "3"],
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    argv = [cfg("ns23") if a == "PLACEHOLDER" else cfg("pullback_xy") if a == "PULLBACK" else a for a in argv]
    code, _, _ = run(capsys, *argv)
    assert code == USAGE


def test_suite_violations_exit_one(capsys, monkeypatch):
    from tclass import verifier

    def failing(D, seed, n):
        rep = verifier.closure_suite(D, seed, 1)
        rep.violations.append({"index": 0, "failed": "forced", "ideal": "R"})
        return rep

    monkeypatch.setitem(verifier.SUITES, "closure", failing)
    code, out, _ = run(capsys, "suite", "closure", "--domain", cfg("ns23"), "--n", "1")
    assert code == FALSE
    assert "violation #0: forced" in out


def test_module_entry_point():
    r = subprocess.run(
        [sys.executable, "-m", "tclass", "eval", "--domain", cfg("ns23"), "-e", "t(M*M)"],
        capture_output=True, text=True, check=False,
    )
    assert r.returncode == 0
    assert r.stdout == "t(M*M) = {4,...}\n"
