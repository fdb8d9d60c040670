"""Acceptance criteria 1-8, each at its stated size and time limit.

Every test prints one PASS/FAIL line.  Run on its own with

    python3 -m pytest tests/test_acceptance.py -s
    python3 tests/test_acceptance.py
"""
import subprocess
import sys
import time
from contextlib import contextmanager

import pytest

from tclass import QuadOrder, Pullback, colon, t_closure, v_closure
from tclass.verifier import (
    class_semigroup_report,
    closure_suite,
    facts_suite,
    prop23_suite,
    thm22_suite,
    thm26_suite,
)

from conftest import ALL_DOMAINS, CONFIGS, ROOT
from oracles import class_count_oracle


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(number, title, limit):
        t0 = time.perf_counter()
        status, detail = "FAIL", ""
        try:
            yield
            elapsed = time.perf_counter() - t0
            detail = f"{elapsed:.2f}s (limit {limit}s)"
            assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"
            status = "PASS"
        except BaseException as exc:
            detail = detail or f"{type(exc).__name__}: {exc}"
            raise
        finally:
            with capsys.disabled():
                print(f"\n[criterion {number}] {status}  {title}  {detail}")
    return run


def test_criterion_1_closure_laws(criterion):
    with criterion(1, "closure laws, 1000 t-ideals per backend", 10):
        for name in ("ns23", "zsqrtm5", "monomial2", "pullback_xy", "pullback_dvr"):
            rep = closure_suite(ALL_DOMAINS[name], 1, 1000)
            assert rep.passed, (name, rep.violations[:1])


def test_criterion_2_chain(criterion):
    with criterion(2, "clifford => t-invertible in endo => L-stable", 30):
        for name in ("ns23", "ns345", "zsqrtm5", "zsqrtm3"):
            rep = thm22_suite(ALL_DOMAINS[name], 2, 200)
            assert rep.passed, (name, rep.violations[:1])
            assert rep.checks["reverse_asserted"] is True
        rep = thm22_suite(ALL_DOMAINS["pullback_xy"], 2, 200)
        assert rep.passed, rep.violations[:1]
        assert rep.checks["reverse_asserted"] is False


def test_criterion_3_boole_equivalence(criterion):
    with criterion(3, "boole <=> strongly stable in dimension one", 30):
        for name in ("ns23", "ns345", "zsqrtm5", "zsqrtm3", "z3i", "pullback_dvr"):
            rep = thm26_suite(ALL_DOMAINS[name], 3, 200)
            assert rep.passed, (name, rep.violations[:1])
        rep = thm26_suite(ALL_DOMAINS["z3i"], 3, 200)
        assert rep.checks["both_false_seen"]
        assert rep.stats["boole=False,strongly_stable=False"] > 0


@pytest.mark.parametrize(
    "d_K,f,size,clifford,boolean,all_idempotent",
    [(-20, 1, 2, True, False, False), (-3, 2, 2, True, True, True), (-4, 3, 3, True, False, False)],
)
def test_criterion_4_class_semigroups(criterion, d_K, f, size, clifford, boolean, all_idempotent):
    with criterion(4, f"class semigroup of conductor {f} in discriminant {d_K}", 5):
        rep, S = class_semigroup_report(QuadOrder(d_K, f), 0)
        assert rep.passed, rep.violations
        assert len(S) == size == class_count_oracle(d_K, f)
        assert S.is_clifford() is clifford
        assert S.is_boolean() is boolean
        assert (len(S.idempotents) == len(S)) is all_idempotent
        assert S.is_associative() and S.partition_exact()


def test_criterion_5_pullback(criterion):
    with criterion(5, "pullback k + M over the monomial base", 10):
        P = Pullback()
        M = P.M()
        assert v_closure(M) == M
        assert t_closure(M * M) == M
        assert [str(Q) for Q in P.t_dim_witness()] == ["B([x])", "B([x, y])"]
        rep = prop23_suite(P, 0, 100)
        assert rep.passed, rep.violations[:1]
        assert rep.checks["M_stable"] is False
        witnesses = rep.notes["boole_witnesses"]
        assert len(witnesses) == 100 and all(w is not None for w in witnesses)
        # (R:I) = (T:I) on every noninvertible sample is part of the transfer check
        assert rep.stats.get("branch=general", 0) > 0
        assert colon(P.one(), P.T()) == M


def test_criterion_6_dvr_pullback(criterion):
    with criterion(6, "pullback over a DVR base", 1):
        rep, S = class_semigroup_report(Pullback("dvr"), 0)
        assert rep.passed
        assert len(S) == 2
        assert S.idempotents == [0, 1]
        assert S.is_boolean()


def test_criterion_7_localization_facts(criterion):
    with criterion(7, "localization facts on 500 staircases", 10):
        rep = facts_suite(ALL_DOMAINS["monomial2"], 0, 500)
        assert rep.passed, rep.violations[:1]
        assert rep.stats["checks"] == 2000


SESSION = [
    ["eval", "--domain", str(CONFIGS / "pullback_xy.json"),
     "-e", "v(M)", "-e", "t(M*M)", "-e", "(R : M)", "-e", "(R : T)", "-e", "endo(M)",
     "-e", "(T : M)", "-e", "M*(T : M)", "-e", "v(B([x]))", "-e", "(R : B([x]))"],
    ["check", "stable", "--domain", str(CONFIGS / "pullback_xy.json"), "--ideal", "M"],
    ["check", "boole", "--domain", str(CONFIGS / "pullback_xy.json"), "--ideal", "M", "--json"],
    ["suite", "prop23", "--domain", str(CONFIGS / "pullback_xy.json"), "--seed", "11", "--n", "100", "--json"],
]

EXPECTED_EVAL = [
    "v(M) = B([x, y])",
    "t(M*M) = B([x, y])",
    "(R : M) = B([1])",
    "(R : T) = B([x, y])",
    "endo(M) = B([1])",
    "(T : M) = B([1])",
    "M*(T : M) = B([x, y])",
    "v(B([x])) = B([x])",
    "(R : B([x])) = B([1, x^-1 y])",
]


def _session():
    out = []
    for argv in SESSION:
        r = subprocess.run([sys.executable, "-m", "tclass", *argv], capture_output=True, cwd=ROOT, check=False)
        out.append((r.returncode, r.stdout))
    return out


def test_criterion_8_cli_round_trip(criterion):
    with criterion(8, "scripted CLI session is byte-identical across runs", 60):
        first, second = _session(), _session()
        assert first == second
        codes = [c for c, _ in first]
        assert codes == [0, 1, 0, 0]
        assert first[0][1].decode().splitlines() == EXPECTED_EVAL


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-s", "-q", "-p", "no:cacheprovider"]))
