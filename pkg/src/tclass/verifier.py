"""Seeded theorem suites over the supported domain families.

Every suite draws its ideals from ``random.Random(seed)``, closes them to
t-ideals where the statement quantifies over t-ideals, runs per-ideal checks
in sample order and collects violations with full normal-form traces.  A
report is a pure function of (domain, seed, n) apart from ``wall_time_ms``,
which is left out of the JSON unless asked for.
"""
from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from typing import Any

from . import core
from .errors import Unrepresentable, WrongDimension
from .monomial import Monomial2
from .pullback import Pullback, prop23_transfer_check
from .quadratic import QuadOrder
from .regularity import (
    boole_at,
    clifford_at,
    l_stable_at,
    stable_at,
    strongly_stable_at,
    t_idempotent_at,
    t_invertible_in_endo,
)
from .semigroup import ClassSemigroup

L_STABLE_N = 8


@dataclass
class SuiteReport:
    suite: str
    domain: dict
    seed: int
    n: int
    violations: list[dict] = field(default_factory=list)
    stats: dict[str, Any] = field(default_factory=dict)
    checks: dict[str, Any] = field(default_factory=dict)
    notes: dict[str, Any] = field(default_factory=dict)
    wall_time_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def violate(self, index, ideal, failed, **traces):
        self.violations.append({"index": index, "ideal": str(ideal), "failed": failed, "traces": traces})

    def count(self, key, by=1):
        self.stats[key] = self.stats.get(key, 0) + by

    def to_dict(self, timing: bool = False) -> dict:
        d = {
            "suite": self.suite,
            "domain": self.domain,
            "seed": self.seed,
            "n": self.n,
            "passed": self.passed,
            "violations": self.violations,
            "stats": dict(sorted(self.stats.items())),
            "checks": self.checks,
            "notes": self.notes,
        }
        if timing:
            d["wall_time_ms"] = round(self.wall_time_ms, 3)
        return d

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=False)


class _timed:
    def __init__(self, report):
        self.report = report

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.wall_time_ms = (time.perf_counter() - self.t0) * 1000.0
        return False


def sample_t_ideals(D, rng: random.Random, n: int) -> list:
    """n t-ideals of D; quadratic orders get one scaled representative per class first."""
    out = []
    if isinstance(D, QuadOrder):
        for _, rep in D.class_representatives()[:n]:
            out.append(core.scale(D.random_scalar(rng), rep))
    elif isinstance(D, Pullback) and D.base_kind == "dvr":
        out += [D.one(), D.T()][:n]
    while len(out) < n:
        out.append(core.t_closure(D.random_ideal(rng)))
    return out


def _vd(*verdicts):
    return {v.predicate: v.to_dict() for v in verdicts}


def closure_suite(D, seed: int, n: int) -> SuiteReport:
    """Closure-operator laws for v = t and the colon/endomorphism-ring identities."""
    rep = SuiteReport("closure", D.to_config(), seed, n)
    rng = random.Random(seed)
    R = D.one()
    with _timed(rep):
        for k in range(n):
            raw = D.random_ideal(rng)
            other = D.random_ideal(rng)
            c = D.random_scalar(rng)
            for I in (raw, core.v_closure(raw)):
                vI = core.v_closure(I)
                rep.count("ideals")
                if not core.contains(vI, I):
                    rep.violate(k, I, "extensive", v=str(vI))
                if core.v_closure(vI) != vI:
                    rep.violate(k, I, "idempotent", v=str(vI))
                try:
                    big = core.add(I, other)
                except Unrepresentable:
                    big = core.colon(I, D.named_ideals()["M"])
                    rep.count("monotone_via_colon")
                if not core.contains(big, I):
                    rep.violate(k, I, "monotone pair construction", big=str(big))
                elif not core.contains(core.v_closure(big), vI):
                    rep.violate(k, I, "monotone", big=str(big), v=str(vI))
                if core.v_closure(core.scale(c, I)) != core.scale(c, vI):
                    rep.violate(k, I, "v(cI) = c v(I)", c=D.format_scalar(c))
                inv = core.inverse(I)
                if core.v_closure(inv) != inv:
                    rep.violate(k, I, "inverse divisorial", inv=str(inv))
                if not core.contains(R, core.mul(I, inv)):
                    rep.violate(k, I, "I I^-1 in R", inv=str(inv))
                if core.colon(vI, other) != core.colon(vI, core.t_closure(other)):
                    rep.violate(k, I, "(I:J) = (I:J_t)", J=str(other))
                E = core.endo_ring(I)
                if core.endo_ring(core.scale(c, I)) != E:
                    rep.violate(k, I, "endo(cI) = endo(I)", endo=str(E))
                w = core.iso_witness(I, core.scale(c, I))
                if w is None:
                    rep.violate(k, I, "iso_witness completeness", c=D.format_scalar(c))
    return rep


def thm22_suite(D, seed: int, n: int) -> SuiteReport:
    """clifford => t-invertible in (I:I) => L-stable; reverse asserted only when t-dim = 1."""
    rep = SuiteReport("thm22", D.to_config(), seed, n)
    rng = random.Random(seed)
    reverse = D.t_dim == 1
    rep.checks["reverse_asserted"] = reverse
    candidates = []
    with _timed(rep):
        for k, I in enumerate(sample_t_ideals(D, rng, n)):
            c = clifford_at(I)
            ti = t_invertible_in_endo(I)
            ls = l_stable_at(I, L_STABLE_N)
            rep.count(f"clifford={c.result}")
            rep.count(f"t_invertible={ti.result}")
            rep.count(f"l_stable={'inconclusive' if ls.inconclusive else ls.result}")
            if c.result and not ti.result:
                rep.violate(k, I, "clifford => t_invertible", **_vd(c, ti))
            if ti.result and ls.result is not True:
                rep.violate(k, I, "t_invertible => l_stable", **_vd(ti, ls))
            if reverse and ls.result and not c.result:
                rep.violate(k, I, "l_stable => clifford", **_vd(ls, c))
            if not reverse and ls.result and not c.result:
                candidates.append(str(I))
    if not reverse:
        rep.notes["reverse_counterexample_candidates"] = candidates
    return rep


def thm26_suite(D, seed: int, n: int) -> SuiteReport:
    """boole_at <=> strongly_stable_at per t-ideal, plus strongly stable => stable => t-invertible."""
    if D.t_dim != 1:
        raise WrongDimension(f"{D} has t-dimension {D.t_dim}; the equivalence is stated for t-dim 1")
    rep = SuiteReport("thm26", D.to_config(), seed, n)
    rng = random.Random(seed)
    with _timed(rep):
        for k, I in enumerate(sample_t_ideals(D, rng, n)):
            b = boole_at(I)
            ss = strongly_stable_at(I)
            st = stable_at(I)
            ti = t_invertible_in_endo(I)
            rep.count(f"boole={b.result},strongly_stable={ss.result}")
            if b.result != ss.result:
                rep.violate(k, I, "boole <=> strongly_stable", **_vd(b, ss))
            if ss.result and not st.result:
                rep.violate(k, I, "strongly_stable => stable", **_vd(ss, st))
            if st.result and not ti.result:
                rep.violate(k, I, "stable => t_invertible", **_vd(st, ti))
    rep.checks["both_false_seen"] = rep.stats.get("boole=False,strongly_stable=False", 0) > 0
    return rep


def prop23_suite(D, seed: int, n: int) -> SuiteReport:
    """Boole transfer between R = k + M and T on sampled t-ideals, plus the fixed facts about M."""
    if not isinstance(D, Pullback):
        raise WrongDimension("prop23 needs a pullback domain")
    rep = SuiteReport("prop23", D.to_config(), seed, n)
    rng = random.Random(seed)
    M = D.M()
    with _timed(rep):
        vM = core.v_closure(M)
        tM2 = core.t_closure(M * M)
        chain = D.t_dim_witness()
        st = stable_at(M)
        rep.checks["v(M)=M"] = vM == M
        rep.checks["t(M^2)=M"] = tM2 == M
        # t-idempotence of M is a feature of the two-dimensional base; over K[[t]], M^2 = t^2 T
        idem_expected = D.base_kind != "dvr"
        rep.checks["t_dim_witness"] = [str(P) for P in chain]
        rep.checks["t_dim"] = len(chain)
        rep.checks["M_stable"] = st.result
        rep.checks["M_stable_trace"] = st.trace
        rep.checks["(R:T)=M"] = core.colon(D.one(), D.T()) == M
        if not (vM == M and (tM2 == M) == idem_expected and rep.checks["(R:T)=M"]):
            rep.violate(-1, M, "fixed facts about M", v=str(vM), t_M2=str(tM2))
        if D.t_dim >= 2 and st.result:
            rep.violate(-1, M, "t-dim 2 pullback must not be t-stable at M", **_vd(st))
        witnesses = []
        for k, I in enumerate(sample_t_ideals(D, rng, n)):
            r = prop23_transfer_check(I)
            rep.count(f"branch={r['branch']}")
            witnesses.append(r["witness_R"])
            if not r["passed"]:
                rep.violate(k, I, "prop23 transfer", report=r)
            if not boole_at(I).result:
                rep.violate(k, I, "boole over R")
        rep.notes["boole_witnesses"] = witnesses
    return rep


def facts_suite(D, seed: int, n: int) -> SuiteReport:
    """(I_S)_v = (I_v)_S and (I:I)_S = (I_S:I_S) with S generated by the other variable."""
    if not isinstance(D, Monomial2):
        raise WrongDimension("facts suite needs the monomial2 domain")
    rep = SuiteReport("facts", D.to_config(), seed, n)
    rng = random.Random(seed)
    with _timed(rep):
        for k in range(n):
            I = D.random_ideal(rng)
            for var in ("x", "y"):
                L = D.localize(var, I)
                lhs1, rhs1 = L.v_closure(), D.localize(var, core.v_closure(I))
                lhs2, rhs2 = D.localize(var, core.colon(I, I)), L.colon(L)
                rep.count("checks", 2)
                if lhs1 != rhs1:
                    rep.violate(k, I, f"fact1[{var}]", lhs=str(lhs1), rhs=str(rhs1))
                if lhs2 != rhs2:
                    rep.violate(k, I, f"fact2[{var}]", lhs=str(lhs2), rhs=str(rhs2))
    return rep


def containment_chain(D: QuadOrder, S: ClassSemigroup) -> dict:
    """Pic ⊆ Cl ⊆ S_t ⊆ S as index sets of the enumeration."""
    R = D.one()
    pic, cl, st = [], [], []
    for k, I in enumerate(S.reps):
        inv = core.inverse(I)
        II = core.mul(I, inv)
        if II == R:
            pic.append(k)
        if core.v_closure(II) == R:
            cl.append(k)
        if core.v_closure(I) == I:
            st.append(k)
    full = list(S.elements)
    ok = set(pic) <= set(cl) <= set(st) <= set(full)
    return {"Pic": pic, "Cl": cl, "S_t": st, "S": full, "chain_holds": ok}


def class_semigroup_report(D, seed: int = 0) -> tuple[SuiteReport, ClassSemigroup]:
    """Enumerate S_t(R) and check its Clifford/Boolean structure."""
    rep = SuiteReport("semigroup", D.to_config(), seed, 0)
    rng = random.Random(seed)
    with _timed(rep):
        if isinstance(D, Pullback):
            S = D.enumerate_classes_dvr()
        else:
            S = D.enumerate_class_semigroup()
        rep.n = len(S)
        clifford_elementwise = S.is_clifford()
        rep.checks.update(
            size=len(S),
            associative=S.is_associative(),
            commutative=S.is_commutative(),
            clifford=clifford_elementwise,
            boolean=S.is_boolean(),
            idempotents=S.idempotents,
            groups={str(e): g for e, g in S.groups.items()},
            partition_exact=S.partition_exact(),
        )
        if not S.is_associative():
            rep.violate(-1, "table", "associativity")
        if S.partition_exact() != clifford_elementwise:
            rep.violate(-1, "table", "G_e partition exact <=> Clifford")
        if isinstance(D, QuadOrder):
            chain = containment_chain(D, S)
            rep.checks["containment"] = chain
            if not chain["chain_holds"]:
                rep.violate(-1, "table", "Pic ⊆ Cl ⊆ S_t ⊆ S")
            # the table must not depend on the chosen representatives
            for i in S.elements:
                for j in S.elements:
                    I = core.scale(D.random_scalar(rng), S.reps[i])
                    J = core.scale(D.random_scalar(rng), S.reps[j])
                    if S.reps.index(D.reduce_class(core.mul(I, J))) != S.table[i][j]:
                        rep.violate(-1, f"{i}*{j}", "table well-defined")
            idem_orders = sorted(S.tags[e] for e in S.idempotents)
            rep.checks["idempotent_conductors"] = idem_orders
            if idem_orders != sorted(set(S.tags)):
                rep.violate(-1, "table", "idempotents = classes of overorders")
            rep.notes["multiplier_ring_conductors"] = S.tags
            rep.notes["integral_closure_conductor"] = 1
        rep.checks["elements"] = S.labels
        rep.checks["table"] = S.table
    return rep, S


SUITES = {
    "closure": closure_suite,
    "thm22": thm22_suite,
    "thm26": thm26_suite,
    "prop23": prop23_suite,
    "facts": facts_suite,
}
