"""Acceptance criteria, one test each; every test prints a PASS/FAIL line."""
import json
import math
import random
import subprocess
import sys

import mpmath
import numpy as np
import pytest

from specineq.harness import (
    Axis,
    CaseId,
    Direction,
    Outcome,
    chain_members,
    get_case,
    scan_grid,
    scan_monotonicity,
    search_counterexample,
)
from specineq.harness.scan import iter_points
from specineq.specfun import (
    digamma,
    k_digamma,
    k_gamma,
    gamma,
    log_gamma,
    log_p_gamma,
    log_q_gamma,
    p_digamma,
    p_gamma,
    polygamma,
    q_digamma,
    q_gamma,
)

mpmath.mp.dps = 40
TOL = 1e-12

LEMMAS = [CaseId.L2_1, CaseId.L2_2, CaseId.L2_7, CaseId.L2_8, CaseId.L3_1, CaseId.L3_4, CaseId.L3_6]
THEOREMS = [CaseId.T2_3, CaseId.T2_9, CaseId.T3_2, CaseId.T3_7]
REMARKS = [CaseId.R2_5, CaseId.R2_10, CaseId.R3_3, CaseId.R3_8, CaseId.R3_9]
KRASNIQI = [CaseId.KrasniqiP, CaseId.KrasniqiQ]


@pytest.fixture
def verdict(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\nacceptance {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail
    return emit


_POINTS: dict = {}


def point_verdicts(case, tol):
    """Per-point verdicts on the default grid, cached for reuse across criteria."""
    key = (case, tol)
    if key not in _POINTS:
        _POINTS[key] = [v for _, _, v in iter_points(case, None, tol)]
    return _POINTS[key]


def tally(verdicts):
    counts = {o: 0 for o in Outcome}
    for v in verdicts:
        if v is not None:
            counts[v.tag] += 1
    return counts


def test_1_special_values(verdict):
    g = mpmath.euler
    checks = [
        ("digamma(1)", digamma(1.0), -g),
        ("digamma(2)", digamma(2.0), 1 - g),
        ("polygamma(1,1)", polygamma(1, 1.0), mpmath.pi ** 2 / 6),
        ("polygamma(2,1)", polygamma(2, 1.0), -2 * mpmath.zeta(3)),
        ("k_digamma(2,2)", k_digamma(2.0, 2.0), (mpmath.log(2) - g) / 2),
        ("q_gamma(0.5,1)", q_gamma(0.5, 1.0), mpmath.mpf(1)),
        ("p_gamma(3,1)", p_gamma(3, 1.0), mpmath.mpf(3) / 4),
    ]
    bad = [name for name, a, want in checks
           if not (abs(a.value - want) <= 1e-12 and abs(a.value - want) <= a.error_bound)]
    verdict(1, not bad, f"7 special values within 1e-12 and their bounds; failures: {bad or 'none'}")


def test_2_reductions(verdict):
    worst = 0.0
    for t in np.linspace(0.15, 30.0, 200):
        t = float(t)
        for a, b in ((k_gamma(1.0, t), gamma(t)), (k_digamma(1.0, t), digamma(t))):
            worst = max(worst, abs(a.value - b.value) - (a.error_bound + b.error_bound))
    gaps = [abs(p_digamma(10 ** 4, t).value - digamma(t).value) for t in (1.0, 2.0, 5.0)]
    ok = worst <= 0.0 and max(gaps) <= 1e-3
    verdict(2, ok, f"k=1 excess over bounds {worst:.3g} (<= 0); p=1e4 gap {max(gaps):.3g} (<= 1e-3)")


def test_3_lemma_suite(verdict):
    notes, ok = [], True
    for case in LEMMAS:
        vs = point_verdicts(case, TOL)
        c = tally(vs)
        n = sum(c.values())
        loose = [v for v in vs if v is not None and v.tag is Outcome.INCONCLUSIVE and v.margin >= -10 * TOL]
        good = (n >= 10 ** 4 and c[Outcome.VIOLATED] == 0 and c[Outcome.CERTIFIED] >= 0.99 * n
                and c[Outcome.INCONCLUSIVE] == len(loose))
        ok &= good
        notes.append(f"{case.value} {c[Outcome.CERTIFIED]}/{n}")
    verdict(3, ok, "lemmas certified/evaluated: " + ", ".join(notes))


def _endpoint_mismatch(case):
    grid = get_case(case).default_grid
    points = list(grid.replace({"t": Axis.of(0.0)}).lattice())
    step = max(1, len(points) // 2000)
    bad = 0
    for point in points[::step]:
        for t in (0.0, 1.0):
            members = chain_members(case, {**point, "t": t})
            if members is None:
                continue
            left, mid, right = members
            near = [abs(mid.value - o.value) <= mid.error_bound + o.error_bound + 4e-16 * abs(mid.value)
                    for o in (left, right)]
            bad += not any(near)
    return bad


def test_4_theorem_suite(verdict):
    notes, ok = [], True
    for case in THEOREMS:
        c = tally(point_verdicts(case, TOL))
        mono = scan_monotonicity(case, tol=TOL)
        mismatch = _endpoint_mismatch(case)
        ok &= c[Outcome.VIOLATED] == 0 and mono.violated == 0 and mismatch == 0
        ok &= c[Outcome.CERTIFIED] > 0 and mono.certified > 0
        notes.append(f"{case.value} pts {c[Outcome.VIOLATED]}V mono {mono.violated}V ends {mismatch}x")
    verdict(4, ok, "; ".join(notes))


def test_5_remark_suite(verdict):
    notes, ok = [], True
    for case in REMARKS + [CaseId.R2_4]:
        c = tally(point_verdicts(case, TOL))
        good = c[Outcome.VIOLATED] == 0 and c[Outcome.CERTIFIED] > 0
        if case is not CaseId.R2_4 and case is not CaseId.R3_9:
            good &= max(get_case(case).default_grid.axis("t").points()) == 5.0
        ok &= good
        notes.append(f"{case.value} {c[Outcome.CERTIFIED]}C/{c[Outcome.VIOLATED]}V")
    verdict(5, ok, ", ".join(notes))


def test_6_krasniqi(verdict):
    notes, ok = [], True
    for case in KRASNIQI:
        grid = get_case(case).default_grid
        vs = point_verdicts(case, TOL)
        c = tally(vs)
        # alpha + t > 1 is enforced: every skipped point fails it, no evaluated point does
        hyp = all((v is None) == (p["alpha"] + p["t"] <= 1.0) for p, v in zip(grid.lattice(), vs))
        ok &= c[Outcome.VIOLATED] == 0 and c[Outcome.CERTIFIED] > 0 and hyp
        notes.append(f"{case.value} {c[Outcome.CERTIFIED]}C/{c[Outcome.VIOLATED]}V")
    verdict(6, ok, ", ".join(notes))


def test_7_erratum(verdict):
    hit = search_counterexample(CaseId.GJMA_Erratum, Direction.NEGATED, tol=TOL)
    point, margin = hit if hit else (None, math.nan)
    corrected = scan_grid(CaseId.GJMA_Erratum, tol=TOL)
    ok = (hit is not None and margin <= -0.5
          and point == {"m": 1.0, "alpha": 1.0, "beta": 2.0, "t": 0.0}
          and abs(margin + 0.8856) < 1e-3 and corrected.violated == 0)
    verdict(7, ok, f"witness {point} margin {margin:.6f}; corrected direction {corrected.violated} Violated")


def test_8_verdict_soundness(verdict):
    flips, compared = 0, 0
    for case in LEMMAS + THEOREMS + REMARKS + [CaseId.R2_4] + KRASNIQI:
        for a, b in zip(point_verdicts(case, TOL), point_verdicts(case, 1e-8)):
            if a is None or b is None:
                flips += (a is None) != (b is None)
                continue
            compared += 1
            flips += {a.tag, b.tag} == {Outcome.CERTIFIED, Outcome.VIOLATED}
    verdict(8, flips == 0, f"{compared} points compared at 1e-12 vs 1e-8, {flips} flips")


def test_9_derivative_consistency(verdict):
    rng = random.Random(9)
    h = 1e-5

    def fd(f, t):
        return (f(t + h).value - f(t - h).value) / (2 * h)

    worst = {}
    ts = [rng.uniform(0.5, 20.0) for _ in range(50)]
    worst["log_gamma->digamma"] = max(abs(fd(log_gamma, t) - digamma(t).value) for t in ts)
    worst["digamma->trigamma"] = max(abs(fd(digamma, t) - polygamma(1, t).value) for t in ts)
    ps = [(rng.randint(1, 500), rng.uniform(0.5, 20.0)) for _ in range(50)]
    worst["p"] = max(abs(fd(lambda x: log_p_gamma(p, x), t) - p_digamma(p, t).value) for p, t in ps)
    qs = [(rng.uniform(0.05, 0.95), rng.uniform(0.5, 20.0)) for _ in range(50)]
    worst["q"] = max(abs(fd(lambda x: log_q_gamma(q, x), t) - q_digamma(q, t).value) for q, t in qs)
    ok = max(worst.values()) <= 1e-6
    verdict(9, ok, "max |fd - closed form|: " + ", ".join(f"{k} {v:.2g}" for k, v in worst.items()))


def _cli(*argv):
    return subprocess.Popen([sys.executable, "-m", "specineq", *argv],
                            stdout=subprocess.PIPE, stderr=subprocess.PIPE, text=True)


def test_10_determinism_and_exit_codes(verdict):
    runs = [_cli("scan-all"), _cli("scan-all")]
    outs = [p.communicate() for p in runs]
    docs = [json.loads(o) for o, _ in outs]
    stripped = [o.replace(d["timestamp"], "") for (o, _), d in zip(outs, docs)]
    same = stripped[0] == stripped[1]
    codes = {
        "scan-all": runs[0].returncode,
        "violated": _cli("scan", "GJMA_Erratum", "--direction", "negated").wait(),
        "inconclusive": _cli("scan", "L2_1", "--grid", "s=1:1:1", "--grid", "t=1.0001:1.0001:1",
                             "--tol", "1e-2").wait(),
        "usage": _cli("scan", "T2_3", "--grid", "a=oops").wait(),
        "io": _cli("scan", "R2_4", "--out", "/nonexistent/dir/r.json").wait(),
    }
    want = {"scan-all": 0, "violated": 2, "inconclusive": 3, "usage": 64, "io": 74}
    sections = len(docs[0]["results"])
    ok = same and codes == want and sections == 20
    verdict(10, ok, f"scan-all reports identical modulo timestamp: {same}; {sections} sections; "
                    f"exit codes {codes}")
