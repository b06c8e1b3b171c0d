"""Acceptance run: one pass/fail line per criterion, printed to the terminal.

Each check runs over the order <= 4 corpus (all enumerated classes plus the
constructed chains, D4, V3, cones and direct sums) within its time budget.
"""
import itertools
import subprocess
import sys
import time

import pytest

from gpea.axioms import central_ideal_complement, check_gpea
from gpea.construct import antichain_gpea
from gpea.corpus import corpus
from gpea.cover import is_cogpea
from gpea.exocenter import exocenter, is_exomap
from gpea.laws import law_ids, verify_laws
from gpea.oracles import closure_by_families
from gpea.typetheory import closure_gamma

CORPUS = corpus(4)


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail):
        with capsys.disabled():
            print(f"\nACCEPTANCE {number} {title}: {'PASS' if ok else 'FAIL'} ({detail})")
    return emit


def run_group(group, required):
    ids = law_ids(group)
    missing = [r for r in required if r not in ids]
    assert not missing, missing
    t0 = time.perf_counter()
    bad = []
    for mid, E in CORPUS:
        bad += [(mid, r.law, r.witness) for r in verify_laws(E, ids, mid) if r.status == "fail"]
    return bad, time.perf_counter() - t0


def check_group(report, number, title, group, required, limit):
    bad, secs = run_group(group, required)
    ok = not bad and secs < limit
    report(number, title, ok, f"{len(CORPUS)} models, {len(law_ids(group))} laws, "
           f"{len(bad)} failures, {secs:.1f}s < {limit}s")
    assert not bad, bad[:5]
    assert secs < limit


def test_1_kernel(report):
    required = ["SlashProps.i", "SlashProps.ii", "SlashProps.iii", "SlashProps.iv",
                "oplusdist", "veeopluswedge"]
    check_group(report, 1, "axiom kernel", "kernel", required, 10)


def test_2_exocenter(report):
    required = [f"EXCprop.{r}" for r in "i ii iii iv v vi vii viii ix x".split()]
    required += ["boolalg.order", "boolalg.laws", "CentId=piE", "CIposet"]
    t0 = time.perf_counter()
    mismatched = []
    for mid, E in CORPUS:
        if E.n <= 4:
            tables = [v for v in itertools.product(range(E.n), repeat=E.n) if is_exomap(E, v)]
            if sorted(tables) != sorted(p.values for p in exocenter(E)):
                mismatched.append(mid)
    bad, secs = run_group("exocenter", required)
    secs += time.perf_counter() - t0
    ok = not bad and not mismatched and secs < 60
    report(2, "exocenter", ok, f"{len(bad)} law failures, {len(mismatched)} n^n mismatches, {secs:.1f}s < 60s")
    assert not bad and not mismatched
    assert secs < 60


def test_3_center(report):
    required = ["centr", "centerless.ii", "centerless.iii"]
    required += [f"ceprop.{r}" for r in "i ii iii iv v vi vii viii ix x xi".split()]
    check_group(report, 3, "center", "center", required, 30)


def test_4_covers(report):
    required = [f"ExCovProp.{r}" for r in "i ii iii iv v vi vii viii".split()]
    required += ["gammahullsys.hull", "gammahullsys.invariants", "ThetasbgammaGBA", "COGPEA"]
    t0 = time.perf_counter()
    not_co = [mid for mid, E in CORPUS if not is_cogpea(E)[0]]
    bad, secs = run_group("covers", required)
    secs += time.perf_counter() - t0
    ok = not bad and not not_co and secs < 30
    report(4, "covers", ok, f"{len(bad)} law failures, {len(not_co)} not COGPEA, {secs:.1f}s < 30s")
    assert not bad and not not_co
    assert secs < 30


def test_5_types(report):
    required = [f"QK.{r}" for r in "i ii iii iv v".split()]
    required += ["kstar", "type.i", "type.ii", "decompos.existence", "decompos.uniqueness",
                 "I-II-III.existence", "I-II-III.uniqueness"]
    check_group(report, 5, "type theory", "types", required, 300)


def test_6_closure_oracle(report):
    checked = bad = 0
    for mid, E in CORPUS:
        if E.n > 4:
            continue
        for r in range(E.n + 1):
            for Q in itertools.combinations(range(E.n), r):
                checked += 1
                if closure_gamma(E, Q) != closure_by_families(E, Q):
                    bad += 1
    report(6, "closure oracle", bad == 0, f"{checked} subsets, {bad} mismatches")
    assert bad == 0


def test_7_negative_controls(report):
    cases = {
        # 1 + 1 = 0 on {0, 1}
        "GPEA4": [[0, 1], [1, 0]],
        # 1 + 1 = 1 = 1 + 0
        "GPEA3": [[0, 1], [1, 1]],
        # (1 + 1) + 2 = 3 but 1 + (1 + 2) is undefined
        "GPEA1": [[0, 1, 2, 3], [1, 2, None, None], [2, 3, None, None], [3, None, None, None]],
    }
    outcomes = []
    for tag, table in cases.items():
        rep = check_gpea(table)
        law = verify_laws(table)
        outcomes.append(tag in rep.tags and law[0].status == "fail" and law[0].witness == rep.violations)
    V3 = antichain_gpea(2)
    outcomes.append(central_ideal_complement(V3, {0, 1}) is None)
    ok = all(outcomes)
    report(7, "negative controls", ok, f"{sum(outcomes)}/{len(outcomes)} rejected as expected")
    assert ok


def test_8_determinism(report):
    cmd = [sys.executable, "-m", "gpea", "laws", "--corpus", "4", "--format", "machine"]
    runs = [subprocess.run(cmd, capture_output=True, timeout=600) for _ in range(2)]
    same = runs[0].stdout == runs[1].stdout
    codes = [r.returncode for r in runs]
    summary = runs[0].stdout.decode().splitlines()[-1]
    ok = same and codes == [0, 0] and " fail=0 " in summary and summary.endswith("timeout=0")
    report(8, "determinism", ok, f"{len(runs[0].stdout)} bytes, identical={same}, exit codes {codes}")
    assert ok
