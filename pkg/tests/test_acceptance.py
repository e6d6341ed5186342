"""Acceptance criteria, one test each.

Every test emits a single ``PASS``/``FAIL`` line and then asserts the same
condition. The lines are collected into an "acceptance criteria" section at
the end of the pytest run.
"""

import itertools
import random
import time
from fractions import Fraction
from math import gcd, isqrt

import pytest

from oracles import brute_zero_strings, catalan, cofactor_det

from lensfill.cfrac import cf_dual, cf_eval
from lensfill.lemmas import run_lemma_suite
from lensfill.lisca import LensSpace, is_k_replaceable, min_filling_euler, verify_theorem1
from lensfill.palf import (
    SEED_FINAL,
    SEED_MIDDLE,
    SEED_X,
    boundary_h1_palf,
    daisy_substitute,
    euler_char_palf,
    lantern_substitute,
)
from lensfill.plumbing import PlumbingTree, abelianization, glue_invariants, intersection_matrix
from lensfill import section3
from lensfill.smith import determinant, identity, matmul, smith_normal_form
from lensfill.zerostrings import enumerate_zero_strings


@pytest.fixture
def report(record_property):
    def emit(n, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"
        print(line)
        record_property("acceptance", line)
        assert ok, detail

    return emit


def test_criterion_01_dual_worked_example(report):
    times = []
    for _ in range(5):
        t = time.perf_counter()
        d = cf_dual((3, 2, 5, 2, 2, 6))
        v = cf_eval(d)
        times.append(time.perf_counter() - t)
    dt = min(times)
    ok = d == (2, 4, 2, 2, 5, 2, 2, 2, 2) and v == Fraction(297, 175) and dt < 1e-3
    report(1, ok, f"dual={list(d)} value={v} in {dt * 1e6:.0f}us (bound 1ms)")


def test_criterion_02_seed_fraction(report):
    v, d = cf_eval((2, 4, 4, 2)), cf_dual((3, 2, 3, 2, 3))
    report(2, v == Fraction(45, 26) and d == (2, 4, 4, 2), f"value={v} dual={list(d)}")


def test_criterion_03_lemma_suite(report):
    t = time.perf_counter()
    results = run_lemma_suite(max_len=6, max_entry=6, max_zero_len=9)
    dt = time.perf_counter() - t
    bad = [r.line() for r in results if not r.ok]
    checked = sum(r.checked for r in results)
    report(3, not bad and dt < 60, f"{len(results)} checks, {checked} cases, failures={bad} in {dt:.1f}s (bound 60s)")


def test_criterion_04_zero_string_census(report):
    counts = {n: len(enumerate_zero_strings(n)) for n in range(1, 11)}
    cat_ok = all(counts[n] == catalan(n - 1) for n in counts)
    brute_ok = all(set(enumerate_zero_strings(n)) == brute_zero_strings(n) for n in range(1, 9))
    report(4, cat_ok and brute_ok, f"counts={list(counts.values())} brute agreement n<=8: {brute_ok}")


def _ch_oracle(p, q):
    # direct search over n, m rather than the library predicate
    n = isqrt(p)
    if n * n != p:
        return False
    return any(gcd(n, m) == 1 and n * m - 1 == q for m in range(1, n + 1))


def test_criterion_05_casson_harer(report):
    t = time.perf_counter()
    bad, total = [], 0
    for p in range(2, 401):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            total += 1
            if (min_filling_euler(LensSpace(p, q)) == 1) != _ch_oracle(p, q):
                bad.append((p, q))
    dt = time.perf_counter() - t
    report(5, not bad and dt < 300, f"{total} lens spaces, discrepancies={bad[:5]} in {dt:.1f}s (bound 300s)")


def test_criterion_06_theorem1(report):
    t = time.perf_counter()
    rep = verify_theorem1(max_len=6, max_entry=7)
    dt = time.perf_counter() - t
    ok = rep.ok and dt < 600
    report(
        6,
        ok,
        f"checked={rep.checked} replaceable={len(rep.replaceable)} complete={rep.complete} "
        f"missing={rep.missing_from_families[:5]} spurious={rep.spurious_in_families[:5]} "
        f"in {dt:.1f}s (bound 600s)",
    )


def test_criterion_07_abelianization(report):
    g9 = str(abelianization(section3.pi1_b_presentation(9)))
    fam = {n: abelianization(section3.pi1_b_presentation(n)) for n in range(2, 13)}
    fam_ok = all(g.rank == 0 and g.order == 2 * n - 1 for n, g in fam.items())
    report(7, g9 == "Z17" and fam_ok, f"n=9: {g9}; n=2..12: {[str(g) for g in fam.values()]}")


def test_criterion_08_pairings(report):
    rows = section3.pairing_checks()
    bad = [(label, got, want) for label, got, want in rows if got != want]
    glue = glue_invariants((19, -15), (12, -11), (2, -1))
    report(
        8,
        not bad and glue == (9, -5),
        f"dataset v{section3.DATASET_VERSION}: {len(rows)} pairings, mismatches={bad}; glue={glue}",
    )


def test_criterion_09_gram_report(report):
    # report-mode: mismatches against the stated values are logged, not failed
    a, b = section3.gram_report(), section3.gram_report()
    for line in a.lines():
        print("    " + line)
    deterministic = a == b and a.lines() == b.lines()
    flagged = a.det_matches or bool(a.bad_pairs)
    report(
        9,
        deterministic and flagged,
        f"dataset v{section3.DATASET_VERSION} report produced deterministically; "
        f"det match={a.det_matches} signature match={a.signature_matches} "
        f"K order match={a.k_order_matches} flagged pairs={a.bad_pairs}",
    )


def test_criterion_10_palf_seed(report):
    t = time.perf_counter()
    mid = lantern_substitute(SEED_X, 4, 6, 5, 7)
    end = daisy_substitute(mid, [0, 1], [2, 3, 4], 7)
    steps = [SEED_X, mid, end]
    bounds = [str(boundary_h1_palf(f)) for f in steps]
    dt = time.perf_counter() - t
    ok = (
        euler_char_palf(SEED_X) == 5
        and euler_char_palf(SEED_FINAL) == 2
        and len(SEED_X.twists) == 9
        and len(SEED_FINAL.twists) == 6
        and mid == SEED_MIDDLE
        and end == SEED_FINAL
        and bounds == ["Z45"] * 3
        and dt < 1
    )
    report(10, ok, f"eulers 5 -> {euler_char_palf(mid)} -> {euler_char_palf(end)}, boundaries {bounds} in {dt * 1e3:.1f}ms (bound 1s)")


def _chains(max_len, max_entry):
    for n in range(1, max_len + 1):
        yield from itertools.product(range(2, max_entry + 1), repeat=n)


def test_criterion_11_properties(report):
    det_bad, snf_bad, rev_bad, n_chain = [], [], [], 0
    cache = {}

    def rep(s, k):
        key = (s, k)
        if key not in cache:
            cache[key] = is_k_replaceable(s, k)
        return cache[key]

    for s in _chains(8, 6):
        n_chain += 1
        M = intersection_matrix(PlumbingTree.chain([-a for a in s]))
        if abs(determinant(M)) != cf_eval(s).numerator:
            det_bad.append(s)
        r = s[::-1]
        if r < s:
            continue
        for k in (1, 2):
            if rep(s, k) != rep(r, k):
                rev_bad.append((s, k))

    # unimodularity: every chain up to length 5, a seeded sample of longer chains,
    # and random dense matrices; determinants cross-checked by cofactor expansion
    rng = random.Random(11)
    mats = [
        intersection_matrix(PlumbingTree.chain([-a for a in s])) for s in _chains(5, 6)
    ]
    for _ in range(500):
        n = rng.randint(6, 8)
        s = [rng.randint(2, 6) for _ in range(n)]
        mats.append(intersection_matrix(PlumbingTree.chain([-a for a in s])))
    for _ in range(300):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        mats.append([[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)])
    for M in mats:
        sf = smith_normal_form(M)
        ok = (
            abs(cofactor_det(sf.U)) == 1
            and abs(cofactor_det(sf.V)) == 1
            and matmul(matmul(sf.U, M), sf.V) == sf.D
        )
        if not ok:
            snf_bad.append(M)
    report(
        11,
        not det_bad and not snf_bad and not rev_bad,
        f"{n_chain} chains: det failures={det_bad[:3]}, reversal failures={rev_bad[:3]}; "
        f"{len(mats)} SNF transforms, non-unimodular={len(snf_bad)}",
    )
