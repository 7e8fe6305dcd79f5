"""Acceptance suite: one test and one printed PASS/FAIL line per criterion.

Run directly (``python3 tests/test_acceptance.py``) for just the summary lines.
"""

from __future__ import annotations

import sys
import time
from itertools import product

import pytest

from affschur import aschur, reps, relations, yangian
from affschur.aschur import ASElement, compose, easybit, xi
from affschur.combinat import CosetMatrix, coset_matrices, dA, enumerate_compositions, redundancies
from affschur.daha import filtered_basis
from affschur.linalg import rank
from affschur.polyring import deformed_power_sum_closed, ratio_series, sym_family

BUDGET_SECOND, BUDGET_MINUTE, BUDGET_MINUTES = 1.0, 60.0, 1800.0

# collected here and printed by the terminal summary hook in conftest.py
RESULT_LINES: list[str] = []


def report(label: str, ok: bool, elapsed: float, budget: float, detail: str = "") -> None:
    within = elapsed <= budget
    status = "PASS" if ok and within else "FAIL"
    note = f" [{detail}]" if detail and not ok else ""
    if ok and not within:
        note = f" [over budget {budget:.0f}s]"
    RESULT_LINES.append(f"{status} {label} ({elapsed:.2f}s){note}")
    assert ok, detail
    assert within, f"took {elapsed:.1f}s, budget {budget:.0f}s"


def timed(fn):
    start = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - start


# ---------------------------------------------------------------- 1


def test_double_coset_calibration():
    def run():
        A = CosetMatrix([[1, 0, 3], [2, 2, 1]])
        lam_A, mu_A = redundancies(A)
        return (
            dA(A).cycles() == [(2, 5, 8, 4, 7, 3, 6)]
            and lam_A == (1, 0, 3, 2, 2, 1)
            and mu_A == (1, 2, 0, 2, 3, 1)
        )

    ok, elapsed = timed(run)
    report("double-coset calibration", ok, elapsed, BUDGET_SECOND)


# ---------------------------------------------------------------- 2


def test_schur_oracle_equivalence():
    def run():
        failures, pairs = [], 0
        for n, r in product(range(1, 4), range(1, 4)):
            weights = enumerate_compositions(n, r)
            for lam, mu, nu in product(weights, repeat=3):
                for A in coset_matrices(lam, mu):
                    for B in coset_matrices(mu, nu):
                        pairs += 1
                        got = compose(xi(A), xi(B))
                        expected = aschur.schur_product_oracle(A, B)
                        got_counts = {C: f.constant_term() for C, f in got.terms.items()}
                        if got.degree() > 0 or got_counts != expected:
                            failures.append((A, B))
        return failures, pairs

    (failures, pairs), elapsed = timed(run)
    report(f"schur oracle equivalence ({pairs} pairs)", not failures, elapsed, BUDGET_MINUTES, f"{failures[:3]}")


# ---------------------------------------------------------------- 3


def test_basis_rank():
    def run():
        weights = enumerate_compositions(2, 2)
        return [
            (lam, mu, D)
            for lam, mu in product(weights, repeat=2)
            for D in range(4)
            if aschur.filtered_dim(lam, mu, D) != aschur.evaluated_rank(lam, mu, D)
        ]

    bad, elapsed = timed(run)
    report("basis and rank", not bad, elapsed, BUDGET_MINUTE, f"{bad[:3]}")


# ---------------------------------------------------------------- 4


def test_relation_suite():
    def run():
        failures, count = [], 0
        for name in relations.RELATIONS:
            for params in relations.relation_grid(name, max_thickness=3, max_degree=3):
                count += 1
                for label, ok in relations.check_relation(name, N=6, **params):
                    if not ok:
                        failures.append((name, label, params))
        return failures, count

    (failures, count), elapsed = timed(run)
    report(f"relation suite ({count} instances)", not failures, elapsed, BUDGET_MINUTES, f"{failures[:3]}")


# ---------------------------------------------------------------- 5


def test_affine_hecke_embedding():
    def run():
        basis = filtered_basis(2, 3)
        images = [easybit(h) for h in basis]
        injective = rank([{(A.flat(), e): c for A, f in m.terms.items() for e, c in f.terms.items()} for m in images])
        bad = []
        for (a, ma), (b, mb) in product(zip(basis, images), repeat=2):
            if a.degree() + b.degree() > 3:
                continue
            if easybit(a * b) != compose(ma, mb):
                bad.append((a, b))
        return injective == len(basis), bad

    (injective, bad), elapsed = timed(run)
    report("affine Hecke embedding", injective and not bad, elapsed, BUDGET_MINUTE, f"injective={injective} {bad[:2]}")


# ---------------------------------------------------------------- 6


def test_centers():
    def run():
        bad = []
        for n, r, D in [(2, 2, 2), (2, 3, 2), (3, 2, 2)]:
            predicted = aschur.central_basis(n, r, D)
            dim, brute = aschur.commutant_dimension(n, r, D)
            joint = aschur.span_rank(predicted + brute)
            if not (aschur.span_rank(predicted) == len(predicted) == dim == joint):
                bad.append((n, r, D, len(predicted), dim, joint))
        return bad

    bad, elapsed = timed(run)
    report("centers", not bad, elapsed, BUDGET_MINUTES, f"{bad}")


# ---------------------------------------------------------------- 7


def test_drinfeld_cross_oracle():
    def run():
        bad = []
        for n, r in product(range(1, 4), range(1, 4)):
            T = yangian.drinfeld_image(n, r, 5)
            mismatches = T.mismatches(yangian.slava_closed_form(n, r, 5))
            if mismatches:
                bad.append(("closed form", n, r, mismatches[0]))
            flags = yangian.drinfeld_generator_check(T)
            wrong = [k for k, ok in flags.items() if not ok]
            if wrong:
                bad.append(("gauss", n, r, wrong))
        return bad

    bad, elapsed = timed(run)
    report("drinfeld cross-oracle", not bad, elapsed, BUDGET_MINUTES, f"{bad[:3]}")


# ---------------------------------------------------------------- 8


def test_rtt_on_images():
    def run():
        T = yangian.drinfeld_image(2, 2, 5)
        return yangian.rtt_failures(T, 3)

    bad, elapsed = timed(run)
    report("RTT on images", not bad, elapsed, BUDGET_MINUTE, f"{bad[:3]}")


# ---------------------------------------------------------------- 9


def test_harish_chandra_center():
    def run():
        bad = []
        for n, r in product(range(1, 3), range(1, 5)):
            image = yangian.hc_center_image(n, r, 5)
            for d in range(5):
                expected = sym_family("tilde_p", d, r)
                z = image[d + 1]
                target = ASElement(n, r, {
                    (lam, lam): aschur.pin_object(lam, expected) for lam in enumerate_compositions(n, r)
                })
                if z != target:
                    bad.append(("image", n, r, d))
        for r in range(1, 6):
            series = ratio_series(list(range(1, r + 1)), 1, 0, r, 7)
            for d in range(7):
                if sym_family("tilde_p", d, r) != series[d + 1]:
                    bad.append(("recursion", r, d))
                if deformed_power_sum_closed(d, range(1, r + 1), r) != series[d + 1]:
                    bad.append(("closed", r, d))
        return bad

    bad, elapsed = timed(run)
    report("Harish-Chandra center", not bad, elapsed, BUDGET_MINUTE, f"{bad[:3]}")


# ---------------------------------------------------------------- 10


def test_symmetry_squares():
    def run():
        bad = []
        for n, r in product((1, 2), (1, 2)):
            if not yangian.tau_check(yangian.drinfeld_image(n, r, 4)):
                bad.append(("tau", n, r))
        for r, m in product((1, 2), (0, 1)):
            flags = yangian.shifty_check(1, r, m, 4)
            bad.extend(("strand", r, m, k) for k, ok in flags.items() if not ok)
        return bad

    bad, elapsed = timed(run)
    report("symmetry squares", not bad, elapsed, BUDGET_MINUTE, f"{bad}")


# ---------------------------------------------------------------- 11


def test_surjectivity_evidence():
    def run():
        return {case: yangian.surjectivity_dim(*case) for case in [(1, 2, 2), (2, 1, 2), (2, 2, 1)]}

    results, elapsed = timed(run)
    ok = all(spanned == full for spanned, full in results.values())
    report("surjectivity evidence", ok, elapsed, BUDGET_MINUTES, f"{results}")


# ---------------------------------------------------------------- 12


def test_representation_round_trip():
    def run():
        bad = []
        for r in range(4):
            for seq in reps.enumerate_sequences(2, r, [0, 1, 2]):
                rt = reps.round_trip(seq)
                if not rt.ok:
                    bad.append(("round trip", str(seq)))
        for b, k in product([0, 1, 2], [1, 2]):
            segs = reps.make_segments([(b, b + k - 1)])
            if not reps.is_irreducible(reps.standard_module(segs, 2)):
                bad.append(("irreducible", b, k))
        return bad

    bad, elapsed = timed(run)
    report("representation round trip", not bad, elapsed, BUDGET_MINUTES, f"{bad[:3]}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
