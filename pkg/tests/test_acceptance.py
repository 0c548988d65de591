"""Acceptance criteria, one test per criterion, exact tolerances.

Every check is an integer or boolean identity, so there is nothing to
calibrate: all comparisons are ==. Each criterion prints a single
PASS/FAIL line (run with -s to see them on success).
"""

import time
from contextlib import contextmanager

import pytest

from mixprod import (
    GF2,
    GF3,
    RATIONALS,
    Ambient,
    CmCase,
    MixedProductSpec,
    alexander_dual,
    betti_stats,
    cm_classify,
    enumerate_specs,
    formula_report,
    has_linear_resolution,
    hochster_betti,
    koszul_cycle_witness,
    oracle_report,
    realize_spec,
    syzygy_witness,
    veronese_ideal,
    verify_koszul_cycle,
    verify_syzygy_witness,
)

COMPARED = ("dim", "depth", "pd", "reg_of_ideal", "reg_of_quotient", "cm")


@contextmanager
def criterion(label):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {label}: FAIL")
        raise
    print(f"ACCEPTANCE {label}: PASS ({time.perf_counter() - start:.1f}s)")


@pytest.fixture(scope="module")
def specs44():
    return enumerate_specs(4, 4)


@pytest.fixture(scope="module")
def oracle44(specs44):
    """Oracle reports for every swept description, over GF(2) and Q."""
    return {
        (spec, fld): oracle_report(realize_spec(spec), fld)
        for spec in specs44
        for fld in (GF2, RATIONALS)
    }


def test_criterion_1_veronese_baseline():
    with criterion("1 (Veronese baseline)"):
        for n in range(1, 6):
            amb = Ambient(n, 0)
            for k in range(1, n + 1):
                rep = oracle_report(veronese_ideal(amb, "x", k), RATIONALS)
                assert rep.reg_of_ideal == k
                assert rep.pd == n - k + 1
                assert rep.dim == k - 1
                assert rep.cm is True


def test_criterion_2_single_term_sweep(specs44, oracle44):
    with criterion("2 (single-term sweep)"):
        checked = 0
        for spec in specs44:
            if len(spec.terms) != 1:
                continue
            n, m = spec.ambient.n, spec.ambient.m
            ((q, r),) = spec.terms
            if q < 1 or r < 1:
                continue
            formula = formula_report(spec)
            for fld in (GF2, RATIONALS):
                oracle = oracle44[(spec, fld)]
                for name in COMPARED:
                    assert getattr(formula, name) == getattr(oracle, name), (spec, fld, name)
                assert oracle.reg_of_ideal == q + r
                assert oracle.dim == n + m - min(n - q + 1, m - r + 1)
                assert oracle.depth == q + r - 1
                assert oracle.cm == (n == q and m == r)
            checked += 1
        assert checked == sum(n * m for n in range(1, 5) for m in range(1, 5))


def test_criterion_3_two_term_sweep(specs44, oracle44):
    with criterion("3 (two-term sweep)"):
        checked = 0
        for spec in specs44:
            if len(spec.terms) != 2:
                continue
            n, m = spec.ambient.n, spec.ambient.m
            (q, r), (s, t) = spec.terms
            formula = formula_report(spec)
            for fld in (GF2, RATIONALS):
                oracle = oracle44[(spec, fld)]
                for name in COMPARED:
                    assert getattr(formula, name) == getattr(oracle, name), (spec, fld, name)
            assert formula.reg_of_ideal == r + s - 1
            if q == 0 and t == 0:
                assert formula.dim == r + s - 2
                assert formula.depth == r + s - 2
            elif t == 0:
                assert formula.dim == n + m - min(n - q + 1, n + m - (r + s) + 2)
                assert formula.depth == q + r - 1
            elif q == 0:
                assert formula.dim == n + m - min(m - t + 1, n + m - (r + s) + 2)
                assert formula.depth == s + t - 1
            else:
                assert formula.dim == n + m - min(
                    n - q + 1, m - t + 1, n + m - (r + s) + 2
                )
                assert formula.depth == min(q + r, s + t) - 1
            checked += 1
        assert checked == sum(
            (n + 1) * n // 2 * (m + 1) * m // 2
            for n in range(1, 5)
            for m in range(1, 5)
        )


def test_criterion_4_cm_census(specs44, oracle44):
    with criterion("4 (CM census)"):
        by_case = {}
        for spec in specs44:
            if len(spec.terms) != 2:
                continue
            predicted, case = cm_classify(spec)
            observed = oracle44[(spec, GF2)].cm
            by_case.setdefault(case, []).append((spec, predicted, observed))
        for case, rows in by_case.items():
            predicted_set = {s for s, p, _ in rows if p}
            observed_set = {s for s, _, o in rows if o}
            assert predicted_set == observed_set, case
        two_products_cm = {
            s for s, _, o in by_case[CmCase.TWO_PRODUCTS] if o
        }
        expected = set()
        for spec in specs44:
            if len(spec.terms) != 2:
                continue
            n, m = spec.ambient.n, spec.ambient.m
            (q, r), (s, t) = spec.terms
            if q >= 1 and t >= 1 and r == m and s == n and t == m - 1 and q == n - 1:
                expected.add(spec)
        assert two_products_cm == expected


def test_criterion_5_duality_suite(specs44, oracle44):
    with criterion("5 (Terai + Eagon-Reiner)"):
        for spec in specs44:
            ideal = realize_spec(spec)
            dual = alexander_dual(ideal)
            rep = oracle44[(spec, GF2)]
            dual_pd, _ = betti_stats(hochster_betti(dual, GF2))
            assert rep.reg_of_ideal == dual_pd, spec
            assert rep.cm == has_linear_resolution(dual, GF2), spec


def test_criterion_6_field_independence(specs44):
    with criterion("6 (field independence)"):
        for spec in specs44:
            ideal = realize_spec(spec)
            q, f2, f3 = (
                hochster_betti(ideal, fld) for fld in (RATIONALS, GF2, GF3)
            )
            assert q.entries == f2.entries == f3.entries, spec
            assert q.multigraded == f2.multigraded == f3.multigraded, spec


def test_criterion_7_witness_suite(specs44):
    with criterion("7 (witness suite)"):
        two_term = [s for s in specs44 if len(s.terms) == 2]
        assert two_term
        for spec in two_term:
            assert verify_syzygy_witness(syzygy_witness(spec)), spec
        for n in range(1, 5):
            for m in range(1, 5):
                assert verify_koszul_cycle(koszul_cycle_witness(Ambient(n, m)))
        for n in range(1, 4):
            for m in range(1, 4):
                ideal = realize_spec(MixedProductSpec(Ambient(n, m), ((1, 1),)))
                table = hochster_betti(ideal, GF2)
                assert any(i == n + m - 1 for i, _ in table.entries), (n, m)


def test_criterion_8_spot_values():
    with criterion("8 (spot values)"):
        spec_a = MixedProductSpec(Ambient(2, 2), ((1, 2), (2, 1)))
        for rep in (
            formula_report(spec_a),
            oracle_report(realize_spec(spec_a), GF2),
            oracle_report(realize_spec(spec_a), RATIONALS),
        ):
            assert rep.dim == 2
            assert rep.depth == 2
            assert rep.reg_of_ideal == 3
            assert rep.cm is True
        spec_b = MixedProductSpec(Ambient(3, 3), ((1, 3), (2, 1)))
        for rep in (
            formula_report(spec_b),
            oracle_report(realize_spec(spec_b), GF2),
            oracle_report(realize_spec(spec_b), RATIONALS),
        ):
            assert rep.depth == 2
            assert rep.dim == 3
            assert rep.cm is False
