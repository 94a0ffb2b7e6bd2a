"""Acceptance criteria, one test per criterion.

Run directly (``python tests/test_acceptance.py``) or through pytest; either way
a PASS/FAIL line per criterion is printed at the end.
"""
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest
from hypothesis import settings

from septic_qseries import identities as I
from septic_qseries.constants import (
    closed_form_constants,
    dft_constants,
    phi_constants,
    recover_logderiv_tables,
)
from septic_qseries.identities import PASS, Perturbation
from septic_qseries.ring import CycElement


def verify(plan):
    """Run (name, order) pairs; return results and wall time in seconds."""
    t0 = time.perf_counter()
    results = [I.run_check(I.REGISTRY[name], order) for name, order in plan]
    return results, time.perf_counter() - t0


def assert_all_pass(results):
    bad = [(r.name, r.status, r.first_failure, r.detail) for r in results if r.status != PASS]
    assert not bad, bad


def test_criterion_01_klein_suite():
    results, secs = verify([
        ("septic.klein.quartic", 10),
        ("septic.klein.xyz", 200),
        ("septic.klein.kg12", 100),
        ("septic.klein.kg13", 100),
        ("septic.klein.kg23", 100),
    ])
    assert_all_pass(results)
    assert results[0].order_verified == 10
    assert secs < 10


def test_criterion_02_septic_system():
    results, secs = verify([(f"septic.system.deq-{w}", 60) for w in ("x", "y", "z", "P")]
                           + [("septic.system.e4-bridge", 40), ("septic.system.closing", 40)])
    assert_all_pass(results)
    assert secs < 10


def test_criterion_03_constant_tables():
    tables = recover_logderiv_tables()
    assert tables["x"][1] == (-2, 0, -1, 2, 2, -1, 0)
    assert tables["y"][1] == (-2, -1, 2, 0, 0, 2, -1)
    assert tables["z"][1] == (-2, 2, 0, -1, -1, 0, 2)
    phis, a, b, total = phi_constants("x")
    assert a.values == (0, 37, 25, 61, 61, 25, 37)
    assert b.values == (222, -37, -37, -37, -37, -37, -37)
    assert total == 5 and isinstance(total, CycElement) and total.is_rational()
    assert all(p.level == 28 for p in phis)


def test_criterion_04_lemma_ba1():
    t0 = time.perf_counter()
    closed, derived = closed_form_constants(), dft_constants()
    for v in "xyz":
        assert len(closed[v]) == 3
        for u, w in zip(closed[v], derived[v]):
            assert u == w
    results, _ = verify([(f"septic.lambert.ba1-{v}", 40) for v in "xyz"])
    assert_all_pass(results)
    assert time.perf_counter() - t0 < 60


def test_criterion_05_eisenstein_parameterizations():
    plan = [("eisenstein.params.ring1", 50)]
    plan += [(f"eisenstein.params.{n}", 50) for n in ("hm-product", "hm-cubic", "ss3")]
    plan += [(f"eisenstein.params.{f}-{e}", 40) for f in ("coopt", "fina") for e in ("e4", "e4-7", "e6", "e6-7")]
    results, _ = verify(plan)
    assert_all_pass(results)
    assert {I.REGISTRY[n].anchor for n, _ in plan} >= {"Lemma ring1", "Lemma ring2", "Lemma coopt", "Theorem fina"}


def test_criterion_06_classical_quintic_cubic_general():
    plan = [(f"classical.ramanujan-e{k}", 80) for k in (2, 4, 6)]
    plan += [(f"quintic.{w}", 30) for w in ("A", "B", "P")]
    plan += [(f"cubic.{w}", 40) for w in ("a", "P", "b3")]
    alphas = ["1_7", "2_7", "3_7", "1_3", "1_5"]
    plan += [(f"general.alpha{a}.{k}", 25) for a in alphas for k in ("deqe", "deqp", "deqq")]
    results, _ = verify(plan)
    assert_all_pass(results)
    # the quintic residuals live over denominator 5, so q^30 is index 150
    res = I.REGISTRY["quintic.A"].builder(I.named_series, Fraction(30))
    assert res.denom == 5 and res.prec >= 150


def test_criterion_07_product_suite():
    names = [f"products.yu{k}" for k in (1, 2, 3)] + [f"products.jtp-{k}" for k in (1, 2, 3)]
    names += ["products.yi1"] + [f"products.theta-{v}" for v in "xyz"]
    results, _ = verify([(n, 20) for n in names])
    assert_all_pass(results)
    assert all(I.REGISTRY[n].ring == "cyclotomic(4)" for n in names if "yu" in n or "jtp" in n)


def _property_tests():
    import test_ring
    import test_series
    return [
        test_series.test_ring_laws,
        test_series.test_ring_laws_cyclotomic,
        test_series.test_leibniz,
        test_series.test_pow_laws,
        test_series.test_inverse_round_trip,
        test_series.test_inverse_round_trip_gaussian,
        test_series.test_chain_rule,
        test_ring.test_field_axioms,
        test_ring.test_pythagoras_and_tan,
    ]


def test_criterion_08_property_suites():
    counts = {}
    for prop in _property_tests():
        inner = prop.hypothesis.inner_test
        name = prop.__name__

        def counted(*args, _inner=inner, _name=name, **kwargs):
            counts[_name] = counts.get(_name, 0) + 1
            return _inner(*args, **kwargs)

        prop.hypothesis.inner_test = counted
        try:
            settings(max_examples=100, deadline=None, database=None)(prop)()
        finally:
            prop.hypothesis.inner_test = inner
    assert set(counts) == {p.__name__ for p in _property_tests()}
    assert all(n >= 100 for n in counts.values()), counts


def test_criterion_09_mutation_sensitivity():
    rng = random.Random(20260701)
    names = I.check_names()
    for group in I.GROUPS:
        members = [n for n in names if n.startswith(group + ".")]
        assert members, group
        for _ in range(10):
            check = I.REGISTRY[rng.choice(members)]
            D = rng.choice((1, 1, 2, 7, 56))
            order = check.default_order
            e = Fraction(rng.randrange(0, int(order * D)), D)
            coeff = Fraction(rng.choice((-3, -2, -1, 1, 2, 3)), rng.randint(1, 4))
            if check.ring != "rational" and rng.random() < 0.5:
                level = int(check.ring[len("cyclotomic("):-1])
                coeff = CycElement.zeta(level) * coeff
            r = I.run_check(check, order, Perturbation(e, coeff))
            assert r.status == "fail", (check.name, e, r)
            assert r.first_failure[0] == e, (check.name, e, r.first_failure)
            assert r.first_failure[1] == coeff


def test_criterion_10_full_suite_runtime():
    t0 = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "septic_qseries", "verify", "--all"],
                          capture_output=True, text=True, timeout=300)
    secs = time.perf_counter() - t0
    assert proc.returncode == 0, proc.stdout[-2000:] + proc.stderr[-2000:]
    assert secs < 300
    assert " 0 fail, 0 precision-error" in proc.stdout


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-W", "ignore::pytest.PytestAssertRewriteWarning"]))
