"""Acceptance criteria 1-10, each at its stated tolerance (all exact).

Every criterion records one PASS/FAIL line; the lines are printed in the
terminal summary and also when this file is run as a script.
"""

import random
import time
from fractions import Fraction

import pytest

import oracles
from strategies import random_monomial_ideal, random_poly
from tangentcone import IdealBasis, polynomial_ring
from tangentcone.basis import ideal_equal, monomial_ideal, saturate_ideal
from tangentcone.deform import (
    dehomogenize,
    extended_ring,
    homogenize_poly,
    t_decompose,
    tangent_cone,
)
from tangentcone.hilbert import (
    artinian_length,
    embedding_codim,
    eval_poly,
    hilbert_polynomial,
    hilbert_series,
)
from tangentcone.spectrum import (
    connectedness,
    min_primes_monomial,
    radical_equals_candidate,
    _variable_prime,
    slice_check,
)
from tangentcone.verify import (
    build_example,
    check_abhyankar,
    check_northcott,
    check_sally,
    corrected_abhyankar,
    counterexample_report,
    expected_tangent_cone,
    goto_nishida_e1,
    verify_resolution,
)

RESULTS = {}
FAMILY = (1, 2, 3, 4)


@pytest.fixture
def record(request):
    """Store PASS/FAIL for the criterion named by the test's ``criterion`` marker."""
    num = request.node.get_closest_marker("criterion").args[0]
    notes = []
    RESULTS[num] = ("FAIL", "did not finish")
    yield notes
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    RESULTS[num] = ("PASS" if ok else "FAIL", "; ".join(notes))


def summary_lines():
    return [f"CRITERION {k}: {v[0]}" + (f"  ({v[1]})" if v[1] else "") for k, v in sorted(RESULTS.items())]


def _tc(n):
    return tangent_cone(build_example(n))


# --- 1 ---------------------------------------------------------------------------------------

@pytest.mark.criterion(1)
def test_criterion_1_tangent_cone(record):
    for n in FAMILY:
        start = time.perf_counter()
        tc = _tc(n)
        elapsed = time.perf_counter() - start
        want = expected_tangent_cone(n, tc.ring).groebner()
        assert [str(g) for g in tc.groebner()] == [str(g) for g in want], n
        assert elapsed < 10, (n, elapsed)
        record.append(f"n={n} {1000 * elapsed:.1f}ms")


# --- 2 ---------------------------------------------------------------------------------------

@pytest.mark.criterion(2)
def test_criterion_2_hilbert_numerator(record):
    for n in FAMILY:
        hd = hilbert_series(_tc(n))
        assert hd.h == [1, 2] + [0] * (n - 1) + [-1]
        assert hd.d == 2
        assert hd.e[0] == 2
        assert hd.e[1] == 1 - n
        record.append(f"n={n} h={hd.numerator_str()} e0={hd.e[0]} e1={hd.e[1]}")


# --- 3 ---------------------------------------------------------------------------------------

@pytest.mark.criterion(3)
def test_criterion_3_hilbert_samuel_polynomial(record):
    for n in FAMILY:
        tc = _tc(n)
        leading = oracles.minimalize(g.lm for g in tc.groebner())
        hd = hilbert_series(tc)
        hp = hilbert_polynomial(hd.e, hd.d)
        for j in range(n + 1, 2 * n + 7):
            formula = Fraction(j * j + (n + 2) * j) - Fraction((n + 1) * (n - 2), 2)
            counted = sum(oracles.count_outside(leading, 4, i) for i in range(j + 1))
            assert formula == counted, (n, j)
            assert eval_poly(hp, j) == counted, (n, j)
        record.append(f"n={n} j=[{n + 1},{2 * n + 6}]")


# --- 4 ---------------------------------------------------------------------------------------

@pytest.mark.criterion(4)
def test_criterion_4_inequalities(record):
    for n in FAMILY:
        tc = _tc(n)
        hd = hilbert_series(tc)
        e0, e1, e2 = hd.e[0], hd.e[1], hd.e[2]
        delta = embedding_codim(hd)
        a = check_abhyankar(e0, delta)
        assert not a.holds and (a.lhs, a.rhs) == (2, 3)
        assert not check_northcott(e0, e1).holds
        s1, s2 = check_sally(e0, e1, e2)
        if n >= 2:
            assert not (s1.holds and s2.holds)
        ca = corrected_abhyankar(tc, hd, [_variable_prime(tc.ring, [0, 1])])
        assert ca.ell == 2 and ca.bound == 1
        assert ca.holds and ca.strict
        assert ca.h2_bound == -4 and ca.h2_holds
        record.append(f"n={n} A {e0}<{delta + 1}, N {e1}<{e0 - 1}, S {'held' if s1.holds and s2.holds else 'failed'},"
                      f" corrected {e0}>{ca.bound}, h2={ca.h2}>=-4")


# --- 5 ---------------------------------------------------------------------------------------

@pytest.mark.criterion(5)
def test_criterion_5_radical_and_saturation(record):
    for n in FAMILY:
        tc = _tc(n)
        ok, witnesses = radical_equals_candidate(tc, _variable_prime(tc.ring, [0, 1]))
        assert ok, witnesses
        irrelevant = IdealBasis(tc.ring, list(tc.ring.gens))
        assert ideal_equal(saturate_ideal(tc, irrelevant), tc)
    record.append("n=1..4")


# --- 6 ---------------------------------------------------------------------------------------

@pytest.mark.criterion(6)
def test_criterion_6_goto_nishida(record):
    for n in FAMILY:
        gn = goto_nishida_e1(n)
        assert gn.js == list(range(n, n + 5))
        assert gn.lengths == [2 * (j + 1) + n for j in gn.js]
        assert gn.e1_q == -n
        hd = hilbert_series(_tc(n))
        assert hd.e[1] - gn.e1_q == hd.e[0] - 1
        record.append(f"n={n} e1(q)={gn.e1_q}")


# --- 7 ---------------------------------------------------------------------------------------

@pytest.mark.criterion(7)
def test_criterion_7_length_n_squared(record):
    R = build_example(1).ring
    for n in range(1, 6):
        assert artinian_length(IdealBasis.parse(R, ["x", "y", f"z^{n}", f"w^{n}"])) == n * n
    record.append("n=1..5")


# --- 8 ---------------------------------------------------------------------------------------

@pytest.mark.criterion(8)
def test_criterion_8_resolution(record):
    for n in (1, 2, 3):
        assert verify_resolution(n).ok, n
    control = verify_resolution(2, perturb=(1, 2, "x"))
    assert not control.ok and control.witness
    printed = verify_resolution(1, printed_m3=True)
    assert not printed.ok
    record.append("third map (w^n, -z^n, -y, x); perturbed control: " + control.witness)
    record.append("printed (w^n, z^n, -y, -x) gives " + printed.witness)


# --- 9 ---------------------------------------------------------------------------------------

@pytest.mark.criterion(9)
def test_criterion_9_counterexample(record):
    rep = counterexample_report()
    assert rep["tangent_cone_ok"]
    assert rep["G_connected_codim_1"]
    assert not rep["R_connected_codim_1"]
    R, x, y, z = polynomial_ring("x,y,z")
    found = [IdealBasis.parse(R, p["ideal"]) for p in rep["primes_R"]]
    want = [IdealBasis.parse(R, ["x"]), IdealBasis.parse(R, ["x + y^2", "z"])]
    assert len(found) == 2
    assert all(any(ideal_equal(f, w) for f in found) for w in want)
    record.append("tangent cone " + ", ".join(rep["tangent_cone"]))


# --- 10 --------------------------------------------------------------------------------------

def _corpus(size=200):
    rng = random.Random(2024)
    out, seen = [], set()
    while len(out) < size:
        n = rng.randint(2, 4)
        gens = tuple(sorted(oracles.minimalize(random_monomial_ideal(rng, n, max_gens=5, max_deg=3))))
        if (n, gens) in seen:
            continue
        seen.add((n, gens))
        out.append((n, gens))
    return out


@pytest.mark.criterion(10)
def test_criterion_10_property_suites(record):
    start = time.perf_counter()

    # (a) hom identities on random polynomials
    rng = random.Random(7)
    S, *_ = polynomial_ring("x,y,z")
    T = extended_ring(S)
    count = 0
    while count < 1000:
        f = random_poly(rng, S, max_terms=4, max_deg=4)
        g = random_poly(rng, S, max_terms=4, max_deg=4)
        if f.is_zero or g.is_zero:
            continue
        Hf = homogenize_poly(f, T)
        assert homogenize_poly(f * g, T) == Hf * homogenize_poly(g, T)
        assert dehomogenize(Hf, S) == f
        F = Hf * T.gen(T.t_variable) + homogenize_poly(g, T)
        assert sum(t_decompose(F).values(), T.zero) == F
        count += 1
    record.append(f"(a) {count} polynomials")

    # (b) Gamma_s graph versus partitions, (c) slicing
    corpus = _corpus()
    names = ("x", "y", "z", "w")
    checks = slices = 0
    for n, gens in corpus:
        R, *vars_ = polynomial_ring(names[:n])
        I = monomial_ideal(R, gens)
        primes = min_primes_monomial(I)
        for s in range(0, n + 1):
            rep = connectedness(I, s, primes)
            assert rep.agree, (gens, s)
            checks += 1
        used = {v for p in primes for h in p.ideal.generators for v in h.support()}
        for v in range(n):
            if v in used:
                continue
            for s in (1, 2):
                assert slice_check(I, vars_[v], s).violations == [], (gens, v, s)
                slices += 1
    record.append(f"(b) {len(corpus)} ideals, {checks} graph/partition checks agree")
    record.append(f"(c) {slices} slices, 0 violations")

    # (d) reduced basis canonicity under generator shuffles
    rng = random.Random(11)
    S3, *_ = polynomial_ring("x,y,z")
    done = 0
    while done < 200:
        gens = [random_poly(rng, S3, max_terms=3, max_deg=3) for _ in range(rng.randint(2, 4))]
        gens = [h for h in gens if not h.is_zero]
        if not gens:
            continue
        base = [str(h) for h in IdealBasis(S3, gens).groebner()]
        for _ in range(3):
            shuffled = list(gens)
            rng.shuffle(shuffled)
            assert [str(h) for h in IdealBasis(S3, shuffled).groebner()] == base
        done += 1
    record.append(f"(d) {done} ideals x 3 shuffles")

    elapsed = time.perf_counter() - start
    assert elapsed < 300
    record.append(f"{elapsed:.1f}s")


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q"]))
