import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

import oracles
from strategies import polynomials, random_poly
from tangentcone import (
    DEGREVLEX,
    GF,
    LEX,
    NEGDEGREVLEX,
    IdealBasis,
    NotGroebnerError,
    Polynomial,
    buchberger,
    eliminate,
    ideal_colon,
    ideal_equal,
    ideal_intersect,
    local_contains,
    local_equal,
    mora_normal_form,
    normal_form,
    polynomial_ring,
    radical_membership,
    saturate,
    standard_basis,
)
from tangentcone.basis import ideal_product, ideal_sum, is_subideal, local_leading_ideal, saturate_ideal

R, X, Y, Z, W = polynomial_ring("x,y,z,w")
J1 = IdealBasis.parse(R, ["x^2", "x*y", "y^2", "y*z - x*w"])


def ideal_of(ring, *texts):
    return IdealBasis.parse(ring, texts)


# --- normal forms -----------------------------------------------------------------------

def test_normal_form_examples():
    S, x, y = polynomial_ring("x,y")
    G = ideal_of(S, "x").groebner()
    assert normal_form(x**2, G).is_zero
    assert normal_form(x * y + y, G) == y


def test_normal_form_j1_against_linear_algebra():
    gb = J1.groebner()
    assert normal_form(X**4, gb).is_zero
    gens = [g.as_dict() for g in J1.generators]
    assert oracles.in_graded_piece((X**4).as_dict(), gens, 4)


def test_normal_form_requires_groebner():
    with pytest.raises(NotGroebnerError):
        normal_form(X, J1)


def test_mora_examples():
    S, x, y = polynomial_ring("x,y")
    assert mora_normal_form(x, [x + x**2]).is_zero
    assert mora_normal_form(x**2, [x]).is_zero
    assert mora_normal_form(y, [x]) == y.to_ring(S.with_order(NEGDEGREVLEX))


def test_mora_on_constructed_members():
    rng = random.Random(3)
    S, x, y, z = polynomial_ring("x,y,z")
    I = ideal_of(S, "x^2 - y^3", "x*y - z^2 + x^3")
    sb = I.standard()
    for _ in range(25):
        unit = 1 + random_poly(rng, S, max_terms=2, max_deg=2, min_deg=1)
        member = sum((random_poly(rng, S, 2, 2) * g for g in I.generators), S.zero)
        f = unit * member
        assert mora_normal_form(f, list(sb)).is_zero
        assert local_contains(I, f)


# --- buchberger -------------------------------------------------------------------------

def test_monomial_input_gives_minimal_generators():
    gb = ideal_of(R, "x^2", "x^3*y", "x*y", "y*z*x").groebner()
    assert sorted(str(g) for g in gb) == ["x*y", "x^2"]


def test_j1_leading_ideal():
    gb = J1.groebner(DEGREVLEX)
    lead = sorted(g.lm for g in gb)
    assert lead == sorted([(2, 0, 0, 0), (1, 1, 0, 0), (0, 2, 0, 0), (0, 1, 1, 0)])


def test_lex_hand_elimination():
    S, x, y, z = polynomial_ring("x,y,z", order=LEX)
    gb = buchberger(ideal_of(S, "x - y", "y - z"), LEX)
    assert sorted(map(str, gb)) == ["x - z", "y - z"]


def test_unit_and_zero():
    assert ideal_of(R, "x", "x + 1").groebner().is_unit()
    assert IdealBasis(R, []).groebner().is_zero


def _sympy_gb(ring, gens, order="grevlex"):
    syms = sympy.symbols(" ".join(ring.names))
    exprs = [sympy.Add(*[sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*[s**e for s, e in zip(syms, m)])
                         for c, m in g.terms]) for g in gens]
    sg = sympy.groebner(exprs, *syms, order=order, domain="QQ")
    out = []
    for p in sg.polys:
        out.append(Polynomial(ring, {m: Fraction(int(k.p), int(k.q)) for m, k in p.terms()}).monic())
    return out


@pytest.mark.parametrize("seed", range(40))
def test_reduced_basis_matches_sympy(seed):
    rng = random.Random(seed)
    S, *_ = polynomial_ring("x,y,z")
    gens = [random_poly(rng, S) for _ in range(rng.randint(1, 3))]
    gens = [g for g in gens if not g.is_zero]
    mine = sorted(str(g) for g in IdealBasis(S, gens).groebner())
    theirs = sorted(str(g) for g in _sympy_gb(S, gens))
    assert mine == theirs


def test_lex_matches_sympy():
    S, *_ = polynomial_ring("x,y,z", order=LEX)
    gens = [S.parse("x^2 + y*z - 1"), S.parse("x*y - z^2"), S.parse("y^2 - x")]
    mine = sorted(str(g) for g in IdealBasis(S, gens).groebner(LEX))
    theirs = sorted(str(g) for g in _sympy_gb(S, gens, "lex"))
    assert mine == theirs


def test_prime_field_basis():
    S, x, y = polynomial_ring("x,y", GF(5))
    gb = ideal_of(S, "x^2 + 4*y", "x*y - 1").groebner()
    assert all(g.lc == 1 for g in gb)
    assert gb.contains(S.parse("x^3 - 1"))


S3, a, b, c = polynomial_ring("a,b,c")


@given(st.lists(polynomials(S3, max_deg=3, max_terms=3, nonzero=True), min_size=1, max_size=3), st.randoms())
def test_canonical_under_shuffles_and_combinations(gens, rnd):
    base = [str(g) for g in IdealBasis(S3, gens).groebner()]
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    extra = shuffled + [shuffled[0] * S3.parse("a - 2") + shuffled[-1]]
    assert [str(g) for g in IdealBasis(S3, shuffled).groebner()] == base
    assert [str(g) for g in IdealBasis(S3, extra).groebner()] == base


@given(st.lists(polynomials(S3, max_deg=2, max_terms=3, nonzero=True), min_size=1, max_size=3))
def test_generators_reduce_to_zero(gens):
    gb = IdealBasis(S3, gens).groebner()
    for g in gens:
        assert normal_form(g, gb).is_zero
    lms = [g.lm for g in gb]
    for i, m in enumerate(lms):
        assert not any(oracles.divides(n, m) for j, n in enumerate(lms) if j != i)


def _homogeneous(rng, ring, deg):
    terms = {}
    for _ in range(rng.randint(1, 3)):
        e = [0] * ring.ngens
        for _ in range(deg):
            e[rng.randrange(ring.ngens)] += 1
        terms[tuple(e)] = rng.choice([-2, -1, 1, 2])
    return Polynomial(ring, terms)


@pytest.mark.parametrize("seed", range(15))
def test_homogeneous_membership_matches_linear_algebra(seed):
    rng = random.Random(100 + seed)
    S, *_ = polynomial_ring("x,y,z")
    gens = [_homogeneous(rng, S, rng.randint(1, 3)) for _ in range(rng.randint(1, 3))]
    gens = [g for g in gens if not g.is_zero]
    I = IdealBasis(S, gens)
    raw = [g.as_dict() for g in gens]
    for _ in range(6):
        f = _homogeneous(rng, S, rng.randint(2, 4))
        if rng.random() < 0.5:
            g = rng.choice(gens)
            d = sum(f.lm) - g.total_degree
            if d >= 0:
                f = _homogeneous(rng, S, d) * g if d else g.scale(3)
        assert I.contains(f) == oracles.in_graded_piece(f.as_dict(), raw, 3)


# --- standard bases ---------------------------------------------------------------------

def test_standard_basis_of_local_unit_multiple():
    S, x = polynomial_ring("x")
    assert local_leading_ideal(ideal_of(S, "x + x^2")) == [(1,)]


def test_standard_basis_p1():
    from tangentcone.verify import build_example
    P = build_example(1, R)
    forms = [g.initial_form() for g in standard_basis(P)]
    assert ideal_equal(IdealBasis(R, forms), J1)


def test_standard_basis_homogeneous_agrees():
    lead_local = sorted(local_leading_ideal(J1))
    sb_forms = IdealBasis(R, list(J1.standard(NEGDEGREVLEX)))
    assert ideal_equal(sb_forms, J1)
    assert len(lead_local) >= 4


# --- ideal operations -------------------------------------------------------------------

def test_intersection_and_colon_examples():
    S, x, y = polynomial_ring("x,y")
    assert ideal_equal(ideal_intersect(ideal_of(S, "x"), ideal_of(S, "y")), ideal_of(S, "x*y"))
    assert ideal_equal(ideal_colon(ideal_of(S, "x*y"), x), ideal_of(S, "y"))


def test_intersection_matches_graded_pieces():
    I = J1
    J = ideal_of(R, "z", "w")
    K = ideal_intersect(I, J)
    gi = [g.as_dict() for g in I.generators]
    gj = [g.as_dict() for g in J.generators]
    gk = [g.as_dict() for g in K.groebner()]
    assert all(g.is_homogeneous() for g in K.groebner())
    for d in range(7):
        assert oracles.piece_dim(gk, d, 4) == oracles.piece_intersection_dim(gi, gj, d, 4)


def test_intersection_general_polynomials():
    S, x, y = polynomial_ring("x,y")
    I, J = ideal_of(S, "x^2 - y"), ideal_of(S, "x - 1")
    K = ideal_intersect(I, J)
    assert ideal_equal(K, ideal_of(S, "(x^2 - y)*(x - 1)"))


def test_saturation_examples():
    S, x, t = polynomial_ring("x,t")
    assert ideal_equal(saturate(ideal_of(S, "t*x"), t), ideal_of(S, "x"))
    I = ideal_of(S, "x^2", "x*t")
    sat = saturate(I, t)
    assert ideal_equal(sat, ideal_of(S, "x"))
    # bounded colon iteration
    cur = I
    for _ in range(6):
        nxt = ideal_colon(cur, t)
        if ideal_equal(nxt, cur):
            break
        cur = nxt
    assert ideal_equal(cur, sat)
    J = ideal_of(S, "x^2 + x")
    assert ideal_equal(saturate(J, t), J)


def test_saturate_at_ideal():
    S, x, y, z = polynomial_ring("x,y,z")
    I = ideal_of(S, "x^2", "x*y", "x*z")
    assert ideal_equal(saturate_ideal(I, ideal_of(S, "x", "y", "z")), ideal_of(S, "x"))


def test_radical_membership():
    S, x = polynomial_ring("x")
    assert radical_membership(x, ideal_of(S, "x^2"))
    assert radical_membership(X, J1)
    assert not radical_membership(Z, J1)
    gb = J1.groebner()
    assert all(not normal_form(Z**k, gb).is_zero for k in range(1, 21))


def test_ideal_equal_examples():
    S, x, y = polynomial_ring("x,y")
    assert ideal_equal(ideal_of(S, "x", "y"), ideal_of(S, "y", "x"))
    assert not ideal_equal(ideal_of(S, "x"), ideal_of(S, "x^2"))


def test_elimination():
    S, x, y, t = polynomial_ring("x,y,t")
    I = ideal_of(S, "x - t^2", "y - t^3")
    E = eliminate(I, ["t"])
    assert all(g.degree_in("t") == 0 for g in E)
    assert ideal_equal(E, ideal_of(S, "x^3 - y^2"))


def test_sum_product_subideal():
    S, x, y = polynomial_ring("x,y")
    I, J = ideal_of(S, "x"), ideal_of(S, "y")
    assert ideal_equal(ideal_product(I, J), ideal_of(S, "x*y"))
    assert ideal_equal(ideal_sum(I, J), ideal_of(S, "x", "y"))
    assert is_subideal(ideal_of(S, "x^2"), I)
    assert not is_subideal(I, ideal_of(S, "x^2"))


def test_local_equality():
    S, x, y = polynomial_ring("x,y")
    assert local_equal(ideal_of(S, "x + x^2"), ideal_of(S, "x"))
    assert not ideal_equal(ideal_of(S, "x + x^2"), ideal_of(S, "x"))
    assert local_equal(ideal_of(S, "x*(1 + y)", "y^2"), ideal_of(S, "x", "y^2"))
