import pytest
from hypothesis import given, settings

from strategies import monomial_gens, polynomials
from tangentcone import (
    IdealBasis,
    PreconditionError,
    check_hom_identities,
    dehomogenize,
    homogenize_poly,
    homogenized_ideal,
    ideal_equal,
    initial_form,
    local_equal,
    polynomial_ring,
    t_decompose,
    tangent_cone,
)
from tangentcone.basis import monomial_ideal
from tangentcone.deform import (
    extended_ring,
    is_t_homogeneous,
    naive_homogenization,
    specialize_t0,
    t_degree,
)
from tangentcone.errors import CertificateFailure
from tangentcone.verify import build_example, expected_tangent_cone

S, x, y, z = polynomial_ring("x,y,z")
T = extended_ring(S)


def test_homogenize_examples():
    assert homogenize_poly(x + x**2, T) == T.parse("x + t*x^2")
    R, X, Y, Z, W = polynomial_ring("x,y,z,w")
    f = homogenize_poly(R.parse("x^2 - z^3*w"))
    assert f == f.ring.parse("x^2 - t^2*z^3*w")


def test_t_decompose_examples():
    F = T.parse("x + t*x^2 + t*y^3")
    parts = t_decompose(F)
    assert parts == {1: T.parse("x + t*x^2"), 2: T.parse("t*y^3")}
    assert t_decompose(T.zero) == {}
    assert t_degree(homogenize_poly(x**2 + y**5, T)) == 2


def test_dehomogenize_examples():
    assert dehomogenize(T.parse("x + t*x^2")) == x + x**2
    assert dehomogenize(T.parse("t^3")) == S.one


def test_extended_ring_picks_fresh_name():
    R, t, u = polynomial_ring("t,u")
    E = extended_ring(R)
    assert E.names[-1] != "t" and E.t_variable == 2
    with pytest.raises(PreconditionError):
        extended_ring(E)


def test_homogenize_zero():
    with pytest.raises(PreconditionError):
        homogenize_poly(S.zero, T)


# --- properties -------------------------------------------------------------------------

nonzero = polynomials(S, max_deg=4, max_terms=5, nonzero=True)


@given(nonzero, nonzero)
def test_hom_multiplicative(f, g):
    assert homogenize_poly(f * g, T) == homogenize_poly(f, T) * homogenize_poly(g, T)


@given(nonzero)
def test_dehomogenize_inverts(f):
    F = homogenize_poly(f, T)
    assert dehomogenize(F, S) == f
    assert is_t_homogeneous(F)
    assert t_degree(F) == f.order()
    assert specialize_t0(F, S) == initial_form(f)


@given(polynomials(T, max_deg=4, max_terms=6))
def test_t_decomposition_resums(F):
    parts = t_decompose(F)
    assert sum(parts.values(), T.zero) == F
    assert all(is_t_homogeneous(P) and t_degree(P) == d for d, P in parts.items())


# --- tangent cones ----------------------------------------------------------------------

def test_tangent_cone_examples():
    assert ideal_equal(tangent_cone(IdealBasis.parse(S, ["x + x^2"])), IdealBasis.parse(S, ["x"]))
    tc = tangent_cone(IdealBasis.parse(S, ["x*(x + y^2)", "x*z"]))
    assert ideal_equal(tc, IdealBasis.parse(tc.ring, ["x^2", "x*z"]))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_tangent_cone_family(n):
    tc = tangent_cone(build_example(n))
    assert ideal_equal(tc, expected_tangent_cone(n, tc.ring))


def test_tangent_cone_of_unit_rejected():
    with pytest.raises(PreconditionError):
        tangent_cone(IdealBasis.parse(S, ["1 + x"]))


# --- hom(I) and its certificates -------------------------------------------------------

def test_homogenized_trivial():
    H = homogenized_ideal(IdealBasis.parse(S, ["x"]))
    assert H.ok
    assert [str(g) for g in H.generators] == ["x"]


def test_homogenized_p1():
    P = build_example(1)
    H = homogenized_ideal(P)
    assert H.ok
    base = P.ring
    fiber = IdealBasis(base, [specialize_t0(F, base) for F in H.generators])
    assert ideal_equal(fiber, expected_tangent_cone(1, base))
    for F in H.generators:
        assert is_t_homogeneous(F)


def test_homogenized_local_unit_multiple():
    # x + t*x^2 = x*(1 + t*x) generates (x) near the origin
    H = homogenized_ideal(IdealBasis.parse(S, ["x + x^2"]))
    assert H.ok
    assert list(H.generators) == [T.parse("x + t*x^2")]
    assert local_equal(H.ideal, IdealBasis(T, [T.parse("x")]))


def test_naive_homogenization_detected():
    I = IdealBasis.parse(S, ["x + y^2", "x"])
    naive = naive_homogenization(I)
    assert set(naive.failed()) == {"special-fiber", "dehomogenization", "t-regular"}
    assert naive.certificates["t-regular"]["detail"].startswith("(H : t) contains")
    good = homogenized_ideal(I)
    assert good.ok
    assert ideal_equal(IdealBasis(S, [dehomogenize(F, S) for F in good.generators]), I)


def test_strict_mode_raises_on_failure(monkeypatch):
    import tangentcone.deform as deform
    monkeypatch.setattr(deform, "_certify", lambda *a: {"t-regular": {"ok": False, "detail": "forced"}})
    I = IdealBasis.parse(S, ["x"])
    with pytest.raises(CertificateFailure):
        homogenized_ideal(I)
    assert not homogenized_ideal(I, strict=False).ok


# --- identities between ideals ----------------------------------------------------------

CURATED = [
    (["x*y"], ["x*z"]),
    (["x^2", "x*y"], ["y"]),
    (["x*(x + y^2)", "x*z"], ["x"]),
    (["x*y*z"], ["x", "y"]),
    (["y - x^2"], ["x*y"]),
]


@pytest.mark.parametrize("gi,gj", CURATED)
def test_hom_identities_curated(gi, gj):
    I, J = IdealBasis.parse(S, gi), IdealBasis.parse(S, gj)
    rep = check_hom_identities(I, J)
    assert {k: v["ok"] for k, v in rep.items()} == {"1": True, "2": True, "5": True, "6": True, "7": True}


@settings(max_examples=25)
@given(monomial_gens(3, max_gens=3, max_deg=2), monomial_gens(3, max_gens=3, max_deg=2))
def test_hom_identities_monomial(a, b):
    I, J = monomial_ideal(S, a), monomial_ideal(S, b)
    rep = check_hom_identities(I, J)
    assert all(v["ok"] for v in rep.values()), rep
