"""Reproduction of the p_n example family and the non-reduced counterexample.

p_n = (x^2 - z^(2n+1) w, xy - z^(n+1) w^(n+1), y^2 - z w^(2n+1), y z^n - x w^n)
in k[x,y,z,w].  Every number in an :class:`ExampleReport` is recomputed
from scratch; nothing is copied from a table.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .basis import (
    IdealBasis,
    ideal_equal,
    intersect_all,
    radical_membership,
    saturate_ideal,
)
from .deform import tangent_cone
from .errors import CannotCertify, PreconditionError
from .hilbert import (
    HilbertData,
    artinian_length,
    embedding_codim,
    format_j_polynomial,
    hilbert_series,
    hilbert_series_monomial,
    local_hilbert_series,
)
from .ring import QQ, Ring
from .spectrum import (
    PrimeCertificate,
    _variable_prime,
    connected_in_codim,
    min_primes,
    radical_equals_candidate,
)

VARS = ("x", "y", "z", "w")


def example_ring(field=QQ) -> Ring:
    return Ring(VARS, field)


def build_example(n: int, ring: Ring | None = None) -> IdealBasis:
    if n < 1:
        raise PreconditionError("n must be at least 1")
    ring = ring or example_ring()
    return IdealBasis.parse(ring, [
        f"x^2 - z^{2 * n + 1}*w",
        f"x*y - z^{n + 1}*w^{n + 1}",
        f"y^2 - z*w^{2 * n + 1}",
        f"y*z^{n} - x*w^{n}",
    ])


def expected_tangent_cone(n: int, ring: Ring | None = None) -> IdealBasis:
    ring = ring or example_ring()
    return IdealBasis.parse(ring, ["x^2", "x*y", "y^2", f"y*z^{n} - x*w^{n}"])


def parametrization_check(n: int) -> dict:
    """Substitute x -> s t^(2n+1), y -> s^(2n+1) t, z -> t^2, w -> s^2."""
    P = build_example(n)
    st = Ring(("s", "t"), P.ring.field)
    images = {
        "x": st.parse(f"s*t^{2 * n + 1}"),
        "y": st.parse(f"s^{2 * n + 1}*t"),
        "z": st.parse("t^2"),
        "w": st.parse("s^2"),
    }
    values = [g.substitute(images, st) for g in P]
    return {"ok": all(v.is_zero for v in values), "images": [str(v) for v in values]}


# --- inequality checkers --------------------------------------------------------------------

@dataclass
class Verdict:
    name: str
    holds: bool
    lhs: object
    rhs: object
    relation: str = ">="

    def as_dict(self) -> dict:
        return {"name": self.name, "holds": self.holds, "lhs": str(self.lhs),
                "rhs": str(self.rhs), "relation": self.relation}


def check_abhyankar(e0, delta) -> Verdict:
    """(A) e >= delta + 1."""
    return Verdict("A", e0 >= delta + 1, e0, delta + 1)


def check_northcott(e0, e1) -> Verdict:
    """(N) e1 >= e - 1."""
    return Verdict("N", e1 >= e0 - 1, e1, e0 - 1)


def check_sally(e0, e1, e2) -> tuple:
    """(S) e2 >= e1 - e + 1 >= 0, as two separately reported clauses."""
    mid = e1 - e0 + 1
    return (Verdict("S1", e2 >= mid, e2, mid), Verdict("S2", mid >= 0, mid, 0))


def check_goto_nishida(e1, e1_q, e0) -> Verdict:
    """(GN) e1 - e1(q) >= e - 1."""
    return Verdict("GN", e1 - e1_q >= e0 - 1, e1 - e1_q, e0 - 1)


# --- corrected Abhyankar --------------------------------------------------------------------

def linear_dimension(I: IdealBasis) -> int:
    """dim_k of the degree-one part of a homogeneous ideal."""
    gb = I.groebner()
    return sum(1 for g in gb if g.total_degree == 1 and g.is_homogeneous())


def satisfies_s1(G: IdealBasis, primes: list) -> bool:
    """Single certified minimal prime and no component at the irrelevant ideal."""
    if len(primes) != 1:
        return False
    irrelevant = IdealBasis(G.ring, list(G.ring.gens))
    return ideal_equal(saturate_ideal(G, irrelevant), G)


@dataclass
class CorrectedAbhyankar:
    ell: int
    e0: int
    delta: int
    bound: int
    holds: bool
    strict: bool
    strict_expected: bool
    h2: int
    h2_bound: int
    h2_holds: bool

    def as_dict(self) -> dict:
        return {k: (v if isinstance(v, bool) else str(v)) for k, v in self.__dict__.items()}


def corrected_abhyankar(G: IdealBasis, hd: HilbertData | None = None,
                        primes: list | None = None) -> CorrectedAbhyankar:
    """e >= delta + 1 - ell and h_2 >= -d*ell, with ell = dim [sqrt(G)]_1."""
    if not G.is_homogeneous():
        raise PreconditionError("homogeneous presentation expected")
    if linear_dimension(G) != 0:
        raise PreconditionError("the presentation must contain no linear forms")
    hd = hd or hilbert_series(G)
    primes = primes if primes is not None else min_primes(G)
    if not primes:
        raise CannotCertify("no certified minimal primes", G)
    radical = intersect_all([p.ideal for p in primes])
    if not all(radical_membership(f, G) for f in radical.generators):
        raise CannotCertify("intersection of minimal primes is not the radical", G)
    ell = linear_dimension(radical)
    e0, d = hd.e[0], hd.d
    delta = embedding_codim(hd)
    bound = delta + 1 - ell
    h2 = hd.h[2] if len(hd.h) > 2 else 0
    strict_expected = ell != 0 and satisfies_s1(G, primes)
    return CorrectedAbhyankar(ell, e0, delta, bound, e0 >= bound, e0 > bound, strict_expected,
                              h2, -d * ell, h2 >= -d * ell)


# --- Goto-Nishida ---------------------------------------------------------------------------

@dataclass
class GotoNishida:
    n: int
    js: list
    lengths: list
    a: int
    b: int
    e1_q: int

    def as_dict(self) -> dict:
        return {"n": str(self.n), "j": [str(j) for j in self.js], "lengths": [str(v) for v in self.lengths],
                "a": str(self.a), "b": str(self.b), "e1_q": str(self.e1_q)}


def goto_nishida_lengths(n: int, js) -> list:
    ring = Ring(("x", "y", "w"), QQ)
    return [artinian_length(IdealBasis.parse(ring, ["x^2", "x*y", "y^2", f"x*w^{n}", f"w^{j + 1}"]))
            for j in js]


def goto_nishida_e1(n: int) -> GotoNishida:
    """Fit length = a(j+1) + b over j = n..n+4; e1(q) = -b."""
    js = list(range(n, n + 5))
    lengths = goto_nishida_lengths(n, js)
    diffs = {b - a for a, b in zip(lengths, lengths[1:])}
    if len(diffs) != 1:
        raise PreconditionError(f"lengths not stabilized: {lengths}")
    a = diffs.pop()
    b = lengths[0] - a * (js[0] + 1)
    if a != 2:
        raise PreconditionError(f"slope {a} differs from the multiplicity 2")
    return GotoNishida(n, js, lengths, a, b, -b)


# --- resolution and Jacobian ----------------------------------------------------------------

def resolution_matrices(n: int, ring: Ring | None = None, printed_m3: bool = False):
    """The second and third maps of the resolution of R_n.

    The printed third map (w^n, z^n, -y, -x) is not killed by M2; the kernel
    of M2 is spanned by (w^n, -z^n, -y, x), which is used unless
    ``printed_m3`` is set.
    """
    ring = ring or example_ring()
    P = ring.parse
    M2 = [
        [P("y"), P("0"), P(f"w^{n}"), P("0")],
        [P("-x"), P("y"), P(f"-z^{n}"), P(f"w^{n}")],
        [P("0"), P("-x"), P("0"), P(f"-z^{n}")],
        [P(f"z^{n + 1}*w"), P(f"z*w^{n + 1}"), P("x"), P("y")],
    ]
    if printed_m3:
        M3 = [P(f"w^{n}"), P(f"z^{n}"), P("-y"), P("-x")]
    else:
        M3 = [P(f"w^{n}"), P(f"-z^{n}"), P("-y"), P("x")]
    return M2, M3


@dataclass
class ResolutionCheck:
    ok: bool
    witness: str = ""

    def as_dict(self):
        return {"ok": self.ok, "witness": self.witness}


def verify_resolution(n: int, perturb: tuple | None = None, printed_m3: bool = False) -> ResolutionCheck:
    """gens * M2 = 0 and M2 * M3 = 0; ``perturb=(i, j, poly)`` adds poly to M2[i][j]."""
    P = build_example(n)
    ring = P.ring
    M2, M3 = resolution_matrices(n, ring, printed_m3)
    if perturb is not None:
        i, j, delta = perturb
        M2[i][j] = M2[i][j] + (ring.parse(delta) if isinstance(delta, str) else delta)
    gens = list(P.generators)
    for c in range(4):
        v = sum((gens[r] * M2[r][c] for r in range(4)), ring.zero)
        if not v.is_zero:
            return ResolutionCheck(False, f"(gens * M2)[{c}] = {v}")
    for r in range(4):
        v = sum((M2[r][c] * M3[c] for c in range(4)), ring.zero)
        if not v.is_zero:
            return ResolutionCheck(False, f"(M2 * M3)[{r}] = {v}")
    return ResolutionCheck(True)


def jacobian(n: int) -> list:
    """Rows indexed by the variables, columns by the generators."""
    P = build_example(n)
    return [[g.diff(v) for g in P] for v in VARS]


def _minor(M, rows, cols):
    (a, b), (c, d) = rows, cols
    return M[a][c] * M[b][d] - M[a][d] * M[b][c]


def jacobian_evidence(n: int) -> dict:
    P = build_example(n)
    ring = P.ring
    M = jacobian(n)
    m1 = _minor(M, (1, 3), (0, 3))   # rows y,w; columns 1,4
    m2 = _minor(M, (0, 2), (2, 3))   # rows x,z; columns 3,4
    minors = [_minor(M, r, c) for r in combinations(range(4), 2) for c in combinations(range(4), 2)]
    ideal = IdealBasis(ring, [m for m in minors if m] + list(P.generators))
    z_in = radical_membership(ring.gen("z"), ideal)
    w_in = radical_membership(ring.gen("w"), ideal)
    return {
        "minor_24_14": str(m1),
        "minor_24_14_ok": m1 == ring.parse(f"z^{3 * n + 1}"),
        "minor_13_34": str(m2),
        "minor_13_34_ok": m2 == ring.parse(f"-w^{3 * n + 1}"),
        "z_in_radical": z_in,
        "w_in_radical": w_in,
        "ok": m1 == ring.parse(f"z^{3 * n + 1}") and m2 == ring.parse(f"-w^{3 * n + 1}") and z_in and w_in,
    }


# --- the report -----------------------------------------------------------------------------

class StageFailure(RuntimeError):
    def __init__(self, stage, detail=""):
        self.stage = stage
        super().__init__(f"stage {stage} failed" + (f": {detail}" if detail else ""))


@dataclass
class ExampleReport:
    n: int
    tangent_cone: IdealBasis
    radical: PrimeCertificate
    hilbert: HilbertData
    delta: int
    ell: int
    inequality_verdicts: dict
    lengths: dict
    resolution_complex_ok: bool
    jacobian_evidence: dict
    extras: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "n": str(self.n),
            "tangent_cone": [str(g) for g in self.tangent_cone],
            "radical": self.radical.as_dict(),
            "hilbert": self.hilbert.as_dict(),
            "delta": str(self.delta),
            "ell": str(self.ell),
            "inequality_verdicts": {k: v.as_dict() for k, v in self.inequality_verdicts.items()},
            "lengths": {"n_squared": str(self.lengths["n_squared"]),
                        "gn_lengths": [str(v) for v in self.lengths["gn_lengths"]]},
            "resolution_complex_ok": self.resolution_complex_ok,
            "jacobian_evidence": self.jacobian_evidence,
            "extras": self.extras,
        }


def hilbert_polynomial_of(n: int) -> list:
    return hilbert_series(tangent_cone(build_example(n))).hs


def distinct_hilbert_polynomials(ns) -> bool:
    polys = [tuple(hilbert_polynomial_of(n)) for n in ns]
    return len(set(polys)) == len(polys)


def verify_example(n: int) -> ExampleReport:
    ring = example_ring()
    P = build_example(n, ring)

    param = parametrization_check(n)
    if not param["ok"]:
        raise StageFailure("parametrization", str(param["images"]))

    tc = tangent_cone(P)
    if not ideal_equal(tc, expected_tangent_cone(n, tc.ring)):
        raise StageFailure("tangent-cone", str(tc))

    cand = _variable_prime(tc.ring, [0, 1])
    ok, _ = radical_equals_candidate(tc, cand)
    if not ok:
        raise StageFailure("radical", str(tc))

    hd = hilbert_series(tc)
    mono = hilbert_series_monomial(IdealBasis.parse(tc.ring, ["x^2", "x*y", "y^2", f"y*z^{n}"]))
    if hd.h != mono.h or hd.d != mono.d or local_hilbert_series(P).h != hd.h:
        raise StageFailure("hilbert", f"{hd.h} vs {mono.h}")

    delta = embedding_codim(hd)
    e0, e1, e2 = hd.e[0], hd.e[1], hd.e[2]
    ca = corrected_abhyankar(tc, hd, [cand])
    gn = goto_nishida_e1(n)
    s1, s2 = check_sally(e0, e1, e2)
    verdicts = {
        "A": check_abhyankar(e0, delta),
        "N": check_northcott(e0, e1),
        "S1": s1,
        "S2": s2,
        "S": Verdict("S", s1.holds and s2.holds, e2, s1.rhs, ">= e1-e+1 >= 0"),
        "GN": check_goto_nishida(e1, gn.e1_q, e0),
        "corrected-A": Verdict("corrected-A", ca.holds, e0, ca.bound),
        "corrected-A-strict": Verdict("corrected-A-strict", ca.strict, e0, ca.bound, ">"),
        "h2-bound": Verdict("h2-bound", ca.h2_holds, ca.h2, ca.h2_bound),
    }
    n_sq = artinian_length(IdealBasis.parse(ring, ["x", "y", f"z^{n}", f"w^{n}"]))
    res = verify_resolution(n)
    if not res.ok:
        raise StageFailure("resolution", res.witness)
    jac = jacobian_evidence(n)
    if not jac["ok"]:
        raise StageFailure("jacobian", str(jac))
    extras = {
        "parametrization_ok": param["ok"],
        "serre_s1": satisfies_s1(tc, [cand]),
        "hilbert_polynomial": format_j_polynomial(hd.hs),
        "e2_normalized": str(e2),
        "e2_derivative": str(hd.e_raw[2]),
        "goto_nishida": gn.as_dict(),
        "corrected_abhyankar": ca.as_dict(),
        "primality": "p_n is asserted prime from the parametrization witness, unmixedness of its "
                     "tangent cone and the isolated-singularity evidence; it is not certified",
    }
    return ExampleReport(n, tc, cand, hd, delta, ca.ell, verdicts,
                         {"n_squared": n_sq, "gn_lengths": gn.lengths}, res.ok, jac, extras)


# --- the non-reduced counterexample ---------------------------------------------------------

def counterexample_report() -> dict:
    """I = (x(x+y^2), xz): G is connected in codimension 1, R is not."""
    ring = Ring(("x", "y", "z"), QQ)
    I = IdealBasis.parse(ring, ["x*(x + y^2)", "x*z"])
    G = tangent_cone(I)
    expected = IdealBasis.parse(G.ring, ["x^2", "x*z"])
    primes_R = min_primes(I)
    primes_G = min_primes(G)
    return {
        "ideal": [str(g) for g in I],
        "tangent_cone": [str(g) for g in G],
        "tangent_cone_ok": ideal_equal(G, expected),
        "primes_R": [p.as_dict() for p in primes_R],
        "primes_G": [p.as_dict() for p in primes_G],
        "G_connected_codim_1": connected_in_codim(G, 1, primes_G),
        "R_connected_codim_1": connected_in_codim(I, 1, primes_R),
        "G_reduced": ideal_equal(intersect_all([p.ideal for p in primes_G]), G),
        "note": "components are polynomial; analytic irreducibility is not checked",
    }
