"""Minimal and associated primes, dimension, the graphs Gamma_s and slicing.

All analyses of a local ring R = (k[x]/I) localized at the origin use only
the components through the origin; minimal primes not contained in the
maximal ideal are filtered out.

Primality is certified from an allowlist only:

* ``variable-generated``: generated by a subset of the variables;
* ``triangular``: repeatedly some generator is ``c*v + r`` with ``r`` free
  of ``v`` and ``v`` occurring in no other generator, until nothing is left
  (so the quotient is a polynomial ring);
* ``externally-asserted``: primality supplied by the caller, with a note.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from .basis import (
    IdealBasis,
    _minimalize_monomials,
    ideal_sum,
    intersect_all,
    is_subideal,
    local_leading_ideal,
    monomial_ideal,
    normal_form,
    radical_membership,
)
from .errors import CannotCertify, CertificateFailure, PreconditionError
from .ring import DEGREVLEX, Polynomial, Ring

NEG_INF = float("-inf")


# --- dimension ------------------------------------------------------------------------------

def _min_cover_size(monos: list, nvars: int) -> int:
    """Size of a smallest set of variables meeting every monomial's support."""
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in monos]
    best = [nvars + 1]

    def search(chosen: frozenset, rest: list):
        if len(chosen) >= best[0]:
            return
        rest = [s for s in rest if not (s & chosen)]
        if not rest:
            best[0] = len(chosen)
            return
        pivot = min(rest, key=len)
        for v in sorted(pivot):
            search(chosen | {v}, rest)

    search(frozenset(), supports)
    return best[0]


def _dim_from_monomials(monos: list, nvars: int):
    if any(not any(m) for m in monos):
        return NEG_INF
    if not monos:
        return nvars
    return nvars - _min_cover_size(monos, nvars)


def dimension(I: IdealBasis):
    """Krull dimension of k[x]/I; the unit ideal gives -inf."""
    gb = I.groebner()
    return _dim_from_monomials([g.lm for g in gb], I.ring.ngens)


def local_dimension(I: IdealBasis):
    """Dimension of the localization of k[x]/I at the origin."""
    if I.is_zero:
        return I.ring.ngens
    if I.is_homogeneous():
        return dimension(I)
    return _dim_from_monomials(local_leading_ideal(I), I.ring.ngens)


def passes_through_origin(I: IdealBasis) -> bool:
    ring = I.ring
    return not IdealBasis(ring, list(I.generators) + list(ring.gens)).is_unit()


# --- certificates -----------------------------------------------------------------------------

@dataclass
class PrimeCertificate:
    ideal: IdealBasis
    kind: str
    note: str = ""
    dim: object = None

    def __post_init__(self):
        if self.kind not in ("variable-generated", "triangular", "externally-asserted"):
            raise ValueError(f"unknown certificate kind {self.kind!r}")
        if self.dim is None:
            self.dim = local_dimension(self.ideal)

    @property
    def generators(self):
        return self.ideal.generators

    def __str__(self):
        return str(self.ideal)

    def as_dict(self) -> dict:
        return {"ideal": [str(g) for g in self.ideal], "kind": self.kind,
                "dim": str(self.dim), "note": self.note}


def _variable_prime(ring: Ring, idx) -> PrimeCertificate:
    idx = sorted(idx)
    gens = [ring.gen(i) for i in idx]
    return PrimeCertificate(IdealBasis(ring, gens).groebner(), "variable-generated",
                            dim=ring.ngens - len(idx))


def is_variable_generated(I: IdealBasis) -> bool:
    return all(g.is_monomial() and g.total_degree == 1 for g in I.groebner())


def is_triangular(I: IdealBasis) -> bool:
    """Greedy check that k[x]/I is a polynomial ring in the leftover variables.

    Each step removes a generator c*v + r where v occurs in no other
    remaining generator and r is free of v.
    """
    rest = [g for g in I.generators if not g.is_zero]
    if any(g.is_constant() for g in rest):
        return False
    while rest:
        for k, g in enumerate(rest):
            others = set().union(*(h.support() for j, h in enumerate(rest) if j != k)) if len(rest) > 1 else set()
            found = None
            for v in sorted(g.support()):
                if v in others or g.degree_in(v) != 1:
                    continue
                # g = c*v + r with c a nonzero constant and r free of v
                if all(m[v] == 0 or sum(m) == 1 for m in g.monomials()):
                    found = v
                    break
            if found is not None:
                rest.pop(k)
                break
        else:
            return False
    return True


def certify_prime(I: IdealBasis, note: str = "") -> PrimeCertificate:
    """Certificate for ``I`` from the allowlist, or raise CannotCertify."""
    gb = I.groebner()
    if is_variable_generated(gb):
        return PrimeCertificate(gb, "variable-generated", note)
    if is_triangular(I) or is_triangular(gb):
        return PrimeCertificate(gb, "triangular", note)
    raise CannotCertify(f"no primality certificate for {gb}", gb)


def assert_prime(I: IdealBasis, note: str) -> PrimeCertificate:
    return PrimeCertificate(I.groebner(), "externally-asserted", note)


# --- monomial ideals ------------------------------------------------------------------------

def _require_monomial(I: IdealBasis):
    if not I.is_monomial():
        raise PreconditionError("monomial ideal expected")


def _minimal_covers(supports: list, nvars: int) -> list:
    found = set()

    def search(chosen: frozenset, rest: list):
        rest = [s for s in rest if not (s & chosen)]
        if not rest:
            found.add(chosen)
            return
        pivot = min(rest, key=len)
        for v in sorted(pivot):
            search(chosen | {v}, rest)

    search(frozenset(), supports)
    minimal = [c for c in found if not any(o < c for o in found)]
    return sorted(minimal, key=lambda c: (len(c), sorted(c)))


def min_primes_monomial(I: IdealBasis) -> list:
    _require_monomial(I)
    monos = _minimalize_monomials(g.lm for g in I.generators)
    if any(not any(m) for m in monos):
        return []
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in monos]
    return [_variable_prime(I.ring, c) for c in _minimal_covers(supports, I.ring.ngens)]


def irreducible_components(I: IdealBasis) -> list:
    """Irredundant irreducible decomposition of a monomial ideal.

    Each component is a dict ``{variable index: exponent}`` standing for the
    ideal generated by the corresponding pure powers.
    """
    _require_monomial(I)
    n = I.ring.ngens
    start = tuple(_minimalize_monomials(g.lm for g in I.generators))
    if any(not any(m) for m in start):
        return []
    if not start:
        return [{}]
    out = set()

    def split(gens: tuple):
        gens = tuple(_minimalize_monomials(gens))
        mixed = next((m for m in gens if sum(1 for e in m if e) > 1), None)
        if mixed is None:
            out.add(frozenset((i, e) for m in gens for i, e in enumerate(m) if e))
            return
        i = next(i for i, e in enumerate(mixed) if e)
        power = tuple(mixed[i] if j == i else 0 for j in range(n))
        rest = tuple(0 if j == i else e for j, e in enumerate(mixed))
        split(gens + (power,))
        split(gens + (rest,))

    split(start)
    comps = [dict(c) for c in out]

    def contained(d, c):
        # ideal of d is inside ideal of c
        return all(i in c and c[i] <= e for i, e in d.items())

    keep = []
    for k, c in enumerate(comps):
        if any(j != k and contained(d, c) and d != c for j, d in enumerate(comps)):
            continue
        keep.append(c)
    return sorted(keep, key=lambda c: sorted(c.items()))


def _component_ideal(ring: Ring, comp: dict) -> IdealBasis:
    n = ring.ngens
    return monomial_ideal(ring, [tuple(comp[i] if j == i else 0 for j in range(n)) for i in comp])


def primary_components(I: IdealBasis) -> list:
    """Pairs ``(prime support, primary monomial ideal)``, one per associated prime."""
    groups: dict = {}
    for c in irreducible_components(I):
        groups.setdefault(frozenset(c), []).append(c)
    out = []
    for supp in sorted(groups, key=lambda s: (len(s), sorted(s))):
        parts = [_component_ideal(I.ring, c) for c in groups[supp]]
        out.append((supp, intersect_all(parts)))
    return out


def ass_primes_monomial(I: IdealBasis) -> list:
    supports = sorted({frozenset(c) for c in irreducible_components(I)}, key=lambda s: (len(s), sorted(s)))
    return [_variable_prime(I.ring, s) for s in supports]


def a_gt_h(I: IdealBasis, h: int) -> IdealBasis:
    """{f : height(I : f) > h}, as the intersection of primary components of height <= h."""
    parts = [q for supp, q in primary_components(I) if len(supp) <= h]
    if not parts:
        return IdealBasis(I.ring, [I.ring.one]).groebner()
    return intersect_all(parts)


# --- general ideals -------------------------------------------------------------------------

def _to_sympy(f: Polynomial, gens):
    return sympy.Poly.from_dict({m: sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else c
                                 for m, c in f.as_dict().items()}, *gens, domain="QQ")


def _from_sympy(poly, ring: Ring) -> Polynomial:
    terms = {}
    for m, c in poly.as_dict().items():
        c = sympy.Rational(c)
        terms[tuple(m)] = Fraction(int(c.p), int(c.q))
    return Polynomial(ring, terms)


def factor(f: Polynomial) -> list:
    """Irreducible factors with multiplicities, ``[(g, k), ...]`` (constants dropped).

    Over the rationals this is sympy's factorization; over a prime field only
    univariate factorization is attempted, otherwise ``f`` is returned whole.
    """
    ring = f.ring
    if f.is_constant():
        return []
    gens = sympy.symbols(ring.names)
    if ring.field.p:
        if len(f.support()) != 1:
            return [(f.monic(), 1)]
        try:
            poly = sympy.Poly.from_dict({m: int(c) for m, c in f.as_dict().items()}, *gens,
                                        modulus=ring.field.p)
            _, facs = poly.factor_list()
        except (sympy.polys.polyerrors.PolynomialError, NotImplementedError):
            return [(f.monic(), 1)]
        out = []
        for g, k in facs:
            terms = {tuple(m): int(c) for m, c in g.as_dict().items()}
            out.append((Polynomial(ring, terms).monic(), k))
        return out
    _, facs = _to_sympy(f, gens).factor_list()
    return [(_from_sympy(g, ring).monic(), k) for g, k in facs]


def _minimal_only(primes: list) -> list:
    out = []
    for k, p in enumerate(primes):
        dominated = False
        for j, q in enumerate(primes):
            if j == k:
                continue
            if is_subideal(q.ideal, p.ideal):
                # q inside p: p not minimal unless equal, and then keep the first
                if not is_subideal(p.ideal, q.ideal) or j < k:
                    dominated = True
                    break
        if not dominated:
            out.append(p)
    return out


def _split_primes(I: IdealBasis, depth: int = 0) -> list:
    gb = I.groebner()
    if any(g.is_constant() for g in gb):
        return []
    if gb.is_monomial():
        return min_primes_monomial(gb)
    try:
        return [certify_prime(I)]
    except CannotCertify:
        pass
    for g in gb.generators:
        facs = factor(g)
        if len(facs) == 1 and facs[0][1] == 1:
            continue
        if len(facs) == 1:
            return _split_primes(ideal_sum(gb, IdealBasis(gb.ring, [facs[0][0]])), depth + 1)
        found = []
        for f, _ in facs:
            found.extend(_split_primes(ideal_sum(gb, IdealBasis(gb.ring, [f])), depth + 1))
        return _minimal_only(found)
    raise CannotCertify(f"cannot split or certify {gb}", gb)


def min_primes_general(I: IdealBasis, local: bool = True) -> list:
    """Certified minimal primes by recursive factor splitting.

    With ``local=True`` only primes through the origin are returned.
    """
    primes = _minimal_only(_split_primes(I))
    if local:
        primes = [p for p in primes if passes_through_origin(p.ideal)]
    key = lambda p: (-p.dim if p.dim != NEG_INF else 0, [str(g) for g in p.ideal])
    return sorted(primes, key=key)


def min_primes(I: IdealBasis, local: bool = True) -> list:
    if I.is_monomial():
        return min_primes_monomial(I)
    return min_primes_general(I, local)


def radical_equals_candidate(I: IdealBasis, p: PrimeCertificate):
    """sqrt(I) == p for a certified prime p: I inside p and p inside sqrt(I).

    Returns ``(verdict, witnesses)`` where witnesses record each membership.
    """
    witnesses = {}
    pb = p.ideal.groebner()
    for f in I.generators:
        witnesses[f"{f} in p"] = normal_form(f, pb).is_zero
    for g in p.ideal.generators:
        witnesses[f"{g} in sqrt(I)"] = radical_membership(g, I)
    return all(witnesses.values()), witnesses


# --- Gamma graphs ---------------------------------------------------------------------------

@dataclass
class GammaGraph:
    s: int
    d: object
    vertices: list
    adjacency: list
    pair_dims: list = field(default_factory=list)

    def edges(self) -> list:
        n = len(self.vertices)
        return [(i, j) for i in range(n) for j in range(i + 1, n) if self.adjacency[i][j]]

    def components(self) -> list:
        n = len(self.vertices)
        seen = [False] * n
        comps = []
        for start in range(n):
            if seen[start]:
                continue
            stack, comp = [start], []
            seen[start] = True
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in range(n):
                    if self.adjacency[v][u] and not seen[u]:
                        seen[u] = True
                        stack.append(u)
            comps.append(sorted(comp))
        return comps

    @property
    def n_components(self) -> int:
        return len(self.components())

    def is_connected(self) -> bool:
        # the empty scheme counts as disconnected
        return len(self.vertices) > 0 and self.n_components == 1

    def as_dict(self) -> dict:
        return {
            "s": str(self.s), "d": str(self.d),
            "vertices": [p.as_dict() for p in self.vertices],
            "edges": [[str(i), str(j)] for i, j in self.edges()],
            "pair_dims": [[str(x) for x in row] for row in self.pair_dims],
            "components": [[str(i) for i in c] for c in self.components()],
        }


def gamma_graph(primes: list, d, s: int) -> GammaGraph:
    if s < 0:
        raise PreconditionError("s must be non-negative")
    n = len(primes)
    dims = [[None] * n for _ in range(n)]
    adj = [[False] * n for _ in range(n)]
    for i in range(n):
        dims[i][i] = primes[i].dim
        for j in range(i + 1, n):
            v = local_dimension(ideal_sum(primes[i].ideal, primes[j].ideal))
            dims[i][j] = dims[j][i] = v
            adj[i][j] = adj[j][i] = v >= d - s
    return GammaGraph(s, d, list(primes), adj, dims)


def partition_check(primes: list, d, s: int) -> bool:
    """Exhaustive check over partitions (U, V) of the primes."""
    n = len(primes)
    if n == 0:
        return False
    if n == 1:
        return True
    cache = {}

    def inter(idx):
        if idx not in cache:
            cache[idx] = intersect_all([primes[i].ideal for i in idx])
        return cache[idx]

    rest = list(range(1, n))
    for r in range(0, n - 1):
        for extra in itertools.combinations(rest, r):
            U = (0,) + extra
            V = tuple(i for i in range(n) if i not in U)
            if local_dimension(ideal_sum(inter(U), inter(V))) < d - s:
                return False
    return True


@dataclass
class ConnectednessReport:
    s: int
    d: object
    graph: GammaGraph
    graph_verdict: bool
    partition_verdict: bool | None

    @property
    def connected(self) -> bool:
        return self.graph_verdict

    @property
    def agree(self) -> bool:
        return self.partition_verdict is None or self.partition_verdict == self.graph_verdict


def connectedness(I: IdealBasis, s: int, primes: list | None = None, exhaustive_limit: int = 12) -> ConnectednessReport:
    if primes is None:
        primes = min_primes(I)
    d = max((p.dim for p in primes), default=NEG_INF)
    g = gamma_graph(primes, d, s)
    part = partition_check(primes, d, s) if len(primes) <= exhaustive_limit else None
    return ConnectednessReport(s, d, g, g.is_connected(), part)


def connected_in_codim(I: IdealBasis, s: int, primes: list | None = None) -> bool:
    rep = connectedness(I, s, primes)
    if not rep.agree:
        raise CertificateFailure("graph connectivity equals partition verdict", str(I))
    return rep.connected


def sdim(I: IdealBasis, primes: list | None = None):
    if primes is None:
        primes = min_primes(I)
    return min((p.dim for p in primes), default=NEG_INF)


def a_sdim(I: IdealBasis):
    _require_monomial(I)
    return min((p.dim for p in ass_primes_monomial(I)), default=NEG_INF)


# --- slicing --------------------------------------------------------------------------------

@dataclass
class SliceReport:
    s: int
    sdim_before: object
    sdim_after: object
    sdim_ok: bool
    connected_before: bool
    connected_after: bool
    connectivity_ok: bool
    radical_certified: bool
    converse_ok: bool | None
    components_before: int
    components_after: int
    count_ok: bool | None

    @property
    def violations(self) -> list:
        out = []
        if not self.sdim_ok:
            out.append("sdim drop")
        if not self.connectivity_ok:
            out.append("connectivity")
        if self.converse_ok is False:
            out.append("converse")
        if self.count_ok is False:
            out.append("component count")
        return out


def squarefree_leading_ideal(I: IdealBasis) -> bool:
    gb = I.groebner(DEGREVLEX)
    return all(max(g.lm) <= 1 for g in gb)


def slice_check(I: IdealBasis, x: Polynomial, s: int) -> SliceReport:
    if s <= 0:
        raise PreconditionError("slicing statements need s > 0")
    if x.is_zero or any(not any(m) for m in x.monomials()):
        raise PreconditionError("slice element must lie in the maximal ideal")
    primes = min_primes(I)
    for p in primes:
        if normal_form(x, p.ideal.groebner()).is_zero:
            raise PreconditionError(f"{x} lies in the minimal prime {p}")
    J = ideal_sum(I, IdealBasis(I.ring, [x]))
    primes_j = min_primes(J)
    before = connectedness(I, s, primes)
    after = connectedness(J, s, primes_j)
    sd_i, sd_j = sdim(I, primes), sdim(J, primes_j)
    radical = squarefree_leading_ideal(J)
    conn_ok = (not before.connected) or after.connected
    converse = (not after.connected or before.connected) if radical else None
    count = (before.graph.n_components == after.graph.n_components) if radical else None
    return SliceReport(s, sd_i, sd_j, sd_j >= sd_i - 1, before.connected, after.connected, conn_ok,
                       radical, converse, before.graph.n_components, after.graph.n_components, count)
