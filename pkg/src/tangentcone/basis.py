"""Groebner bases, Mora standard bases and ideal arithmetic.

Global orders go through Buchberger's algorithm (normal selection strategy,
Gebauer-Moeller pair update).  Local orders go through Mora's tangent cone
algorithm with the ecart-driven weak normal form.  Every polynomial kept in
a basis is normalized to be monic, which plays the role of content removal
over a field.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import CertificateFailure, NotGroebnerError, PreconditionError, RingMismatchError
from .ring import (
    DEGREVLEX,
    NEGDEGREVLEX,
    MonomialOrder,
    Polynomial,
    Ring,
    elimination_order,
    mono_divides,
    mono_lcm,
)


class IdealBasis:
    """A generator list, optionally certified as a Groebner or standard basis.

    ``status`` is ``"raw"``, ``"groebner"`` or ``"standard"``; in the latter
    two cases ``order`` names the order the basis is certified for.
    """

    def __init__(self, ring: Ring, generators: Iterable[Polynomial] = (), status: str = "raw",
                 order: MonomialOrder | None = None):
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                g = ring.parse(g) if isinstance(g, str) else ring.constant(g)
            if g.ring != ring:
                if g.ring.names != ring.names or g.ring.field != ring.field:
                    raise RingMismatchError(f"generator {g} is not in {ring}")
                g = g.to_ring(ring)
            if g:
                gens.append(g)
        if status not in ("raw", "groebner", "standard"):
            raise ValueError(f"unknown status {status!r}")
        self.ring = ring
        self.generators = tuple(gens)
        self.status = status
        self.order = order if status != "raw" else None
        self._cache: dict = {}

    @classmethod
    def parse(cls, ring: Ring, texts: Iterable[str]) -> "IdealBasis":
        return cls(ring, [ring.parse(t) for t in texts])

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __getitem__(self, i):
        return self.generators[i]

    def __repr__(self):
        return f"IdealBasis({[str(g) for g in self.generators]}, status={self.status!r})"

    def __str__(self):
        if not self.generators:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.generators) + ")"

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.generators)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def leading_monomials(self) -> list:
        if self.status == "raw":
            raise NotGroebnerError("leading monomials of a raw generator list are not meaningful")
        return [g.lm for g in self.generators]

    @property
    def reduced_form(self) -> "IdealBasis | None":
        return self._cache.get(self.ring.order if self.ring.order.is_global else DEGREVLEX)

    def groebner(self, order: MonomialOrder | None = None) -> "IdealBasis":
        """Reduced Groebner basis (cached per order)."""
        order = order or (self.ring.order if self.ring.order.is_global else DEGREVLEX)
        if order not in self._cache:
            self._cache[order] = buchberger(self, order)
        return self._cache[order]

    def standard(self, order: MonomialOrder = NEGDEGREVLEX) -> "IdealBasis":
        key = ("std", order)
        if key not in self._cache:
            self._cache[key] = standard_basis(self, order)
        return self._cache[key]

    def is_unit(self) -> bool:
        gb = self.groebner()
        return any(g.is_constant() for g in gb)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f.to_ring(self.ring), self.groebner()).is_zero

    def with_ring(self, ring: Ring) -> "IdealBasis":
        return IdealBasis(ring, [g.to_ring(ring) for g in self.generators])


def ideal(ring: Ring, *generators) -> IdealBasis:
    """Convenience constructor accepting polynomials or strings."""
    if len(generators) == 1 and not isinstance(generators[0], (str, Polynomial)):
        generators = tuple(generators[0])
    return IdealBasis(ring, generators)


# --- working polynomials ------------------------------------------------------------------

class _WP:
    """Mutable-free working record: term dict plus cached leading data."""

    __slots__ = ("t", "lm", "deg", "ecart")

    def __init__(self, t: dict, key):
        self.t = t
        self.lm = max(t, key=key)
        self.deg = max(sum(m) for m in t)
        self.ecart = self.deg - sum(self.lm)


def _scale_dict(t, field, c):
    p = field.p
    if p:
        return {m: v * c % p for m, v in t.items()}
    return {m: v * c for m, v in t.items()}


def _monic(t: dict, key, field) -> dict:
    lm = max(t, key=key)
    c = t[lm]
    if c == 1:
        return dict(t)
    return _scale_dict(t, field, field.inv(c))


def _axpy(f: dict, q, shift, g: dict, p) -> None:
    """In place: f <- f - q * x^shift * g."""
    if p:
        for gm, gc in g.items():
            mm = tuple(a + b for a, b in zip(shift, gm))
            v = (f.get(mm, 0) - q * gc) % p
            if v:
                f[mm] = v
            else:
                f.pop(mm, None)
    else:
        for gm, gc in g.items():
            mm = tuple(a + b for a, b in zip(shift, gm))
            v = f.get(mm, 0) - q * gc
            if v:
                f[mm] = v
            else:
                f.pop(mm, None)


def _reduce_full(t: dict, basis: Sequence[_WP], key, field) -> dict:
    """Full reduction of ``t`` by monic basis elements (global order)."""
    p = field.p
    f = dict(t)
    r = {}
    while f:
        m = max(f, key=key)
        c = f[m]
        for g in basis:
            lm = g.lm
            if all(a <= b for a, b in zip(lm, m)):
                _axpy(f, c, tuple(b - a for a, b in zip(lm, m)), g.t, p)
                break
        else:
            r[m] = c
            del f[m]
    return r


def _spoly(f: _WP, g: _WP, p) -> dict:
    L = mono_lcm(f.lm, g.lm)
    out = {}
    sf = tuple(a - b for a, b in zip(L, f.lm))
    sg = tuple(a - b for a, b in zip(L, g.lm))
    for m, c in f.t.items():
        out[tuple(a + b for a, b in zip(sf, m))] = c
    _axpy(out, 1, sg, g.t, p)
    return out


# --- Buchberger ----------------------------------------------------------------------------

def _is_groebner_status(B: IdealBasis) -> bool:
    return B.status == "groebner" and B.order is not None and B.order.is_global


def normal_form(f: Polynomial, B: IdealBasis) -> Polynomial:
    """Fully reduced remainder of ``f`` modulo a Groebner basis ``B``."""
    if not _is_groebner_status(B):
        raise NotGroebnerError("normal_form needs a basis with Groebner status")
    ring = B.ring.with_order(B.order)
    f = f.to_ring(ring)
    if f.is_zero:
        return f
    key = B.order.key
    basis = [_WP(g._terms, key) for g in B.generators]
    for w, g in zip(basis, B.generators):
        if g.lc != 1:
            w.t = _monic(w.t, key, ring.field)
    return Polynomial._raw(ring, _reduce_full(f._terms, basis, key, ring.field))


def _minimalize_monomials(monos: Iterable[tuple]) -> list:
    monos = sorted(set(monos), key=lambda m: (sum(m), m))
    kept = []
    for m in monos:
        if not any(mono_divides(k, m) for k in kept):
            kept.append(m)
    return kept


def _update(G: list, B: set, k: int, polys: list):
    """Gebauer-Moeller installation of polys[k] into active set G, pairs B."""
    lmh = polys[k].lm

    def lcm_with_h(i):
        return mono_lcm(polys[i].lm, lmh)

    def coprime(i):
        return all(not (a and b) for a, b in zip(polys[i].lm, lmh))

    C = list(G)
    D = []
    while C:
        i = C.pop(0)
        Li = lcm_with_h(i)
        if coprime(i) or (not any(mono_divides(lcm_with_h(j), Li) for j in C)
                          and not any(mono_divides(lcm_with_h(j), Li) for j in D)):
            D.append(i)
    E = [i for i in D if not coprime(i)]
    B_new = set()
    for (i, j) in B:
        L = mono_lcm(polys[i].lm, polys[j].lm)
        if (not mono_divides(lmh, L) or lcm_with_h(i) == L or lcm_with_h(j) == L):
            B_new.add((i, j))
    for i in E:
        B_new.add((i, k))
    G_new = [i for i in G if not mono_divides(lmh, polys[i].lm)]
    G_new.append(k)
    return G_new, B_new


def buchberger(gens: IdealBasis | Sequence[Polynomial], order: MonomialOrder | None = None) -> IdealBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    The result is monic, tail-reduced and sorted by ascending leading
    monomial, hence canonical for the ideal and the order.
    """
    if not isinstance(gens, IdealBasis):
        gens = list(gens)
        if not gens:
            raise ValueError("cannot infer ring from an empty generator list")
        gens = IdealBasis(gens[0].ring, gens)
    order = order or gens.ring.order
    if not order.is_global:
        raise PreconditionError("buchberger needs a global order")
    ring = gens.ring.with_order(order)
    field = ring.field
    key = order.key
    raw = [g.to_ring(ring)._terms for g in gens.generators if g]
    if not raw:
        return IdealBasis(ring, (), "groebner", order)
    if any(all(not any(m) for m in t) for t in raw):
        return IdealBasis(ring, [ring.one], "groebner", order)
    if all(len(t) == 1 for t in raw):
        monos = _minimalize_monomials(next(iter(t)) for t in raw)
        out = [Polynomial._raw(ring, {m: field.one}) for m in sorted(monos, key=key)]
        return IdealBasis(ring, out, "groebner", order)

    p = field.p
    polys: list[_WP] = []
    G: list[int] = []
    B: set = set()

    def install(t: dict) -> bool:
        nonlocal G, B
        t = _monic(t, key, field)
        w = _WP(t, key)
        polys.append(w)
        G, B = _update(G, B, len(polys) - 1, polys)
        return not any(w.lm)

    # feed generators in increasing leading-monomial order
    for t in sorted(raw, key=lambda t: key(max(t, key=key))):
        r = _reduce_full(t, [polys[i] for i in G], key, field)
        if r and install(r):
            return IdealBasis(ring, [ring.one], "groebner", order)

    while B:
        i, j = min(B, key=lambda ij: (sum(mono_lcm(polys[ij[0]].lm, polys[ij[1]].lm)), ij[1], ij[0]))
        B.discard((i, j))
        s = _spoly(polys[i], polys[j], p)
        if not s:
            continue
        r = _reduce_full(s, [polys[g] for g in G], key, field)
        if r and install(r):
            return IdealBasis(ring, [ring.one], "groebner", order)

    return IdealBasis(ring, _interreduce([polys[i] for i in G], ring), "groebner", order)


def _interreduce(basis: list[_WP], ring: Ring) -> list[Polynomial]:
    key = ring.order.key
    field = ring.field
    basis = sorted(basis, key=lambda w: key(w.lm))
    minimal: list[_WP] = []
    for w in basis:
        if not any(mono_divides(v.lm, w.lm) for v in minimal):
            minimal.append(w)
    out = []
    for k, w in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        tail = dict(w.t)
        c = tail.pop(w.lm)
        r = _reduce_full(tail, others, key, field)
        r[w.lm] = c
        out.append(Polynomial._raw(ring, _monic(r, key, field)))
    return sorted(out, key=lambda g: key(g.lm))


# --- Mora -----------------------------------------------------------------------------------

def _weak_nf(t: dict, T: list[_WP], key, field, truncate: int | None = None) -> dict:
    """Mora's ecart-driven weak normal form; ``T`` is extended in place."""
    p = field.p
    h = dict(t)
    if truncate is not None:
        h = {m: c for m, c in h.items() if sum(m) < truncate}
    while h:
        wh = _WP(h, key)
        cands = [g for g in T if mono_divides(g.lm, wh.lm)]
        if not cands:
            break
        g = min(cands, key=lambda w: w.ecart)  # min() keeps the first on ties
        if g.ecart > wh.ecart:
            T.append(_WP(_monic(h, key, field), key))
        c = h[wh.lm]
        if g.t[g.lm] != 1:
            c = c * field.inv(g.t[g.lm])
            if p:
                c %= p
        _axpy(h, c, tuple(a - b for a, b in zip(wh.lm, g.lm)), g.t, p)
        if truncate is not None:
            h = {m: v for m, v in h.items() if sum(m) < truncate}
    return h


def mora_normal_form(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder = NEGDEGREVLEX,
                     truncate: int | None = None) -> Polynomial:
    """Weak normal form of ``f`` with respect to ``G`` under a local order.

    The remainder ``r`` satisfies ``u*f = sum(a_i*g_i) + r`` for a unit
    ``u`` and its leading monomial is divisible by no leading monomial of
    ``G``.  With ``truncate=N`` all terms of degree >= N are discarded,
    which computes modulo the N-th power of the maximal ideal.
    """
    if order.is_global:
        raise PreconditionError("mora_normal_form needs a local order")
    ring = f.ring.with_order(order)
    key = order.key
    T = [_WP(_monic(g.to_ring(ring)._terms, key, ring.field), key) for g in G if g]
    r = _weak_nf(f.to_ring(ring)._terms, T, key, ring.field, truncate)
    return Polynomial._raw(ring, r)


def standard_basis(gens: IdealBasis | Sequence[Polynomial], order: MonomialOrder = NEGDEGREVLEX) -> IdealBasis:
    """Mora's tangent cone algorithm: a minimal standard basis for a local order."""
    if not isinstance(gens, IdealBasis):
        gens = list(gens)
        gens = IdealBasis(gens[0].ring, gens)
    if order.is_global:
        raise PreconditionError("standard_basis needs a local order")
    ring = gens.ring.with_order(order)
    field = ring.field
    key = order.key
    p = field.p
    S: list[_WP] = []
    for g in gens.generators:
        t = g.to_ring(ring)._terms
        if t:
            S.append(_WP(_monic(t, key, field), key))
    if not S:
        return IdealBasis(ring, (), "standard", order)
    if any(not any(w.lm) for w in S):
        return IdealBasis(ring, [ring.one], "standard", order)

    pairs = {(i, j) for j in range(len(S)) for i in range(j)}
    while pairs:
        i, j = min(pairs, key=lambda ij: (sum(mono_lcm(S[ij[0]].lm, S[ij[1]].lm)), ij[1], ij[0]))
        pairs.discard((i, j))
        if all(not (a and b) for a, b in zip(S[i].lm, S[j].lm)):
            # product criterion
            continue
        s = _spoly(S[i], S[j], p)
        if not s:
            continue
        T = list(S)
        h = _weak_nf(s, T, key, field)
        if h:
            w = _WP(_monic(h, key, field), key)
            S.append(w)
            if not any(w.lm):
                return IdealBasis(ring, [ring.one], "standard", order)
            k = len(S) - 1
            pairs.update((i, k) for i in range(k))

    S = sorted(S, key=lambda w: (key(w.lm),), reverse=True)
    minimal: list[_WP] = []
    for w in S:
        if not any(mono_divides(v.lm, w.lm) for v in minimal):
            minimal.append(w)
    out = [Polynomial._raw(ring, w.t) for w in minimal]
    out.sort(key=lambda g: key(g.lm), reverse=True)
    return IdealBasis(ring, out, "standard", order)


def local_leading_ideal(I: IdealBasis, order: MonomialOrder = NEGDEGREVLEX) -> list:
    """Minimal monomial generators of the leading ideal of the localization."""
    sb = I.standard(order)
    return _minimalize_monomials(g.lm for g in sb)


# --- ideal arithmetic ------------------------------------------------------------------

def _common_ring(I: IdealBasis, J: IdealBasis) -> Ring:
    if I.ring.names != J.ring.names or I.ring.field != J.ring.field:
        raise RingMismatchError("ideals live in different rings")
    return I.ring


def _as_ideal(ring: Ring, obj) -> IdealBasis:
    if isinstance(obj, IdealBasis):
        return obj
    if isinstance(obj, Polynomial):
        return IdealBasis(ring, [obj])
    return IdealBasis(ring, list(obj))


def ideal_sum(I: IdealBasis, J: IdealBasis) -> IdealBasis:
    ring = _common_ring(I, J)
    return IdealBasis(ring, list(I.generators) + [g.to_ring(ring) for g in J.generators]).groebner()


def ideal_product(I: IdealBasis, J: IdealBasis) -> IdealBasis:
    ring = _common_ring(I, J)
    gens = [f * g.to_ring(ring) for f in I.generators for g in J.generators]
    return IdealBasis(ring, gens).groebner()


def _monomial_gens(I: IdealBasis) -> list:
    return _minimalize_monomials(g.lm for g in I.generators)


def monomial_ideal(ring: Ring, monos: Iterable[tuple]) -> IdealBasis:
    key = ring.order.key if ring.order.is_global else DEGREVLEX.key
    ms = sorted(_minimalize_monomials(tuple(m) for m in monos), key=key)
    order = ring.order if ring.order.is_global else DEGREVLEX
    return IdealBasis(ring.with_order(order), [Polynomial._raw(ring.with_order(order), {m: ring.field.one}) for m in ms],
                      "groebner", order)


def eliminate(I: IdealBasis, variables: Iterable) -> IdealBasis:
    """Generators of the elimination ideal, in the same ring."""
    ring = I.ring
    idx = {ring.index(v) if isinstance(v, str) else v for v in variables}
    order = elimination_order(ring.ngens, idx)
    gb = buchberger(I, order)
    keep = [g for g in gb.generators if not (g.support() & idx)]
    base = ring.with_order(ring.order if ring.order.is_global else DEGREVLEX)
    return IdealBasis(base, [g.to_ring(base) for g in keep]).groebner()


def _with_aux(ring: Ring, base: str = "aux_y"):
    name = ring.fresh_name(base)
    big = Ring(ring.names + (name,), ring.field,
               ring.order if ring.order.is_global else DEGREVLEX, ring.t_variable)
    return big, big.gen(name), name


def _drop_aux(I: IdealBasis, ring: Ring, name: str) -> IdealBasis:
    base = ring.with_order(ring.order if ring.order.is_global else DEGREVLEX)
    el = eliminate(I, [name])
    return IdealBasis(base, [g.to_ring(base) for g in el.generators]).groebner()


def ideal_intersect(I: IdealBasis, J: IdealBasis) -> IdealBasis:
    """I cap J via one auxiliary variable: eliminate y from y*I + (1-y)*J."""
    ring = _common_ring(I, J)
    if I.is_zero or J.is_zero:
        return IdealBasis(ring, []).groebner()
    if I.is_monomial() and J.is_monomial():
        return monomial_ideal(ring, (mono_lcm(a, b) for a in _monomial_gens(I) for b in _monomial_gens(J)))
    big, y, name = _with_aux(ring)
    gens = [y * f.to_ring(big) for f in I.generators]
    gens += [(1 - y) * g.to_ring(big) for g in J.generators]
    return _drop_aux(IdealBasis(big, gens), ring, name)


def intersect_all(ideals: Sequence[IdealBasis]) -> IdealBasis:
    if not ideals:
        raise ValueError("empty intersection")
    out = ideals[0]
    for J in ideals[1:]:
        out = ideal_intersect(out, J)
    return out.groebner()


def divide_exact(g: Polynomial, f: Polynomial) -> Polynomial:
    """The quotient g/f; raises if f does not divide g."""
    ring = g.ring.with_order(DEGREVLEX)
    g, f = g.to_ring(ring), f.to_ring(ring)
    field = ring.field
    key = DEGREVLEX.key
    fw = _WP(f._terms, key)
    lc = f._terms[fw.lm]
    rem = dict(g._terms)
    q = {}
    p = field.p
    while rem:
        m = max(rem, key=key)
        if not mono_divides(fw.lm, m):
            raise ValueError(f"{f} does not divide {g}")
        c = rem[m] * field.inv(lc)
        if p:
            c %= p
        shift = tuple(a - b for a, b in zip(m, fw.lm))
        q[shift] = c
        _axpy(rem, c, shift, f._terms, p)
    return Polynomial._raw(g.ring, q).to_ring(g.ring)


def ideal_colon(I: IdealBasis, J) -> IdealBasis:
    """(I : J) for an ideal or a single polynomial J."""
    ring = I.ring
    J = _as_ideal(ring, J)
    if not J.generators:
        return IdealBasis(ring, [ring.one]).groebner()
    parts = []
    for f in J.generators:
        f = f.to_ring(ring)
        if I.is_monomial() and f.is_monomial():
            m = f.lm
            parts.append(monomial_ideal(ring, (tuple(max(a - b, 0) for a, b in zip(g, m))
                                               for g in _monomial_gens(I))))
            continue
        inter = ideal_intersect(I, IdealBasis(ring, [f]))
        parts.append(IdealBasis(ring, [divide_exact(g.to_ring(ring), f) for g in inter.generators]).groebner())
    return intersect_all(parts)


def ideal_equal(I: IdealBasis, J: IdealBasis) -> bool:
    """Equality of ideals by comparison of reduced Groebner bases."""
    _common_ring(I, J)
    order = I.ring.order if I.ring.order.is_global else DEGREVLEX
    a, b = I.groebner(order), J.groebner(order)
    return [g._terms for g in a.generators] == [g._terms for g in b.generators]


def is_subideal(I: IdealBasis, J: IdealBasis) -> bool:
    """True if I is contained in J (global)."""
    gb = J.groebner()
    return all(normal_form(f, gb).is_zero for f in I.generators)


def saturate(I: IdealBasis, f: Polynomial, certify: bool = True) -> IdealBasis:
    """(I : f^infinity) via I + (1 - y*f) followed by elimination of y."""
    if f.is_zero:
        raise PreconditionError("cannot saturate with respect to zero")
    ring = I.ring
    big, y, name = _with_aux(ring)
    gens = [g.to_ring(big) for g in I.generators] + [1 - y * f.to_ring(big)]
    sat = _drop_aux(IdealBasis(big, gens), ring, name)
    if certify and not ideal_equal(ideal_colon(sat, f), sat):
        raise CertificateFailure("(sat : f) = sat", str(f))
    return sat


def saturate_ideal(I: IdealBasis, J: IdealBasis) -> IdealBasis:
    """(I : J^infinity) as the intersection of saturations by generators of J."""
    return intersect_all([saturate(I, g) for g in J.generators])


def radical_membership(f: Polynomial, I: IdealBasis) -> bool:
    """Rabinowitsch test: f is in rad(I) iff 1 is in I + (1 - y*f)."""
    if f.is_zero:
        return True
    ring = I.ring
    big, y, _ = _with_aux(ring)
    gens = [g.to_ring(big) for g in I.generators] + [1 - y * f.to_ring(big)]
    return IdealBasis(big, gens).is_unit()


# --- local containment --------------------------------------------------------------------

def local_contains(I: IdealBasis, f: Polynomial, order: MonomialOrder = NEGDEGREVLEX) -> bool:
    """Membership of ``f`` in the localization of ``I`` at the origin."""
    sb = I.standard(order)
    return mora_normal_form(f, list(sb.generators), order).is_zero


def local_subideal(I: IdealBasis, J: IdealBasis, order: MonomialOrder = NEGDEGREVLEX) -> bool:
    return all(local_contains(J, f, order) for f in I.generators)


def local_equal(I: IdealBasis, J: IdealBasis, order: MonomialOrder = NEGDEGREVLEX) -> bool:
    _common_ring(I, J)
    return local_subideal(I, J, order) and local_subideal(J, I, order)


def local_is_unit(I: IdealBasis) -> bool:
    return any(not any(g.lm) for g in I.standard())
