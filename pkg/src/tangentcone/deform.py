"""The t-deformation from an ideal to its tangent cone.

For f with homogeneous components f_i, hom(f) = sum_i t^(i - o(f)) f_i.
Giving the x-variables weight 1 and t weight -1, hom(f) is t-homogeneous of
degree o(f); setting t = 0 recovers the initial form, t = 1 recovers f.
hom(I) is represented by the homogenizations of a local standard basis of
I, and the representation is backed by three checked certificates.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .basis import (
    IdealBasis,
    ideal_colon,
    ideal_equal,
    ideal_intersect,
    intersect_all,
    local_contains,
    local_equal,
    local_subideal,
    mora_normal_form,
)
from .errors import CertificateFailure, PreconditionError
from .ring import DEGREVLEX, NEGDEGREVLEX, Polynomial, Ring


def extended_ring(ring: Ring) -> Ring:
    """``ring`` plus a fresh deformation variable (named t when free)."""
    if ring.t_variable is not None:
        raise PreconditionError("ring already carries a deformation variable")
    return ring.extend([ring.fresh_name("t")], t=True)


def base_ring(ext: Ring) -> Ring:
    if ext.t_variable is None:
        raise PreconditionError("ring has no deformation variable")
    names = ext.names[:ext.t_variable] + ext.names[ext.t_variable + 1:]
    return Ring(names, ext.field, ext.order)


def _x_degree(m, ti):
    return sum(m) - m[ti]


def homogenize_poly(f: Polynomial, ext: Ring | None = None) -> Polynomial:
    if f.is_zero:
        raise PreconditionError("hom(0) is undefined")
    ext = ext or extended_ring(f.ring)
    ti = ext.t_variable
    o = f.order()
    pos = [ext.index(name) for name in f.ring.names]
    terms = {}
    for c, m in f.terms:
        e = [0] * ext.ngens
        for i, a in zip(pos, m):
            e[i] = a
        e[ti] = sum(m) - o
        terms[tuple(e)] = c
    return Polynomial(ext, terms)


def t_degree(F: Polynomial) -> int:
    """Degree of a t-homogeneous element; raises if F is not t-homogeneous."""
    parts = t_decompose(F)
    if len(parts) != 1:
        raise ValueError(f"{F} is not t-homogeneous")
    return next(iter(parts))


def is_t_homogeneous(F: Polynomial) -> bool:
    return len(t_decompose(F)) <= 1


def t_decompose(F: Polynomial) -> dict:
    """Split F into t-homogeneous parts keyed by degree (x-degree minus t-exponent)."""
    ti = F.ring.t_variable
    if ti is None:
        raise PreconditionError("ring has no deformation variable")
    parts: dict = {}
    for m, c in F.as_dict().items():
        parts.setdefault(_x_degree(m, ti) - m[ti], {})[m] = c
    return {d: Polynomial(F.ring, parts[d]) for d in sorted(parts)}


def dehomogenize(F: Polynomial, ring: Ring | None = None) -> Polynomial:
    """Theta: substitute t = 1 and return to the base ring."""
    ring = ring or base_ring(F.ring)
    ti = F.ring.t_variable
    pos = [ring.index(name) for k, name in enumerate(F.ring.names) if k != ti]
    terms: dict = {}
    for m, c in F.as_dict().items():
        e = [0] * ring.ngens
        for i, a in zip(pos, (a for k, a in enumerate(m) if k != ti)):
            e[i] = a
        e = tuple(e)
        terms[e] = terms.get(e, 0) + c
    return Polynomial(ring, terms)


def specialize_t0(F: Polynomial, ring: Ring | None = None) -> Polynomial:
    """Substitute t = 0 and return to the base ring."""
    ti = F.ring.t_variable
    keep = Polynomial(F.ring, {m: c for m, c in F.as_dict().items() if m[ti] == 0})
    return dehomogenize(keep, ring)


def tangent_cone(I: IdealBasis) -> IdealBasis:
    """in(I): initial forms of a local standard basis, as a reduced degrevlex basis."""
    ring = I.ring.with_order(DEGREVLEX)
    if I.is_zero:
        return IdealBasis(ring, []).groebner()
    sb = I.standard(NEGDEGREVLEX)
    if any(g.is_constant() for g in sb):
        raise PreconditionError("the ideal is the unit ideal locally")
    forms = [g.initial_form().to_ring(ring) for g in sb]
    return IdealBasis(ring, forms).groebner()


@dataclass
class HomogenizedIdeal:
    extended_ring: Ring
    generators: tuple
    origin: IdealBasis
    t_weight_degree: list
    truncation: int
    certificates: dict = field(default_factory=dict)

    @property
    def ideal(self) -> IdealBasis:
        return IdealBasis(self.extended_ring, self.generators)

    @property
    def ok(self) -> bool:
        return all(c["ok"] for c in self.certificates.values())

    def failed(self) -> list:
        return [name for name, c in self.certificates.items() if not c["ok"]]

    def as_dict(self) -> dict:
        return {
            "ring": list(self.extended_ring.names),
            "generators": [str(g) for g in self.generators],
            "t_weight_degree": [str(d) for d in self.t_weight_degree],
            "truncation": str(self.truncation),
            "certificates": {k: {"ok": v["ok"], "detail": v["detail"]} for k, v in self.certificates.items()},
        }


def default_truncation(I: IdealBasis) -> int:
    return 2 * max((g.total_degree for g in I.generators), default=0) + 2


def _certify(H: list, I: IdealBasis, ext: Ring, truncation: int) -> dict:
    base = I.ring
    certs = {}

    # (i) the special fiber t = 0 is the tangent cone
    tc = tangent_cone(I)
    fiber = IdealBasis(tc.ring, [specialize_t0(F, tc.ring) for F in H])
    ok = ideal_equal(fiber, tc)
    certs["special-fiber"] = {"ok": ok, "detail": "" if ok else f"t=0 gives {fiber.groebner()}, in(I) is {tc}"}

    # (ii) Theta(H) generates I locally, modulo the truncation power of the maximal ideal
    theta = [dehomogenize(F, base) for F in H]
    bad = [str(f) for f in I.generators
           if not mora_normal_form(f, theta, NEGDEGREVLEX, truncate=truncation).is_zero]
    sb = list(I.standard(NEGDEGREVLEX).generators)
    bad += [str(g) for g in theta
            if not mora_normal_form(g, sb, NEGDEGREVLEX, truncate=truncation).is_zero]
    certs["dehomogenization"] = {"ok": not bad, "detail": ", ".join(bad)}

    # (iii) t is a nonzerodivisor: (H : t) = H
    Hb = IdealBasis(ext, H)
    t = ext.gen(ext.t_variable)
    colon = ideal_colon(Hb, t)
    ok = ideal_equal(colon, Hb)
    detail = ""
    if not ok:
        extra = [g for g in colon.generators if not local_contains(Hb, g)]
        ok = not extra
        detail = "holds locally only" if ok else "(H : t) contains " + ", ".join(str(g) for g in extra)
    certs["t-regular"] = {"ok": ok, "detail": detail}
    return certs


def _build(I: IdealBasis, gens: list, truncation: int | None) -> HomogenizedIdeal:
    ext = extended_ring(I.ring)
    H = [homogenize_poly(g.to_ring(I.ring), ext) for g in gens]
    truncation = default_truncation(I) if truncation is None else truncation
    return HomogenizedIdeal(ext, tuple(H), I, [g.order() for g in gens], truncation,
                            _certify(H, I, ext, truncation))


def homogenized_ideal(I: IdealBasis, truncation: int | None = None, strict: bool = True) -> HomogenizedIdeal:
    """hom(I) as homogenizations of a local standard basis, with certificates."""
    if I.is_zero:
        raise PreconditionError("hom of the zero ideal is not represented")
    sb = I.standard(NEGDEGREVLEX)
    if any(g.is_constant() for g in sb):
        raise PreconditionError("the ideal is the unit ideal locally")
    H = _build(I, list(sb.generators), truncation)
    if strict and not H.ok:
        name = H.failed()[0]
        raise CertificateFailure(name, H.certificates[name]["detail"])
    return H


def naive_homogenization(I: IdealBasis, truncation: int | None = None) -> HomogenizedIdeal:
    """Homogenize the given generators as they stand; certificates may fail."""
    return _build(I, list(I.generators), truncation)


# --- identities between I, J and their homogenizations ------------------------------------

def _hom_ideal(I: IdealBasis, ext: Ring) -> IdealBasis:
    sb = I.standard(NEGDEGREVLEX)
    return IdealBasis(ext, [homogenize_poly(g.to_ring(I.ring), ext) for g in sb])


def _local(ring: Ring) -> Ring:
    return ring.with_order(NEGDEGREVLEX)


def check_hom_identities(I: IdealBasis, J: IdealBasis, truncation: int | None = None,
                         s_values=(1, 2)) -> dict:
    """Check items (1), (2), (5), (6), (7) on a pair of ideals.

    Comparisons in the extended ring are local equalities at the origin.
    Prime decompositions may raise CannotCertify.
    """
    from .spectrum import gamma_graph, local_dimension, min_primes

    ring = I.ring
    ext = extended_ring(ring)
    hI, hJ = _hom_ideal(I, ext), _hom_ideal(J, ext)
    report = {}

    # (1) hom(I cap J) = hom(I) cap hom(J)
    lhs = _hom_ideal(ideal_intersect(I, J), ext)
    rhs = ideal_intersect(hI, hJ)
    ok = local_equal(lhs, rhs)
    report["1"] = {"ok": ok, "lhs": [str(g) for g in lhs], "rhs": [str(g) for g in rhs.generators]}

    # (2) I inside J iff hom(I) inside hom(J)
    a, b = local_subideal(I, J), local_subideal(hI, hJ)
    report["2"] = {"ok": a == b, "lhs": a, "rhs": b}

    # (5) and (6) via certified minimal primes
    primes_I = min_primes(I)
    hom_primes = [_hom_ideal(p.ideal, ext) for p in primes_I]
    primes_H = min_primes(hI)
    if primes_I:
        rad_hom = _hom_ideal(intersect_all([p.ideal for p in primes_I]), ext)
    else:
        rad_hom = IdealBasis(ext, [ext.one])
    rad_H = intersect_all([p.ideal for p in primes_H]) if primes_H else IdealBasis(ext, [ext.one])
    ok = local_equal(rad_hom, rad_H)
    report["5"] = {"ok": ok, "lhs": [str(g) for g in rad_hom], "rhs": [str(g) for g in rad_H]}

    matching = []
    used = set()
    for hp in hom_primes:
        k = next((k for k, q in enumerate(primes_H) if k not in used and local_equal(hp, q.ideal)), None)
        matching.append(k)
        if k is not None:
            used.add(k)
    ok = None not in matching and len(primes_H) == len(primes_I)
    report["6"] = {"ok": ok, "lhs": [str(p) for p in primes_I], "rhs": [str(p) for p in primes_H]}

    # (7) Gamma_s agree under the correspondence
    items = {}
    if ok:
        d = max((p.dim for p in primes_I), default=float("-inf"))
        dH = local_dimension(hI)
        for s in s_values:
            g1 = gamma_graph(primes_I, d, s)
            g2 = gamma_graph([primes_H[k] for k in matching], dH, s)
            items[str(s)] = g1.adjacency == g2.adjacency
        report["7"] = {"ok": all(items.values()), "per_s": items, "dims": [str(d), str(dH)]}
    else:
        report["7"] = {"ok": False, "per_s": items, "detail": "prime correspondence failed"}
    return report
