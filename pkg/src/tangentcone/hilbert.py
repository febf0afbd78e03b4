"""Hilbert series, Hilbert(-Samuel) polynomials and lengths.

Series of k[x]/I for a monomial ideal I are computed through the pivot
recursion

    K(I) = K(I + (x_i)) + t * K(I : x_i)

on the numerator over (1-t)^n, memoized on the minimal generators.
Polynomials in t are integer coefficient lists, lowest degree first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .basis import IdealBasis, _minimalize_monomials, local_leading_ideal
from .errors import PreconditionError
from .ring import DEGREVLEX, mono_divides


# --- integer polynomial helpers ---------------------------------------------------------------

def _trim(p: list) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _padd(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _shift(a, k=1):
    return [0] * k + list(a) if a else []


def _eval(p, x):
    return sum(c * x ** i for i, c in enumerate(p))


def _divide_one_minus_t(p):
    """Exact quotient p / (1 - t); caller guarantees p(1) == 0."""
    # p = (1 - t) q  =>  q_i = sum_{k<=i} p_k
    q, acc = [], 0
    for c in p[:-1]:
        acc += c
        q.append(acc)
    return _trim(q)


def _derivative(p, k=1):
    for _ in range(k):
        p = [i * c for i, c in enumerate(p)][1:]
    return p


def format_t_polynomial(p, var="t") -> str:
    if not p:
        return "0"
    out = []
    for i, c in enumerate(p):
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        a = abs(c)
        body = str(a) if not mono else (mono if a == 1 else f"{a}{mono}")
        sign = "-" if c < 0 else "+"
        out.append((sign, body))
    first = ("-" if out[0][0] == "-" else "") + out[0][1]
    return first + "".join(f"{s}{b}" for s, b in out[1:])


# --- the series -------------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _numerator(gens: tuple) -> tuple:
    if not gens:
        return (1,)
    if any(not any(m) for m in gens):
        return ()
    n = len(gens[0])
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in gens]
    counts = [0] * n
    for s in supports:
        for i in s:
            counts[i] += 1
    if max(counts) <= 1:
        out = [1]
        for m in gens:
            out = _pmul(out, [1] + [0] * (sum(m) - 1) + [-1])
        return tuple(out)
    v = max(range(n), key=lambda i: (counts[i], -i))
    unit = tuple(1 if i == v else 0 for i in range(n))
    plus = _canon(list(gens) + [unit])
    colon = _canon(tuple(max(e - 1, 0) if i == v else e for i, e in enumerate(m)) for m in gens)
    return tuple(_padd(list(_numerator(plus)), _shift(list(_numerator(colon)))))


def _canon(monos) -> tuple:
    return tuple(sorted(_minimalize_monomials(monos)))


@dataclass
class HilbertData:
    nvars: int
    raw_numerator: list
    h: list
    d: int
    e: list
    e_raw: list
    hp: list
    hs: list

    def hf(self, j: int) -> int:
        """Value of the Hilbert function at j, from the series."""
        # coefficient of t^j in h / (1-t)^d
        if self.d == 0:
            return self.h[j] if j < len(self.h) else 0
        return sum(c * comb(j - i + self.d - 1, self.d - 1) for i, c in enumerate(self.h) if i <= j)

    def samuel(self, j: int) -> int:
        return sum(self.hf(i) for i in range(j + 1))

    @property
    def multiplicity(self) -> int:
        return self.e[0]

    def numerator_str(self) -> str:
        return format_t_polynomial(self.h)

    def as_dict(self) -> dict:
        return {
            "numerator": self.numerator_str(),
            "h": [str(c) for c in self.h],
            "raw_numerator": [str(c) for c in self.raw_numerator],
            "d": str(self.d),
            "e": [str(c) for c in self.e],
            "e_derivative_convention": [str(c) for c in self.e_raw],
            "hilbert_polynomial": [str(c) for c in self.hp],
            "hilbert_samuel_polynomial": [str(c) for c in self.hs],
        }


def _from_numerator(raw: list, n: int) -> HilbertData:
    if not raw:
        raise PreconditionError("the unit ideal has the zero Hilbert series")
    h, k = list(raw), 0
    while _eval(h, 1) == 0:
        h = _divide_one_minus_t(h)
        k += 1
    d = n - k
    e = hilbert_coefficients(h, d)
    e_raw = [_eval(_derivative(h, i), 1) for i in range(d + 1)]
    return HilbertData(n, list(raw), h, d, e, e_raw, hilbert_function_polynomial(e, d), hilbert_polynomial(e, d))


def hilbert_series_monomial(I: IdealBasis) -> HilbertData:
    if not I.is_monomial():
        raise PreconditionError("monomial ideal expected")
    gens = _canon(g.lm for g in I.generators)
    return _from_numerator(list(_numerator(gens)), I.ring.ngens)


def hilbert_series(I: IdealBasis) -> HilbertData:
    """Series of a homogeneous ideal through its degrevlex leading ideal."""
    if not I.is_homogeneous():
        raise PreconditionError("homogeneous generators expected")
    gb = I.groebner(DEGREVLEX)
    gens = _canon(g.lm for g in gb)
    return _from_numerator(list(_numerator(gens)), I.ring.ngens)


def local_hilbert_series(I: IdealBasis) -> HilbertData:
    """Series of the associated graded ring, from the local leading ideal."""
    gens = _canon(local_leading_ideal(I))
    return _from_numerator(list(_numerator(gens)), I.ring.ngens)


def hilbert_coefficients(h: list, d: int) -> list:
    """e_i = h^(i)(1) / i! for i = 0..d."""
    if _eval(h, 1) == 0:
        raise PreconditionError("h(1) must be nonzero")
    out = []
    for i in range(d + 1):
        v = Fraction(_eval(_derivative(h, i), 1), factorial(i))
        out.append(int(v) if v.denominator == 1 else v)
    return out


def _binom_poly(m: int, shift: int) -> list:
    """Coefficients (in j) of binom(j + shift, m)."""
    p = [Fraction(1)]
    for k in range(m):
        # multiply by (j + shift - k) / (k + 1)
        c = shift - k
        p = [Fraction(0)] + p
        for i in range(len(p) - 1):
            p[i] += c * p[i + 1]
        p = [x / (k + 1) for x in p]
    return p


def _combine(terms) -> list:
    out: list = []
    for coef, poly in terms:
        for i, c in enumerate(poly):
            while len(out) <= i:
                out.append(Fraction(0))
            out[i] += coef * c
    while out and out[-1] == 0:
        out.pop()
    return out


def hilbert_polynomial(e: list, d: int) -> list:
    """Hilbert-Samuel polynomial sum_i (-1)^i e_i binom(j+d-i, d-i), coefficients in j."""
    return _combine(((-1) ** i * e[i], _binom_poly(d - i, d - i)) for i in range(d + 1))


def hilbert_function_polynomial(e: list, d: int) -> list:
    """Polynomial of degree d-1 agreeing with the Hilbert function for large j."""
    return _combine(((-1) ** i * e[i], _binom_poly(d - 1 - i, d - 1 - i)) for i in range(d))


def eval_poly(p: list, j) -> Fraction:
    return sum((Fraction(c) * j ** i for i, c in enumerate(p)), Fraction(0))


def format_j_polynomial(p: list, var="j") -> str:
    if not p:
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = Fraction(p[i])
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        a = abs(c)
        body = str(a) if not mono else (mono if a == 1 else f"{a}*{mono}")
        parts.append(("-" if c < 0 else "+", body))
    first = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    return first + "".join(f" {s} {b}" for s, b in parts[1:])


# --- counting -------------------------------------------------------------------------------

def _monomials_of_degree(n: int, k: int):
    if n == 1:
        yield (k,)
        return
    for a in range(k, -1, -1):
        for rest in _monomials_of_degree(n - 1, k - a):
            yield (a,) + rest


def count_standard_monomials(leading: list, n: int, degree: int) -> int:
    """Number of monomials of exactly ``degree`` outside the monomial ideal."""
    return sum(1 for m in _monomials_of_degree(n, degree)
               if not any(mono_divides(g, m) for g in leading))


def hilbert_samuel(I: IdealBasis, j: int) -> int:
    """length of R/m^(j+1), counted on the leading ideal of the tangent cone."""
    leading = _canon(local_leading_ideal(I))
    n = I.ring.ngens
    return sum(count_standard_monomials(leading, n, i) for i in range(j + 1))


def artinian_length(I: IdealBasis) -> int:
    """Length of the local quotient by counting standard monomials."""
    leading = _canon(local_leading_ideal(I))
    n = I.ring.ngens
    if any(not any(m) for m in leading):
        return 0
    pure = {i for m in leading for i in range(n) if m[i] and sum(m) == m[i]}
    if len(pure) < n:
        raise PreconditionError("ideal is not zero-dimensional at the origin")
    count, deg = 0, 0
    while True:
        c = count_standard_monomials(leading, n, deg)
        if c == 0:
            return count
        count += c
        deg += 1


def embedding_codim(hd: HilbertData) -> int:
    """delta = HF(1) - d."""
    return hd.hf(1) - hd.d
