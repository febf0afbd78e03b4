"""Exact scalars, monomial orders and sparse multivariate polynomials.

Monomials are plain tuples of natural-number exponents, one per ring
variable.  A :class:`Polynomial` is an immutable map from exponent tuples
to nonzero field elements; its terms are reported in descending order
under the monomial order carried by its :class:`Ring`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import ParseError, RingMismatchError, UnknownVariableError

MAX_EXPONENT = 2**31 - 1

DEFAULT_PRIME = 32003


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    i = 3
    while i * i <= p:
        if p % i == 0:
            return False
        i += 2
    return True


class Field:
    """The rationals (``p == 0``) or the prime field with ``p`` elements.

    Rational elements are :class:`fractions.Fraction`; prime-field elements
    are ints in ``[0, p)``.
    """

    __slots__ = ("p",)

    def __init__(self, p: int = 0):
        if p and not _is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        self.p = p

    def __call__(self, value):
        p = self.p
        if p:
            if isinstance(value, Fraction):
                if value.denominator % p == 0:
                    raise ZeroDivisionError(f"{value} is undefined modulo {p}")
                return value.numerator * pow(value.denominator, -1, p) % p
            return int(value) % p
        return Fraction(value)

    @property
    def zero(self):
        return 0 if self.p else Fraction(0)

    @property
    def one(self):
        return 1 if self.p else Fraction(1)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.p:
            return pow(a, -1, self.p)
        return 1 / a

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __str__(self):
        return f"Fp:{self.p}" if self.p else "Q"

    def __repr__(self):
        return f"Field({self.p})"

    @classmethod
    def from_token(cls, token: str) -> "Field":
        """Parse ``Q`` or ``Fp:<p>`` (``Fp`` alone means p = 32003)."""
        token = token.strip()
        if token in ("Q", "QQ"):
            return QQ
        m = re.fullmatch(r"Fp(?::(\d+))?", token)
        if not m:
            raise ParseError(f"unknown coefficient field {token!r}")
        return cls(int(m.group(1)) if m.group(1) else DEFAULT_PRIME)


QQ = Field(0)


def GF(p: int = DEFAULT_PRIME) -> Field:
    return Field(p)


# --- monomial orders ---------------------------------------------------------

def _revlex_tail(e):
    return tuple(-x for x in reversed(e))


class MonomialOrder:
    """A total, multiplicative order on exponent vectors.

    ``kind`` is one of ``degrevlex``, ``lex``, ``negdegrevlex`` (local) or
    ``weighted``; the weighted kind compares the weight ``w . e`` first and
    breaks ties with degrevlex.
    """

    KINDS = ("degrevlex", "lex", "negdegrevlex", "weighted")

    __slots__ = ("kind", "weights", "key")

    def __init__(self, kind: str, weights: Iterable[int] | None = None):
        if kind not in self.KINDS:
            raise ValueError(f"unknown monomial order {kind!r}")
        self.kind = kind
        self.weights = tuple(weights) if weights is not None else None
        if kind == "weighted" and self.weights is None:
            raise ValueError("weighted order needs a weight vector")
        if kind == "degrevlex":
            self.key = lambda e: (sum(e), _revlex_tail(e))
        elif kind == "lex":
            self.key = tuple
        elif kind == "negdegrevlex":
            self.key = lambda e: (-sum(e), _revlex_tail(e))
        else:
            w = self.weights
            self.key = lambda e: (sum(a * b for a, b in zip(w, e)), sum(e), _revlex_tail(e))

    @property
    def is_global(self) -> bool:
        if self.kind == "weighted":
            return all(w >= 0 for w in self.weights)
        return self.kind != "negdegrevlex"

    @property
    def is_local(self) -> bool:
        return self.kind == "negdegrevlex"

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder) and other.kind == self.kind
                and other.weights == self.weights)

    def __hash__(self):
        return hash((self.kind, self.weights))

    def __repr__(self):
        if self.kind == "weighted":
            return f"MonomialOrder('weighted', {list(self.weights)})"
        return f"MonomialOrder({self.kind!r})"

    def __str__(self):
        return self.kind if self.kind != "weighted" else f"weighted{list(self.weights)}"

    @classmethod
    def from_name(cls, name: str) -> "MonomialOrder":
        aliases = {"dp": "degrevlex", "lp": "lex", "ds": "negdegrevlex", "local": "negdegrevlex"}
        return cls(aliases.get(name, name))


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")
NEGDEGREVLEX = MonomialOrder("negdegrevlex")


def elimination_order(nvars: int, eliminate: Iterable[int]) -> MonomialOrder:
    """Weighted order that makes every monomial in ``eliminate`` dominate."""
    elim = set(eliminate)
    return MonomialOrder("weighted", [1 if i in elim else 0 for i in range(nvars)])


def compare(order: MonomialOrder, a, b) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    if len(a) != len(b):
        raise RingMismatchError("monomials of different lengths")
    ka, kb = order.key(tuple(a)), order.key(tuple(b))
    return (ka > kb) - (ka < kb)


# --- monomial helpers ---------------------------------------------------------

def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a, b):
    """True if the monomial ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_gcd(a, b):
    return tuple(x if x < y else y for x, y in zip(a, b))


# --- rings ---------------------------------------------------------------------

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class Ring:
    """Polynomial ring over ``field`` with an active monomial order.

    ``t_variable`` optionally marks the index of the auxiliary deformation
    variable of an extended ring.
    """

    names: tuple
    field: Field = QQ
    order: MonomialOrder = DEGREVLEX
    t_variable: int | None = None
    _index: dict = dc_field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        for name in names:
            if not isinstance(name, str) or not _IDENT.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        if self.t_variable is not None and not 0 <= self.t_variable < len(names):
            raise ValueError("t_variable must index an existing variable")
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    @property
    def ngens(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariableError(f"unknown variable {name!r}") from None

    @property
    def gens(self) -> tuple:
        return tuple(self.gen(i) for i in range(self.ngens))

    def gen(self, which) -> "Polynomial":
        i = self.index(which) if isinstance(which, str) else which
        e = [0] * self.ngens
        e[i] = 1
        return Polynomial._raw(self, {tuple(e): self.field.one})

    def __getitem__(self, name: str) -> "Polynomial":
        return self.gen(name)

    @property
    def zero(self) -> "Polynomial":
        return Polynomial._raw(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial._raw(self, {(0,) * self.ngens: c} if c else {})

    def monomial(self, exps, coeff=1) -> "Polynomial":
        return Polynomial(self, {tuple(exps): coeff})

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(text, self)

    def with_order(self, order: MonomialOrder) -> "Ring":
        if order == self.order:
            return self
        return Ring(self.names, self.field, order, self.t_variable)

    def extend(self, names: Iterable[str], *, t: bool = False) -> "Ring":
        """Append new variables; with ``t=True`` the last one is the t variable."""
        names = tuple(names)
        new = self.names + names
        tvar = len(new) - 1 if t else self.t_variable
        return Ring(new, self.field, self.order, tvar)

    def fresh_name(self, base: str) -> str:
        name, k = base, 0
        while name in self._index:
            k += 1
            name = f"{base}{k}"
        return name

    def __str__(self):
        return f"{self.field}[{','.join(self.names)}]/{self.order}"


# --- polynomials -----------------------------------------------------------------

class Polynomial:
    """Immutable sparse polynomial in a :class:`Ring`."""

    __slots__ = ("ring", "_terms", "_sorted", "_hash")

    def __init__(self, ring: Ring, terms: Mapping | None = None):
        n = ring.ngens
        conv = ring.field
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(x) for x in exps)
            if len(exps) != n:
                raise ValueError(f"exponent vector {exps} has wrong length for {n} variables")
            if any(x < 0 for x in exps):
                raise ValueError("exponents must be natural numbers")
            if any(x > MAX_EXPONENT for x in exps):
                raise OverflowError("exponent overflow")
            c = conv(c)
            prev = clean.get(exps)
            if prev is not None:
                c = c + prev
                if ring.field.p:
                    c %= ring.field.p
            if c:
                clean[exps] = c
            else:
                clean.pop(exps, None)
        self.ring = ring
        self._terms = clean
        self._sorted = None
        self._hash = None

    @classmethod
    def _raw(cls, ring: Ring, terms: dict) -> "Polynomial":
        # trusted constructor: terms already canonical
        obj = cls.__new__(cls)
        obj.ring = ring
        obj._terms = terms
        obj._sorted = None
        obj._hash = None
        return obj

    # -- inspection --
    @property
    def terms(self) -> list:
        """List of ``(coefficient, exponents)`` in strictly descending order."""
        if self._sorted is None:
            key = self.ring.order.key
            self._sorted = [(self._terms[m], m) for m in sorted(self._terms, key=key, reverse=True)]
        return self._sorted

    def as_dict(self) -> dict:
        return dict(self._terms)

    def monomials(self):
        return [m for _, m in self.terms]

    def coefficient(self, exps):
        return self._terms.get(tuple(exps), self.ring.field.zero)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def lm(self):
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self.terms[0][1]

    @property
    def lc(self):
        if not self._terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.terms[0][0]

    leading_monomial = lm
    leading_coefficient = lc

    @property
    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def support(self) -> set:
        """Indices of variables that occur in some term."""
        used = set()
        for m in self._terms:
            used.update(i for i, x in enumerate(m) if x)
        return used

    def degree_in(self, var) -> int:
        i = self.ring.index(var) if isinstance(var, str) else var
        return max((m[i] for m in self._terms), default=-1)

    # -- arithmetic --
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"operands in different rings: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.field.p
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = (v + c) % p if p else v + c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.field.p
        if p:
            return Polynomial._raw(self.ring, {m: (p - c) % p for m, c in self._terms.items()})
        return Polynomial._raw(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.field.p
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        if p:
            out = {m: c % p for m, c in out.items() if c % p}
        else:
            out = {m: c for m, c in out.items() if c}
        return Polynomial._raw(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only natural powers are supported")
        result, base = self.ring.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        c = self.ring.field(c)
        if not c:
            return self.ring.zero
        p = self.ring.field.p
        if p:
            return Polynomial._raw(self.ring, {m: v * c % p for m, v in self._terms.items()})
        return Polynomial._raw(self.ring, {m: v * c for m, v in self._terms.items()})

    def mul_term(self, exps, c) -> "Polynomial":
        p = self.ring.field.p
        out = {}
        for m, v in self._terms.items():
            v = v * c % p if p else v * c
            if v:
                out[tuple(a + b for a, b in zip(m, exps))] = v
        return Polynomial._raw(self.ring, out)

    def monic(self) -> "Polynomial":
        if not self._terms:
            return self
        return self.scale(self.ring.field.inv(self.lc))

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.names, frozenset(self._terms.items())))
        return self._hash

    # -- graded structure --
    def homogeneous_components(self) -> dict:
        """Map total degree -> homogeneous component."""
        parts: dict = {}
        for m, c in self._terms.items():
            parts.setdefault(sum(m), {})[m] = c
        return {d: Polynomial._raw(self.ring, t) for d, t in sorted(parts.items())}

    def order(self) -> int:
        return order_of(self)

    def initial_form(self) -> "Polynomial":
        return initial_form(self)

    def diff(self, var) -> "Polynomial":
        return differentiate(self, var)

    # -- ring changes --
    def to_ring(self, ring: Ring) -> "Polynomial":
        """Re-home this polynomial in ``ring``, matching variables by name."""
        if ring == self.ring:
            return self
        if ring.field != self.ring.field:
            raise RingMismatchError("cannot change coefficient field")
        if ring.names == self.ring.names:
            return Polynomial._raw(ring, dict(self._terms))
        pos = []
        for i, name in enumerate(self.ring.names):
            if name not in ring._index:
                if any(m[i] for m in self._terms):
                    raise RingMismatchError(f"variable {name!r} not present in target ring")
                pos.append(None)
            else:
                pos.append(ring._index[name])
        out = {}
        n = ring.ngens
        for m, c in self._terms.items():
            e = [0] * n
            for i, x in enumerate(m):
                if x:
                    e[pos[i]] = x
            out[tuple(e)] = c
        return Polynomial._raw(ring, out)

    def substitute(self, images: Mapping, ring: Ring | None = None) -> "Polynomial":
        """Ring map sending variable ``name`` to ``images[name]``.

        Variables missing from ``images`` map to themselves (re-homed in
        the target ring by name).
        """
        target = ring
        if target is None:
            target = next(iter(images.values())).ring if images else self.ring
        img = []
        for name in self.ring.names:
            if name in images:
                v = images[name]
                img.append(v if isinstance(v, Polynomial) else target.constant(v))
            else:
                img.append(target.gen(name))
        out = target.zero
        cache: dict = {}
        for m, c in self._terms.items():
            term = target.constant(c)
            for i, x in enumerate(m):
                if x:
                    key = (i, x)
                    if key not in cache:
                        cache[key] = img[i] ** x
                    term = term * cache[key]
            out = out + term
        return out

    def evaluate(self, point: Mapping) -> object:
        """Evaluate at a point given as ``{name: scalar}`` (all variables)."""
        f = self.ring.field
        vals = [f(point[name]) for name in self.ring.names]
        total = f.zero
        for m, c in self._terms.items():
            v = c
            for x, e in zip(vals, m):
                if e:
                    v = v * x ** e
            total = total + v
        return f(total)

    # -- printing --
    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


# --- calculus on polynomials ------------------------------------------------------

def order_of(f: Polynomial) -> int:
    """Minimal total degree of a term (the m-adic order of ``f``)."""
    if f.is_zero:
        raise ValueError("order undefined (+inf) for the zero polynomial")
    return min(sum(m) for m in f._terms)


def initial_form(f: Polynomial) -> Polynomial:
    """Lowest-degree homogeneous component of ``f``."""
    o = order_of(f)
    return Polynomial._raw(f.ring, {m: c for m, c in f._terms.items() if sum(m) == o})


def differentiate(f: Polynomial, var) -> Polynomial:
    ring = f.ring
    i = ring.index(var) if isinstance(var, str) else var
    p = ring.field.p
    out = {}
    for m, c in f._terms.items():
        if m[i]:
            v = c * m[i]
            if p:
                v %= p
            if v:
                e = list(m)
                e[i] -= 1
                out[tuple(e)] = v
    return Polynomial._raw(ring, out)


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def scale(c, f: Polynomial) -> Polynomial:
    return f.scale(c)


# --- printing ---------------------------------------------------------------------------

def format_monomial(names, exps) -> str:
    parts = []
    for name, x in zip(names, exps):
        if x == 1:
            parts.append(name)
        elif x:
            parts.append(f"{name}^{x}")
    return "*".join(parts)


def format_polynomial(f: Polynomial) -> str:
    if f.is_zero:
        return "0"
    names = f.ring.names
    out = []
    for k, (c, m) in enumerate(f.terms):
        mono = format_monomial(names, m)
        neg = (not f.ring.field.p) and c < 0
        a = -c if neg else c
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if k == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# --- parsing -----------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        if m.group(1) is not None:
            tokens.append(("num", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("id", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", m.start(3), text)
            tokens.append(("op", ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, tok[2], self.text)

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            raise self.error("empty expression")
        f = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            if tok[0] in ("num", "id") or tok[1] == "(":
                raise self.error("juxtaposition is not allowed; use '*'")
            raise self.error(f"unexpected token {tok[1]!r}")
        return f

    def expr(self) -> Polynomial:
        f = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def term(self) -> Polynomial:
        f = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            f = f * self.unary()
        return f

    def unary(self) -> Polynomial:
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("+", "-"):
            self.take()
            f = self.unary()
            return -f if tok[1] == "-" else f
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "^":
            self.take()
            exp = self.peek()
            if exp[0] != "num":
                raise self.error("exponent must be a natural number literal")
            self.take()
            k = int(exp[1])
            if k > MAX_EXPONENT:
                raise ParseError("exponent overflow", exp[2], self.text)
            return base ** k
        return base

    def atom(self) -> Polynomial:
        tok = self.take()
        kind, val, pos = tok
        if kind == "num":
            value = Fraction(int(val))
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "/":
                self.take()
                den = self.take()
                if den[0] != "num":
                    raise ParseError("rational literal needs an integer denominator", den[2], self.text)
                if int(den[1]) == 0:
                    raise ParseError("zero denominator", den[2], self.text)
                value = Fraction(int(val), int(den[1]))
            return self.ring.constant(value)
        if kind == "id":
            if val not in self.ring._index:
                raise UnknownVariableError(f"unknown variable {val!r}", pos, self.text)
            return self.ring.gen(val)
        if kind == "op" and val == "(":
            f = self.expr()
            close = self.take()
            if close[1] != ")":
                raise ParseError("expected ')'", close[2], self.text)
            return f
        if kind == "end":
            raise ParseError("unexpected end of input", pos, self.text)
        raise ParseError(f"unexpected token {val!r}", pos, self.text)


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    """Parse ``text`` into a canonical polynomial of ``ring``.

    >>> R = Ring(("x", "z", "w"))
    >>> str(parse_polynomial("x^2 - z^3*w", R))
    'x^2 - z^3*w'
    """
    return _Parser(text, ring).parse()


def polynomial_ring(names, field: Field = QQ, order: MonomialOrder = DEGREVLEX):
    """Return ``(ring, gen_1, ..., gen_n)``; ``names`` may be a comma string."""
    if isinstance(names, str):
        names = [s.strip() for s in names.replace(" ", ",").split(",") if s.strip()]
    R = Ring(tuple(names), field, order)
    return (R, *R.gens)
