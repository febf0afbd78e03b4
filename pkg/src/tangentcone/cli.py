"""Command-line front end.

Input files look like::

    ring Q [x,y,z];
    ideal = x*(x + y^2), x*z;

Exit status: 0 success, 1 a checked property failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .basis import IdealBasis
from .errors import CannotCertify, CertificateFailure, ParseError, PreconditionError, RingMismatchError
from .ring import DEGREVLEX, NEGDEGREVLEX, QQ, Field, MonomialOrder, Ring

COMMANDS = ("gb", "std-basis", "tangent-cone", "homogenize", "hilbert", "min-primes",
            "gamma", "connectedness", "sdim", "verify-paper")


class InputError(ValueError):
    pass


# --- input ----------------------------------------------------------------------------------

_RING_RE = re.compile(r"^\s*ring\s+(\S+)\s*\[([^\]]*)\]\s*;?\s*$")
_IDEAL_RE = re.compile(r"^\s*ideal\s*=\s*(.*?)\s*;?\s*$", re.S)


def _split_generators(text: str) -> list:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


def parse_input(text: str, field: Field | None = None, order: MonomialOrder | None = None):
    """Parse a ring/ideal document into ``(ring, IdealBasis)``."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    body = " ".join(ln for ln in lines if ln)
    statements = [s.strip() for s in body.split(";") if s.strip()]
    ring = None
    gens_text = None
    for st in statements:
        m = _RING_RE.match(st)
        if m:
            field_tok, names = m.groups()
            try:
                fld = Field.from_token(field_tok)
            except ValueError as exc:
                raise InputError(str(exc)) from None
            names = [v.strip() for v in names.split(",") if v.strip()]
            try:
                ring = Ring(tuple(names), field or fld, order or DEGREVLEX)
            except ValueError as exc:
                raise InputError(str(exc)) from None
            continue
        m = _IDEAL_RE.match(st)
        if m:
            gens_text = m.group(1)
            continue
        raise InputError(f"unrecognized statement: {st!r}")
    if ring is None:
        raise InputError("missing ring declaration")
    if gens_text is None:
        gens_text = ""
    gens = [ring.parse(g) for g in _split_generators(gens_text)]
    return ring, IdealBasis(ring, gens)


def inline_ideal(text: str, names: str | None, field: Field, order: MonomialOrder):
    gens = _split_generators(text)
    if names:
        vars_ = [v.strip() for v in names.split(",") if v.strip()]
    else:
        vars_ = []
        for g in gens:
            for ident in re.findall(r"[A-Za-z_][A-Za-z0-9_]*", g):
                if ident not in vars_:
                    vars_.append(ident)
        if not vars_:
            vars_ = ["x"]
    ring = Ring(tuple(vars_), field, order)
    return ring, IdealBasis(ring, [ring.parse(g) for g in gens])


# --- output ---------------------------------------------------------------------------------

def jsonable(obj):
    """Integers and rationals become decimal strings; -inf becomes '-inf'."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, (int, Fraction)):
        return str(obj)
    if isinstance(obj, float):
        return "-inf" if obj == float("-inf") else repr(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return str(obj)


def render_text(doc: dict) -> str:
    out = []

    def walk(prefix, v):
        if isinstance(v, dict):
            if not v:
                out.append(f"{prefix}: {{}}")
            for k in sorted(v):
                walk(f"{prefix}.{k}" if prefix else k, v[k])
        elif isinstance(v, list) and v and any(isinstance(x, (dict, list)) for x in v):
            for i, x in enumerate(v):
                walk(f"{prefix}[{i}]", x)
        elif isinstance(v, list):
            out.append(f"{prefix}: " + ", ".join(str(x) for x in v))
        else:
            out.append(f"{prefix}: {v}")

    walk("", doc)
    return "\n".join(out) + "\n"


# --- commands -------------------------------------------------------------------------------

def _gens(B) -> list:
    return [str(g) for g in B]


def _primes(I):
    from .spectrum import min_primes
    return min_primes(I)


def cmd_gb(I, args, doc):
    order = args.order or DEGREVLEX
    if not order.is_global:
        raise InputError("gb needs a global order; use std-basis for local orders")
    gb = I.groebner(order)
    doc["results"] = {"order": str(order), "generators": _gens(gb)}
    return 0


def cmd_std_basis(I, args, doc):
    order = args.order or NEGDEGREVLEX
    if order.is_global:
        gb = I.groebner(order)
        doc["results"] = {"order": str(order), "generators": _gens(gb)}
        return 0
    sb = I.standard(order)
    from .ring import format_monomial
    doc["results"] = {"order": str(order), "generators": _gens(sb),
                      "leading_monomials": [format_monomial(sb.ring.names, g.lm) or "1" for g in sb]}
    return 0


def cmd_tangent_cone(I, args, doc):
    from .deform import tangent_cone
    tc = tangent_cone(I)
    doc["results"] = {"generators": _gens(tc)}
    if args.n is not None:
        from .basis import ideal_equal
        from .verify import expected_tangent_cone
        ok = ideal_equal(tc, expected_tangent_cone(args.n, tc.ring))
        doc["verdicts"]["matches_expected"] = ok
        return 0 if ok else 1
    return 0


def cmd_homogenize(I, args, doc):
    from .deform import homogenized_ideal
    H = homogenized_ideal(I, args.truncation, strict=False)
    d = H.as_dict()
    doc["certificates"] = d.pop("certificates")
    doc["results"] = d
    doc["verdicts"]["certified"] = H.ok
    return 0 if H.ok else 1


def cmd_hilbert(I, args, doc):
    from .hilbert import embedding_codim, hilbert_series, local_hilbert_series
    hd = hilbert_series(I) if I.is_homogeneous() else local_hilbert_series(I)
    res = hd.as_dict()
    res["delta"] = str(embedding_codim(hd))
    res["route"] = "homogeneous" if I.is_homogeneous() else "tangent cone"
    doc["results"] = res
    return 0


def cmd_min_primes(I, args, doc):
    primes = _primes(I)
    doc["results"] = {"primes": [p.as_dict() for p in primes]}
    return 0


def cmd_gamma(I, args, doc):
    from .spectrum import gamma_graph
    primes = _primes(I)
    d = max((p.dim for p in primes), default=float("-inf"))
    g = gamma_graph(primes, d, args.s)
    doc["results"] = g.as_dict()
    doc["verdicts"]["connected"] = g.is_connected()
    return 0


def cmd_connectedness(I, args, doc):
    from .spectrum import connectedness
    rep = connectedness(I, args.s)
    doc["results"] = {"d": rep.d, "s": rep.s, "graph": rep.graph.as_dict()}
    doc["verdicts"] = {"connected": rep.graph_verdict,
                       "partition_check": rep.partition_verdict,
                       "agree": rep.agree}
    doc["certificates"]["analytic_irreducibility"] = "not checked"
    return 0 if rep.agree else 1


def cmd_sdim(I, args, doc):
    from .spectrum import a_sdim, local_dimension, sdim
    primes = _primes(I)
    res = {"sdim": sdim(I, primes), "dim": local_dimension(I)}
    if I.is_monomial():
        res["a_sdim"] = a_sdim(I)
    doc["results"] = res
    return 0


def cmd_verify_paper(I, args, doc):
    from .verify import StageFailure, counterexample_report, verify_example
    n = args.n if args.n is not None else 1
    try:
        rep = verify_example(n)
    except StageFailure as exc:
        doc["verdicts"]["failed_stage"] = exc.stage
        doc["results"] = {"error": str(exc)}
        return 1
    doc["results"] = {"example": rep.as_dict(), "counterexample": counterexample_report()}
    doc["verdicts"] = {k: v.holds for k, v in rep.inequality_verdicts.items()}
    return 0


HANDLERS = {
    "gb": cmd_gb, "std-basis": cmd_std_basis, "tangent-cone": cmd_tangent_cone,
    "homogenize": cmd_homogenize, "hilbert": cmd_hilbert, "min-primes": cmd_min_primes,
    "gamma": cmd_gamma, "connectedness": cmd_connectedness, "sdim": cmd_sdim,
    "verify-paper": cmd_verify_paper,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tangentcone", description="Tangent cones, Hilbert series and connectedness.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("ideal", nargs="?", help="inline generators, comma separated")
    p.add_argument("--input", help="ring/ideal file")
    p.add_argument("--vars", help="variable names for an inline ideal, comma separated")
    p.add_argument("--field", default=None, help="Q or Fp:<p>")
    p.add_argument("--order", default=None, help="degrevlex, lex, negdegrevlex (dp, lp, ds)")
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--n", "--n-family", dest="n", type=int, default=None)
    p.add_argument("--truncation", type=int, default=None)
    p.add_argument("--json", action="store_true")
    return p


def _load(args):
    field = Field.from_token(args.field) if args.field else None
    if args.input:
        with open(args.input, encoding="utf-8") as fh:
            return parse_input(fh.read(), field, None)
    if args.ideal is not None:
        return inline_ideal(args.ideal, args.vars, field or QQ, DEGREVLEX)
    if args.n is not None:
        from .verify import build_example, example_ring
        ring = example_ring(field or QQ)
        return ring, build_example(args.n, ring)
    raise InputError("no ideal given: use --input, an inline ideal or --n")


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    doc = {"command": args.command, "inputs": {}, "results": {}, "certificates": {}, "verdicts": {}}
    status = 0
    try:
        if args.order:
            args.order = MonomialOrder.from_name(args.order)
        if args.s is not None and args.s < 0:
            raise InputError("--s must be non-negative")
        if args.n is not None and args.n < 1:
            raise InputError("--n must be at least 1")
        if args.command in ("gamma", "connectedness") and args.s is None:
            raise InputError(f"{args.command} needs --s")
        if args.command == "verify-paper":
            ring, I = None, None
        else:
            ring, I = _load(args)
            doc["inputs"] = {"ring": list(ring.names), "field": str(ring.field),
                             "ideal": _gens(I)}
        for key in ("s", "n", "truncation"):
            if getattr(args, key) is not None:
                doc["inputs"][key] = getattr(args, key)
        if args.order:
            doc["inputs"]["order"] = str(args.order)
        status = HANDLERS[args.command](I, args, doc)
    except CannotCertify as exc:
        doc["certificates"]["cannot_certify"] = str(exc)
        status = 0
    except CertificateFailure as exc:
        doc["certificates"]["failure"] = str(exc)
        status = 1
    except (InputError, ParseError, PreconditionError, RingMismatchError, ValueError, OSError) as exc:
        doc["error"] = f"{type(exc).__name__}: {exc}"
        status = 2
    doc = jsonable(doc)
    if args.json:
        out.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    else:
        out.write(render_text(doc))
    return status


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
