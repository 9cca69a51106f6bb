"""Command line front end.

Verbs map one-to-one onto library operations; output is deterministic
for fixed inputs.  ``--format json`` emits canonical JSON (sorted keys,
fixed separators) so that loading and re-dumping a result is the
identity on bytes.  The default format is text, or the value of the
OPERADIC_FORMAT environment variable.

Exit status: 0 on success, 1 on a domain error (bad term, bad phrase,
failed precondition), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import alphabets as ab
from . import checks, core, hopf, nck, quotients, wqsym
from .core import TermSyntaxError


class DomainError(Exception):
    pass


def _signature(args) -> core.Signature:
    if getattr(args, "profile", None):
        try:
            counts = tuple(int(x) for x in args.profile.split(","))
        except ValueError:
            raise DomainError(f"bad profile {args.profile!r}") from None
        return core.Signature.from_profile(counts)
    if getattr(args, "sig", None):
        try:
            with open(args.sig) as fh:
                return core.Signature.from_text(fh.read())
        except OSError as exc:
            raise DomainError(f"cannot read signature file: {exc}") from None
    raise DomainError("a signature is required (--sig FILE or --profile c0,c1,...)")


def _parse_phrase(sig: core.Signature, kind: str, text: str):
    """Phrase syntax: entries joined by ';'.  An entry is a comma list
    of generator names (multiset or infix word), or an integer degree
    for the associative case."""
    text = text.strip()
    if not text:
        return ()
    entries = []
    for raw in text.split(";"):
        raw = raw.strip().strip("{}")
        if kind == "as":
            try:
                entries.append(int(raw))
            except ValueError:
                raise DomainError(f"bad degree entry {raw!r}") from None
            continue
        names = [x.strip() for x in raw.split(",") if x.strip()]
        if not names:
            raise DomainError("empty phrase entry")
        gens = tuple(sig.index(n) for n in names)
        entries.append(tuple(sorted(gens)) if kind == "mas" else gens)
    return tuple(entries)


def _phrase_entry_str(sig: core.Signature, kind: str, entry) -> str:
    if kind == "as" or isinstance(entry, int):
        return str(entry)
    return "{" + ",".join(sig.name(g) for g in entry) + "}"


def _phrase_str(sig, kind, phrase) -> str:
    if not phrase:
        return "()"
    return ";".join(_phrase_entry_str(sig, kind, e) for e in phrase)


# ---------------------------------------------------------------------------
# Output helpers
# ---------------------------------------------------------------------------

def _emit(args, text_val: str, json_obj) -> None:
    if args.format == "json":
        print(json.dumps(json_obj, sort_keys=True, separators=(",", ":")))
    else:
        print(text_val)


def _lincomb_out(args, x, key_str):
    rows = sorted(((key_str(k), c) for k, c in x.items()))
    text = " + ".join(f"{c}*E[{k}]" for k, c in rows) if rows else "0"
    _emit(args, text, {"type": "lincomb",
                       "terms": [{"coeff": c, "key": k} for k, c in rows]})


def _tensor_out(args, x, key_str):
    rows = sorted(((key_str(a), key_str(b), c) for (a, b), c in x.items()))
    text = (
        " + ".join(f"{c}*E[{a}] (x) E[{b}]" for a, b, c in rows)
        if rows
        else "0"
    )
    _emit(
        args,
        text,
        {"type": "tensor",
         "terms": [{"coeff": c, "left": a, "right": b} for a, b, c in rows]},
    )


def _poly_out(args, alpha, p: ab.WordPoly):
    rows = sorted(
        ((ab.word_str(alpha, w), c) for w, c in p.items())
    )
    text = " + ".join(f"{c}*{w}" for w, c in rows) if rows else "0"
    _emit(args, text, {"type": "polynomial",
                       "terms": [{"coeff": c, "word": w} for w, c in rows]})


def _alphabet_for(sig, args, forest=None):
    lmax = args.L
    if lmax is None:
        d = core.forest_degree(forest) if forest is not None else 0
        lmax = d + 2
    if args.alphabet == "pos":
        jmax = args.J if args.J is not None else sig.max_arity
        return ab.PositionAlphabet(sig, lmax, jmax)
    return ab.LengthAlphabet(sig, lmax)


# ---------------------------------------------------------------------------
# Verb handlers
# ---------------------------------------------------------------------------

def _cmd_stats(args):
    sig = _signature(args)
    f = core.parse_forest(sig, args.input)
    d, a = core.forest_degree(f), core.forest_arity(f)
    _emit(args, f"degree={d} arity={a}",
          {"type": "stats", "degree": d, "arity": a})


def _cmd_product(args):
    sig = _signature(args)
    x = hopf.LinComb.basis(core.parse_forest(sig, args.left))
    y = hopf.LinComb.basis(core.parse_forest(sig, args.right))
    _lincomb_out(args, hopf.product(x, y), lambda k: core.forest_str(sig, k))


def _cmd_coproduct(args):
    sig = _signature(args)
    f = core.parse_forest(sig, args.input)
    _tensor_out(args, hopf.coproduct_basis(f), lambda k: core.forest_str(sig, k))


def _cmd_antipode(args):
    sig = _signature(args)
    f = core.parse_forest(sig, args.input)
    _lincomb_out(args, hopf.antipode_basis(f), lambda k: core.forest_str(sig, k))


def _cmd_hilbert(args):
    sig = _signature(args)
    dims = hopf.hilbert_dims(sig, args.n)
    _emit(args, " ".join(str(d) for d in dims),
          {"type": "dimensions", "values": dims})


def _cmd_classify(args):
    sig = _signature(args)
    comm, cocomm = hopf.classify_profile(sig)
    _emit(
        args,
        f"commutative={'yes' if comm else 'no'} "
        f"cocommutative={'yes' if cocomm else 'no'}",
        {"type": "classification", "commutative": comm, "cocommutative": cocomm},
    )


def _cmd_realize(args):
    sig = _signature(args)
    f = core.parse_forest(sig, args.input)
    alpha = _alphabet_for(sig, args, f)
    _poly_out(args, alpha, ab.realize_basis(f, alpha))


def _cmd_theta_check(args):
    sig = _signature(args)
    f = core.parse_forest(sig, args.input)
    a1 = ab.LengthAlphabet(sig, args.L1)
    a2 = ab.LengthAlphabet(sig, args.L2)
    s = ab.disjoint_sum(a1, a2)
    lhs = ab.theta_split(ab.realize_basis(f, s), s)
    rhs = hopf.TensorComb()
    for (g1, g2), c in hopf.coproduct_basis(f).items():
        for w1, c1 in ab.realize_basis(g1, a1).items():
            for w2, c2 in ab.realize_basis(g2, a2).items():
                rhs.add_inplace((w1, w2), c * c1 * c2)
    ok = lhs == rhs
    _emit(args, "ok" if ok else "mismatch", {"type": "theta-check", "ok": ok})
    if not ok:
        raise DomainError("doubling identity failed")


def _cmd_pos(args):
    sig = _signature(args)
    f = core.parse_forest(sig, args.input)
    lmax = args.L if args.L is not None else core.forest_degree(f) + 2
    jmax = args.J if args.J is not None else sig.max_arity
    alpha = ab.PositionAlphabet(sig, lmax, jmax)
    w = ab.pos_word(f, alpha)
    _emit(
        args,
        f"word={ab.word_str(alpha, w)} weight={ab.word_weight(alpha, w)}",
        {"type": "pos", "word": ab.word_str(alpha, w),
         "weight": ab.word_weight(alpha, w)},
    )


def _cmd_decompose_wqsym(args):
    sig = _signature(args)
    f = core.parse_forest(sig, args.input)
    x = wqsym.wqsym_decompose(f)
    rows = sorted(
        (wqsym.decorated_word_str(sig, u), c) for u, c in x.items()
    )
    text = " + ".join(f"{c}*M[{u}]" for u, c in rows) if rows else "0"
    _emit(args, text, {"type": "wqsym",
                       "terms": [{"coeff": c, "index": u} for u, c in rows]})


def _cmd_trim(args):
    sig = _signature(args)
    f = core.parse_forest(sig, args.input)
    _emit(args, nck.trimmed_str(sig, nck.trim(f)) or "()",
          {"type": "trimmed", "forest": nck.trimmed_str(sig, nck.trim(f))})


def _cmd_charge(args):
    sig = _signature(args)
    t = nck.parse_trimmed(sig, args.input)
    ch = nck.charge(sig, t)
    _emit(args, str(ch), {"type": "charge", "value": ch})


def _cmd_untrim(args):
    sig = _signature(args)
    t = nck.parse_trimmed(sig, args.input)
    rows = sorted(core.forest_str(sig, f) for f in nck.untrim(sig, t))
    _emit(args, "\n".join(rows) if rows else "()",
          {"type": "forests", "values": rows})


def _cmd_nck_coproduct(args):
    sig = _signature(args)
    t = nck.parse_trimmed(sig, args.input)
    _tensor_out(
        args,
        nck.nck_coproduct_basis(t),
        lambda k: nck.trimmed_str(sig, k),
    )


def _cmd_length_poly(args):
    sig = _signature(args)
    t = nck.parse_trimmed(sig, args.input)
    lmax = args.L if args.L is not None else nck.trimmed_degree(t) + 2
    alpha = ab.LengthAlphabet(sig, lmax)
    _poly_out(args, alpha, nck.length_polynomial(sig, t, lmax))


def _cmd_phi(args):
    sig = _signature(args)
    phrase = _parse_phrase(sig, args.kind, args.input)
    x = quotients.phi_expand(sig, args.kind, phrase)
    _lincomb_out(args, x, lambda k: core.forest_str(sig, k))


def _cmd_mas_coproduct(args):
    sig = _signature(args)
    phrase = _parse_phrase(sig, "mas", args.input)
    _tensor_out(
        args,
        quotients.mas_coproduct(sig, phrase),
        lambda k: _phrase_str(sig, "mas", k),
    )


def _cmd_fdb_coproduct(args):
    if args.s <= 1:
        try:
            phrase = tuple(
                int(x) for x in args.input.split(";") if x.strip()
            )
        except ValueError:
            raise DomainError(f"bad degree phrase {args.input!r}") from None
        key_str = lambda k: ";".join(str(e) for e in k) or "()"
    else:
        try:
            phrase = tuple(
                tuple(int(x) for x in raw.split(","))
                for raw in args.input.split(";")
                if raw.strip()
            )
        except ValueError:
            raise DomainError(f"bad vector phrase {args.input!r}") from None
        key_str = lambda k: (
            ";".join("".join(str(n) for n in e) for e in k) or "()"
        )
    try:
        delta = quotients.fdb_coproduct(args.r, args.s, phrase)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    _tensor_out(args, delta, key_str)


def _cmd_phr_coproduct(args):
    sig = _signature(args)
    phrase = _parse_phrase(sig, "int", args.input)
    _tensor_out(
        args,
        quotients.phr_coproduct(phrase),
        lambda k: _phrase_str(sig, "int", k),
    )


def _cmd_self_test(args):
    failed = []
    for name, fn in checks.CRITERIA:
        try:
            fn()
        except AssertionError as exc:
            failed.append(name)
            print(f"FAIL {name}: {exc}")
        else:
            print(f"PASS {name}")
    if failed:
        raise DomainError(f"{len(failed)} criteria failed")


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="operadic",
        description="Hopf algebras of operadic forests and their realizations.",
    )
    sub = top.add_subparsers(dest="verb", required=True)

    def add(name, handler, inputs=1, sig=True, extra=None):
        p = sub.add_parser(name)
        if sig:
            p.add_argument("--sig", help="signature file (name arity per line)")
            p.add_argument("--profile", help="generator counts c0,c1,...")
        p.add_argument(
            "--format",
            choices=("text", "json"),
            default=os.environ.get("OPERADIC_FORMAT", "text"),
        )
        if inputs == 1:
            p.add_argument("input")
        elif inputs == 2:
            p.add_argument("left")
            p.add_argument("right")
        if extra:
            extra(p)
        p.set_defaults(handler=handler)
        return p

    def trunc(p):
        p.add_argument("--L", type=int, default=None,
                       help="label length / level bound")
        p.add_argument("--J", type=int, default=None,
                       help="child index bound for position alphabets")

    add("stats", _cmd_stats)
    add("product", _cmd_product, inputs=2)
    add("coproduct", _cmd_coproduct)
    add("antipode", _cmd_antipode)
    add("hilbert", _cmd_hilbert, inputs=0,
        extra=lambda p: p.add_argument("--n", type=int, required=True))
    add("classify", _cmd_classify, inputs=0)
    add("realize", _cmd_realize, extra=lambda p: (
        p.add_argument("--alphabet", choices=("pos", "len"), default="len"),
        trunc(p),
    ))
    add("theta-check", _cmd_theta_check, extra=lambda p: (
        p.add_argument("--L1", type=int, default=2),
        p.add_argument("--L2", type=int, default=3),
    ))
    add("pos", _cmd_pos, extra=trunc)
    add("decompose-wqsym", _cmd_decompose_wqsym)
    add("trim", _cmd_trim)
    add("charge", _cmd_charge)
    add("untrim", _cmd_untrim)
    add("nck-coproduct", _cmd_nck_coproduct)
    add("length-poly", _cmd_length_poly, extra=trunc)
    add("phi", _cmd_phi, extra=lambda p: p.add_argument(
        "--kind", choices=quotients.KINDS, required=True))
    add("mas-coproduct", _cmd_mas_coproduct)
    add("fdb-coproduct", _cmd_fdb_coproduct, sig=False, extra=lambda p: (
        p.add_argument("--r", type=int, required=True),
        p.add_argument("--s", type=int, required=True),
    ))
    add("phr-coproduct", _cmd_phr_coproduct)
    add("self-test", _cmd_self_test, inputs=0, sig=False)
    return top


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        args.handler(args)
    except (DomainError, TermSyntaxError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
