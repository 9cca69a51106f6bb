"""Quotients of the free operad and their natural Hopf algebras.

Three congruences are covered.  Sending a term to the multiset of its
generators gives the multiset operad; sending it to its infix word of
generators gives the infix operad; sending it to its degree gives the
associative case.  Basis elements of the quotient Hopf algebras are
phrases (words of multisets, words of infix words, compositions), and
the canonical section phi expands a phrase into the sum of all forests
projecting onto it.

Coproducts are computed by closed combinatorial formulas, independent
of phi, so the two routes can be checked against each other.
"""

from __future__ import annotations

import itertools
from collections import Counter
from math import comb

from .core import (
    Forest,
    Signature,
    Term,
    enumerate_terms,
    term_degree,
)
from .hopf import LinComb, TensorComb

KINDS = ("mas", "int", "as")


# ---------------------------------------------------------------------------
# Projections of terms
# ---------------------------------------------------------------------------

def content(t: Term) -> tuple[int, ...]:
    """Multiset of generators of a term, as a sorted tuple of indices."""
    out: list[int] = []

    def walk(u: Term):
        if u.is_leaf:
            return
        out.append(u.gen)
        for c in u.children:
            walk(c)

    walk(t)
    return tuple(sorted(out))


def infix(t: Term) -> tuple[int, ...]:
    """Infix word of generators: each node is emitted after its first
    child subtree (before everything else for nullary or unary layout).

    For a node with children c1..ck the traversal is c1, node, c2, ...,
    ck; a node with no children is emitted alone.
    """
    out: list[int] = []

    def walk(u: Term):
        if u.is_leaf:
            return
        if u.children:
            walk(u.children[0])
        out.append(u.gen)
        for c in u.children[1:]:
            walk(c)

    walk(t)
    return tuple(out)


def project_term(kind: str, t: Term):
    if kind == "mas":
        return content(t)
    if kind == "int":
        return infix(t)
    if kind == "as":
        return term_degree(t)
    raise ValueError(f"unknown quotient kind {kind!r}")


def project_forest(kind: str, f: Forest) -> tuple:
    """Phrase of a reduced forest: entrywise projection of its terms."""
    return tuple(project_term(kind, t) for t in f.terms)


# ---------------------------------------------------------------------------
# Quotient operad structure
# ---------------------------------------------------------------------------

def mas_arity(sig: Signature, m: tuple[int, ...]) -> int:
    """Arity of a multiset: sum of generator arities minus size plus 1."""
    return sum(sig.arity(g) for g in m) - len(m) + 1


def mas_compose(sig: Signature, m: tuple[int, ...], i: int, m2: tuple[int, ...]):
    """Partial composition in the multiset operad is multiset union,
    whatever the slot; the slot index is still range-checked."""
    if not (1 <= i <= mas_arity(sig, m)):
        raise ValueError(f"slot {i} out of range 1..{mas_arity(sig, m)}")
    return tuple(sorted(m + m2))

def int_compose(u: tuple[int, ...], i: int, v: tuple[int, ...]):
    """Partial composition in the infix operad splices v into u between
    positions i-1 and i of its letter word (slots are word gaps)."""
    if not (1 <= i <= len(u) + 1):
        raise ValueError(f"slot {i} out of range 1..{len(u) + 1}")
    return u[: i - 1] + v + u[i - 1 :]


# ---------------------------------------------------------------------------
# The section phi
# ---------------------------------------------------------------------------

def _entry_degree(kind: str, entry) -> int:
    if kind == "as":
        return entry
    return len(entry)


def phi_entry(sig: Signature, kind: str, entry) -> list[Term]:
    """All terms projecting onto one phrase entry."""
    d = _entry_degree(kind, entry)
    return [t for t in enumerate_terms(sig, d) if project_term(kind, t) == entry]


def phi_expand(sig: Signature, kind: str, phrase: tuple) -> LinComb:
    """phi(E_x): the sum of E_f over reduced forests f projecting onto
    the phrase x, entry by entry.  Entries must be nonempty."""
    if any(_entry_degree(kind, e) < 1 for e in phrase):
        raise ValueError("phrase entries must have positive degree")
    pools = [phi_entry(sig, kind, e) for e in phrase]
    if any(not p for p in pools):
        return LinComb()
    out = LinComb()
    for terms in itertools.product(*pools):
        out.add_inplace(Forest(terms), 1)
    return out


def realize_quotient(sig: Signature, kind: str, phrase: tuple, alpha):
    """Realization of a quotient basis element: realize phi(E_x)."""
    from .alphabets import realize

    return realize(phi_expand(sig, kind, phrase), alpha)


# ---------------------------------------------------------------------------
# Closed-form coproducts
# ---------------------------------------------------------------------------

def _multiset_decompositions(items: tuple[int, ...], slots: int):
    """All ways to split a multiset into an ordered tuple of ``slots``
    multisets, each ordered split counted once."""
    types = sorted(Counter(items).items())
    per_type = []
    for val, cnt in types:
        per_type.append([(val, parts) for parts in _weak_comps(cnt, slots)])
    for chosen in itertools.product(*per_type):
        slots_out: list[list[int]] = [[] for _ in range(slots)]
        for val, parts in chosen:
            for s, k in enumerate(parts):
                slots_out[s].extend([val] * k)
        yield tuple(tuple(sorted(s)) for s in slots_out)


def _weak_comps(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _weak_comps(total - first, parts - 1):
            yield (first,) + rest


def _submultisets(items: tuple[int, ...]):
    types = sorted(Counter(items).items())
    for chosen in itertools.product(*(range(c + 1) for _, c in types)):
        sub = []
        for (val, _), k in zip(types, chosen):
            sub.extend([val] * k)
        yield tuple(sub)


def _mas_entry_coproduct(arity_of, entry: tuple[int, ...]) -> TensorComb:
    """One-entry coproduct for a multiset-like operad: pick a submultiset
    for the left leg, distribute the rest over its slots for the right.

    ``arity_of`` maps a multiset to its operadic arity.  Left legs are
    phrases of length <= 1, right legs are the nonempty slot contents in
    slot order.
    """
    out = TensorComb()
    for sub in _submultisets(entry):
        rest = list(entry)
        for g in sub:
            rest.remove(g)
        rest_t = tuple(rest)
        slots = arity_of(sub)
        left = (sub,) if sub else ()
        if slots == 0:
            if not rest_t:
                out.add_inplace((left, ()), 1)
            continue
        for split in _multiset_decompositions(rest_t, slots):
            right = tuple(s for s in split if s)
            out.add_inplace((left, right), 1)
    return out


def _phrase_coproduct(entry_cop, phrase: tuple) -> TensorComb:
    """Multiply one-entry coproducts along a phrase, concatenating legs."""
    out = TensorComb.basis(((), ()))
    for entry in phrase:
        step = entry_cop(entry)
        nxt = TensorComb()
        for (l1, r1), c1 in out.items():
            for (l2, r2), c2 in step.items():
                nxt.add_inplace((l1 + l2, r1 + r2), c1 * c2)
        out = nxt
    return out


def mas_coproduct(sig: Signature, phrase: tuple) -> TensorComb:
    """Coproduct in the multiset quotient Hopf algebra."""
    return _phrase_coproduct(
        lambda e: _mas_entry_coproduct(lambda m: mas_arity(sig, m), e), phrase
    )


def fdb_coproduct(r: int, s: int, phrase: tuple) -> TensorComb:
    """Coproduct for the signature with max(s, 1) generators, all of
    arity r + 1.  Phrase entries are degrees when s <= 1 and length-s
    multiplicity vectors otherwise; legs come back in the same shape.
    """
    if r < 0 or s < 0:
        raise ValueError("negative parameter")
    ngens = max(s, 1)

    def encode(entry) -> tuple[int, ...]:
        if s <= 1:
            if not isinstance(entry, int) or entry < 0:
                raise ValueError(f"entry {entry!r} should be a degree")
            return (0,) * entry
        try:
            vec = tuple(entry)
        except TypeError:
            raise ValueError(f"entry {entry!r} should have {ngens} counts") from None
        if len(vec) != ngens or any(n < 0 for n in vec):
            raise ValueError(f"entry {entry!r} should have {ngens} counts")
        return tuple(g for g, n in enumerate(vec) for _ in range(n))

    def decode(m: tuple[int, ...]):
        if s <= 1:
            return len(m)
        counts = [0] * ngens
        for g in m:
            counts[g] += 1
        return tuple(counts)

    def arity_of(m: tuple[int, ...]) -> int:
        return len(m) * r + 1

    for entry in phrase:
        encode(entry)

    raw = _phrase_coproduct(
        lambda e: _mas_entry_coproduct(arity_of, encode(e)), phrase
    )
    out = TensorComb()
    for (l, rgt), c in raw.items():
        out.add_inplace(
            (tuple(decode(m) for m in l), tuple(decode(m) for m in rgt)), c
        )
    return out


def fdb_entry_coefficient(r: int, dsub: int, dtot: int, legs: int) -> int:
    """Closed-form multiplicity binom(d' r + 1 over ell) of a split of a
    degree d entry into a degree d' left part and ell right parts, all
    splits with the same shape having equal weight when s <= 1."""
    del dtot
    return comb(dsub * r + 1, legs)


def phr_coproduct(phrase: tuple) -> TensorComb:
    """Coproduct for the infix quotient: the left leg of one entry is a
    scattered subword, the right legs are its complementary blocks."""

    def entry_cop(u: tuple[int, ...]) -> TensorComb:
        out = TensorComb()
        n = len(u)
        for k in range(n + 1):
            for picks in itertools.combinations(range(n), k):
                v = tuple(u[i] for i in picks)
                blocks = []
                prev = -1
                for i in picks + (n,):
                    if i - prev > 1:
                        blocks.append(u[prev + 1 : i])
                    prev = i
                left = (v,) if v else ()
                out.add_inplace((left, tuple(blocks)), 1)
        return out

    return _phrase_coproduct(entry_cop, phrase)


# ---------------------------------------------------------------------------
# Congruence checks
# ---------------------------------------------------------------------------

def congruence_check(sig: Signature, kind: str, degree: int) -> bool:
    """Verify on all pairs of equal-projection terms up to the given
    degree that the projection respects partial composition."""
    from .core import partial_compose, term_arity

    for d1 in range(1, degree + 1):
        classes: dict = {}
        for t in enumerate_terms(sig, d1):
            classes.setdefault(project_term(kind, t), []).append(t)
        for d2 in range(1, degree + 1 - d1):
            for proj, ts in classes.items():
                if len(ts) < 2:
                    continue
                base = ts[0]
                for other in ts[1:]:
                    for u in enumerate_terms(sig, d2):
                        for i in range(1, term_arity(base) + 1):
                            if i > term_arity(other):
                                return False
                            a = project_term(kind, partial_compose(base, i, u))
                            b = project_term(kind, partial_compose(other, i, u))
                            if a != b:
                                return False
    return True
