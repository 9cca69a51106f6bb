"""Decorated packed words and the decomposition of length realizations.

A decorated word assigns each position a positive value and a
generator.  Packing compresses the values to 1..k keeping their
relative order.  M_u is the sum of all decorated words packing to u;
over a truncated length alphabet it becomes a concrete polynomial by
letting the k distinct values range over increasing sequences of
levels.  Length realizations of basis elements decompose as sums of
M polynomials, which is what connects the Hopf algebra of forests to
decorated quasi-symmetric functions.
"""

from __future__ import annotations

import itertools

from .core import Forest, Signature, node_table
from .alphabets import LengthAlphabet, WordPoly
from .hopf import LinComb

# A decorated word is a tuple of (value, gen) pairs with values >= 1.
DecoratedWord = tuple[tuple[int, int], ...]


def pack(u: DecoratedWord) -> DecoratedWord:
    """Compress the values of u onto 1..k preserving order and ties."""
    values = sorted({v for v, _ in u})
    rank = {v: r for r, v in enumerate(values, 1)}
    return tuple((rank[v], g) for v, g in u)


def is_packed(u: DecoratedWord) -> bool:
    return pack(u) == u


def word_of_levels(alpha: LengthAlphabet, w: tuple[int, ...]) -> DecoratedWord:
    """Transcribe a length-alphabet word into a decorated word, shifting
    levels up by one so values start at 1."""
    return tuple((alpha.payload(a)[1] + 1, alpha.payload(a)[0]) for a in w)


def monomial_of(alpha: LengthAlphabet, u: DecoratedWord) -> tuple[int, ...]:
    """Inverse transcription; values must fit below the truncation."""
    return tuple(alpha.id_of((g, v - 1)) for v, g in u)


def m_polynomial(sig: Signature, u: DecoratedWord, max_len: int) -> WordPoly:
    """M_u over the length alphabet truncated at max_len: sum of all
    words whose decorated transcription packs to u."""
    if not is_packed(u):
        raise ValueError("M polynomials are indexed by packed words")
    alpha = LengthAlphabet(sig, max_len)
    k = max((v for v, _ in u), default=0)
    out = WordPoly()
    for levels in itertools.combinations(range(max_len + 1), k):
        w = tuple(alpha.id_of((g, levels[v - 1])) for v, g in u)
        out.add_inplace(w, 1)
    return out


def decorated_word_str(sig: Signature, u: DecoratedWord) -> str:
    return ".".join(f"{v}^{sig.name(g)}" for v, g in u) if u else "1"


# ---------------------------------------------------------------------------
# Decomposition of length realizations
# ---------------------------------------------------------------------------

def wqsym_decompose(f: Forest) -> LinComb:
    """Write the length realization of E_f as a sum of M_u.

    The packed words u are exactly the order types of level assignments
    to the nodes of f that respect its edges (parent level strictly
    below child level), decorated by the node generators.  Coefficients
    are all 1.
    """
    tbl = node_table(f)
    n = len(tbl.dec)
    out = LinComb()
    if n == 0:
        out.add_inplace((), 1)
        return out
    for kmax in range(1, n + 1):
        for values in _surjective_assignments(tbl, n, kmax):
            u = tuple((values[i], tbl.dec[i]) for i in range(n))
            out.add_inplace(u, 1)
    return out


def _surjective_assignments(tbl, n: int, kmax: int):
    """Assignments of values 1..kmax to nodes, using every value, with
    each node's value strictly above its parent's."""
    values = [0] * n
    full = (1 << kmax) - 1

    def fill(i: int, used: int):
        if i == n:
            if used == full:
                yield tuple(values)
            return
        # not enough positions left to cover the missing values
        if kmax - bin(used).count("1") > n - i:
            return
        pj = tbl.parent[i]
        lo = 1 if pj is None else values[pj[0] - 1] + 1
        for v in range(lo, kmax + 1):
            values[i] = v
            yield from fill(i + 1, used | (1 << (v - 1)))

    yield from fill(0, 0)


def decompose_check(sig: Signature, f: Forest, max_len: int) -> bool:
    """realize over the truncated length alphabet equals the sum of the
    matching M polynomials."""
    from .alphabets import realize_basis

    lhs = realize_basis(f, LengthAlphabet(sig, max_len))
    rhs = WordPoly()
    for u, c in wqsym_decompose(f).items():
        for w, m in m_polynomial(sig, u, max_len).items():
            rhs.add_inplace(w, c * m)
    return lhs == rhs
