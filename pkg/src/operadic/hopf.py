"""The natural Hopf algebra on reduced forests.

Basis elements E_f are indexed by reduced forests.  The product is
concatenation.  The coproduct splits the node set of a forest into an
ancestor-closed part and a descendant-closed part; an independent second
engine computes the same coproduct through operadic factorizations of
each term and is kept only as a cross-check.
"""

from __future__ import annotations

from typing import Iterator

from .core import (
    EMPTY_FOREST,
    Forest,
    LEAF,
    Signature,
    Term,
    admissible_pairs,
    forest_degree,
    forest_str,
    is_reduced,
    reduce_forest,
    restrict,
    term_counts,
    term_degree,
)


class LinComb:
    """Integer linear combination of hashable basis keys.

    Zero coefficients are dropped eagerly, so equality is plain dict
    equality.  Coefficients may be any exact number type; everything in
    this package uses ints.
    """

    __slots__ = ("data",)

    def __init__(self, data: dict | None = None):
        self.data = {k: c for k, c in (data or {}).items() if c != 0}

    @classmethod
    def basis(cls, key, coeff=1) -> "LinComb":
        return cls({key: coeff})

    @classmethod
    def zero(cls) -> "LinComb":
        return cls()

    def coeff(self, key):
        return self.data.get(key, 0)

    def items(self):
        return self.data.items()

    def keys(self):
        return self.data.keys()

    def __len__(self) -> int:
        return len(self.data)

    def __bool__(self) -> bool:
        return bool(self.data)

    def __eq__(self, other) -> bool:
        return isinstance(other, LinComb) and self.data == other.data

    def __hash__(self):
        raise TypeError("LinComb is mutable in spirit; not hashable")

    def __add__(self, other: "LinComb") -> "LinComb":
        out = dict(self.data)
        for k, c in other.data.items():
            out[k] = out.get(k, 0) + c
        return type(self)(out)

    def __sub__(self, other: "LinComb") -> "LinComb":
        out = dict(self.data)
        for k, c in other.data.items():
            out[k] = out.get(k, 0) - c
        return type(self)(out)

    def __neg__(self) -> "LinComb":
        return type(self)({k: -c for k, c in self.data.items()})

    def scale(self, s) -> "LinComb":
        return type(self)({k: s * c for k, c in self.data.items()})

    def add_inplace(self, key, coeff) -> None:
        c = self.data.get(key, 0) + coeff
        if c:
            self.data[key] = c
        else:
            self.data.pop(key, None)

    def map_keys(self, fn) -> "LinComb":
        out = type(self)()
        for k, c in self.data.items():
            out.add_inplace(fn(k), c)
        return out

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.data!r})"


class TensorComb(LinComb):
    """Linear combination whose keys are pairs (left, right)."""


def lincomb_str(sig: Signature, x: LinComb, key_str=None) -> str:
    """Deterministic text rendering, terms sorted by rendered key."""
    if key_str is None:
        key_str = lambda k: forest_str(sig, k) or "()"
    if not x:
        return "0"
    parts = []
    for k in sorted(x.data, key=key_str):
        c = x.data[k]
        parts.append(f"{c}*E[{key_str(k)}]")
    return " + ".join(parts)


def tensor_str(sig: Signature, x: TensorComb, key_str=None) -> str:
    if key_str is None:
        key_str = lambda k: forest_str(sig, k) or "()"
    if not x:
        return "0"
    parts = []
    for k in sorted(x.data, key=lambda p: (key_str(p[0]), key_str(p[1]))):
        c = x.data[k]
        parts.append(f"{c}*E[{key_str(k[0])}] (x) E[{key_str(k[1])}]")
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# Product, coproduct, counit
# ---------------------------------------------------------------------------

def product(x: LinComb, y: LinComb) -> LinComb:
    """Concatenation product, extended bilinearly."""
    out = LinComb()
    for f, a in x.items():
        for g, b in y.items():
            out.add_inplace(Forest(f.terms + g.terms), a * b)
    return out


def coproduct_basis(f: Forest) -> TensorComb:
    """Coproduct of one basis element via admissible splittings."""
    if not is_reduced(f):
        raise ValueError("coproduct expects a reduced forest")
    out = TensorComb()
    for i1, i2 in admissible_pairs(f):
        out.add_inplace((restrict(f, i1), restrict(f, i2)), 1)
    return out


def coproduct(x: LinComb) -> TensorComb:
    out = TensorComb()
    for f, c in x.items():
        for k, m in coproduct_basis(f).items():
            out.add_inplace(k, m * c)
    return out


def _upper_factorizations(t: Term) -> Iterator[tuple[Term, tuple[Term, ...]]]:
    """All ways to write t = y<w_1,...,w_k> with y a term grafted on the
    root, the w_i covering the leaves of y left to right.

    Upper parts correspond to ancestor-closed node sets of t; for each,
    the lower word collects the hanging subtrees, including a bare leaf
    wherever y keeps a leaf of t.
    """
    from .core import _parents, ancestor_closed_subsets

    single = Forest((t,))
    parent = _parents(single)
    n = term_degree(t)

    for keep in ancestor_closed_subsets(parent):
        kept = set(keep)
        lower: list[Term] = []
        counter = [1]

        def cut(u: Term) -> Term:
            if u.is_leaf:
                lower.append(LEAF)
                return LEAF
            i = counter[0]
            if i in kept:
                counter[0] += 1
                return Term(u.gen, tuple(cut(c) for c in u.children))
            counter[0] += term_degree(u)
            lower.append(u)
            return LEAF

        y = cut(t)
        yield y, tuple(lower)


def coproduct_basis_fact(f: Forest) -> TensorComb:
    """Coproduct of one basis element via term-by-term factorizations.

    Each term factors independently; tensor legs multiply by
    concatenation, and bare leaves are reduced away on both sides.
    """
    if not is_reduced(f):
        raise ValueError("coproduct expects a reduced forest")
    out = TensorComb.basis((EMPTY_FOREST, EMPTY_FOREST))
    for t in f.terms:
        step = TensorComb()
        for y, lower in _upper_factorizations(t):
            left = reduce_forest(Forest((y,)))
            right = reduce_forest(Forest(lower))
            step.add_inplace((left, right), 1)
        nxt = TensorComb()
        for (l1, r1), c1 in out.items():
            for (l2, r2), c2 in step.items():
                nxt.add_inplace(
                    (Forest(l1.terms + l2.terms), Forest(r1.terms + r2.terms)),
                    c1 * c2,
                )
        out = nxt
    return out


def counit(x: LinComb):
    return x.coeff(EMPTY_FOREST)


# ---------------------------------------------------------------------------
# Antipode
# ---------------------------------------------------------------------------

def antipode_basis(f: Forest, _memo: dict | None = None) -> LinComb:
    """Antipode of E_f by the graded recursion for connected bialgebras.

    The splitting with I1 equal to the whole node set contributes
    S(E_f) itself, every other splitting has a strictly smaller left
    degree, so S(E_f) = -sum over proper splittings of S(E_{I1}) E_{I2}.
    The memo is per call unless a shared dict is passed in.
    """
    memo = _memo if _memo is not None else {}

    def go(g: Forest) -> LinComb:
        hit = memo.get(g)
        if hit is not None:
            return hit
        if g.is_empty:
            res = LinComb.basis(EMPTY_FOREST)
        else:
            acc = LinComb()
            n = forest_degree(g)
            for i1, i2 in admissible_pairs(g):
                if len(i1) == n:
                    continue
                left = go(restrict(g, i1))
                right = LinComb.basis(restrict(g, i2))
                acc = acc + product(left, right)
            res = -acc
        memo[g] = res
        return res

    return go(f)


def antipode(x: LinComb) -> LinComb:
    memo: dict = {}
    out = LinComb()
    for f, c in x.items():
        for k, m in antipode_basis(f, memo).items():
            out.add_inplace(k, m * c)
    return out


def convolution_check(f: Forest) -> bool:
    """m(S (x) id)Delta(E_f) == eta(eps(E_f)), and the same on the right."""
    target = LinComb.basis(EMPTY_FOREST) if f.is_empty else LinComb()
    memo: dict = {}
    left = LinComb()
    right = LinComb()
    for (a, b), c in coproduct_basis(f).items():
        left = left + product(antipode_basis(a, memo), LinComb.basis(b)).scale(c)
        right = right + product(LinComb.basis(a), antipode_basis(b, memo)).scale(c)
    return left == target and right == target


# ---------------------------------------------------------------------------
# Dimensions and classification
# ---------------------------------------------------------------------------

def hilbert_dims(sig: Signature, n_max: int) -> list[int]:
    """Graded dimensions dim_0..dim_n of the Hopf algebra.

    dim_n counts reduced forests of degree n: compositions of n into
    positive parts weighted by term counts.
    """
    tc = term_counts(sig, n_max)
    dims = [1]
    for n in range(1, n_max + 1):
        # dims[n] = sum over first-part sizes of tc[k] * dims[n - k]
        dims.append(sum(tc[k] * dims[n - k] for k in range(1, n + 1)))
    return dims


def classify_profile(sig: Signature) -> tuple[bool, bool]:
    """(commutative, cocommutative) for the natural Hopf algebra.

    Commutative iff the profile is all zero or a single arity-0
    generator.  Cocommutative iff all generators sit in one arity k
    (any number of them), or the profile is a single arity-1 generator.
    """
    prof = sig.profile()
    nonzero = [(ar, c) for ar, c in enumerate(prof) if c]
    if not nonzero:
        return True, True
    if len(nonzero) == 1:
        ar, c = nonzero[0]
        commutative = ar == 0 and c == 1
        cocommutative = ar == 0 or (c == 1 and ar == 1)
        return commutative, cocommutative
    return False, False
