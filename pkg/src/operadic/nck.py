"""Trimmed forests, charges, and the Hopf algebra of admissible cuts.

Trimming a forest removes its leaves, so nodes of a trimmed tree may
have fewer children than the arity of their generator; children keep
their left-to-right order but forget which slot of the parent they
occupied.  The charge of a trimmed forest counts its preimages under
trimming.  The basis E_t on trimmed forests carries the concatenation
product and the coproduct by admissible cuts, mirroring the admissible
pairs of plain forests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .core import Forest, LEAF, Signature, Term, term_degree
from .hopf import LinComb, TensorComb


@dataclass(frozen=True)
class TrimmedTree:
    gen: int
    children: tuple["TrimmedTree", ...] = ()


@dataclass(frozen=True)
class TrimmedForest:
    trees: tuple[TrimmedTree, ...] = ()

    @property
    def is_empty(self) -> bool:
        return not self.trees


EMPTY_TRIMMED = TrimmedForest(())


def trimmed_degree(t: TrimmedForest) -> int:
    def go(u: TrimmedTree) -> int:
        return 1 + sum(go(c) for c in u.children)

    return sum(go(u) for u in t.trees)


def trimmed_tree_str(sig: Signature, t: TrimmedTree) -> str:
    if not t.children:
        return sig.name(t.gen)
    kids = ",".join(trimmed_tree_str(sig, c) for c in t.children)
    return f"{sig.name(t.gen)}({kids})"


def trimmed_str(sig: Signature, t: TrimmedForest) -> str:
    return ";".join(trimmed_tree_str(sig, u) for u in t.trees)


def parse_trimmed(sig: Signature, s: str) -> TrimmedForest:
    """Parse the term grammar with the leaf symbol forbidden and child
    counts only bounded by the arity."""
    from .core import _tokenize, TermSyntaxError

    toks = _tokenize(s)
    if not toks:
        return EMPTY_TRIMMED
    pos = [0]

    def peek():
        return toks[pos[0]] if pos[0] < len(toks) else None

    def take():
        tok = peek()
        if tok is None:
            raise TermSyntaxError("unexpected end of input")
        pos[0] += 1
        return tok

    def tree() -> TrimmedTree:
        tok = take()
        if tok in "(),;*":
            raise TermSyntaxError(f"unexpected {tok!r}")
        g = sig.index(tok)
        kids: list[TrimmedTree] = []
        if peek() == "(":
            take()
            if peek() == ")":
                take()
            else:
                kids.append(tree())
                while peek() == ",":
                    take()
                    kids.append(tree())
                if take() != ")":
                    raise TermSyntaxError("expected ')'")
        if len(kids) > sig.arity(g):
            raise TermSyntaxError(
                f"{tok!r} has arity {sig.arity(g)}, got {len(kids)} children"
            )
        return TrimmedTree(g, tuple(kids))

    trees = [tree()]
    while peek() == ";":
        take()
        trees.append(tree())
    if peek() is not None:
        raise TermSyntaxError(f"trailing input at {peek()!r}")
    return TrimmedForest(tuple(trees))


# ---------------------------------------------------------------------------
# Trim, charge, untrim
# ---------------------------------------------------------------------------

def trim(f: Forest) -> TrimmedForest:
    def go(t: Term) -> TrimmedTree:
        return TrimmedTree(
            t.gen, tuple(go(c) for c in t.children if not c.is_leaf)
        )

    return TrimmedForest(tuple(go(t) for t in f.terms if not t.is_leaf))


def charge(sig: Signature, t: TrimmedForest) -> int:
    """Number of reduced forests trimming to t: at every node the k
    children can occupy any k of the arity slots, in order."""

    def go(u: TrimmedTree) -> int:
        acc = comb(sig.arity(u.gen), len(u.children))
        for c in u.children:
            acc *= go(c)
        return acc

    prod = 1
    for u in t.trees:
        prod *= go(u)
    return prod


def untrim(sig: Signature, t: TrimmedForest) -> list[Forest]:
    """All reduced forests trimming to t, in generation order."""

    def go(u: TrimmedTree) -> list[Term]:
        ar = sig.arity(u.gen)
        k = len(u.children)
        child_sets = [go(c) for c in u.children]
        out = []
        for slots in itertools.combinations(range(ar), k):
            for kids in itertools.product(*child_sets):
                full = [LEAF] * ar
                for s, c in zip(slots, kids):
                    full[s] = c
                out.append(Term(u.gen, tuple(full)))
        return out

    per_tree = [go(u) for u in t.trees]
    return [Forest(terms) for terms in itertools.product(*per_tree)]


def untrim_one(sig: Signature, t: TrimmedForest) -> Forest:
    """One canonical preimage: children packed into the leftmost slots."""

    def go(u: TrimmedTree) -> Term:
        ar = sig.arity(u.gen)
        kids = tuple(go(c) for c in u.children)
        return Term(u.gen, kids + (LEAF,) * (ar - len(kids)))

    return Forest(tuple(go(u) for u in t.trees))


# ---------------------------------------------------------------------------
# Hopf structure on trimmed forests
# ---------------------------------------------------------------------------

def _trimmed_parents(t: TrimmedForest) -> list[int]:
    """Preorder parent array (0 for roots), index 0 unused."""
    parent = [0]

    def walk(u: TrimmedTree, par: int):
        parent.append(par)
        me = len(parent) - 1
        for c in u.children:
            walk(c, me)

    for u in t.trees:
        walk(u, 0)
    return parent


def restrict_trimmed(t: TrimmedForest, nodes) -> TrimmedForest:
    """Induced trimmed forest on a set of preorder node numbers, pieces
    ordered by the preorder number of their top node."""
    keep = set(nodes)
    pieces: list[TrimmedTree | None] = []
    counter = itertools.count(1)

    def walk(u: TrimmedTree, parent_kept: bool) -> TrimmedTree | None:
        i = next(counter)
        kept = i in keep
        slot = None
        if kept and not parent_kept:
            pieces.append(None)
            slot = len(pieces) - 1
        kids = tuple(
            k for c in u.children if (k := walk(c, kept)) is not None
        )
        if not kept:
            return None
        node = TrimmedTree(u.gen, kids)
        if slot is None:
            return node
        pieces[slot] = node
        return None

    for u in t.trees:
        walk(u, False)
    return TrimmedForest(tuple(pieces))  # type: ignore[arg-type]


def nck_product(x: LinComb, y: LinComb) -> LinComb:
    out = LinComb()
    for t, a in x.items():
        for u, b in y.items():
            out.add_inplace(TrimmedForest(t.trees + u.trees), a * b)
    return out


def nck_coproduct_basis(t: TrimmedForest) -> TensorComb:
    """Admissible cuts: the upper part is ancestor closed, the lower part
    is its complement."""
    from .core import ancestor_closed_subsets

    parent = _trimmed_parents(t)
    n = len(parent) - 1
    allset = set(range(1, n + 1))
    out = TensorComb()
    for i1 in ancestor_closed_subsets(parent):
        i2 = tuple(sorted(allset.difference(i1)))
        out.add_inplace(
            (restrict_trimmed(t, i1), restrict_trimmed(t, i2)), 1
        )
    return out


def nck_coproduct(x: LinComb) -> TensorComb:
    out = TensorComb()
    for t, c in x.items():
        for k, m in nck_coproduct_basis(t).items():
            out.add_inplace(k, m * c)
    return out


def trim_map(x: LinComb) -> LinComb:
    """The Hopf projection sending E_f to E_{trim(f)}."""
    return x.map_keys(trim)


# ---------------------------------------------------------------------------
# Length polynomials
# ---------------------------------------------------------------------------

def length_polynomial(sig: Signature, t: TrimmedForest, max_len: int):
    """Realization over the truncated length alphabet of any forest
    trimming to t; all such forests give the same polynomial."""
    from .alphabets import LengthAlphabet, realize_basis

    return realize_basis(untrim_one(sig, t), LengthAlphabet(sig, max_len))


_TRIMMED_CACHE: dict[tuple[Signature, int], tuple[TrimmedTree, ...]] = {}


def enumerate_trimmed_trees(sig: Signature, degree: int) -> tuple[TrimmedTree, ...]:
    """All trimmed trees of the given number of nodes, cached."""
    if degree <= 0:
        return ()
    key = (sig, degree)
    cached = _TRIMMED_CACHE.get(key)
    if cached is not None:
        return cached
    out = []
    from .core import _compositions

    for g, (_, ar) in enumerate(sig.generators):
        for k in range(min(ar, degree - 1) + 1):
            for parts in _compositions(degree - 1 - k, k):
                sizes = tuple(p + 1 for p in parts)
                pools = [enumerate_trimmed_trees(sig, s) for s in sizes]
                for kids in itertools.product(*pools):
                    out.append(TrimmedTree(g, kids))
    result = tuple(out)
    _TRIMMED_CACHE[key] = result
    return result


def enumerate_trimmed_forests(sig: Signature, degree: int) -> list[TrimmedForest]:
    from .core import positive_compositions

    out = []
    for parts in positive_compositions(degree):
        pools = [enumerate_trimmed_trees(sig, d) for d in parts]
        for trees in itertools.product(*pools):
            out.append(TrimmedForest(trees))
    return out


def mas_lengths_expand(sig: Signature, m: tuple[int, ...], max_len: int):
    """Length realization of a multiset basis element, computed from
    charges: sum over trimmed trees with the given content of the
    charge times the length polynomial."""
    from .hopf import LinComb as _LC
    from .alphabets import WordPoly

    seen: set[TrimmedTree] = set()
    for t in enumerate_trimmed_trees(sig, len(m)):
        if _trimmed_content(t) == tuple(sorted(m)):
            seen.add(t)
    out = WordPoly()
    for t in sorted(seen, key=lambda u: trimmed_tree_str(sig, u)):
        tf = TrimmedForest((t,))
        ch = charge(sig, tf)
        for w, c in length_polynomial(sig, tf, max_len).items():
            out.add_inplace(w, ch * c)
    return out


def _trimmed_content(t: TrimmedTree) -> tuple[int, ...]:
    out = []

    def walk(u: TrimmedTree):
        out.append(u.gen)
        for c in u.children:
            walk(c)

    walk(t)
    return tuple(sorted(out))
