"""Signatures, planar terms, and forests.

A signature is a finite list of named generators with arities.  Terms are
planar rooted trees whose internal nodes carry generators; leaves are the
formal symbol ``*``.  A forest is a finite word of terms.  Internal nodes
of a forest are numbered 1..n in global left-to-right preorder, which is
the node identity used by restriction and admissible pairs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator


class TermSyntaxError(ValueError):
    """Raised when a term, forest, or signature string fails to parse."""


@dataclass(frozen=True)
class Signature:
    """Named generators with arities.

    Generators are addressed by index (their position in ``generators``).
    Names must be distinct, nonempty, and free of the grammar's
    punctuation characters.
    """

    generators: tuple[tuple[str, int], ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        idx: dict[str, int] = {}
        for g, (name, ar) in enumerate(self.generators):
            if not name or any(ch in name for ch in "(),;* \t\n"):
                raise TermSyntaxError(f"bad generator name {name!r}")
            if name in idx:
                raise TermSyntaxError(f"duplicate generator name {name!r}")
            if ar < 0:
                raise TermSyntaxError(f"negative arity for {name!r}")
            idx[name] = g
        object.__setattr__(self, "_index", idx)

    def arity(self, g: int) -> int:
        return self.generators[g][1]

    def name(self, g: int) -> str:
        return self.generators[g][0]

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise TermSyntaxError(f"unknown generator {name!r}") from None

    @property
    def max_arity(self) -> int:
        return max((ar for _, ar in self.generators), default=0)

    def profile(self) -> tuple[int, ...]:
        """Number of generators of each arity, index 0 .. max_arity."""
        counts = [0] * (self.max_arity + 1)
        for _, ar in self.generators:
            counts[ar] += 1
        return tuple(counts)

    @classmethod
    def from_profile(cls, counts: tuple[int, ...] | list[int]) -> "Signature":
        """Signature with ``counts[k]`` generators of arity k.

        Names are synthesized as g0_0, g0_1, ..., g1_0, ... where the
        first index is the arity.
        """
        gens = []
        for ar, c in enumerate(counts):
            if c < 0:
                raise TermSyntaxError("negative profile entry")
            for i in range(c):
                gens.append((f"g{ar}_{i}", ar))
        return cls(tuple(gens))

    @classmethod
    def from_text(cls, text: str) -> "Signature":
        """Parse ``name arity`` lines; blank lines and # comments allowed."""
        gens = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise TermSyntaxError(f"line {lineno}: expected 'name arity'")
            name, ar_s = parts
            try:
                ar = int(ar_s)
            except ValueError:
                raise TermSyntaxError(f"line {lineno}: bad arity {ar_s!r}") from None
            gens.append((name, ar))
        if not gens:
            raise TermSyntaxError("empty signature")
        return cls(tuple(gens))


@dataclass(frozen=True)
class Term:
    """A planar term.  ``gen is None`` means the leaf ``*``.

    For an internal node, ``len(children)`` always equals the arity of
    ``gen`` in the ambient signature; constructors enforce this at the
    points where the signature is known.
    """

    gen: int | None
    children: tuple["Term", ...] = ()

    @property
    def is_leaf(self) -> bool:
        return self.gen is None


LEAF = Term(None)


def make_term(sig: Signature, gen: int, children: tuple[Term, ...]) -> Term:
    if len(children) != sig.arity(gen):
        raise ValueError(
            f"generator {sig.name(gen)} has arity {sig.arity(gen)}, "
            f"got {len(children)} children"
        )
    return Term(gen, children)


def term_degree(t: Term) -> int:
    if t.is_leaf:
        return 0
    return 1 + sum(term_degree(c) for c in t.children)


def term_arity(t: Term) -> int:
    """Number of leaves of a term (a lone leaf has arity 1)."""
    if t.is_leaf:
        return 1
    if not t.children:
        return 0
    return sum(term_arity(c) for c in t.children)


def term_depth(t: Term) -> int:
    """Height of the deepest internal node; the lone leaf has depth 0."""
    if t.is_leaf:
        return 0
    return 1 + max((term_depth(c) for c in t.children), default=0)


@dataclass(frozen=True)
class Forest:
    """A word of terms.  The empty forest is ``Forest(())``."""

    terms: tuple[Term, ...] = ()

    @property
    def is_empty(self) -> bool:
        return not self.terms


EMPTY_FOREST = Forest(())


def forest_degree(f: Forest) -> int:
    return sum(term_degree(t) for t in f.terms)


def forest_arity(f: Forest) -> int:
    return sum(term_arity(t) for t in f.terms)


def forest_depth(f: Forest) -> int:
    return max((term_depth(t) for t in f.terms), default=0)


def reduce_forest(f: Forest) -> Forest:
    """Drop the terms that are bare leaves."""
    return Forest(tuple(t for t in f.terms if not t.is_leaf))


def is_reduced(f: Forest) -> bool:
    return all(not t.is_leaf for t in f.terms)


# ---------------------------------------------------------------------------
# Parsing and printing
# ---------------------------------------------------------------------------
#
# term   := "*" | name | name "(" term ("," term)* ")"
# forest := term (";" term)*
#
# A bare name (or "name()") denotes a nullary generator; nonzero arities
# must list their children explicitly.

def _tokenize(s: str) -> list[str]:
    toks = []
    i = 0
    while i < len(s):
        ch = s[i]
        if ch.isspace():
            i += 1
        elif ch in "(),;*":
            toks.append(ch)
            i += 1
        else:
            j = i
            while j < len(s) and not s[j].isspace() and s[j] not in "(),;*":
                j += 1
            toks.append(s[i:j])
            i = j
    return toks


class _Parser:
    def __init__(self, sig: Signature, toks: list[str]):
        self.sig = sig
        self.toks = toks
        self.pos = 0

    def peek(self) -> str | None:
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise TermSyntaxError("unexpected end of input")
        self.pos += 1
        return tok

    def expect(self, tok: str) -> None:
        got = self.take()
        if got != tok:
            raise TermSyntaxError(f"expected {tok!r}, got {got!r}")

    def term(self) -> Term:
        tok = self.take()
        if tok == "*":
            return LEAF
        if tok in "(),;":
            raise TermSyntaxError(f"unexpected {tok!r}")
        g = self.sig.index(tok)
        ar = self.sig.arity(g)
        if self.peek() != "(":
            if ar != 0:
                raise TermSyntaxError(
                    f"generator {tok!r} of arity {ar} needs children"
                )
            return Term(g, ())
        self.take()
        if ar == 0:
            self.expect(")")
            return Term(g, ())
        kids = [self.term()]
        while self.peek() == ",":
            self.take()
            kids.append(self.term())
        self.expect(")")
        if len(kids) != ar:
            raise TermSyntaxError(
                f"generator {tok!r} expects {ar} children, got {len(kids)}"
            )
        return Term(g, tuple(kids))


def parse_term(sig: Signature, s: str) -> Term:
    p = _Parser(sig, _tokenize(s))
    t = p.term()
    if p.peek() is not None:
        raise TermSyntaxError(f"trailing input at {p.peek()!r}")
    return t


def parse_forest(sig: Signature, s: str) -> Forest:
    toks = _tokenize(s)
    if not toks:
        return EMPTY_FOREST
    p = _Parser(sig, toks)
    terms = [p.term()]
    while p.peek() == ";":
        p.take()
        terms.append(p.term())
    if p.peek() is not None:
        raise TermSyntaxError(f"trailing input at {p.peek()!r}")
    return Forest(tuple(terms))


def term_str(sig: Signature, t: Term) -> str:
    if t.is_leaf:
        return "*"
    name = sig.name(t.gen)
    if not t.children:
        return name
    return name + "(" + ",".join(term_str(sig, c) for c in t.children) + ")"


def forest_str(sig: Signature, f: Forest) -> str:
    return ";".join(term_str(sig, t) for t in f.terms)


def term_sort_key(sig: Signature, t: Term) -> tuple[int, str]:
    return (term_degree(t), term_str(sig, t))


def forest_sort_key(sig: Signature, f: Forest) -> tuple[int, str]:
    return (forest_degree(f), forest_str(sig, f))


# ---------------------------------------------------------------------------
# Node tables
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NodeTable:
    """Per-node data for the internal nodes of a forest, preorder numbered.

    Index i-1 holds node i.  ``parent[i-1]`` is ``None`` for nodes whose
    position word is empty, otherwise ``(p, j)`` meaning node p's j-th
    child subtree (1-based) contains node i at its root.
    """

    dec: tuple[int, ...]
    height: tuple[int, ...]
    pos: tuple[tuple[int, ...], ...]
    parent: tuple[tuple[int, int] | None, ...]


def node_table(f: Forest) -> NodeTable:
    dec: list[int] = []
    height: list[int] = []
    pos: list[tuple[int, ...]] = []
    parent: list[tuple[int, int] | None] = []

    def walk(t: Term, h: int, p: tuple[int, ...], par: tuple[int, int] | None):
        if t.is_leaf:
            return
        dec.append(t.gen)
        height.append(h)
        pos.append(p)
        parent.append(par)
        me = len(dec)
        for j, c in enumerate(t.children, 1):
            walk(c, h + 1, p + (j,), (me, j))

    for t in f.terms:
        walk(t, 1, (), None)
    return NodeTable(tuple(dec), tuple(height), tuple(pos), tuple(parent))


def edges(f: Forest) -> list[tuple[int, int, int]]:
    """All parent-child relations as (i, j, i') triples."""
    tbl = node_table(f)
    return [(pj[0], pj[1], i) for i, pj in enumerate(tbl.parent, 1) if pj]


# ---------------------------------------------------------------------------
# Restriction
# ---------------------------------------------------------------------------

def restrict(f: Forest, nodes) -> Forest:
    """Induced forest on an arbitrary set of (1-based) internal nodes.

    Kept nodes stay attached when their parent is kept; otherwise they
    head a new term.  Terms are ordered by the preorder number of their
    top node.  The result is reduced.
    """
    n = forest_degree(f)
    keep = set(nodes)
    for i in keep:
        if not (1 <= i <= n):
            raise ValueError(f"node {i} out of range 1..{n}")
    pieces: list[Term | None] = []
    counter = itertools.count(1)

    def walk(t: Term, parent_kept: bool) -> Term:
        if t.is_leaf:
            return LEAF
        i = next(counter)
        kept = i in keep
        slot = None
        if kept and not parent_kept:
            pieces.append(None)
            slot = len(pieces) - 1
        kids = tuple(walk(c, kept) for c in t.children)
        if not kept:
            return LEAF
        node = Term(t.gen, kids)
        if slot is None:
            return node
        pieces[slot] = node
        return LEAF

    for t in f.terms:
        walk(t, False)
    return Forest(tuple(pieces))  # type: ignore[arg-type]


# ---------------------------------------------------------------------------
# Admissible pairs
# ---------------------------------------------------------------------------

def _parents(f: Forest) -> list[int]:
    """parent[i] for i in 1..n (0 means no parent); index 0 unused."""
    tbl = node_table(f)
    out = [0] * (len(tbl.dec) + 1)
    for i, pj in enumerate(tbl.parent, 1):
        out[i] = pj[0] if pj else 0
    return out


def ancestor_closed_subsets(parent: list[int]) -> Iterator[tuple[int, ...]]:
    """All subsets of 1..n closed under taking parents, in lexicographic
    order of their sorted element tuples (the empty set first).

    ``parent`` is as produced by :func:`_parents`.  Preorder numbering
    guarantees parent[i] < i, so extending sets by increasing elements
    visits each closed set exactly once.
    """
    n = len(parent) - 1
    current: list[int] = []
    inset = [False] * (n + 1)

    def extend(start: int) -> Iterator[tuple[int, ...]]:
        yield tuple(current)
        for i in range(start, n + 1):
            p = parent[i]
            if p == 0 or inset[p]:
                current.append(i)
                inset[i] = True
                yield from extend(i + 1)
                current.pop()
                inset[i] = False

    yield from extend(1)


def admissible_pairs(f: Forest) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All pairs (I1, I2) partitioning the nodes of f with I1 closed under
    ancestors and I2 closed under descendants, ordered lexicographically
    by sorted I1.

    Since I2 is the complement of an ancestor-closed set it is
    automatically descendant-closed, so enumeration reduces to
    :func:`ancestor_closed_subsets`.
    """
    n = forest_degree(f)
    parent = _parents(f)
    allset = set(range(1, n + 1))
    for i1 in ancestor_closed_subsets(parent):
        yield i1, tuple(sorted(allset.difference(i1)))


# ---------------------------------------------------------------------------
# Composition
# ---------------------------------------------------------------------------

def compose(t: Term, args: tuple[Term, ...]) -> Term:
    """Total composition: plug args into the leaves of t, left to right."""
    if len(args) != term_arity(t):
        raise ValueError(
            f"term of arity {term_arity(t)} composed with {len(args)} arguments"
        )
    it = iter(args)

    def go(u: Term) -> Term:
        if u.is_leaf:
            return next(it)
        return Term(u.gen, tuple(go(c) for c in u.children))

    return go(t)


def partial_compose(t: Term, i: int, u: Term) -> Term:
    """Plug u into the i-th leaf of t (1-based)."""
    ar = term_arity(t)
    if not (1 <= i <= ar):
        raise ValueError(f"leaf index {i} out of range 1..{ar}")
    args = tuple(u if k == i else LEAF for k in range(1, ar + 1))
    return compose(t, args)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

_TERM_CACHE: dict[tuple[Signature, int], tuple[Term, ...]] = {}


def enumerate_terms(sig: Signature, degree: int) -> tuple[Term, ...]:
    """All terms of the given degree, in canonical order.

    Degree 0 gives the lone leaf.  Results are cached per signature.
    """
    if degree < 0:
        raise ValueError("negative degree")
    key = (sig, degree)
    cached = _TERM_CACHE.get(key)
    if cached is not None:
        return cached
    if degree == 0:
        out: list[Term] = [LEAF]
    else:
        out = []
        for g, (_, ar) in enumerate(sig.generators):
            for parts in _compositions(degree - 1, ar):
                for kids in itertools.product(
                    *(enumerate_terms(sig, d) for d in parts)
                ):
                    out.append(Term(g, kids))
        out.sort(key=lambda t: term_sort_key(sig, t))
    result = tuple(out)
    _TERM_CACHE[key] = result
    return result


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` nonnegative parts."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def positive_compositions(total: int) -> Iterator[tuple[int, ...]]:
    """Compositions of ``total`` into positive parts (one empty one for 0)."""
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in positive_compositions(total - first):
            yield (first,) + rest


def enumerate_forests(sig: Signature, degree: int) -> list[Forest]:
    """All reduced forests of the given degree, in canonical order."""
    out = []
    for parts in positive_compositions(degree):
        for terms in itertools.product(
            *(enumerate_terms(sig, d) for d in parts)
        ):
            out.append(Forest(terms))
    out.sort(key=lambda f: forest_sort_key(sig, f))
    return out


def term_counts(sig: Signature, n_max: int) -> list[int]:
    """Number of terms of each degree 0..n_max (index 0 is the leaf)."""
    if n_max < 0:
        raise ValueError("negative degree bound")
    counts = [1]
    for d in range(1, n_max + 1):
        total = 0
        for _, ar in sig.generators:
            # sequences of ar subterm degrees summing to d-1
            total += _seq_count(counts, d - 1, ar)
        counts.append(total)
    return counts


def _seq_count(counts: list[int], total: int, length: int) -> int:
    if length == 0:
        return 1 if total == 0 else 0
    acc = 0
    for first in range(total + 1):
        if first < len(counts):
            acc += counts[first] * _seq_count(counts, total - first, length - 1)
    return acc
