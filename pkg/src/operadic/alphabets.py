"""Forest-like alphabets and realizations on words.

An alphabet carries a set of letters, a subset of root letters, one
decoration set per generator, and one binary edge relation per child
index.  No structural axioms are imposed.  A word is compatible with a
forest when it has one letter per internal node, letters of top nodes
are roots lying in the decoration set of their generator, and every
parent-child edge of the forest is matched by the corresponding edge
relation on letters.

The realization of E_f is the formal sum of its compatible words.  Two
concrete families matter: position alphabets (letters are generator
plus position label, truncated) and length alphabets (letters are
generator plus level).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import (
    Forest,
    NodeTable,
    Signature,
    Term,
    forest_degree,
    node_table,
)
from .hopf import LinComb, TensorComb


class Alphabet:
    """Explicit finite alphabet with interned integer letter ids.

    ``letters`` fixes the id order; ``roots`` is a subset of letters;
    ``decs[g]`` is the decoration set of generator g; ``edges[j]`` holds
    the pairs related at child index j (1-based), for j in 1..nrels.
    Payloads may be any hashable values.
    """

    def __init__(self, sig: Signature, letters, roots, decs, edges, nrels=None):
        self.sig = sig
        self.payloads: tuple = tuple(letters)
        self.ids: dict = {}
        for a, p in enumerate(self.payloads):
            if p in self.ids:
                raise ValueError(f"duplicate letter {p!r}")
            self.ids[p] = a
        self.nrels = nrels if nrels is not None else max(edges, default=0)
        self.root_ids = frozenset(self.ids[p] for p in roots)
        self.dec_ids = tuple(
            frozenset(self.ids[p] for p in decs.get(g, ()))
            for g in range(len(sig.generators))
        )
        # targets[(a, j)] lists b with a ->_j b, in id order
        self.targets: dict[tuple[int, int], tuple[int, ...]] = {}
        pair_sets = []
        for j in range(1, self.nrels + 1):
            pair_sets.append(
                frozenset(
                    (self.ids[p], self.ids[q]) for p, q in edges.get(j, ())
                )
            )
        self.edge_pairs: tuple[frozenset, ...] = tuple(pair_sets)
        for j, pairs in enumerate(self.edge_pairs, 1):
            by_src: dict[int, list[int]] = {}
            for a, b in pairs:
                by_src.setdefault(a, []).append(b)
            for a, bs in by_src.items():
                self.targets[(a, j)] = tuple(sorted(bs))

    def __len__(self) -> int:
        return len(self.payloads)

    def payload(self, a: int):
        return self.payloads[a]

    def letter_str(self, a: int) -> str:
        return str(self.payloads[a])

    def is_root(self, a: int) -> bool:
        return a in self.root_ids

    def in_dec(self, a: int, g: int) -> bool:
        return a in self.dec_ids[g]

    def has_edge(self, a: int, b: int, j: int) -> bool:
        return (a, b) in self.edge_pairs[j - 1]

    def all_ids(self) -> range:
        return range(len(self.payloads))

    def candidates(self, g: int, parent: int | None, j: int) -> tuple[int, ...]:
        """Letters usable at a node with generator g, given the letter of
        its parent and its child index (parent None for top nodes)."""
        if parent is None:
            return tuple(sorted(self.dec_ids[g] & self.root_ids))
        if j > self.nrels:
            return ()
        pool = self.targets.get((parent, j), ())
        return tuple(b for b in pool if b in self.dec_ids[g])


class PositionAlphabet:
    """Truncated position alphabet for a signature.

    Letters are (g, label) with label a word over 1..max_child of
    length at most max_len, padded freely with zeros; a letter is a
    root iff its label is all zeros.  Edges at index j append j and
    then zeros to the label.  Ids are assigned arithmetically from
    (g, label), so equal parameters give interchangeable instances.
    """

    def __init__(self, sig: Signature, max_len: int, max_child: int | None = None):
        if max_len < 0:
            raise ValueError("negative label length bound")
        self.sig = sig
        self.max_len = max_len
        self.max_child = max_child if max_child is not None else sig.max_arity
        if self.max_child < 0:
            raise ValueError("negative child index bound")
        self.nrels = self.max_child
        base = self.max_child + 1
        # number of labels of length exactly k is base**k (digits 0..max_child,
        # with the convention that nonzero digits must be <= max_child)
        self._offsets = [0]
        for k in range(max_len + 1):
            self._offsets.append(self._offsets[-1] + base**k)
        self.labels_count = self._offsets[-1]

    def __len__(self) -> int:
        return len(self.sig.generators) * self.labels_count

    def id_of(self, payload: tuple[int, tuple[int, ...]]) -> int:
        g, label = payload
        k = len(label)
        if k > self.max_len:
            raise ValueError(f"label longer than bound {self.max_len}")
        base = self.max_child + 1
        val = 0
        for d in label:
            if not (0 <= d <= self.max_child):
                raise ValueError(f"digit {d} out of range 0..{self.max_child}")
            val = val * base + d
        return g * self.labels_count + self._offsets[k] + val

    def payload(self, a: int) -> tuple[int, tuple[int, ...]]:
        g, rest = divmod(a, self.labels_count)
        k = 0
        while self._offsets[k + 1] <= rest:
            k += 1
        val = rest - self._offsets[k]
        base = self.max_child + 1
        digits = []
        for _ in range(k):
            val, d = divmod(val, base)
            digits.append(d)
        return g, tuple(reversed(digits))

    def letter_str(self, a: int) -> str:
        g, label = self.payload(a)
        word = "".join(str(d) for d in label) if label else "e"
        return f"{self.sig.name(g)}[{word}]"

    def is_root(self, a: int) -> bool:
        _, label = self.payload(a)
        return all(d == 0 for d in label)

    def in_dec(self, a: int, g: int) -> bool:
        return self.payload(a)[0] == g

    def has_edge(self, a: int, b: int, j: int) -> bool:
        _, la = self.payload(a)
        _, lb = self.payload(b)
        k = len(la)
        return (
            len(lb) > k
            and lb[:k] == la
            and lb[k] == j
            and all(d == 0 for d in lb[k + 1 :])
        )

    def all_ids(self) -> range:
        return range(len(self))

    def candidates(self, g: int, parent: int | None, j: int) -> tuple[int, ...]:
        if parent is None:
            return tuple(
                self.id_of((g, (0,) * k)) for k in range(self.max_len + 1)
            )
        if j > self.max_child:
            return ()
        _, label = self.payload(parent)
        if len(label) + 1 > self.max_len:
            return ()
        stem = label + (j,)
        return tuple(
            self.id_of((g, stem + (0,) * k))
            for k in range(self.max_len - len(stem) + 1)
        )


class LengthAlphabet:
    """Truncated length alphabet: letters (g, level) with level in
    0..max_len, every letter a root, and a ->_j b iff level(a) < level(b)
    for every child index."""

    def __init__(self, sig: Signature, max_len: int):
        if max_len < 0:
            raise ValueError("negative level bound")
        self.sig = sig
        self.max_len = max_len
        self.nrels = sig.max_arity

    def __len__(self) -> int:
        return len(self.sig.generators) * (self.max_len + 1)

    def id_of(self, payload: tuple[int, int]) -> int:
        g, lvl = payload
        if not (0 <= lvl <= self.max_len):
            raise ValueError(f"level {lvl} out of range 0..{self.max_len}")
        return g * (self.max_len + 1) + lvl

    def payload(self, a: int) -> tuple[int, int]:
        return divmod(a, self.max_len + 1)

    def letter_str(self, a: int) -> str:
        g, lvl = self.payload(a)
        return f"{self.sig.name(g)}[{lvl}]"

    def is_root(self, a: int) -> bool:
        return True

    def in_dec(self, a: int, g: int) -> bool:
        return self.payload(a)[0] == g

    def has_edge(self, a: int, b: int, j: int) -> bool:
        return self.payload(a)[1] < self.payload(b)[1]

    def all_ids(self) -> range:
        return range(len(self))

    def candidates(self, g: int, parent: int | None, j: int) -> tuple[int, ...]:
        if parent is None:
            lo = 0
        else:
            if j > self.nrels:
                return ()
            lo = self.payload(parent)[1] + 1
        return tuple(
            self.id_of((g, lvl)) for lvl in range(lo, self.max_len + 1)
        )


# ---------------------------------------------------------------------------
# Word polynomials
# ---------------------------------------------------------------------------

class WordPoly(LinComb):
    """Linear combination of words (tuples of letter ids)."""


def word_str(alpha, w: tuple[int, ...]) -> str:
    return ".".join(alpha.letter_str(a) for a in w) if w else "1"


def wordpoly_str(alpha, p: WordPoly) -> str:
    if not p:
        return "0"
    parts = []
    for w in sorted(p.data):
        parts.append(f"{p.data[w]}*{word_str(alpha, w)}")
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# Compatibility and realization
# ---------------------------------------------------------------------------

def is_compatible(f: Forest, alpha, w: tuple[int, ...]) -> bool:
    """Check the letter count, root, decoration, and edge conditions."""
    tbl = node_table(f)
    n = len(tbl.dec)
    if len(w) != n:
        return False
    for i in range(n):
        a = w[i]
        if not alpha.in_dec(a, tbl.dec[i]):
            return False
        pj = tbl.parent[i]
        if pj is None:
            if not alpha.is_root(a):
                return False
        else:
            p, j = pj
            if j > alpha.nrels or not alpha.has_edge(w[p - 1], a, j):
                return False
    return True


def compatible_words(f: Forest, alpha):
    """Iterate the words compatible with f, by depth-first constraint
    propagation in preorder (each node only depends on its parent)."""
    tbl = node_table(f)
    n = len(tbl.dec)
    if n == 0:
        yield ()
        return
    word: list[int] = [0] * n

    def fill(i: int):
        if i == n:
            yield tuple(word)
            return
        pj = tbl.parent[i]
        if pj is None:
            cands = alpha.candidates(tbl.dec[i], None, 0)
        else:
            p, j = pj
            cands = alpha.candidates(tbl.dec[i], word[p - 1], j)
        for a in cands:
            word[i] = a
            yield from fill(i + 1)

    yield from fill(0)


def realize_basis(f: Forest, alpha) -> WordPoly:
    out = WordPoly()
    for w in compatible_words(f, alpha):
        out.add_inplace(w, 1)
    return out


def realize(x: LinComb, alpha) -> WordPoly:
    """Realization map applied to a combination of forests."""
    out = WordPoly()
    for f, c in x.items():
        for w in compatible_words(f, alpha):
            out.add_inplace(w, c)
    return out


# ---------------------------------------------------------------------------
# Disjoint sums and the doubling map
# ---------------------------------------------------------------------------

class SumAlphabet(Alphabet):
    """Disjoint sum of two alphabets, with every cross pair (a, b), a in
    the first part and b a root of the second, added to every edge
    relation.  Letter ids keep the two parts contiguous."""

    def __init__(self, a1, a2):
        sig = a1.sig
        if a2.sig != sig:
            raise ValueError("disjoint sum needs a common signature")
        self.parts = (a1, a2)
        self.split_at = len(a1)
        letters = [(0, a1.payload(a)) for a in a1.all_ids()]
        letters += [(1, a2.payload(b)) for b in a2.all_ids()]
        roots = [(0, a1.payload(a)) for a in a1.all_ids() if a1.is_root(a)]
        roots += [(1, a2.payload(b)) for b in a2.all_ids() if a2.is_root(b)]
        decs = {}
        for g in range(len(sig.generators)):
            ds = [(0, a1.payload(a)) for a in a1.all_ids() if a1.in_dec(a, g)]
            ds += [(1, a2.payload(b)) for b in a2.all_ids() if a2.in_dec(b, g)]
            decs[g] = ds
        nrels = max(a1.nrels, a2.nrels)
        roots2 = [b for b in a2.all_ids() if a2.is_root(b)]
        edges = {}
        for j in range(1, nrels + 1):
            pairs = []
            if j <= a1.nrels:
                for a in a1.all_ids():
                    for b in a1.all_ids():
                        if a1.has_edge(a, b, j):
                            pairs.append(((0, a1.payload(a)), (0, a1.payload(b))))
            if j <= a2.nrels:
                for a in a2.all_ids():
                    for b in a2.all_ids():
                        if a2.has_edge(a, b, j):
                            pairs.append(((1, a2.payload(a)), (1, a2.payload(b))))
            for a in a1.all_ids():
                for b in roots2:
                    pairs.append(((0, a1.payload(a)), (1, a2.payload(b))))
            edges[j] = pairs
        super().__init__(sig, letters, roots, decs, edges, nrels=nrels)


def disjoint_sum(a1, a2) -> SumAlphabet:
    return SumAlphabet(a1, a2)


def theta_split(p: WordPoly, s: SumAlphabet) -> TensorComb:
    """Separate each word of the sum alphabet into its first-part and
    second-part subwords, keeping the relative order within each part."""
    cut = s.split_at
    out = TensorComb()
    for w, c in p.items():
        left = tuple(a for a in w if a < cut)
        right = tuple(a - cut for a in w if a >= cut)
        out.add_inplace((left, right), c)
    return out


# ---------------------------------------------------------------------------
# Position encodings
# ---------------------------------------------------------------------------

def pos_word(f: Forest, alpha: PositionAlphabet) -> tuple[int, ...]:
    """The canonical compatible word using exact position labels."""
    tbl = node_table(f)
    return tuple(
        alpha.id_of((g, p)) for g, p in zip(tbl.dec, tbl.pos)
    )


def word_weight(alpha: PositionAlphabet, w: tuple[int, ...]) -> int:
    return sum(len(alpha.payload(a)[1]) for a in w)


def leading_forest(p: WordPoly, alpha: PositionAlphabet) -> Forest:
    """Reconstruct a forest from the minimal-weight word of a position
    realization.  The minimal word must be unique and decode to a valid
    forest, else ValueError."""
    if not p:
        raise ValueError("zero polynomial has no leading word")
    best = None
    best_w = None
    tie = False
    for w in p.keys():
        wt = word_weight(alpha, w)
        if best_w is None or wt < best_w:
            best, best_w, tie = w, wt, False
        elif wt == best_w:
            tie = True
    if tie:
        raise ValueError("minimal weight is not attained by a unique word")
    seq = []
    for a in best:
        g, label = alpha.payload(a)
        seq.append((g, tuple(d for d in label if d != 0)))
    return forest_from_positions(alpha.sig, seq)


def forest_from_positions(sig: Signature, seq) -> Forest:
    """Rebuild a forest from (generator, position word) pairs in global
    preorder.  Raises ValueError when the data is not a valid preorder
    listing of a forest."""
    trees: list[dict] = []
    current: dict[tuple[int, ...], dict] | None = None

    for g, pos in seq:
        node = {"gen": g, "kids": {}}
        if pos == ():
            current = {(): node}
            trees.append(node)
            continue
        if current is None:
            raise ValueError("first node must sit at the root position")
        parent = current.get(pos[:-1])
        if parent is None:
            raise ValueError(f"position {pos} has no parent in the current tree")
        j = pos[-1]
        if not (1 <= j <= sig.arity(parent["gen"])):
            raise ValueError(f"child index {j} exceeds parent arity")
        if j in parent["kids"]:
            raise ValueError(f"position {pos} assigned twice")
        parent["kids"][j] = node
        current[pos] = node

    from .core import LEAF

    def build(node: dict) -> Term:
        g = node["gen"]
        kids = tuple(
            build(node["kids"][j]) if j in node["kids"] else LEAF
            for j in range(1, sig.arity(g) + 1)
        )
        return Term(g, kids)

    return Forest(tuple(build(t) for t in trees))


def project_lengths(
    p: WordPoly, alpha_p: PositionAlphabet, alpha_l: LengthAlphabet
) -> WordPoly:
    """Letterwise projection sending (g, label) to (g, len(label))."""
    if alpha_l.max_len < alpha_p.max_len:
        raise ValueError("length alphabet truncated below the position one")
    out = WordPoly()
    for w, c in p.items():
        img = tuple(
            alpha_l.id_of((g, len(label)))
            for g, label in (alpha_p.payload(a) for a in w)
        )
        out.add_inplace(img, c)
    return out
