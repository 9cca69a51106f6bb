import pytest

from operadic import alphabets as ab
from operadic.alphabets import (
    Alphabet,
    LengthAlphabet,
    PositionAlphabet,
    disjoint_sum,
    is_compatible,
    leading_forest,
    pos_word,
    project_lengths,
    realize_basis,
    theta_split,
    word_weight,
)
from operadic.core import forest_degree, forest_depth, parse_forest


def test_position_alphabet_size(sig):
    assert len(PositionAlphabet(sig, 1, 3)) == 15
    assert len(PositionAlphabet(sig, 2, 3)) == 3 * (1 + 4 + 16)


def test_position_ids_round_trip(sig):
    alpha = PositionAlphabet(sig, 3, 3)
    for a in alpha.all_ids():
        assert alpha.id_of(alpha.payload(a)) == a


def test_position_relations(sig):
    alpha = PositionAlphabet(sig, 3, 3)
    root = alpha.id_of((1, (0, 0)))
    assert alpha.is_root(root)
    child = alpha.id_of((0, (0, 0, 2)))
    assert alpha.has_edge(root, child, 2)
    assert not alpha.has_edge(root, child, 1)
    deep = alpha.id_of((0, (0, 2, 0)))
    assert not alpha.has_edge(root, deep, 2)


def test_length_alphabet(sig):
    alpha = LengthAlphabet(sig, 4)
    lo = alpha.id_of((2, 1))
    hi = alpha.id_of((0, 3))
    assert alpha.has_edge(lo, hi, 1) and alpha.has_edge(lo, hi, 3)
    assert not alpha.has_edge(hi, lo, 1)
    assert alpha.is_root(hi)
    for a in alpha.all_ids():
        assert alpha.id_of(alpha.payload(a)) == a


def test_compatibility_example(sig):
    # the running 8-node forest and its exact position word
    f = parse_forest(sig, "b(c(*,*,a(*)),a(b(*,*))) ; c(*,a(*),b(*,*))")
    alpha = PositionAlphabet(sig, 4, 3)
    w = pos_word(f, alpha)
    payloads = [alpha.payload(a) for a in w]
    names = [(sig.name(g), lab) for g, lab in payloads]
    assert names == [
        ("b", ()),
        ("c", (1,)),
        ("a", (1, 3)),
        ("a", (2,)),
        ("b", (2, 1)),
        ("c", ()),
        ("a", (2,)),
        ("b", (3,)),
    ]
    assert word_weight(alpha, w) == 8
    assert is_compatible(f, alpha, w)
    assert not is_compatible(f, alpha, w[:-1])


def test_realize_unary_families():
    from operadic.core import Signature

    s = Signature((("a", 2),))
    alpha = PositionAlphabet(s, 2, 2)
    f = parse_forest(s, "a(*,*)")
    poly = realize_basis(f, alpha)
    # one compatible letter per all-zero label length
    assert set(poly.keys()) == {
        (alpha.id_of((0, ())),),
        (alpha.id_of((0, (0,))),),
        (alpha.id_of((0, (0, 0))),),
    }


def test_leading_forest_round_trip(sig):
    f = parse_forest(sig, "c(b(*,*),*,a(c(*,*,*))) ; b(a(*),*)")
    lmax = forest_depth(f) + forest_degree(f)
    alpha = PositionAlphabet(sig, lmax, 3)
    poly = realize_basis(f, alpha)
    assert leading_forest(poly, alpha) == f


def test_leading_forest_rejects_ties(sig):
    alpha = PositionAlphabet(sig, 2, 3)
    p = ab.WordPoly(
        {
            (alpha.id_of((0, ())),): 1,
            (alpha.id_of((1, ())),): 1,
        }
    )
    with pytest.raises(ValueError):
        leading_forest(p, alpha)
    with pytest.raises(ValueError):
        leading_forest(ab.WordPoly(), alpha)


def test_project_lengths_letterwise(sig):
    ap = PositionAlphabet(sig, 3, 3)
    al = LengthAlphabet(sig, 3)
    f = parse_forest(sig, "b(a(*),*)")
    lhs = project_lengths(realize_basis(f, ap), ap, al)
    rhs = realize_basis(f, al)
    assert lhs == rhs


def test_explicit_alphabet_and_sum(sig):
    a1 = Alphabet(
        sig,
        ["x", "y"],
        ["x"],
        {0: ["x", "y"], 1: ["y"], 2: []},
        {1: [("x", "y")], 2: [], 3: []},
        nrels=3,
    )
    a2 = Alphabet(
        sig,
        ["p"],
        ["p"],
        {0: ["p"], 1: ["p"], 2: ["p"]},
        {1: [], 2: [], 3: []},
        nrels=3,
    )
    s = disjoint_sum(a1, a2)
    assert len(s) == 3
    # cross edges reach the second part's roots at every child index
    xa = s.ids[(0, "x")]
    pa = s.ids[(1, "p")]
    for j in (1, 2, 3):
        assert s.has_edge(xa, pa, j)
    assert s.is_root(pa) and s.is_root(xa)
    f = parse_forest(sig, "a(a(*))")
    split = theta_split(realize_basis(f, s), s)
    # words: xx is not an edge; xy, xp, pp are the compatible ones minus
    # decoration filters; check against a direct count
    total = sum(c for _, c in split.items())
    direct = len(list(ab.compatible_words(f, s)))
    assert total == direct


def test_truncation_errors(sig):
    with pytest.raises(ValueError):
        PositionAlphabet(sig, -1)
    with pytest.raises(ValueError):
        LengthAlphabet(sig, -2)
    alpha = PositionAlphabet(sig, 1, 3)
    with pytest.raises(ValueError):
        alpha.id_of((0, (1, 1)))
