import itertools

import pytest
from hypothesis import given, settings, strategies as st

from operadic import core
from operadic.core import (
    Forest,
    LEAF,
    Signature,
    Term,
    TermSyntaxError,
    admissible_pairs,
    compose,
    enumerate_forests,
    enumerate_terms,
    forest_arity,
    forest_degree,
    forest_str,
    node_table,
    parse_forest,
    parse_term,
    partial_compose,
    restrict,
    term_arity,
    term_degree,
    term_str,
)


def test_signature_profiles(sig):
    assert sig.profile() == (0, 1, 1, 1)
    assert sig.max_arity == 3
    s2 = Signature.from_profile((2,))
    assert [s2.arity(g) for g in range(2)] == [0, 0]
    with pytest.raises(TermSyntaxError):
        Signature((("a", 1), ("a", 2)))


def test_signature_from_text():
    s = Signature.from_text("a 1\nb 2\n# comment\nc 3\n")
    assert s.generators == (("a", 1), ("b", 2), ("c", 3))
    with pytest.raises(TermSyntaxError):
        Signature.from_text("a\n")


def test_parse_examples(sig):
    t = parse_term(sig, "c(*,b(*,a(*)),b(*,*))")
    assert term_degree(t) == 4
    assert term_arity(t) == 5
    assert term_str(sig, t) == "c(*,b(*,a(*)),b(*,*))"


def test_parse_rejects_bad_input(sig):
    for bad in ("c(*,*)", "d(*)", "a(*", "a(*))", "", "a(*);;a(*)"):
        with pytest.raises(TermSyntaxError):
            parse_term(sig, bad)


def test_nullary_generators():
    s = Signature((("x", 0), ("y", 0)))
    assert parse_term(s, "x") == Term(0, ())
    assert parse_term(s, "y()") == Term(1, ())
    assert term_str(s, Term(0, ())) == "x"
    assert term_arity(Term(0, ())) == 0


def test_partial_compose(sig):
    t = parse_term(sig, "b(a(*),c(*,*,*))")
    u = parse_term(sig, "b(*,c(*,*,*))")
    got = partial_compose(t, 2, u)
    assert got == parse_term(sig, "b(a(*),c(b(*,c(*,*,*)),*,*))")
    with pytest.raises(ValueError):
        partial_compose(t, 5, u)


def test_compose_unit(sig):
    t = parse_term(sig, "b(a(*),*)")
    assert compose(t, (LEAF, LEAF)) == t
    assert compose(LEAF, (t,)) == t


def test_forest_node_table(sig):
    f = parse_forest(sig, "* ; c(a(*),*,b(a(*),*)) ; * ; * ; b(*,b(a(*),*))")
    assert forest_degree(f) == 7
    assert forest_arity(f) == 10
    tbl = node_table(f)
    assert sig.name(tbl.dec[0]) == "c"
    assert sig.name(tbl.dec[2]) == "b"
    assert tbl.pos[3] == (3, 1)
    assert tbl.pos[6] == (2, 1)
    assert tbl.pos[0] == () and tbl.pos[4] == ()
    assert tbl.parent[0] is None and tbl.parent[4] is None
    assert tbl.height[0] == 1 and tbl.height[3] == 3


def test_restriction_display(sig):
    f = parse_forest(sig, "b(a(*),c(*,b(*,*),*)) ; a(c(*,*,b(*,*)))")
    got = restrict(f, {1, 2, 4, 7})
    assert got == parse_forest(sig, "b(a(*),*) ; b(*,*) ; b(*,*)")
    adm = set(admissible_pairs(f))
    assert ((1, 2, 4, 7), (3, 5, 6)) not in adm
    assert ((1, 3, 5), (2, 4, 6, 7)) in adm


def test_admissible_pairs_order(sig):
    f = parse_forest(sig, "b(a(*),*)")
    firsts = [i1 for i1, _ in admissible_pairs(f)]
    assert firsts == [(), (1,), (1, 2)]
    assert firsts == sorted(firsts)


def _brute_force_admissible_count(f):
    tbl = node_table(f)
    n = len(tbl.dec)
    parent = [pj[0] if pj else 0 for pj in tbl.parent]
    count = 0
    for mask in range(1 << n):
        ok = True
        for i in range(n):
            if mask >> i & 1:
                p = parent[i]
                if p and not (mask >> (p - 1) & 1):
                    ok = False
                    break
        if ok:
            count += 1
    return count


def test_admissible_count_brute_force(sig):
    for d in range(6):
        for f in enumerate_forests(sig, d):
            expected = _brute_force_admissible_count(f)
            assert sum(1 for _ in admissible_pairs(f)) == expected


def test_term_counts(sig):
    assert core.term_counts(sig, 5) == [1, 3, 18, 144, 1323, 13176]
    assert [len(enumerate_terms(sig, d)) for d in range(4)] == [1, 3, 18, 144]


def test_enumerate_forests_reduced(sig):
    for d in range(4):
        forests = enumerate_forests(sig, d)
        assert len(forests) == len(set(forests))
        for f in forests:
            assert core.is_reduced(f)
            assert forest_degree(f) == d


@st.composite
def terms(draw, sig, max_depth=3):
    if max_depth == 0 or draw(st.booleans()):
        return LEAF
    g = draw(st.integers(0, len(sig.generators) - 1))
    kids = tuple(
        draw(terms(sig, max_depth - 1)) for _ in range(sig.arity(g))
    )
    return Term(g, kids)


SIG = Signature((("a", 1), ("b", 2), ("c", 3)))


@settings(max_examples=200, deadline=None)
@given(st.lists(terms(SIG), min_size=0, max_size=3))
def test_parse_print_round_trip(ts):
    f = Forest(tuple(ts))
    assert parse_forest(SIG, forest_str(SIG, f)) == f


@settings(max_examples=100, deadline=None)
@given(st.lists(terms(SIG), min_size=1, max_size=2), st.data())
def test_restrict_degree(ts, data):
    f = core.reduce_forest(Forest(tuple(ts)))
    n = forest_degree(f)
    nodes = data.draw(st.sets(st.integers(1, max(n, 1))) if n else st.just(set()))
    nodes = {i for i in nodes if i <= n}
    g = restrict(f, nodes)
    assert forest_degree(g) == len(nodes)
    assert core.is_reduced(g)


def test_restrict_complementary_split(sig):
    f = parse_forest(sig, "c(*,a(*),*) ; b(*,*)")
    for i1, i2 in admissible_pairs(f):
        assert forest_degree(restrict(f, i1)) + forest_degree(restrict(f, i2)) == 3
