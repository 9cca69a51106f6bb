import pytest
from hypothesis import given, settings, strategies as st

from operadic import nck, wqsym
from operadic.alphabets import LengthAlphabet, realize_basis
from operadic.core import parse_forest
from operadic.hopf import LinComb, TensorComb


def test_trim_display(sig):
    f = parse_forest(sig, "b(a(*),*) ; * ; c(*,*,b(a(*),c(*,*,*)))")
    got = nck.trim(f)
    assert got == nck.parse_trimmed(sig, "b(a) ; c(b(a,c))")
    assert nck.trimmed_str(sig, got) == "b(a);c(b(a,c))"


def test_parse_trimmed_round_trip(sig):
    for s in ("c(a,c(c,b,b)) ; b ; a(b)", "b", "a(b(c))"):
        t = nck.parse_trimmed(sig, s)
        assert nck.parse_trimmed(sig, nck.trimmed_str(sig, t)) == t
    with pytest.raises(Exception):
        nck.parse_trimmed(sig, "a(b,c)")  # too many children for arity 1
    with pytest.raises(Exception):
        nck.parse_trimmed(sig, "a(*)")


def test_charge_examples(sig):
    assert nck.charge(sig, nck.parse_trimmed(sig, "c(a,c(c,b,b)) ; b ; a(b)")) == 3
    assert nck.charge(sig, nck.parse_trimmed(sig, "b(a) ; c(b(a,c))")) == 6
    assert nck.charge(sig, nck.EMPTY_TRIMMED) == 1


def test_untrim_inverts_trim(sig):
    t = nck.parse_trimmed(sig, "b(a) ; c(b(a,c))")
    pre = nck.untrim(sig, t)
    assert len(pre) == 6
    assert all(nck.trim(f) == t for f in pre)
    one = nck.untrim_one(sig, t)
    assert one in pre


def test_nck_product(sig):
    x = LinComb.basis(nck.parse_trimmed(sig, "b(a)"))
    y = LinComb.basis(nck.parse_trimmed(sig, "c"))
    assert nck.nck_product(x, y) == LinComb.basis(
        nck.parse_trimmed(sig, "b(a) ; c")
    )


def test_nck_coproduct_small(sig):
    t = nck.parse_trimmed(sig, "b(a)")
    got = nck.nck_coproduct_basis(t)
    p = lambda s: nck.parse_trimmed(sig, s)
    want = TensorComb(
        {
            (p(""), p("b(a)")): 1,
            (p("b"), p("a")): 1,
            (p("b(a)"), p("")): 1,
        }
    )
    assert got == want


def test_length_polynomial_display(sig):
    # constraints: l1<l2, l1<l3, l3<l4, l3<l5, l3<l6, l7 free
    t = nck.parse_trimmed(sig, "c(a,c(c,b,b)) ; b")
    lmax = 7
    alpha = LengthAlphabet(sig, lmax)
    poly = nck.length_polynomial(sig, t, lmax)
    a, b, c = (sig.index(n) for n in "abc")
    gens = (c, a, c, c, b, b, b)

    def count():
        total = 0
        rng = range(lmax + 1)
        for l1 in rng:
            for l2 in rng:
                if not l1 < l2:
                    continue
                for l3 in rng:
                    if not l1 < l3:
                        continue
                    n456 = sum(1 for l in rng if l3 < l) ** 3
                    total += n456 * (lmax + 1)
        return total

    assert all(c0 == 1 for _, c0 in poly.items())
    assert len(poly) == count()
    for w in poly.keys():
        assert tuple(alpha.payload(x)[0] for x in w) == gens


def test_length_polynomial_preimage_independent(sig):
    t = nck.parse_trimmed(sig, "c(b,a)")
    polys = {
        tuple(sorted(realize_basis(f, LengthAlphabet(sig, 4)).items()))
        for f in nck.untrim(sig, t)
    }
    assert len(polys) == 1


def test_enumerate_trimmed_counts(sig):
    counts = [len(nck.enumerate_trimmed_trees(sig, d)) for d in range(1, 5)]
    assert counts == [3, 9, 45, 270]


def test_pack_examples(sig):
    a, b, c = (sig.index(n) for n in "abc")
    u = ((4, b), (2, b), (3, a), (4, b), (4, c), (6, c), (3, a))
    assert wqsym.pack(u) == (
        (3, b), (1, b), (2, a), (3, b), (3, c), (4, c), (2, a)
    )


@settings(max_examples=200, deadline=None)
@given(
    st.lists(
        st.tuples(st.integers(1, 9), st.integers(0, 2)), max_size=6
    )
)
def test_pack_idempotent(pairs):
    u = tuple(pairs)
    assert wqsym.pack(wqsym.pack(u)) == wqsym.pack(u)
    assert wqsym.is_packed(wqsym.pack(u))


def test_m_polynomial_constraint(sig):
    a, b, c = (sig.index(n) for n in "abc")
    u = ((2, b), (1, c), (1, c), (3, a))
    alpha = LengthAlphabet(sig, 4)
    poly = wqsym.m_polynomial(sig, u, 4)
    for w in poly.keys():
        lv = [alpha.payload(x)[1] for x in w]
        assert lv[1] == lv[2] < lv[0] < lv[3]
    assert len(poly) == len(list(__import__("itertools").combinations(range(5), 3)))


def test_m_polynomial_requires_packed(sig):
    with pytest.raises(ValueError):
        wqsym.m_polynomial(sig, ((2, 0),), 3)


def test_decompose_matches_realization(sig):
    f = parse_forest(sig, "b(a(*),*)")
    assert wqsym.decompose_check(sig, f, 4)


def test_mas_lengths_expand_small(sig):
    a = sig.index("a")
    got = nck.mas_lengths_expand(sig, (a,), 3)
    alpha = LengthAlphabet(sig, 3)
    assert got == realize_basis(parse_forest(sig, "a(*)"), alpha)
