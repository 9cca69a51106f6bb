import pytest

from operadic import quotients as q
from operadic.core import Signature, parse_forest, parse_term
from operadic.hopf import TensorComb


def test_content_display(sig):
    t = parse_term(sig, "b(a(b(*,*)),c(a(*),*,b(*,*)))")
    names = [sig.name(g) for g in q.content(t)]
    assert names == ["a", "a", "b", "b", "b", "c"]


def test_infix_display():
    s = Signature((("a", 2), ("b", 2), ("c", 2)))
    t = parse_term(s, "b(a(*,b(*,*)),c(c(*,*),a(*,*)))")
    assert "".join(s.name(g) for g in q.infix(t)) == "abbcca"


def test_mas_arity_and_compose(sig):
    a, b, c = (sig.index(n) for n in "abc")
    m1 = (a, b, b, b, c)
    assert q.mas_arity(sig, m1) == (1 + 2 + 2 + 2 + 3) - 5 + 1
    m2 = (b, c, c)
    got = q.mas_compose(sig, m1, 4, m2)
    assert got == tuple(sorted(m1 + m2))
    with pytest.raises(ValueError):
        q.mas_compose(sig, m1, 7, m2)
    assert q.mas_arity(sig, ()) == 1


def test_int_compose():
    b, a = 1, 0
    u = (b, b, a, b, a)
    v = (a, a, b)
    assert q.int_compose(u, 3, v) == (b, b, a, a, b, a, b, a)
    with pytest.raises(ValueError):
        q.int_compose(u, 7, v)


def test_project_forest(sig):
    f = parse_forest(sig, "a(b(*,*)) ; a(*)")
    a, b = sig.index("a"), sig.index("b")
    assert q.project_forest("mas", f) == ((a, b), (a,))
    assert q.project_forest("as", f) == (2, 1)


def test_phi_expand_sizes(sig):
    a, b = sig.index("a"), sig.index("b")
    x = q.phi_expand(sig, "mas", ((a, b),))
    # a above b, b above a in either slot
    assert len(x) == 3
    assert all(c == 1 for _, c in x.items())
    with pytest.raises(ValueError):
        q.phi_expand(sig, "as", (0,))


def test_phi_unknown_kind(sig):
    with pytest.raises(ValueError):
        q.project_term("bogus", parse_term(sig, "a(*)"))


def test_mas_coproduct_counts(sig):
    a = sig.index("a")
    got = q.mas_coproduct(sig, ((a, a),))
    want = TensorComb(
        {
            ((), ((a, a),)): 1,
            (((a,),), ((a,),)): 1,
            (((a, a),), ()): 1,
        }
    )
    assert got == want


def test_fdb_closed_form_coefficients():
    # one-generator case: multiplicity of a split only depends on the
    # left degree and the number of right parts
    from math import comb

    for r in (0, 1, 2, 3):
        delta = q.fdb_coproduct(r, 1, (3,))
        for (left, right), c in delta.items():
            dsub = left[0] if left else 0
            assert c == comb(dsub * r + 1, len(right)) or dsub == 3


def test_fdb_input_validation():
    with pytest.raises(ValueError):
        q.fdb_coproduct(-1, 1, (2,))
    with pytest.raises(ValueError):
        q.fdb_coproduct(1, 1, ((1, 0),))
    with pytest.raises(ValueError):
        q.fdb_coproduct(0, 3, (2,))


def test_phr_coproduct_empty():
    got = q.phr_coproduct(())
    assert got == TensorComb({((), ()): 1})


def test_congruences(sig):
    assert q.congruence_check(sig, "mas", 2)
    s2 = Signature((("a", 2), ("b", 2)))
    assert q.congruence_check(s2, "int", 2)
    assert q.congruence_check(Signature((("a", 2),)), "as", 2)
