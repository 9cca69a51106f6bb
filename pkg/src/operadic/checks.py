"""Acceptance checks shared by the test suite and the self-test verb.

Each check raises AssertionError on failure and returns None on
success.  Expected values are frozen literals; property checks compare
two independent computation routes and never share code between the
routes they compare.
"""

from __future__ import annotations

import itertools
import random
from math import comb

from . import alphabets as ab
from . import core, hopf, nck, quotients, wqsym

SIGMA_E = core.Signature((("a", 1), ("b", 2), ("c", 3)))
SIG_BIN = core.Signature((("a", 2),))


def _forests_up_to(sig, degree):
    out = []
    for d in range(degree + 1):
        out.extend(core.enumerate_forests(sig, d))
    return out


def _tensor_from_pairs(sig, pairs):
    out = hopf.TensorComb()
    for left, right, c in pairs:
        out.add_inplace(
            (core.parse_forest(sig, left), core.parse_forest(sig, right)), c
        )
    return out


# -- 1 ----------------------------------------------------------------------

def check_fdb_coproduct_degree_three():
    """Coproduct of the degree-3 element in the one-generator binary
    case has coefficients 1, 2, 1, 3, 1 on its five tensors."""
    got = quotients.fdb_coproduct(1, 1, (3,))
    want = hopf.TensorComb(
        {
            ((), (3,)): 1,
            ((1,), (2,)): 2,
            ((1,), (1, 1)): 1,
            ((2,), (1,)): 3,
            ((3,), ()): 1,
        }
    )
    assert got == want, f"unexpected coproduct {got!r}"


# -- 2 ----------------------------------------------------------------------

def check_phi_degree_three_binary():
    """The canonical section of the degree-3 associative element is the
    sum of the five binary trees, all coefficients 1."""
    x = quotients.phi_expand(SIG_BIN, "as", (3,))
    assert len(x) == 5, f"support size {len(x)}"
    assert all(c == 1 for _, c in x.items())
    expected = {
        core.parse_forest(SIG_BIN, s)
        for s in (
            "a(a(a(*,*),*),*)",
            "a(a(*,a(*,*)),*)",
            "a(a(*,*),a(*,*))",
            "a(*,a(a(*,*),*))",
            "a(*,a(*,a(*,*)))",
        )
    }
    assert set(x.keys()) == expected


# -- 3 ----------------------------------------------------------------------

def check_hilbert_closed_forms():
    for k in (1, 2, 3):
        dims = hopf.hilbert_dims(core.Signature.from_profile((0, k)), 6)
        for n in range(1, 7):
            assert dims[n] == k**n * 2 ** (n - 1), (k, n, dims[n])
        dims = hopf.hilbert_dims(core.Signature.from_profile((0, 0, k)), 6)
        for n in range(1, 7):
            assert dims[n] == k**n * comb(2 * n - 1, n), (k, n, dims[n])


# -- 4 ----------------------------------------------------------------------

def check_classification_matches_symmetry():
    """classify_profile agrees with brute-force symmetry of the product
    and coproduct on degree <= 3 basis elements."""
    for profile in ((2,), (0, 1), (0, 1, 1), (0, 0, 1)):
        sig = core.Signature.from_profile(profile)
        forests = _forests_up_to(sig, 3)
        comm = True
        cocomm = True
        for f in forests:
            if cocomm:
                delta = hopf.coproduct_basis(f)
                flipped = hopf.TensorComb(
                    {(b, a): c for (a, b), c in delta.items()}
                )
                if delta != flipped:
                    cocomm = False
            if comm:
                for g in forests:
                    fg = core.Forest(f.terms + g.terms)
                    gf = core.Forest(g.terms + f.terms)
                    if fg != gf:
                        comm = False
                        break
        assert (comm, cocomm) == hopf.classify_profile(sig), profile


# -- 5 ----------------------------------------------------------------------

def check_hopf_axioms():
    forests = _forests_up_to(SIGMA_E, 4)
    for f in forests:
        delta = hopf.coproduct_basis(f)
        lhs = hopf.TensorComb()
        rhs = hopf.TensorComb()
        for (a, b), c in delta.items():
            for (a1, a2), c1 in hopf.coproduct_basis(a).items():
                lhs.add_inplace(((a1, a2), b), c * c1)
            for (b1, b2), c1 in hopf.coproduct_basis(b).items():
                rhs.add_inplace((a, (b1, b2)), c * c1)
        # compare as flat triples
        flat_l = {(k[0][0], k[0][1], k[1]): c for k, c in lhs.items()}
        flat_r = {(k[0], k[1][0], k[1][1]): c for k, c in rhs.items()}
        assert flat_l == flat_r, f"coassociativity fails on {f}"
    by_deg = {}
    for f in forests:
        by_deg.setdefault(core.forest_degree(f), []).append(f)
    for d1 in range(5):
        for d2 in range(5 - d1):
            for f in by_deg[d1]:
                for g in by_deg[d2]:
                    fg = core.Forest(f.terms + g.terms)
                    lhs = hopf.coproduct_basis(fg)
                    rhs = hopf.TensorComb()
                    for (a1, a2), c1 in hopf.coproduct_basis(f).items():
                        for (b1, b2), c2 in hopf.coproduct_basis(g).items():
                            rhs.add_inplace(
                                (
                                    core.Forest(a1.terms + b1.terms),
                                    core.Forest(a2.terms + b2.terms),
                                ),
                                c1 * c2,
                            )
                    assert lhs == rhs, f"multiplicativity fails on {f};{g}"
    for f in _forests_up_to(SIGMA_E, 3):
        assert hopf.convolution_check(f), f"antipode identity fails on {f}"


# -- 6 ----------------------------------------------------------------------

def check_coproduct_engines_agree():
    for d in range(5):
        for t in core.enumerate_terms(SIGMA_E, d):
            if t.is_leaf:
                continue
            f = core.Forest((t,))
            assert hopf.coproduct_basis(f) == hopf.coproduct_basis_fact(f), t


# -- 7 ----------------------------------------------------------------------

def _random_alphabet(sig, rng, letters=3):
    pays = list(range(letters))
    roots = [p for p in pays if rng.random() < 0.7] or [rng.choice(pays)]
    decs = {
        g: [p for p in pays if rng.random() < 0.7]
        for g in range(len(sig.generators))
    }
    edges = {
        j: [(p, q) for p in pays for q in pays if rng.random() < 0.4]
        for j in range(1, sig.max_arity + 1)
    }
    return ab.Alphabet(sig, pays, roots, decs, edges, nrels=sig.max_arity)


def _check_doubling(sig, a1, a2, forests):
    s = ab.disjoint_sum(a1, a2)
    for f in forests:
        lhs = ab.theta_split(ab.realize_basis(f, s), s)
        rhs = hopf.TensorComb()
        for (g1, g2), c in hopf.coproduct_basis(f).items():
            p1 = ab.realize_basis(g1, a1)
            p2 = ab.realize_basis(g2, a2)
            for w1, c1 in p1.items():
                for w2, c2 in p2.items():
                    rhs.add_inplace((w1, w2), c * c1 * c2)
        assert lhs == rhs, f"doubling fails on {f}"


def check_doubling_identity():
    forests = _forests_up_to(SIGMA_E, 3)
    _check_doubling(
        SIGMA_E,
        ab.LengthAlphabet(SIGMA_E, 2),
        ab.LengthAlphabet(SIGMA_E, 3),
        forests,
    )
    rng = random.Random(20240817)
    small = _forests_up_to(SIGMA_E, 2)
    for _ in range(50):
        a1 = _random_alphabet(SIGMA_E, rng)
        a2 = _random_alphabet(SIGMA_E, rng)
        _check_doubling(SIGMA_E, a1, a2, small)


# -- 8 ----------------------------------------------------------------------

def check_position_triangularity():
    for d in range(1, 5):
        for f in core.enumerate_forests(SIGMA_E, d):
            lmax = core.forest_depth(f) + d
            alpha = ab.PositionAlphabet(SIGMA_E, lmax)
            poly = ab.realize_basis(f, alpha)
            w0 = ab.pos_word(f, alpha)
            wt0 = ab.word_weight(alpha, w0)
            assert poly.coeff(w0) == 1, f
            others = [
                w
                for w in poly.keys()
                if w != w0 and ab.word_weight(alpha, w) <= wt0
            ]
            assert not others, f"weight tie below pos word on {f}"
            assert ab.leading_forest(poly, alpha) == f, f


# -- 9 ----------------------------------------------------------------------

def check_lengths_projection():
    for d in range(1, 4):
        for f in core.enumerate_forests(SIGMA_E, d):
            lmax = core.forest_depth(f) + d
            ap = ab.PositionAlphabet(SIGMA_E, lmax)
            al = ab.LengthAlphabet(SIGMA_E, lmax)
            lhs = ab.project_lengths(ab.realize_basis(f, ap), ap, al)
            rhs = ab.realize_basis(f, al)
            assert lhs == rhs, f


# -- 10 ---------------------------------------------------------------------

def check_wqsym_decomposition():
    a_idx, b_idx, c_idx = (SIGMA_E.index(n) for n in "abc")
    f = core.parse_forest(SIGMA_E, "c(a(*),*,b(*,*))")
    got = wqsym.wqsym_decompose(f)
    want = hopf.LinComb(
        {
            ((1, c_idx), (2, a_idx), (2, b_idx)): 1,
            ((1, c_idx), (2, a_idx), (3, b_idx)): 1,
            ((1, c_idx), (3, a_idx), (2, b_idx)): 1,
        }
    )
    assert got == want, got
    for d in range(4):
        for g in core.enumerate_forests(SIGMA_E, d):
            assert wqsym.decompose_check(SIGMA_E, g, 5), g
            supports = [
                set(wqsym.m_polynomial(SIGMA_E, u, 5).keys())
                for u in wqsym.wqsym_decompose(g).keys()
            ]
            for s1, s2 in itertools.combinations(supports, 2):
                assert not (s1 & s2), f"overlapping M supports on {g}"


# -- 11 ---------------------------------------------------------------------

def check_charge():
    t1 = nck.parse_trimmed(SIGMA_E, "c(a,c(c,b,b)) ; b ; a(b)")
    assert nck.charge(SIGMA_E, t1) == 3
    t2 = nck.parse_trimmed(SIGMA_E, "b(a) ; c(b(a,c))")
    assert nck.charge(SIGMA_E, t2) == 6
    for d in range(6):
        for t in nck.enumerate_trimmed_forests(SIGMA_E, d):
            pre = nck.untrim(SIGMA_E, t)
            assert nck.charge(SIGMA_E, t) == len(pre), t
            assert len(set(pre)) == len(pre), t
            assert all(nck.trim(f) == t for f in pre), t


# -- 12 ---------------------------------------------------------------------

def check_nck_coproduct():
    t = nck.parse_trimmed(SIGMA_E, "c(b,a)")
    got = nck.nck_coproduct_basis(t)
    p = lambda s: nck.parse_trimmed(SIGMA_E, s)
    want = hopf.TensorComb(
        {
            (p(""), p("c(b,a)")): 1,
            (p("c"), p("b;a")): 1,
            (p("c(b)"), p("a")): 1,
            (p("c(a)"), p("b")): 1,
            (p("c(b,a)"), p("")): 1,
        }
    )
    assert got == want, got
    for d in range(5):
        for f in core.enumerate_forests(SIGMA_E, d):
            lhs = hopf.TensorComb()
            for (a, b), c in hopf.coproduct_basis(f).items():
                lhs.add_inplace((nck.trim(a), nck.trim(b)), c)
            rhs = nck.nck_coproduct_basis(nck.trim(f))
            assert lhs == rhs, f


# -- 13 ---------------------------------------------------------------------

def check_lengths_kernel():
    alpha = ab.LengthAlphabet(SIGMA_E, 6)
    by_trim: dict = {}
    polys: dict = {}
    for d in range(1, 5):
        al = ab.LengthAlphabet(SIGMA_E, d + 2)
        for f in core.enumerate_forests(SIGMA_E, d):
            poly = ab.realize_basis(f, al)
            polys[f] = poly
            by_trim.setdefault(nck.trim(f), []).append(f)
    for t, fs in by_trim.items():
        first = polys[fs[0]]
        for f in fs[1:]:
            assert polys[f] == first, f"kernel lemma fails on {t}"
    rng = random.Random(991)
    trims = sorted(
        by_trim,
        key=lambda t: (nck.trimmed_degree(t), nck.trimmed_str(SIGMA_E, t)),
    )
    for _ in range(20):
        t1, t2 = rng.sample(trims, 2)
        if nck.trimmed_degree(t1) != nck.trimmed_degree(t2):
            # different degrees would make the check trivial
            t2 = rng.choice(
                [t for t in trims
                 if nck.trimmed_degree(t) == nck.trimmed_degree(t1)
                 and t != t1]
            )
        d = core.forest_degree(by_trim[t1][0])
        al = ab.LengthAlphabet(SIGMA_E, d + 2)
        p1 = ab.realize_basis(by_trim[t1][0], al)
        p2 = ab.realize_basis(by_trim[t2][0], al)
        assert p1 != p2, (t1, t2)


# -- 14 ---------------------------------------------------------------------

def _mas_phrase_of_forest(f):
    return quotients.project_forest("mas", f)


def check_mas_coproduct():
    a, b = SIGMA_E.index("a"), SIGMA_E.index("b")
    got = quotients.mas_coproduct(SIGMA_E, ((a, b, b),))
    want = hopf.TensorComb(
        {
            ((), ((a, b, b),)): 1,
            (((a,),), ((b, b),)): 1,
            (((b,),), ((a, b),)): 2,
            (((b,),), ((a,), (b,))): 1,
            (((b,),), ((b,), (a,))): 1,
            (((a, b),), ((b,),)): 2,
            (((b, b),), ((a,),)): 3,
            (((a, b, b),), ()): 1,
        }
    )
    assert got == want, got
    gens = range(len(SIGMA_E.generators))
    phrases = [()]
    for size in (1, 2, 3):
        for m in itertools.combinations_with_replacement(gens, size):
            phrases.append((m,))
    for phrase in phrases:
        # the section is a coalgebra splitting: the coproduct of the
        # whole fiber sum equals the closed form with both legs expanded
        lhs = hopf.coproduct(quotients.phi_expand(SIGMA_E, "mas", phrase))
        rhs = hopf.TensorComb()
        for (u, v), c in quotients.mas_coproduct(SIGMA_E, phrase).items():
            for fu, cu in quotients.phi_expand(SIGMA_E, "mas", u).items():
                for fv, cv in quotients.phi_expand(SIGMA_E, "mas", v).items():
                    rhs.add_inplace((fu, fv), c * cu * cv)
        assert lhs == rhs, phrase


# -- 15 ---------------------------------------------------------------------

def check_fdb_specializations():
    got = quotients.fdb_coproduct(2, 1, (3,))
    want = hopf.TensorComb(
        {
            ((), (3,)): 1,
            ((1,), (2,)): 3,
            ((1,), (1, 1)): 3,
            ((2,), (1,)): 5,
            ((3,), ()): 1,
        }
    )
    assert got == want, got
    got = quotients.fdb_coproduct(0, 3, ((1, 2, 0),))
    want = hopf.TensorComb(
        {
            ((), ((1, 2, 0),)): 1,
            (((1, 0, 0),), ((0, 2, 0),)): 1,
            (((0, 1, 0),), ((1, 1, 0),)): 1,
            (((0, 2, 0),), ((1, 0, 0),)): 1,
            (((1, 1, 0),), ((0, 1, 0),)): 1,
            (((1, 2, 0),), ()): 1,
        }
    )
    assert got == want, got


# -- 16 ---------------------------------------------------------------------

def check_mas_lengths_expansion():
    gens = range(len(SIGMA_E.generators))
    for size in (1, 2, 3):
        for m in itertools.combinations_with_replacement(gens, size):
            lhs = nck.mas_lengths_expand(SIGMA_E, m, 5)
            rhs = quotients.realize_quotient(
                SIGMA_E, "mas", (m,), ab.LengthAlphabet(SIGMA_E, 5)
            )
            assert lhs == rhs, m
    a, b = SIGMA_E.index("a"), SIGMA_E.index("b")
    al = ab.LengthAlphabet(SIGMA_E, 5)
    poly = nck.mas_lengths_expand(SIGMA_E, (a, b, b), 5)
    L = lambda g, lvl: al.id_of((g, lvl))
    probes = {
        (L(a, 0), L(b, 1), L(b, 2)): 2,
        (L(b, 0), L(a, 1), L(b, 2)): 3,
        (L(b, 0), L(a, 2), L(b, 1)): 1,
        (L(b, 0), L(a, 1), L(b, 1)): 1,
        (L(b, 0), L(b, 1), L(a, 2)): 5,
        (L(b, 0), L(b, 2), L(a, 1)): 1,
        (L(b, 0), L(b, 1), L(a, 1)): 1,
    }
    for w, c in probes.items():
        assert poly.coeff(w) == c, (w, poly.coeff(w))


# -- 17 ---------------------------------------------------------------------

def check_phr_coproduct():
    a, b = 0, 1
    got = quotients.phr_coproduct(((a, a, b),))
    want = hopf.TensorComb(
        {
            ((), ((a, a, b),)): 1,
            (((a,),), ((a,), (b,))): 1,
            (((a,),), ((a, b),)): 1,
            (((b,),), ((a, a),)): 1,
            (((a, a),), ((b,),)): 1,
            (((a, b),), ((a,),)): 2,
            (((a, a, b),), ()): 1,
        }
    )
    assert got == want, got
    sig = core.Signature((("a", 2), ("b", 2)))
    for lmax in (3, 4, 5):
        al = ab.LengthAlphabet(sig, lmax)
        p_ab = quotients.realize_quotient(sig, "int", ((0, 1),), al)
        p_ba = quotients.realize_quotient(sig, "int", ((1, 0),), al)
        assert p_ab == p_ba and p_ab, lmax


# -- 18 ---------------------------------------------------------------------

def check_compatibility_over_sums():
    rng = random.Random(555)
    pairs = [
        (_random_alphabet(SIGMA_E, rng), _random_alphabet(SIGMA_E, rng))
        for _ in range(6)
    ]
    forests = [f for f in _forests_up_to(SIGMA_E, 3) if not f.is_empty]
    for a1, a2 in pairs:
        s = ab.disjoint_sum(a1, a2)
        cut = s.split_at
        for f in forests:
            n = core.forest_degree(f)
            adm = list(core.admissible_pairs(f))
            for w in itertools.product(s.all_ids(), repeat=n):
                lhs = ab.is_compatible(f, s, w)
                i1 = tuple(i for i in range(1, n + 1) if w[i - 1] < cut)
                i2 = tuple(i for i in range(1, n + 1) if w[i - 1] >= cut)
                rhs = (i1, i2) in adm
                if rhs:
                    w1 = tuple(w[i - 1] for i in i1)
                    w2 = tuple(w[i - 1] - cut for i in i2)
                    rhs = ab.is_compatible(
                        core.restrict(f, i1), a1, w1
                    ) and ab.is_compatible(core.restrict(f, i2), a2, w2)
                assert lhs == rhs, (f, w)


CRITERIA = (
    ("fdb-coproduct-degree-three", check_fdb_coproduct_degree_three),
    ("phi-degree-three-binary", check_phi_degree_three_binary),
    ("hilbert-closed-forms", check_hilbert_closed_forms),
    ("classification-matches-symmetry", check_classification_matches_symmetry),
    ("hopf-axioms", check_hopf_axioms),
    ("coproduct-engines-agree", check_coproduct_engines_agree),
    ("doubling-identity", check_doubling_identity),
    ("position-triangularity", check_position_triangularity),
    ("lengths-projection", check_lengths_projection),
    ("wqsym-decomposition", check_wqsym_decomposition),
    ("charge-counts-preimages", check_charge),
    ("nck-coproduct", check_nck_coproduct),
    ("lengths-kernel", check_lengths_kernel),
    ("mas-coproduct", check_mas_coproduct),
    ("fdb-specializations", check_fdb_specializations),
    ("mas-lengths-expansion", check_mas_lengths_expansion),
    ("phr-coproduct", check_phr_coproduct),
    ("compatibility-over-sums", check_compatibility_over_sums),
)
