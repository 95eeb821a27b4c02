from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coregroup import core_presentation, wirtinger_presentation
from coregroup.covering import (
    T,
    Y,
    NotInKernelError,
    branched_presentation,
    branched_with_free_factors,
    direct_branched_presentation,
    expand_kernel_word,
    format_kernel_word,
    gk_image,
    kernel_presentation,
    parse_kernel_word,
    rewrite_kernel_word,
    tau_power_conjugate,
)
from coregroup.invariants import abelian_invariants, builtin_group, hom_count
from coregroup.presentations import Presentation, free_group
from coregroup.words import Word, cyclic_normalize, exponent_sum, free_reduce, invert

W = Word.from_ints


def KW(*items):
    return Word(items)


def by_hand_expand(kw, k, s):
    """Reference substitution, written out independently of expand_kernel_word."""
    xs = Word([(s, 1)])
    out = Word()
    for sym, e in kw:
        if sym == T:
            piece = xs ** k
        else:
            piece = xs ** sym.sheet * Word([(sym.gen, 1)]) * xs ** -(sym.sheet + 1)
        out = out * (piece if e > 0 else ~piece)
    return out


# -- gk_image and tau ------------------------------------------------------

def test_gk_image_examples():
    assert gk_image(W([1, 2, -1, -3]), 3) == 0
    assert gk_image(W([1, 2, 1]), 2) == 1
    for k in (2, 3, 5):
        assert gk_image(W([4] * k), k) == 0


def test_tau_power_conjugate_examples():
    s = 2
    assert tau_power_conjugate(W([1]), 1, s) == W([3, 1, -3])
    w = W([1, -2, 3])
    assert tau_power_conjugate(w, 0, s) == w
    assert tau_power_conjugate(W([3, 1, -3]), -1, s) == W([1])


# -- rewriting -------------------------------------------------------------

def test_rewrite_examples():
    kw = rewrite_kernel_word(W([1, -2]), 2, 2)
    assert kw == KW((Y(0, 0), 1), (Y(1, 0), -1))
    assert by_hand_expand(kw, 2, 2) == W([1, -2])
    for k in (2, 3, 5):
        assert rewrite_kernel_word(W([3] * k), k, 2) == KW((T, 1))
    kw = rewrite_kernel_word(W([1, 1]), 2, 1)
    assert kw == KW((Y(0, 0), 1), (Y(0, 1), 1), (T, 1))
    assert by_hand_expand(kw, 2, 1) == W([1, 1])


def test_rewrite_rejects_non_kernel_words():
    with pytest.raises(NotInKernelError):
        rewrite_kernel_word(W([1, 2, 1]), 2, 2)


def test_expand_examples():
    s = 3
    assert expand_kernel_word(KW((T, 1)), 4, s) == W([4] * 4)
    assert expand_kernel_word(KW((Y(0, 0), 1)), 4, s) == W([1, -4])


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_product_of_sheets(k):
    # y_i tau(y_i) ... tau^(k-1)(y_i) = x_i^k x_s^-k
    s = 3
    kw = Word((Y(0, j), 1) for j in range(k))
    assert expand_kernel_word(kw, k, s) == free_reduce(W([1] * k + [-4] * k))


@pytest.mark.parametrize("k", [2, 3, 5])
def test_relator_forms(k):
    i, p, q, s = 0, 1, 2, 3
    # x_i x_p x_i^-1 x_q^-1 = y_i tau(y_p) tau(y_i^-1) y_q^-1
    kw = rewrite_kernel_word(W([1, 2, -1, -3]), k, s)
    assert kw == KW((Y(i, 0), 1), (Y(p, 1), 1), (Y(i, 1), -1), (Y(q, 0), -1))
    # x_i x_p^-1 x_i^-1 x_q = y_i y_p^-1 (tau^-1(y_i))^-1 tau^-1(y_q),
    # with tau^-1(y) = t^-1 tau^(k-1)(y) t
    kw = rewrite_kernel_word(W([1, -2, -1, 3]), k, s)
    y_i = W([1, -4])
    y_q = W([3, -4])
    expected = (y_i * ~W([2, -4]) * ~tau_power_conjugate(y_i, -1, s)
                * tau_power_conjugate(y_q, -1, s))
    assert expand_kernel_word(kw, k, s) == expected
    assert kw == KW((Y(i, 0), 1), (Y(p, 0), -1), (T, -1), (Y(i, k - 1), -1), (Y(q, k - 1), 1),
                    (T, 1))


def kernel_words(draw_k=st.sampled_from([2, 3, 5])):
    @st.composite
    def build(draw):
        k = draw(draw_k)
        n = draw(st.integers(1, 5))
        s = draw(st.integers(0, n - 1))
        w = free_reduce(draw(st.lists(st.tuples(st.integers(0, n - 1), st.sampled_from([1, -1])),
                                      max_size=40)))
        e = exponent_sum(w) % k
        w = free_reduce(list(w) + [(s, -1)] * e)
        return w, k, s
    return build()


@settings(max_examples=300)
@given(kernel_words())
def test_round_trip(args):
    w, k, s = args
    kw = rewrite_kernel_word(w, k, s)
    assert expand_kernel_word(kw, k, s) == w
    assert by_hand_expand(kw, k, s) == w


@given(kernel_words(), st.data())
def test_rewrite_is_multiplicative(args, data):
    w1, k, s = args
    other = data.draw(st.lists(st.tuples(st.integers(0, s), st.sampled_from([1, -1])), max_size=20))
    w2 = free_reduce(other)
    w2 = free_reduce(list(w2) + [(s, -1)] * (exponent_sum(w2) % k))
    joined = rewrite_kernel_word(free_reduce(list(w1) + list(w2)), k, s)
    assert joined == free_reduce(list(rewrite_kernel_word(w1, k, s)) + list(rewrite_kernel_word(w2, k, s)))


def test_kernel_symbol_text_round_trip():
    kw = KW((T, 1), (Y(0, 0), 1), (Y(2, 4), -1))
    text = format_kernel_word(kw)
    assert text == "t y1.0 y3.4^-1"
    assert parse_kernel_word(text) == kw
    assert parse_kernel_word("1") == Word()
    with pytest.raises(ValueError):
        parse_kernel_word("y0.1")


# -- presentations of kernels and covers ----------------------------------

def test_kernel_presentation_examples(trefoil):
    p = kernel_presentation(Presentation(("x1",)), 2)
    assert p.generator_names == ("t", "y1.0", "y1.1") and p.relators == ()
    p = kernel_presentation(wirtinger_presentation(trefoil), 2)
    assert (p.ngens, len(p.relators)) == (7, 6)
    p = kernel_presentation(Presentation(("x1",)), 5)
    assert (p.ngens, len(p.relators)) == (6, 0)


def test_kernel_presentation_rejects_unbalanced():
    with pytest.raises(NotInKernelError):
        kernel_presentation(Presentation(("a",), (W([1, 1]),)), 3)
    # fine mod 2
    kernel_presentation(Presentation(("a",), (W([1, 1]),)), 2)


def test_branched_examples(trefoil):
    p = branched_presentation(Presentation(("x1",)), 2)
    assert p.generator_names == ("y1.0",) and p.relators == ()
    base = wirtinger_presentation(trefoil)
    p = branched_presentation(base, 2)
    core = core_presentation(trefoil)
    assert Counter(map(cyclic_normalize, p.relators)) == Counter(map(cyclic_normalize, core.relators))
    p = branched_presentation(base, 3)
    assert (p.ngens, len(p.relators)) == (6, 6)


def test_branched_k2_hand_trace():
    # x_i x_p x_i^-1 x_q^-1 -> Y(i,0) Y(p,1) Y(i,1)^-1 Y(q,0)^-1 -> y_i y_p^-1 y_i y_q^-1
    base = Presentation(("i", "p", "q"), (W([1, 2, -1, -3]),))
    p = branched_presentation(base, 2)
    assert p.relators == (W([1, -2, 1, -3]),)


def test_branched_shape(corpus):
    for d in corpus.values():
        if not d.oriented:
            continue
        base = wirtinger_presentation(d)
        n, m = base.ngens, len(base.relators)
        for k in (2, 3, 4):
            p = branched_presentation(base, k)
            assert (p.ngens, len(p.relators)) == (n * (k - 1), m * (k - 1))
            u = branched_presentation(base, k, reduced=False)
            assert (u.ngens, len(u.relators)) == (n * k + 1, m * k + 1 + n)


def test_unreduced_presents_same_group(trefoil):
    base = wirtinger_presentation(trefoil)
    for k in (2, 3):
        a = branched_presentation(base, k)
        b = branched_presentation(base, k, reduced=False)
        assert abelian_invariants(a) == abelian_invariants(b)
        for t in ("S3", "Z3", "Z2"):
            g = builtin_group(t)
            assert hom_count(a, g) == hom_count(b, g)


def test_direct_examples(trefoil):
    p = direct_branched_presentation(Presentation(("x1",)), 3)
    assert abelian_invariants(p) == abelian_invariants(Presentation(()))
    p = direct_branched_presentation(wirtinger_presentation(trefoil), 2)
    inv = abelian_invariants(p)
    assert (inv.free_rank, inv.torsion) == (0, (3,))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_schreier_rank(n, k):
    # Nielsen-Schreier: index-k subgroup of F_n has rank k(n-1)+1; the k-th
    # power relators are the only ones, so drop them for the count
    p = direct_branched_presentation(free_group(n), k)
    assert p.ngens == k * (n - 1) + 1


def test_direct_rejects_bad_input():
    with pytest.raises(ValueError):
        direct_branched_presentation(Presentation(()), 2)
    with pytest.raises(NotInKernelError):
        direct_branched_presentation(Presentation(("a",), (W([1]),)), 2)


def test_direct_axis_choice_does_not_matter(corpus):
    for name in ("spun_trefoil", "spun_figure_eight"):
        base = wirtinger_presentation(corpus[name])
        for k in (2, 3):
            ref = direct_branched_presentation(base, k, 0)
            for axis in range(1, base.ngens):
                other = direct_branched_presentation(base, k, axis)
                assert abelian_invariants(other) == abelian_invariants(ref)
                for t in ("S3", "Z3", "Z5"):
                    g = builtin_group(t)
                    assert hom_count(other, g) == hom_count(ref, g)


def test_free_factors_added(trefoil):
    base = wirtinger_presentation(trefoil)
    p = branched_with_free_factors(base, 3)
    d = direct_branched_presentation(base, 3)
    assert p.ngens == d.ngens + 2
    assert invert(p.relators[0]) == invert(d.relators[0])
