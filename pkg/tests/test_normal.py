import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lucas_elliptica.normal import (
    NormalPoly,
    admissible_rewrites,
    dual_normal,
    mul_normal,
    normal_order,
    rewrite_at,
    rewrite_to_normal,
    word_tokens,
)
from lucas_elliptica.weights import WeightExpr, big_weight_expr
from lucas_elliptica.words import WordPoly, dual_substitution, fib_word, word_from_letters

W = WordPoly.parse
w = WeightExpr.symbol


def test_normal_order_examples():
    assert str(normal_order(W("yx"))) == "w(1,1) x y"
    expected = big_weight_expr(1, 2) * big_weight_expr(2, 2) * big_weight_expr(3, 2)
    assert normal_order(W("y^2x^3")) == NormalPoly.monomial(3, 2, expected)
    assert str(normal_order(W("yx^-1"))) == "w(0,1)^-1 x^-1 y"
    assert normal_order(W("xx^-1 + 2")) == NormalPoly.const(3)


def test_mul_normal_examples():
    xy = NormalPoly.monomial(1, 1)
    # x (y x) y = x w(1,1) x y^2 = w(2,1) x^2 y^2: the weight shifts as it crosses x
    assert mul_normal(xy, xy) == NormalPoly.monomial(2, 2, w(2, 1))
    assert mul_normal(xy, xy) == normal_order(W("xyxy"))
    y, x, X = NormalPoly.monomial(0, 1), NormalPoly.monomial(1, 0), NormalPoly.monomial(-1, 0)
    assert str(mul_normal(y, X)) == "w(0,1)^-1 x^-1 y"
    assert mul_normal(mul_normal(y, x), X) == y == mul_normal(y, mul_normal(x, X))


def test_rendering_and_parse():
    p = NormalPoly.parse("(1 + w(1,1)) x y + y^3")
    assert str(p) == "(1 + w(1,1)) x y + y^3"
    assert str(NormalPoly.parse("- w(0,1)^-1 x^-1 y")) == "- w(0,1)^-1 x^-1 y"
    assert str(NormalPoly()) == "0"
    for n in range(-5, 8):
        u = normal_order(fib_word(n))
        assert NormalPoly.parse(str(u)) == u
    with pytest.raises(ValueError):
        NormalPoly({(0, -1): WeightExpr.const(1)})
    with pytest.raises(ValueError):
        NormalPoly.parse("(1 + w(1,1) x")


letter_lists = st.lists(st.sampled_from(["x", "X", "y"]), max_size=10)


@given(letter_lists, st.randoms(use_true_random=False))
def test_single_rewrite_preserves_normal_form(seq, rnd):
    # local confluence: any one relation step leads to the same normal form
    tokens = tuple(seq)
    target = rewrite_to_normal(tokens, 1, random.Random(0))
    for i in admissible_rewrites(tokens):
        assert rewrite_to_normal(rewrite_at(tokens, i), 1, rnd) == target


@given(letter_lists, st.randoms(use_true_random=False))
def test_structural_normal_order_matches_rewriting(seq, rnd):
    word = WordPoly.word(word_from_letters(seq))
    assert normal_order(word) == rewrite_to_normal(tuple(seq), 1, rnd)


def word_polys(max_len):
    word = st.lists(st.sampled_from(["x", "X", "y"]), max_size=max_len).map(lambda s: WordPoly.word(word_from_letters(s)))
    return st.lists(st.tuples(word, st.integers(-3, 3)), min_size=1, max_size=3).map(
        lambda terms: sum((u * c for u, c in terms), WordPoly())
    )


@given(word_polys(3), word_polys(3))
def test_normal_order_is_multiplicative(u, v):
    assert normal_order(u * v) == mul_normal(normal_order(u), normal_order(v))


@given(word_polys(3), word_polys(3), word_polys(3))
def test_mul_normal_is_associative(a, b, c):
    u, v, t = normal_order(a), normal_order(b), normal_order(c)
    assert mul_normal(mul_normal(u, v), t) == mul_normal(u, mul_normal(v, t))


@given(word_polys(5))
def test_dual_normal_matches_substitution_route(u):
    # applying the involution to the normal form agrees with substituting
    # into the word polynomial and normal-ordering (weights untouched at word level)
    assert dual_normal(normal_order(u)) == normal_order(dual_substitution(u))


def test_word_tokens():
    assert word_tokens(word_from_letters("yxXXy")) == ("y", "X", "y")
