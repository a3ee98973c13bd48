"""Weight-graded word sets for the free-monoid functor."""

import pytest
from hypothesis import given, settings, strategies as st

from catbench.sets import FinSetObj, FinMap
from catbench.graded import (
    WordSet,
    GradedMap,
    m_set,
    m_map,
    m_unit,
    m_mult,
    graded_apply,
    graded_compose,
    graded_pullback_fiber,
    graded_is_pullback,
)

AB = FinSetObj("ab", ["a", "b"])


def test_piece_counts():
    W = m_set(AB)
    # oracle: atoms have weight 0, so weight-n words are exactly length-n words
    assert sorted(W.piece(0)) == [()]
    assert len(W.piece(1)) == 2
    assert len(W.piece(2)) == 4
    assert len(W.piece(3)) == 8


def test_unit_raises_weight_by_one():
    W = m_set(AB)
    WW = m_set(W)
    unit = m_unit(W)
    for n in range(3):
        for w in W.piece(n):
            assert WW.weight(unit(w)) == n + 1


def test_mult_strictly_lowers_weight():
    # flattening drops the weight by the number of inner words, so any
    # nonempty word of words strictly loses weight
    W = m_set(AB)
    WW = m_set(W)
    mult = m_mult(AB)
    for n in range(1, 5):
        for ww in WW.piece(n):
            flat = graded_apply(mult, ww)
            assert W.weight(flat) == n - len(ww)
            assert W.weight(flat) <= n - 1 or len(ww) == 0


def test_letterwise_map_preserves_weight():
    f = FinMap(AB, AB, {"a": "b", "b": "b"})
    Mf = m_map(f)
    W = m_set(AB)
    for n in range(4):
        for w in W.piece(n):
            assert W.weight(graded_apply(Mf, w)) == n


def test_letterwise_fiber():
    f = FinMap(AB, AB, {"a": "b", "b": "b"})
    Mf = m_map(f)
    assert sorted(Mf.fiber(("b", "b"))) == [
        ("a", "a"), ("a", "b"), ("b", "a"), ("b", "b")
    ]
    assert Mf.fiber(("a",)) == []


def test_graded_pullback_fiber():
    X1 = FinSetObj("x1", ["e", "k"])
    table = {"e": ("a",), "k": ()}
    delta = GradedMap(X1, m_set(AB), table.__getitem__, tag=("table", table))
    f = FinMap(AB, AB, {"a": "a", "b": "a"})
    P, p_x, p_w = graded_pullback_fiber(delta, m_map(f))
    # oracle: e pairs with every 1-letter preimage of ("a",); k with ()
    assert sorted(P) == sorted([("e", ("a",)), ("e", ("b",)), ("k", ())])
    for q in P:
        assert graded_apply(delta, p_x(q)) == graded_apply(m_map(f), graded_apply(p_w, q))


def test_mult_associativity_square_is_graded_pullback():
    # the free monoid is cartesian on its multiplication naturality squares
    f = FinMap(AB, AB, {"a": "b", "b": "a"})
    top = m_map(m_map(f))
    left = m_mult(AB)
    right = m_mult(AB)
    bottom = m_map(f)
    assert graded_is_pullback(top, left, right, bottom, bound=3)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.lists(st.sampled_from(["a", "b"]), max_size=3), max_size=3))
def test_mult_flattens(ww):
    word = tuple(tuple(w) for w in ww)
    mult = m_mult(AB)
    assert graded_apply(mult, word) == tuple(x for w in word for x in w)


def test_graded_compose_agrees_pointwise():
    table = {"e": ("a", "b"), "k": ()}
    X1 = FinSetObj("x1", ["e", "k"])
    delta = GradedMap(X1, m_set(AB), table.__getitem__, tag=("table", table))
    f = FinMap(AB, AB, {"a": "b", "b": "b"})
    comp = graded_compose(m_map(f), delta)
    for x in X1:
        assert graded_apply(comp, x) == graded_apply(m_map(f), table[x])
