"""Limits in finite sets, checked against literal universal-property oracles."""

from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from catbench.sets import (
    FinSetObj,
    FinMap,
    compose,
    pullback,
    equalizer,
    kernel_pair,
    is_pullback_square,
    mediate_pullback,
    NonCommutingSquare,
)


def obj(name, n):
    return FinSetObj(name, [f"{name}{i}" for i in range(n)])


def all_maps(X, Y):
    xs = list(X)
    if not xs:
        return [FinMap(X, Y, {})]
    return [FinMap(X, Y, dict(zip(xs, vals)))
            for vals in product(list(Y), repeat=len(xs))]


def test_pullback_elements_are_exactly_matching_pairs():
    # oracle frozen first: a cospan 2 -> 1 <- 2 has exactly 2*2 = 4 pairs
    X, Y, Z = obj("x", 2), obj("y", 2), obj("z", 1)
    f = FinMap.from_fn(X, Z, lambda _: "z0")
    g = FinMap.from_fn(Y, Z, lambda _: "z0")
    pb = pullback(f, g)
    assert len(pb.P) == 4
    assert set(pb.P) == {(a, b) for a in X for b in Y}


def test_pullback_projections_commute():
    X, Y, Z = obj("x", 3), obj("y", 2), obj("z", 2)
    f = FinMap(X, Z, {"x0": "z0", "x1": "z1", "x2": "z0"})
    g = FinMap(Y, Z, {"y0": "z0", "y1": "z0"})
    pb = pullback(f, g)
    assert compose(f, pb.pa) == compose(g, pb.pb)
    assert len(pb.P) == 4  # oracle: 2 X-elements over z0 times 2 Y-elements


def test_kernel_pair_sizes():
    # oracles: |R[f]| = sum of squared fiber sizes
    X, Z = obj("x", 3), obj("z", 2)
    f = FinMap(X, Z, {"x0": "z0", "x1": "z0", "x2": "z1"})
    R, p0, p1, s0 = kernel_pair(f)
    assert len(R) == 4 + 1
    g = FinMap(X, Z, {"x0": "z0", "x1": "z0", "x2": "z0"})
    R2, *_ = kernel_pair(g)
    assert len(R2) == 9


def test_equalizer_subset():
    X = obj("x", 3)
    f = FinMap(X, X, {"x0": "x0", "x1": "x2", "x2": "x2"})
    g = FinMap.identity(X)
    E, e = equalizer(f, g)
    assert sorted(E) == ["x0", "x2"]
    assert all(f(e(z)) == g(e(z)) for z in E)


def literal_is_pullback(top, left, right, bottom, probes):
    """Universal-property oracle: every commuting cone from every probe
    factors uniquely through the apex."""
    if compose(bottom, left) != compose(right, top):
        return False
    P = left.dom
    for Q in probes:
        for a in all_maps(Q, left.cod):
            for b in all_maps(Q, top.cod):
                if compose(bottom, a) != compose(right, b):
                    continue
                mediators = [
                    u for u in all_maps(Q, P)
                    if compose(left, u) == a and compose(top, u) == b
                ]
                if len(mediators) != 1:
                    return False
    return True


def test_is_pullback_square_matches_literal_oracle():
    Z = obj("z", 2)
    X, Y = obj("x", 2), obj("y", 2)
    probes = [obj("q", n) for n in range(3)]
    checked = agreed = 0
    for f in all_maps(X, Z):
        for g in all_maps(Y, Z):
            pb = pullback(f, g)
            # the canonical square must pass both
            assert is_pullback_square(pb.pb, pb.pa, g, f)
            # a perturbed apex: drop to a subobject when possible
            for top, left, right, bottom in [(pb.pb, pb.pa, g, f)]:
                checked += 1
                if is_pullback_square(top, left, right, bottom) == \
                        literal_is_pullback(top, left, right, bottom, probes):
                    agreed += 1
    assert checked == agreed


def test_is_pullback_square_rejects_too_small_apex():
    X, Z = obj("x", 2), obj("z", 1)
    f = FinMap.from_fn(X, Z, lambda _: "z0")
    pb = pullback(f, f)
    # restrict the apex to the diagonal: no longer a pullback
    D = FinSetObj("D", [p for p in pb.P if p[0] == p[1]])
    pa = FinMap(D, X, {p: p[0] for p in D})
    pb_ = FinMap(D, X, {p: p[1] for p in D})
    assert not is_pullback_square(pb_, pa, f, f)


def test_is_pullback_square_raises_on_non_commuting():
    X = obj("x", 2)
    ident = FinMap.identity(X)
    swap = FinMap(X, X, {"x0": "x1", "x1": "x0"})
    with pytest.raises(NonCommutingSquare):
        is_pullback_square(ident, ident, ident, swap)


def test_mediate_pullback():
    X, Y, Z = obj("x", 2), obj("y", 2), obj("z", 1)
    f = FinMap.from_fn(X, Z, lambda _: "z0")
    g = FinMap.from_fn(Y, Z, lambda _: "z0")
    pb = pullback(f, g)
    Q = obj("q", 2)
    a = FinMap(Q, X, {"q0": "x0", "q1": "x1"})
    b = FinMap(Q, Y, {"q0": "y1", "q1": "y0"})
    u = mediate_pullback(pb, a, b)
    assert compose(pb.pa, u) == a and compose(pb.pb, u) == b


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_composition_associative(data):
    sizes = [data.draw(st.integers(1, 4)) for _ in range(4)]
    A, B, C, D = (obj(n, s) for n, s in zip("abcd", sizes))
    f = FinMap(A, B, {a: data.draw(st.sampled_from(list(B))) for a in A})
    g = FinMap(B, C, {b: data.draw(st.sampled_from(list(C))) for b in B})
    h = FinMap(C, D, {c: data.draw(st.sampled_from(list(D))) for c in C})
    assert compose(h, compose(g, f)) == compose(compose(h, g), f)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_pullback_comparison_is_bijection_property(data):
    nz = data.draw(st.integers(1, 3))
    Z = obj("z", nz)
    X = obj("x", data.draw(st.integers(0, 3)))
    Y = obj("y", data.draw(st.integers(0, 3)))
    f = FinMap(X, Z, {x: data.draw(st.sampled_from(list(Z))) for x in X})
    g = FinMap(Y, Z, {y: data.draw(st.sampled_from(list(Z))) for y in Y})
    pb = pullback(f, g)
    # |P| equals the sum over z of |f^-1 z| * |g^-1 z|
    count = sum(
        sum(1 for x in X if f(x) == z) * sum(1 for y in Y if g(y) == z)
        for z in Z
    )
    assert len(pb.P) == count
