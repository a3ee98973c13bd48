"""Kleisli category calculus for a half-cartesian monad, cross-checked
against the literal cone-by-cone pullback oracle."""

from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from catbench.sets import FinSetObj, FinMap
from catbench.monads import maybe_monad, certify_cartesian, finset_probes
from catbench.kleisli import (
    KleisliMor,
    kl_compose,
    kl_identity,
    embed_E,
    forget,
    in_E,
    kl_hom,
    kl_pullback_along_E,
    is_pullback_in_kl,
    is_pullback_in_kl_by_cones,
    check_lambda_equalizer_in_kl,
)

M = maybe_monad()
CERT = certify_cartesian(M)
PROBES = finset_probes(3)


def obj(name, n):
    return FinSetObj(name, [f"{name}{i}" for i in range(n)])


def test_embed_is_functorial():
    X, Y, Z = obj("x", 2), obj("y", 2), obj("z", 2)
    f = FinMap(X, Y, {"x0": "y1", "x1": "y0"})
    g = FinMap(Y, Z, {"y0": "z0", "y1": "z0"})
    from catbench.sets import compose
    assert kl_compose(embed_E(M, g), embed_E(M, f)) == embed_E(M, compose(g, f))
    assert kl_compose(embed_E(M, f), kl_identity(M, X)) == embed_E(M, f)


def test_in_E_returns_correct_witness():
    X, Y = obj("x", 2), obj("y", 2)
    f = FinMap(X, Y, {"x0": "y1", "x1": "y1"})
    ok, w = in_E(embed_E(M, f), CERT)
    assert ok and w == f
    partial = KleisliMor(M, X, Y, FinMap(
        X, M.T(Y), {"x0": ("just", "y0"), "x1": ("nothing",)}
    ))
    ok, w = in_E(partial, CERT)
    assert not ok and w is None


def test_forget_recovers_structure_map_composite():
    X, Y = obj("x", 2), obj("y", 1)
    phi = KleisliMor(M, X, Y, FinMap(
        X, M.T(Y), {"x0": ("just", "y0"), "x1": ("nothing",)}
    ))
    g = forget(phi)
    assert g.dom == M.T(X) and g.cod == M.T(Y)
    assert g(("just", "x1")) == ("nothing",)
    assert g(("nothing",)) == ("nothing",)


def test_fast_pullback_check_matches_cone_oracle():
    X, Y, U = obj("x", 2), obj("y", 2), obj("u", 2)
    probes = [obj("q", n) for n in range(3)]
    agreements = total = 0
    for f in [FinMap(X, Y, {"x0": "y0", "x1": "y0"}),
              FinMap(X, Y, {"x0": "y0", "x1": "y1"})]:
        for psi in kl_hom(M, U, Y):
            sq = kl_pullback_along_E(M, f, psi)
            total += 1
            if is_pullback_in_kl(sq) == is_pullback_in_kl_by_cones(sq, probes):
                agreements += 1
    assert total == agreements and total > 0


def test_non_pullback_square_detected():
    X, Y = obj("x", 1), obj("y", 1)
    f = FinMap(X, Y, {"x0": "y0"})
    psi = kl_identity(M, Y)
    sq = kl_pullback_along_E(M, f, psi)
    from catbench.kleisli import KlSquare
    # shrink the apex to the empty set: commutes but fails universality
    empty = FinSetObj("empty", [])
    to_x = KleisliMor(M, empty, X, FinMap(empty, M.T(X), {}))
    to_v = KleisliMor(M, empty, sq.top.tgt, FinMap(empty, M.T(sq.top.tgt), {}))
    bad = KlSquare(
        kl_compose(sq.top, to_v.__class__(M, empty, sq.top.src,
                                          FinMap(empty, M.T(sq.top.src), {}))),
        kl_compose(sq.left, KleisliMor(M, empty, sq.top.src,
                                       FinMap(empty, M.T(sq.top.src), {}))),
        sq.right, sq.bottom,
    )
    assert not is_pullback_in_kl(bad)


def test_lambda_equalizer():
    for X in PROBES:
        assert check_lambda_equalizer_in_kl(M, X, PROBES, CERT).ok


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_kleisli_composition_associative(data):
    ns = [data.draw(st.integers(1, 3)) for _ in range(4)]
    A, B, C, D = (obj(n, s) for n, s in zip("abcd", ns))

    def draw_mor(S, T):
        TT = M.T(T)
        return KleisliMor(M, S, T, FinMap(
            S, TT, {s: data.draw(st.sampled_from(list(TT))) for s in S}
        ))

    f, g, h = draw_mor(A, B), draw_mor(B, C), draw_mor(C, D)
    assert kl_compose(h, kl_compose(g, f)) == kl_compose(kl_compose(h, g), f)


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_kleisli_units(data):
    A = obj("a", data.draw(st.integers(1, 3)))
    B = obj("b", data.draw(st.integers(1, 3)))
    TB = M.T(B)
    f = KleisliMor(M, A, B, FinMap(
        A, TB, {a: data.draw(st.sampled_from(list(TB))) for a in A}
    ))
    assert kl_compose(f, kl_identity(M, A)) == f
    assert kl_compose(kl_identity(M, B), f) == f
