"""Generalized-multicategory layer: T-graphs, T-categories, their shifts,
translations, and the induced slice monads.  Frozen oracle values were
computed by hand from the defining tables."""

import pytest

from catbench.sets import FinSetObj, FinMap
from catbench.ambient import SliceObj
from catbench.internal import is_groupoid, validate_internal_category, InternalFunctor
from catbench.monads import (
    maybe_monad,
    mk_TX_monad,
    mk_G_monad,
    free_algebra,
    certify_cartesian,
    validate_monad,
    finset_probes,
)
from catbench.corpus import e7, two, e4
from catbench.tcat import (
    TFunctor,
    build_tcategory,
    validate_tfunctor,
    is_dfib_tfunctor,
    is_t_groupoid,
    is_multicategory,
    is_operad,
    arity,
    tc_embed_algebra,
    embed_internal_tcat,
    dec_tcat,
    r_coreflection,
    tcat_pullback,
    translate_tcat_kl,
    translate_TX_tcat,
    translate_gcat_cat,
    mk_TXT_monad,
    translate_TXT_algebra_dfib,
)


# frozen oracle: the one-object multicategory with a unary unit cell e and a
# nullary cell k has exactly three composable pairs:
#   (e, (e,)), (e, (k,)), (k, ())
def test_e7_frozen_shape():
    C7, cert = e7()
    assert cert.ok
    assert sorted(C7.X1) == ["e", "k"]
    assert len(list(C7.X2)) == 3
    assert arity(C7, "e") == 1
    assert arity(C7, "k") == 0
    assert is_multicategory(C7)
    assert is_operad(C7)


def test_corrupted_composition_fails_an_axiom():
    C7, _ = e7()
    bad_table = dict(C7.d1_1.table)
    assert bad_table[("e", ("k",))] == "k"
    bad_table[("e", ("k",))] = "e"  # wrong arity: delta1(e) has weight 1
    bad = FinMap(C7.d1_1.dom, C7.d1_1.cod, bad_table)
    _, cert = build_tcategory(C7.graph, bad, name="broken")
    assert not cert.ok
    assert any("Axiom" in line for line in map(repr, cert.failures()))


def test_dec_shifts_levels():
    C7, _ = e7()
    Dec, cert = dec_tcat(C7)
    assert cert.ok
    assert sorted(Dec.X0) == ["e", "k"]
    assert len(list(Dec.X1)) == 3
    # composable pairs of composable pairs, frozen by enumeration by hand:
    # the composites of (e,(e,)), (e,(k,)), (k,()) are e, k, k, so the outer
    # cell (e,(e,)) pairs with two unary-composite cells and each k-composite
    # cell pairs with (k,()) alone, giving four level-2 cells
    assert len(list(Dec.X2)) == 4


def test_r_coreflection_keeps_only_unary_cells():
    C7, _ = e7()
    R, counit = r_coreflection(C7)
    assert validate_internal_category(R).ok
    assert list(R.X1) == ["e"]
    assert validate_tfunctor(counit).ok


def test_tcat_pullback_along_identity_is_diagonal():
    C7, _ = e7()
    one = TFunctor(
        C7, C7,
        FinMap(C7.X0, C7.X0, {x: x for x in C7.X0}),
        FinMap(C7.X1, C7.X1, {f: f for f in C7.X1}),
        name="id",
    )
    P, p1, p2 = tcat_pullback(one, one)
    assert sorted(P.X0) == [("*", "*")]
    assert sorted(P.X1) == [("e", "e"), ("k", "k")]
    assert validate_tfunctor(p1).ok and validate_tfunctor(p2).ok


def test_translate_tcat_kl_round_trip_on_e7():
    C7, _ = e7()
    M = C7.monad
    cc = certify_cartesian(M)
    K = translate_tcat_kl(M, cc, "forward", C7)
    assert validate_internal_category(K).ok
    C2, cert = translate_tcat_kl(M, cc, "backward", K)
    assert cert.ok
    o = C7.ops
    assert o.eq(C2.d0, C7.d0) and o.eq(C2.s0, C7.s0)
    assert o.eq(C2.delta1, C7.delta1) and o.eq(C2.d1_1, C7.d1_1)


def test_embedded_algebra_is_a_tcategory():
    M = maybe_monad(probes=finset_probes(3))
    A = FinSetObj("A", ["a"])
    TC, cert = tc_embed_algebra(free_algebra(M, A))
    assert cert.ok
    # the free algebra's carrier is T(A), so the cell set is T(T(A)):
    # just(just a), just(nothing), nothing
    assert len(list(TC.X1)) == 3


def test_t_groupoid_tracks_base_groupoid():
    for C, expect in ((e4(), True), (two(), False)):
        MT = mk_TX_monad(C, max_probe_size=3)
        F = InternalFunctor(
            C, C,
            FinMap(C.X0, C.X0, {x: x for x in C.X0}),
            FinMap(C.X1, C.X1, {f: f for f in C.X1}),
            name=f"id({C.name})",
        )
        TC, cert = translate_TX_tcat(MT, C, "backward", F)
        assert cert.ok
        assert is_t_groupoid(TC) is expect
        assert is_groupoid(C) is expect
        F2 = translate_TX_tcat(MT, C, "forward", TC)
        assert validate_internal_category(F2.source).ok
        assert {y: F2.f1(y) for y in F.source.X1} == {y: F.f1(y) for y in F.source.X1}


def test_gcat_round_trip_and_idomorphy_rejection():
    G = mk_G_monad()
    C = two()
    TC, cert = translate_gcat_cat(G, "backward", C)
    assert cert.ok
    Y = translate_gcat_cat(G, "forward", TC)
    assert Y.m.table == C.m.table and Y.d0.table == C.d0.table


def test_slice_monad_of_operad_frozen_sizes():
    C7, _ = e7()
    TXT = mk_TXT_monad(C7)
    assert validate_monad(TXT).ok
    pt = FinSetObj("pt", ["z"])
    X0 = TXT.ambient.base if hasattr(TXT.ambient, "base") else None
    anchor = FinMap(pt, C7.d0.cod, {"z": "*"})
    h = SliceObj(pt, anchor)
    Th = TXT.T(h)
    # frozen: over a point the fiber pairs are (e, (z,)) and (k, ())
    assert len(list(Th.carrier)) == 2


def test_embedded_plain_category_is_not_a_multicategory():
    M = maybe_monad(probes=finset_probes(3))
    E, cert = embed_internal_tcat(M, two())
    assert cert.ok
    assert not is_multicategory(E)
