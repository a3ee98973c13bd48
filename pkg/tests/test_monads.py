"""Monad laws, cartesianness certificates, algebras, and their translations."""

from itertools import product

import pytest

from catbench.sets import FinSetObj, FinMap
from catbench.ambient import FINSET, SliceObj, SliceMor, PtObject, PtMorphism
from catbench.corpus import two, e4, z2_monoid
from catbench.internal import (
    validate_internal_category, is_groupoid, is_discrete_fibration,
)
from catbench.monads import (
    Monad,
    identity_monad,
    maybe_monad,
    writer_monad,
    z2_writer_monoid,
    Monoid,
    mk_TX_monad,
    mk_G_monad,
    mk_list_monad,
    validate_monad,
    certify_cartesian,
    finset_probes,
    Algebra,
    free_algebra,
    validate_algebra,
    translate_algebra_dfib,
    translate_G_algebra_groupoid,
    tbar,
)

A1 = FinSetObj("A", ["a"])


def test_maybe_functor_sizes():
    M = maybe_monad()
    X = FinSetObj("x", ["p", "q"])
    assert len(M.T(X)) == 3
    assert len(M.T(M.T(X))) == 4


def test_monad_laws_all_pass():
    for M in (identity_monad(), maybe_monad(),
              writer_monad(z2_writer_monoid()), mk_list_monad(4)):
        assert validate_monad(M).ok


def test_broken_mult_fails_named_law():
    M = maybe_monad()
    # corrupt the multiplication: send just(nothing) to a unit value
    def bad_mult(X):
        good = M.mult(X)
        if not len(X):
            return good
        TX = M.T(X)
        x0 = sorted(X.elements, key=repr)[0]
        table = {t: good(t) for t in M.T(TX)}
        table[("just", ("nothing",))] = ("just", x0)
        return FinMap(M.T(TX), TX, table)

    bad = Monad(M.ambient, M.T, M.Tm, M.unit, bad_mult,
                "bad-maybe", M.probes)
    cert = validate_monad(bad)
    assert not cert.ok
    assert any("mu" in f.name or "assoc" in f.name for f in cert.failures())


def test_tx_functor_size_oracle():
    # oracle: T(id over 𝟚) collects arrows by their domain: two start at 0,
    # one starts at 1
    C = two()
    MT = mk_TX_monad(C)
    h = SliceObj(C.X0, FinMap.identity(C.X0))
    assert len(MT.T(h).carrier) == 3


def test_g_functor_size_oracle():
    # oracle: R[d0] of E4's split epi has 1^2 + 1^2 + ... fiberwise squares
    G = mk_G_monad()
    C = e4()
    X = PtObject(C.d0, C.s0)
    GX = G.T(X)
    assert len(GX.upper_obj) == 8  # two fibers of size 2: 4 + 4


def test_cartesian_certificates():
    assert certify_cartesian(maybe_monad()).cartesian
    w = certify_cartesian(writer_monad(z2_writer_monoid()))
    assert w.cartesian and w.hypercartesian
    assert certify_cartesian(mk_list_monad(4)).cartesian


def test_writer_of_non_group_monoid_is_not_hypercartesian():
    # writer monads are always cartesian (the monoid component is carried
    # along untouched), but the kernel-pair condition on the multiplication
    # needs unique division, which the absorbing monoid lacks
    absorb = Monoid.from_table(
        "absorb", [0, 1],
        {(1, 1): 1, (0, 1): 0, (1, 0): 0, (0, 0): 0},
        1,
    )
    W = writer_monad(absorb)
    assert validate_monad(W).ok
    cc = certify_cartesian(W)
    assert cc.cartesian
    assert not cc.hypercartesian


def test_hyper_iff_groupoid_for_tx():
    for C in (two(), e4(), z2_monoid()):
        cc = certify_cartesian(mk_TX_monad(C))
        assert cc.cartesian
        assert cc.hypercartesian == is_groupoid(C)


def test_free_algebra_and_unit_law_violation():
    M = maybe_monad()
    alg = free_algebra(M, A1)
    assert validate_algebra(alg).ok
    TX = M.T(A1)
    bad = Algebra(M, A1, FinMap(TX, A1, {t: "a" for t in TX}))
    assert validate_algebra(bad).ok  # constant to "a" is the only algebra
    X2 = FinSetObj("B", ["a", "b"])
    TX2 = M.T(X2)
    swap = {("just", "a"): "b", ("just", "b"): "a", ("nothing",): "a"}
    assert not validate_algebra(Algebra(M, X2, FinMap(TX2, X2, swap))).ok


def test_translate_algebra_dfib_round_trip():
    C = e4()
    MT = mk_TX_monad(C)
    Z = FinSetObj("Z", ["z0", "z1"])
    h = SliceObj(Z, FinMap(Z, C.X0, {"z0": 0, "z1": 1}))
    alg = free_algebra(MT, h)
    F = translate_algebra_dfib(MT, C, "forward", alg)
    assert F.validate().ok and is_discrete_fibration(F)
    assert is_groupoid(F.source)
    back = translate_algebra_dfib(MT, C, "backward", F)
    assert back.structure.map.table == alg.structure.map.table


def test_translate_algebra_dfib_rejects_non_fibration():
    C = two()
    MT = mk_TX_monad(C)
    from catbench.corpus import finite_category
    from catbench.internal import InternalFunctor
    P = finite_category("pt", [0], {"i": (0, 0)}, {0: "i"}, {})
    F = InternalFunctor(P, C, FinMap(P.X0, C.X0, {0: 0}),
                        FinMap(P.X1, C.X1, {"i": "i0"}))
    with pytest.raises(ValueError, match="not a discrete fibration"):
        translate_algebra_dfib(MT, C, "backward", F)


def test_translate_g_algebra_groupoid():
    G = mk_G_monad()
    for C in (e4(), z2_monoid()):
        alg = translate_G_algebra_groupoid(G, "backward", C)
        assert validate_algebra(alg).ok
        C2 = translate_G_algebra_groupoid(G, "forward", alg)
        assert C2.m.table == C.m.table
    with pytest.raises(ValueError, match="not a groupoid"):
        translate_G_algebra_groupoid(G, "backward", two())


def test_tbar_free_maybe_algebra():
    M = maybe_monad()
    alg = free_algebra(M, A1)
    T = tbar(alg)
    assert validate_internal_category(T).ok
    assert len(T.ambient.obj_elements(T.X1)) == 4  # |T^2 {a}| frozen oracle
