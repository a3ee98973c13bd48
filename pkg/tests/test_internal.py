"""Internal categories, groupoids, Dec, and the division presentation."""

import pytest

from catbench.sets import FinSetObj, FinMap
from catbench.ambient import FINSET
from catbench.corpus import two, e4, z2_monoid, discrete, finite_category
from catbench.internal import (
    InternalCategory,
    InternalFunctor,
    validate_internal_category,
    is_groupoid,
    invert,
    dec,
    is_discrete_fibration,
    is_discrete_cofibration,
    ReflexiveGraph,
    groupoid_from_presentation,
    kernel_groupoid,
)


def test_corpus_categories_validate():
    for C in (two(), e4(), z2_monoid(), discrete(1), discrete(3)):
        assert validate_internal_category(C).ok


def test_groupoid_detection():
    assert not is_groupoid(two())
    assert is_groupoid(e4())
    assert is_groupoid(z2_monoid())
    assert is_groupoid(discrete(2))


def test_invert():
    C = e4()
    inv = invert(C)
    assert inv("u") == "v" and inv("v") == "u"
    assert inv("i0") == "i0"
    with pytest.raises(ValueError):
        invert(two())


def test_missing_composition_entry_raises():
    with pytest.raises(ValueError):
        finite_category(
            "bad", [0], {"i": (0, 0), "a": (0, 0)}, {0: "i"}, {}
        )


def test_broken_associativity_detected():
    # Z/3-like table with one entry corrupted
    C = finite_category(
        "z3", ["*"], {0: ("*", "*"), 1: ("*", "*"), 2: ("*", "*")},
        {"*": 0},
        comp={(1, 1): 2, (1, 2): 0, (2, 1): 0, (2, 2): 2},  # (2,2) should be 1
    )
    cert = validate_internal_category(C)
    assert not cert.ok
    assert any("associativity" in f.name for f in cert.failures())


def test_dec_counts_and_counit():
    # oracle: Dec has one object per arrow and one arrow per composable pair
    # oracle: composable pairs of 𝟚 are (i0,i0), (i0,u), (u,i1), (i1,i1);
    # E4 has 2 per (ordered) object pair times 4 = 8
    for C, n0, n1 in ((two(), 3, 4), (e4(), 4, 8)):
        D, eps = dec(C)
        assert validate_internal_category(D).ok
        assert len(D.X0) == n0 and len(D.X1) == n1
        assert is_discrete_cofibration(eps)


def test_dec_of_groupoid_is_kernel_groupoid():
    C = e4()
    D, _ = dec(C)
    R = kernel_groupoid(C.d0)
    assert validate_internal_category(R).ok and is_groupoid(R)
    assert len(D.X1) == len(R.X1)
    assert is_groupoid(D)


def test_groupoid_from_presentation_recovers_e4():
    C = e4()
    graph = ReflexiveGraph(C.X0, C.X1, C.d0, C.d1, C.s0)
    inv = invert(C)
    pairs = [(a, b) for a in C.X1 for b in C.X1 if C.d0(a) == C.d0(b)]
    R = FinSetObj("R", pairs)
    d2 = FinMap(R, C.X1, {(a, b): C.m((b, inv(a))) for (a, b) in R})
    G = groupoid_from_presentation(graph, d2)
    assert G.m.table == C.m.table


def test_groupoid_from_presentation_names_failed_law():
    C = e4()
    graph = ReflexiveGraph(C.X0, C.X1, C.d0, C.d1, C.s0)
    pairs = [(a, b) for a in C.X1 for b in C.X1 if C.d0(a) == C.d0(b)]
    R = FinSetObj("R", pairs)
    bad = FinMap(R, C.X1, {(a, b): b for (a, b) in R})
    with pytest.raises(ValueError, match="presentation law"):
        groupoid_from_presentation(graph, bad)


def test_functor_validation_and_fibrations():
    C = e4()
    P = finite_category("pt", [0], {"i": (0, 0)}, {0: "i"}, {})
    F = InternalFunctor(P, C, FinMap(P.X0, C.X0, {0: 0}),
                        FinMap(P.X1, C.X1, {"i": "i0"}))
    assert F.validate().ok
    assert not is_discrete_fibration(F)  # i0 has no lift of u along d1


def test_kernel_groupoid_sizes():
    X, Z = FinSetObj("x", ["x0", "x1", "x2"]), FinSetObj("z", ["z0", "z1"])
    f = FinMap(X, Z, {"x0": "z0", "x1": "z0", "x2": "z1"})
    R = kernel_groupoid(f)
    assert len(R.X1) == 5
    assert validate_internal_category(R).ok and is_groupoid(R)
