"""Standard finite examples used throughout the test suites and the CLI.

Arrows are named atoms; composition tables are written in diagrammatic order:
comp[(f, g)] = "f then g".
"""

from __future__ import annotations

from .sets import FinSetObj, FinMap
from .ambient import FINSET
from .internal import InternalCategory


def finite_category(name, objects, arrows, identities, comp) -> InternalCategory:
    """Build an internal category in finite sets from named data.

    objects: list of object atoms
    arrows: dict arrow-name -> (dom, cod)
    identities: dict object -> arrow-name
    comp: dict (f, g) -> h for "f then g"; pairs involving identities may be
    omitted and are filled in automatically.
    """
    X0 = FinSetObj(name + "_X0", objects)
    X1 = FinSetObj(name + "_X1", arrows.keys())
    d1 = FinMap(X1, X0, {a: arrows[a][0] for a in X1})
    d0 = FinMap(X1, X0, {a: arrows[a][1] for a in X1})
    s0 = FinMap(X0, X1, dict(identities))
    pairs = [(f, g) for f in X1 for g in X1 if d0(f) == d1(g)]
    X2 = FinSetObj(name + "_X2", pairs)
    table = {}
    idents = set(identities.values())
    for (f, g) in X2:
        if (f, g) in comp:
            table[(f, g)] = comp[(f, g)]
        elif f in idents:
            table[(f, g)] = g
        elif g in idents:
            table[(f, g)] = f
        else:
            raise ValueError(f"composition table missing entry for {(f, g)!r}")
    m = FinMap(X2, X1, table)
    return InternalCategory(FINSET, X0, X1, d0, d1, s0, m, name=name)


def two() -> InternalCategory:
    """The arrow category: two objects, one non-identity arrow u: 0 -> 1."""
    return finite_category(
        "two",
        objects=[0, 1],
        arrows={"i0": (0, 0), "i1": (1, 1), "u": (0, 1)},
        identities={0: "i0", 1: "i1"},
        comp={},
    )


def e4() -> InternalCategory:
    """The isomorphism-pair groupoid: u: 0 -> 1 and v: 1 -> 0 mutually
    inverse."""
    return finite_category(
        "e4",
        objects=[0, 1],
        arrows={"i0": (0, 0), "i1": (1, 1), "u": (0, 1), "v": (1, 0)},
        identities={0: "i0", 1: "i1"},
        comp={("u", "v"): "i0", ("v", "u"): "i1"},
    )


def z2_monoid() -> InternalCategory:
    """Z/2 as a one-object groupoid."""
    return finite_category(
        "z2",
        objects=["*"],
        arrows={0: ("*", "*"), 1: ("*", "*")},
        identities={"*": 0},
        comp={(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 0},
    )


def discrete(n: int, name: str = "disc") -> InternalCategory:
    """The discrete category on n objects."""
    objs = list(range(n))
    return finite_category(
        name + str(n),
        objects=objs,
        arrows={("id", k): (k, k) for k in objs},
        identities={k: ("id", k) for k in objs},
        comp={},
    )


def e7():
    """The one-object multicategory with a unary operation e and a nullary
    operation k, subject to e(e(x)) = e(x) and e(k) = k.  Returned as a
    certified list-monad T-category (an operad)."""
    from .monads import mk_list_monad
    from .graded import GradedMap, m_set
    from .tcat import TGraph, build_tcategory

    M = mk_list_monad()
    X0 = FinSetObj("e7_X0", ["*"])
    X1 = FinSetObj("e7_X1", ["e", "k"])
    d0 = FinMap(X1, X0, {"e": "*", "k": "*"})
    arity_table = {"e": ("*",), "k": ()}
    delta1 = GradedMap(X1, m_set(X0), arity_table.__getitem__,
                       tag=("table", arity_table))
    s0 = FinMap(X0, X1, {"*": "e"})
    graph = TGraph(M, X0, X1, d0, delta1, s0, name="e7")
    from .tcat import TCategory

    C0 = TCategory(graph, None, name="e7")
    comp = {
        ("e", ("e",)): "e",
        ("e", ("k",)): "k",
        ("k", ()): "k",
    }
    d1_1 = FinMap(C0.X2, X1, comp)
    return build_tcategory(graph, d1_1, name="e7")
