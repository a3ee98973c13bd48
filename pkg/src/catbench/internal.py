"""Internal categories over an ambient category.

Orientation convention, fixed globally: d1 is the domain face and d0 the
codomain face.  The object of composable pairs is the chosen pullback

    X2 = {(f, g) : d0(f) = d1(g)}        -- "f then g"

with faces d2(f,g) = f, d0(f,g) = g and composite d1(f,g) = m(f,g) = g∘f.
Degeneracies: s0(f) = (id_{dom f}, f) and s1(f) = (f, id_{cod f}).  X3 is the
chosen pullback {(a, b) ∈ X2×X2 : second(a) = first(b)} and associativity is
the single equation m∘d1 = m∘d2 on X3.
"""

from __future__ import annotations

from dataclasses import dataclass

from .sets import FinSetObj, FinMap, compose as fs_compose, kernel_pair
from .ambient import FINSET, FinSetAmbient, PtMorphism, pt_is_cartesian  # noqa: F401
from .reports import Certificate


class InternalCategory:
    """Internal category data (X0, X1, d0, d1, s0, m) over an ambient.

    m must be given on the canonical composable-pair pullback X2.
    Derived structure (X2, X3, all faces and degeneracies) is computed lazily.
    """

    def __init__(self, ambient, X0, X1, d0, d1, s0, m, name: str = "C"):
        self.ambient = ambient
        self.X0 = X0
        self.X1 = X1
        self.d0 = d0  # codomain face X1 -> X0
        self.d1 = d1  # domain face X1 -> X0
        self.s0 = s0  # identities X0 -> X1
        self.m = m  # composition X2 -> X1
        self.name = name
        self._pb2 = None
        self._pb3 = None

    # -- level 2 -----------------------------------------------------------

    @property
    def pb2(self):
        if self._pb2 is None:
            self._pb2 = self.ambient.pullback(self.d0, self.d1, f"{self.name}_X2")
        return self._pb2

    @property
    def X2(self):
        return self.pb2.P

    @property
    def d2_2(self):
        """First projection X2 -> X1 (the face forgetting the composite)."""
        return self.pb2.pa

    @property
    def d0_2(self):
        """Second projection X2 -> X1."""
        return self.pb2.pb

    @property
    def d1_2(self):
        """The composite face: m itself."""
        return self.m

    @property
    def s0_2(self):
        A = self.ambient
        return A.mediate(self.pb2, A.compose(self.s0, self.d1), A.identity(self.X1))

    @property
    def s1_2(self):
        A = self.ambient
        return A.mediate(self.pb2, A.identity(self.X1), A.compose(self.s0, self.d0))

    # -- level 3 -----------------------------------------------------------

    @property
    def pb3(self):
        if self._pb3 is None:
            self._pb3 = self.ambient.pullback(self.d0_2, self.d2_2, f"{self.name}_X3")
        return self._pb3

    @property
    def X3(self):
        return self.pb3.P

    @property
    def d3_3(self):
        return self.pb3.pa

    @property
    def d0_3(self):
        return self.pb3.pb

    @property
    def d1_3(self):
        A = self.ambient
        return A.mediate(
            self.pb2,
            A.compose(self.m, self.pb3.pa),
            A.compose(self.d0_2, self.pb3.pb),
        )

    @property
    def d2_3(self):
        A = self.ambient
        return A.mediate(
            self.pb2,
            A.compose(self.d2_2, self.pb3.pa),
            A.compose(self.m, self.pb3.pb),
        )


def validate_internal_category(C: InternalCategory) -> Certificate:
    """Check every simplicial identity through level 3, each named."""
    A = C.ambient
    cert = Certificate(f"internal category {C.name}")
    eq = A.mor_eq
    one1 = A.identity(C.X1)

    cert.add("d0.s0 = 1", eq(A.compose(C.d0, C.s0), A.identity(C.X0)))
    cert.add("d1.s0 = 1", eq(A.compose(C.d1, C.s0), A.identity(C.X0)))
    cert.add("d1.m = d1.d2 (domain of composite)",
             eq(A.compose(C.d1, C.m), A.compose(C.d1, C.d2_2)))
    cert.add("d0.m = d0.d0 (codomain of composite)",
             eq(A.compose(C.d0, C.m), A.compose(C.d0, C.d0_2)))
    try:
        cert.add("m.s0 = 1 (left unit)", eq(A.compose(C.m, C.s0_2), one1))
        cert.add("m.s1 = 1 (right unit)", eq(A.compose(C.m, C.s1_2), one1))
    except ValueError as exc:
        cert.add("degeneracies well-typed", False, str(exc))
        return cert
    try:
        cert.add("m.d1 = m.d2 on X3 (associativity)",
                 eq(A.compose(C.m, C.d1_3), A.compose(C.m, C.d2_3)))
    except ValueError as exc:
        cert.add("level-3 faces well-typed", False, str(exc))
    return cert


def is_groupoid(C: InternalCategory) -> bool:
    """True iff the square (top m, left d0-projection, right d0, bottom d0)
    is a pullback — equivalently every arrow is invertible."""
    return C.ambient.is_pullback_square(C.m, C.d0_2, C.d0, C.d0)


def invert(C: InternalCategory) -> FinMap:
    """The inversion involution of a groupoid over plain finite sets."""
    if not isinstance(C.ambient, FinSetAmbient):
        raise ValueError("invert is implemented for the finite-set ambient")
    if not is_groupoid(C):
        raise ValueError("invert called on a non-groupoid")
    table = {}
    for f in C.X1:
        target = C.s0(C.d1(f))
        cands = [
            g for g in C.X1 if C.d0(f) == C.d1(g) and C.m((f, g)) == target
        ]
        if len(cands) != 1:
            raise ValueError(f"no unique inverse for {f!r}")
        table[f] = cands[0]
    return FinMap(C.X1, C.X1, table)


class InternalFunctor:
    """A pair (f0, f1) between internal categories; the level-2 component is
    derived, never supplied."""

    def __init__(self, source: InternalCategory, target: InternalCategory, f0, f1,
                 name: str = "F"):
        self.source = source
        self.target = target
        self.f0 = f0
        self.f1 = f1
        self.name = name

    @property
    def f2(self):
        A = self.target.ambient
        return A.mediate(
            self.target.pb2,
            A.compose(self.f1, self.source.d2_2),
            A.compose(self.f1, self.source.d0_2),
        )

    def validate(self) -> Certificate:
        A = self.target.ambient
        S, T = self.source, self.target
        eq = A.mor_eq
        cert = Certificate(f"internal functor {self.name}")
        cert.add("f0.d0 = d0.f1", eq(A.compose(self.f0, S.d0), A.compose(T.d0, self.f1)))
        cert.add("f0.d1 = d1.f1", eq(A.compose(self.f0, S.d1), A.compose(T.d1, self.f1)))
        cert.add("f1.s0 = s0.f0", eq(A.compose(self.f1, S.s0), A.compose(T.s0, self.f0)))
        try:
            cert.add("f1.m = m.f2",
                     eq(A.compose(self.f1, S.m), A.compose(T.m, self.f2)))
        except ValueError as exc:
            cert.add("f2 well-defined", False, str(exc))
        return cert


def is_discrete_fibration(F: InternalFunctor) -> bool:
    """The square indexed by the domain face (f1 over f0 along d1) is a
    pullback."""
    return F.target.ambient.is_pullback_square(F.f1, F.source.d1, F.target.d1, F.f0)


def is_discrete_cofibration(F: InternalFunctor) -> bool:
    """The square indexed by the codomain face (f1 over f0 along d0) is a
    pullback."""
    return F.target.ambient.is_pullback_square(F.f1, F.source.d0, F.target.d0, F.f0)


def dec(C: InternalCategory):
    """The shifted category Dec C with objects X1 and arrows X2, together
    with the projection functor ε: Dec C → C (a discrete cofibration).

    An arrow P = (f, g) of Dec C goes from m(P) = g∘f to g; the composite of
    a composable pair (P, Q) (i.e. g_P = m(Q)) is (m(f_P, f_Q), g_Q).
    """
    A = C.ambient
    dd0 = C.d0_2  # codomain face of Dec C
    dd1 = C.m  # domain face of Dec C
    pbD = A.pullback(dd0, dd1, f"{C.name}_DecX2")
    prP, prQ = pbD.pa, pbD.pb
    first_legs = A.mediate(
        C.pb2, A.compose(C.d2_2, prP), A.compose(C.d2_2, prQ)
    )
    mD = A.mediate(
        C.pb2, A.compose(C.m, first_legs), A.compose(C.d0_2, prQ)
    )
    DecC = InternalCategory(
        A, C.X1, C.X2, dd0, dd1, C.s0_2, mD, name=f"Dec({C.name})"
    )
    eps = InternalFunctor(DecC, C, C.d1, C.d2_2, name=f"eps({C.name})")
    return DecC, eps


# -- reflexive graphs and groupoid presentations -----------------------------


@dataclass(frozen=True)
class ReflexiveGraph:
    """A reflexive graph over finite sets: d1 = source, d0 = target, s0 the
    identity loop choice."""

    X0: FinSetObj
    X1: FinSetObj
    d0: FinMap
    d1: FinMap
    s0: FinMap

    def __post_init__(self):
        for x in self.X0:
            if self.d0(self.s0(x)) != x or self.d1(self.s0(x)) != x:
                raise ValueError(f"s0 is not a common splitting at {x!r}")


def groupoid_from_presentation(graph: ReflexiveGraph, d2: FinMap) -> InternalCategory:
    """Build the groupoid presented by a division map d2 on the kernel pair
    of the codomain face.

    R = R[d0] consists of same-codomain pairs (α, β); d2(α, β) is the arrow γ
    with m(γ, α) = β (in the one-object set model, γ = α⁻¹∘β read with
    "then" composition).  Each defining equation is checked and named; any
    failure raises.  Composition is then recovered as m(f, g) = the unique β
    with d0(β) = d0(g) and d2(g, β) = f, and the result must pass both
    validation and the groupoid test.
    """
    R, p0, p1, diag = kernel_pair(graph.d0, name="R[d0]")
    if d2.dom != R or d2.cod != graph.X1:
        raise ValueError("d2 must be a map R[d0] -> X1")

    def fail(eqn: str, at):
        raise ValueError(f"presentation law {eqn} fails at {at!r}")

    for (a, b) in R:
        g = d2((a, b))
        if graph.d1(g) != graph.d1(b):
            fail("d1.d2 = d1.p1", (a, b))
        if graph.d0(g) != graph.d1(a):
            fail("d0.d2 = d1.p0", (a, b))
    for a in graph.X1:
        if d2((a, a)) != graph.s0(graph.d1(a)):
            fail("d2.s0 = s0.d1", a)
    for b in graph.X1:
        e = graph.s0(graph.d0(b))
        if d2((e, b)) != b:
            fail("d2.(s0.d0, 1) = 1", b)
    for (g, a) in R:
        for b in graph.X1:
            if graph.d0(b) != graph.d0(g):
                continue
            lhs = d2((d2((g, a)), d2((g, b))))
            if lhs != d2((a, b)):
                fail("d2.R(d2) = d2.p2", (g, a, b))

    # recover composition on the canonical composable pairs
    pairs = [
        (f, g) for f in graph.X1 for g in graph.X1 if graph.d0(f) == graph.d1(g)
    ]
    X2 = FinSetObj("X2", pairs)
    table = {}
    for (f, g) in X2:
        cands = [
            b
            for b in graph.X1
            if graph.d0(b) == graph.d0(g) and d2((g, b)) == f
        ]
        if len(cands) != 1:
            fail("unique composite recovery", (f, g))
        table[(f, g)] = cands[0]
    C = InternalCategory(
        FINSET, graph.X0, graph.X1, graph.d0, graph.d1, graph.s0,
        FinMap(X2, graph.X1, table), name="presented",
    )
    validate_internal_category(C).require()
    if not is_groupoid(C):
        raise ValueError("presented category is not a groupoid")
    return C


def kernel_groupoid(f: FinMap, name: str = "R") -> InternalCategory:
    """The kernel-pair groupoid R[f]•: objects dom(f), an arrow (a, b) from a
    to b for each pair with f(a) = f(b)."""
    R, p0, p1, diag = kernel_pair(f, name=name)
    pairs = [(u, v) for u in R for v in R if u[1] == v[0]]
    X2 = FinSetObj(name + "_X2", pairs)
    m = FinMap(X2, R, {(u, v): (u[0], v[1]) for (u, v) in X2})
    return InternalCategory(FINSET, f.dom, R, p1, p0, diag, m, name=name + "*")
