"""The Kleisli category of a monad, with the support calculus.

A Kleisli morphism X → Y is carried by its support α: X → T(Y) in the base
ambient; composition is "β"∘"α" = "μ_Z ∘ T(β) ∘ α".  The base category embeds
by f ↦ "λ_Y ∘ f", and membership of a Kleisli morphism in (the image of) the
base is the equation λ_{T(Y)}∘α = T(λ_Y)∘α — meaningful once the monad holds
a half-cartesian certificate, which every membership query requires.

Pullback verdicts in the Kleisli category reduce to a comparison bijection:
a cone from a probe Z is a pair of supports valued in T(C) × T(B), pointwise
landing in the compatibility set S, and a mediating morphism is a pointwise
preimage under t ↦ (forget(left)(t), forget(top)(t)).  Hence "exactly one
mediator for every cone from every (nonempty) probe" is equivalent to that
comparison being a bijection onto S.  A literal cone-enumeration check is
kept alongside as a cross-validation oracle for small instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .sets import FinSetObj, FinMap
from . import graded as gr
from .monads import Monad, CartesianCertificate
from .reports import Certificate


class KleisliMor:
    """A Kleisli morphism, identified by its support."""

    __slots__ = ("monad", "src", "tgt", "support")

    def __init__(self, monad: Monad, src, tgt, support):
        self.monad = monad
        self.src = src
        self.tgt = tgt
        self.support = support  # base morphism src -> T(tgt); always callable

    @property
    def dom(self):
        return self.src

    @property
    def cod(self):
        return self.tgt

    def __call__(self, x):
        return self.support(x)

    def __eq__(self, other):
        if not isinstance(other, KleisliMor):
            return NotImplemented
        if self.src != other.src or self.tgt != other.tgt:
            return False
        return all(
            self.support(x) == other.support(x) for x in _elems(self.monad, self.src)
        )

    def __hash__(self):
        return hash((self.src, self.tgt))

    def __repr__(self):
        return f"KleisliMor({self.src!r}->{self.tgt!r})"


def _elems(M: Monad, X):
    if M.graded:
        if isinstance(X, FinSetObj):
            return list(X)
        raise ValueError("graded Kleisli sources must be finite")
    return M.ambient.obj_elements(X)


def kl_compose(b: KleisliMor, a: KleisliMor) -> KleisliMor:
    """"β"∘"α" with support μ_Z ∘ T(β) ∘ α."""
    M = a.monad
    if b.monad is not M or a.tgt != b.src:
        raise ValueError("Kleisli composition type mismatch")
    if M.graded:
        support = gr.graded_compose(
            M.mult(b.tgt), gr.graded_compose(gr.m_map(b.support), a.support)
        )
    else:
        A = M.ambient
        support = A.compose(M.mult(b.tgt), A.compose(M.Tm(b.support), a.support))
    return KleisliMor(M, a.src, b.tgt, support)


def embed_E(M: Monad, f) -> KleisliMor:
    """Embed a base morphism: support λ_Y ∘ f."""
    if M.graded:
        support = gr.graded_compose(M.unit(f.cod), f)
    else:
        support = M.ambient.compose(M.unit(f.cod), f)
    return KleisliMor(M, f.dom, f.cod, support)


def kl_identity(M: Monad, X) -> KleisliMor:
    return embed_E(M, M.ambient.identity(X) if not M.graded else FinMap.identity(X))


def counit(M: Monad, X) -> KleisliMor:
    """ε_X: the Kleisli morphism T(X) → X supported by the identity of
    T(X)."""
    TX = M.T(X)
    if M.graded:
        support = gr.GradedMap(TX, TX, lambda w: w)
    else:
        support = M.ambient.identity(TX)
    return KleisliMor(M, TX, X, support)


def forget(a: KleisliMor):
    """The underlying base morphism T(X) → T(Y): μ_Y ∘ T(α)."""
    M = a.monad
    if M.graded:
        return gr.graded_compose(M.mult(a.tgt), gr.m_map(a.support))
    return M.ambient.compose(M.mult(a.tgt), M.Tm(a.support))


def in_E(a: KleisliMor, cert: CartesianCertificate):
    """Decide membership in the embedded base category, with witness.

    Requires a half-cartesian certificate (λ is the equalizer of λ_T and Tλ),
    which is what makes the pointwise test λ_{T(Y)}(α(x)) = T(λ_Y)(α(x))
    characterize the λ-image.  Returns (verdict, witness-or-None)."""
    if cert is None or not cert.half_cartesian:
        raise ValueError(
            "in_E requires a passing half-cartesian certificate for the monad"
        )
    M = a.monad
    TY = M.T(a.tgt)
    lamT = M.unit(TY)
    Tlam = M.Tm(M.unit(a.tgt))
    lam = M.unit(a.tgt)
    unit_values = {}
    for y in _elems(M, a.tgt):
        unit_values[_norm(lam(y))] = y
    table = {}
    for x in _elems(M, a.src):
        t = a.support(x)
        if lamT(t) != Tlam(t):
            return False, None
        table[x] = unit_values[_norm(t)]
    witness = _table_morphism(M, a.src, a.tgt, table)
    return True, witness


def _norm(v):
    return v


def _table_morphism(M: Monad, X, Y, table):
    if M.graded:
        return FinMap(X, Y, table)
    amb = M.ambient
    from .ambient import SliceObj, SliceMor, FinSetAmbient, SliceAmbient

    if isinstance(amb, FinSetAmbient):
        return FinMap(X, Y, table)
    if isinstance(amb, SliceAmbient):
        return SliceMor(X, Y, FinMap(X.carrier, Y.carrier, table))
    raise ValueError(f"no witness constructor for ambient {amb!r}")


@dataclass(frozen=True)
class KlSquare:
    """A commuting square in Kl(T): top: A→B, left: A→C, right: B→D,
    bottom: C→D."""

    top: KleisliMor
    left: KleisliMor
    right: KleisliMor
    bottom: KleisliMor


def kl_pullback_along_E(M: Monad, f, psi: KleisliMor, cert=None) -> KlSquare:
    """Pull an embedded base morphism f: X→Y back along any Kleisli morphism
    ψ: U→Y.  The vertex is the base pullback of support(ψ) along T(f), i.e.
    V = {(u, ξ) : ψ(u) = T(f)(ξ)}, with projection to U embedded from the
    base and the ξ-projection taken as a raw support."""
    if psi.tgt != f.cod:
        raise ValueError("psi must target the codomain of f")
    if M.graded:
        V, p_u, p_xi = gr.graded_pullback_fiber(psi.support, M.Tm(f), name="V")
        top = embed_E(M, p_u)
        left = KleisliMor(M, V, f.dom, p_xi)
        return KlSquare(top, left, psi, embed_E(M, f))
    A = M.ambient
    pb = A.pullback(psi.support, M.Tm(f), name="V")
    top = embed_E(M, pb.pa)
    left = KleisliMor(M, pb.P, f.dom, pb.pb)
    return KlSquare(top, left, psi, embed_E(M, f))


def is_pullback_in_kl(sq: KlSquare, probes=None, bound: int | None = None) -> bool:
    """Pullback verdict via the comparison bijection (see module docstring).
    The probe family only matters in that it must contain a nonempty object
    for the verdict to carry its cone-enumeration meaning; the verdict itself
    is probe-independent."""
    M = sq.top.monad
    if not kl_compose(sq.right, sq.top) == kl_compose(sq.bottom, sq.left):
        raise ValueError("square does not commute in Kl(T)")
    fl, ft = forget(sq.left), forget(sq.top)
    fb, fr = forget(sq.bottom), forget(sq.right)
    TA = M.T(sq.top.src)
    TC = M.T(sq.left.tgt)
    TB = M.T(sq.top.tgt)
    if M.graded:
        if bound is None:
            raise ValueError("graded Kleisli pullback checks need a grade bound")
        elA = TA.elements_up_to(2 * bound)
        elC = TC.elements_up_to(bound)
        elB = TB.elements_up_to(bound)
    else:
        elA = M.ambient.obj_elements(TA)
        elC = M.ambient.obj_elements(TC)
        elB = M.ambient.obj_elements(TB)
    app = (lambda g, x: g(x)) if M.graded else M.ambient.apply
    seen = {}
    for t in elA:
        key = (app(fl, t), app(ft, t))
        if key in seen:
            return False
        seen[key] = t
    for a in elC:
        va = app(fb, a)
        for b in elB:
            if va == app(fr, b) and (a, b) not in seen:
                return False
    return True


def kl_hom(M: Monad, X, Y, bound: int | None = None) -> list:
    """All Kleisli morphisms X → Y (grade-bounded targets when graded)."""
    if M.graded:
        xs = list(X)
        targets = M.T(Y).elements_up_to(bound if bound is not None else 4)
        out = []
        for images in product(targets, repeat=len(xs)):
            table = dict(zip(xs, images))
            out.append(
                KleisliMor(
                    M, X, Y, gr.GradedMap(X, M.T(Y), table.__getitem__,
                                          tag=("table", table))
                )
            )
        return out
    return [KleisliMor(M, X, Y, s) for s in M.ambient.hom(X, M.T(Y))]


def is_pullback_in_kl_by_cones(sq: KlSquare, probes) -> bool:
    """Literal universal-property check: for every probe Z and every
    commuting cone from Z there is exactly one mediating Kleisli morphism.
    Exponential in probe size; used to cross-validate the fast verdict."""
    M = sq.top.monad
    A = sq.top.src
    for Z in probes:
        for a in kl_hom(M, Z, sq.left.tgt):
            lhs = kl_compose(sq.bottom, a)
            for b in kl_hom(M, Z, sq.top.tgt):
                if not lhs == kl_compose(sq.right, b):
                    continue
                mediators = [
                    u
                    for u in kl_hom(M, Z, A)
                    if kl_compose(sq.left, u) == a and kl_compose(sq.top, u) == b
                ]
                if len(mediators) != 1:
                    return False
    return True


def verify_left_cancellable(M: Monad, probes, cert: CartesianCertificate) -> Certificate:
    """For every φ: X→U in Kl(T) and base g: U→Y with embed(g)∘φ in the base,
    φ itself must be in the base.  Exhaustive over the probes; the report
    lists every counterexample (there must be none)."""
    if cert is None or not cert.unit_cartesian:
        raise ValueError("left-cancellability requires a λ-cartesian certificate")
    out = Certificate(f"left cancellability of E in Kl({M.name})")
    counterexamples = []
    checked = 0
    for U in probes:
        for Y in probes:
            base_maps = M.ambient.hom(U, Y)
            for X in probes:
                for phi in kl_hom(M, X, U):
                    phi_in, _ = in_E(phi, cert)
                    for g in base_maps:
                        comp = kl_compose(embed_E(M, g), phi)
                        comp_in, _ = in_E(comp, cert)
                        checked += 1
                        if comp_in and not phi_in:
                            counterexamples.append((g, phi))
    out.add(
        f"no counterexamples among {checked} (g, phi) pairs",
        not counterexamples,
        detail=repr(counterexamples[:3]) if counterexamples else "",
    )
    return out


def verify_iso_reflection(M: Monad, probes, cert: CartesianCertificate) -> Certificate:
    """If an embedded base morphism has an inverse in Kl(T), that inverse is
    itself embedded and the base morphism is invertible."""
    out = Certificate(f"embed_E reflects isomorphisms for {M.name}")
    bad = []
    checked = 0
    for X in probes:
        for Y in probes:
            for f in M.ambient.hom(X, Y):
                ef = embed_E(M, f)
                inverses = [
                    h
                    for h in kl_hom(M, Y, X)
                    if kl_compose(h, ef) == kl_identity(M, X)
                    and kl_compose(ef, h) == kl_identity(M, Y)
                ]
                if not inverses:
                    continue
                checked += 1
                h = inverses[0]
                h_in, witness = in_E(h, cert)
                ok = h_in and witness is not None
                if ok:
                    A = M.ambient
                    ok = A.mor_eq(A.compose(witness, f), A.identity(X)) and A.mor_eq(
                        A.compose(f, witness), A.identity(Y)
                    )
                if not ok:
                    bad.append(f)
    out.add(
        f"every Kleisli-invertible embedded map is base-invertible ({checked} isos)",
        not bad,
        detail=repr(bad[:3]) if bad else "",
    )
    return out


def check_lambda_equalizer_in_kl(M: Monad, X, probes, cert) -> Certificate:
    """The embedded unit "λ_X": X → T(X) equalizes the embedded pair
    (λ_{T X}, T λ_X): T(X) ⇉ T²(X) in Kl(T), universally over the probes."""
    out = Certificate(f"lambda-equalizer diagram in Kl({M.name})")
    TX = M.T(X)
    e = embed_E(M, M.unit(X))
    p = embed_E(M, M.unit(TX))
    q = embed_E(M, M.Tm(M.unit(X)))
    out.add("e equalizes the pair", kl_compose(p, e) == kl_compose(q, e))
    universal = True
    for Z in probes:
        for phi in kl_hom(M, Z, TX):
            if not kl_compose(p, phi) == kl_compose(q, phi):
                continue
            mediators = [
                u for u in kl_hom(M, Z, X) if kl_compose(e, u) == phi
            ]
            if len(mediators) != 1:
                universal = False
    out.add("unique factorization through e on all probes", universal)
    return out
