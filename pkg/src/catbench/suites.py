"""The named verification suites: each bundles one theorem-level claim into
a deterministic batch of checks over the standard corpus and returns a
Certificate.  They are shared between the command-line runner and the
acceptance tests."""

from __future__ import annotations

from itertools import product
from types import SimpleNamespace

from .sets import FinSetObj, FinMap
from .ambient import FINSET, SliceObj, SliceMor, PtObject, PtMorphism
from .internal import (
    InternalCategory,
    InternalFunctor,
    validate_internal_category,
    is_groupoid,
    is_discrete_fibration,
    is_discrete_cofibration,
    dec,
)
from .monads import (
    identity_monad,
    maybe_monad,
    writer_monad,
    z2_writer_monoid,
    mk_list_monad,
    mk_TX_monad,
    mk_G_monad,
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
from .kleisli import (
    KleisliMor,
    embed_E,
    in_E,
    kl_hom,
    kl_pullback_along_E,
    is_pullback_in_kl,
    verify_left_cancellable,
    verify_iso_reflection,
    check_lambda_equalizer_in_kl,
)
from .corpus import two, e4, z2_monoid, discrete, finite_category, e7
from .tcat import (
    tc_embed_algebra,
    translate_tcat_kl,
    translate_TX_tcat,
    translate_gcat_cat,
    embed_internal_tcat,
    r_coreflection,
    is_t_groupoid,
    is_multicategory,
    is_operad,
    mk_TXT_monad,
    translate_TXT_algebra_dfib,
    is_dfib_tfunctor,
    validate_tfunctor,
    TGraph,
    TCategory,
    build_tcategory,
)
from .reports import Certificate
from .graded import GradedMap, m_set


# -- shared corpus helpers -------------------------------------------------------


def _corpus_categories():
    return [two(), e4(), z2_monoid(), discrete(1), discrete(2)]


def _corpus_functors():
    """Five internal functors into 𝟚 and E4: identities, point inclusions,
    and the inclusion 𝟚 → E4."""
    out = []
    for C in (two(), e4()):
        out.append((C, _identity_functor(C)))
        P = finite_category("pt", [0], {"i": (0, 0)}, {0: "i"}, {})
        out.append((C, InternalFunctor(
            P, C, FinMap(P.X0, C.X0, {0: 0}), FinMap(P.X1, C.X1, {"i": "i0"}),
            name=f"pt->{C.name}")))
    T, E = two(), e4()
    out.append((E, InternalFunctor(
        T, E, FinMap(T.X0, E.X0, {0: 0, 1: 1}),
        FinMap(T.X1, E.X1, {"i0": "i0", "i1": "i1", "u": "u"}),
        name="two->e4")))
    return out


def _identity_functor(C):
    return InternalFunctor(C, C, FinMap.identity(C.X0), FinMap.identity(C.X1),
                           name=f"id({C.name})")


def _all_maps(X, Y):
    xs = list(X)
    for vals in product(list(Y), repeat=len(xs)):
        yield FinMap(X, Y, dict(zip(xs, vals)))


# -- 1: monad laws ----------------------------------------------------------------


def suite_monad_laws(probe_size: int = 3, grade_bound: int = 4) -> Certificate:
    cert = Certificate("suite monad-laws")
    monads = [
        identity_monad(probes=finset_probes(probe_size)),
        maybe_monad(probes=finset_probes(probe_size)),
        writer_monad(z2_writer_monoid(), probes=finset_probes(probe_size)),
        mk_list_monad(grade_bound),
        mk_TX_monad(two(), max_probe_size=probe_size),
        mk_TX_monad(e4(), max_probe_size=probe_size),
        mk_G_monad(max_probe_total=4),
    ]
    for M in monads:
        c = validate_monad(M)
        detail = "" if c.ok else "; ".join(
            f"{f.name}: {f.detail}" for f in c.failures()[:2]
        )
        cert.add(f"monad laws: {M.name}", c.ok, detail)
    return cert


# -- 2: cartesianness -------------------------------------------------------------


def suite_cartesianness(probe_size: int = 3, grade_bound: int = 4) -> Certificate:
    cert = Certificate("suite cartesianness")
    full = [
        maybe_monad(probes=finset_probes(probe_size)),
        writer_monad(z2_writer_monoid(), probes=finset_probes(probe_size)),
        mk_list_monad(grade_bound),
    ]
    bases = [two(), e4(), z2_monoid()]
    tx = {C.name: mk_TX_monad(C, max_probe_size=probe_size) for C in bases}
    tx_certs = {}
    for M in full:
        cc = certify_cartesian(M, grade_bound=grade_bound)
        cert.add(f"cartesian certificate: {M.name}", cc.cartesian)
    for name, M in tx.items():
        cc = certify_cartesian(M, grade_bound=grade_bound)
        tx_certs[name] = cc
        cert.add(f"cartesian certificate: {M.name}", cc.cartesian)
    mismatches = []
    for C in bases:
        if tx_certs[C.name].hypercartesian != is_groupoid(C):
            mismatches.append(C.name)
    cert.add(
        "hypercartesian(TX) iff groupoid base (zero mismatches)",
        not mismatches,
        f"mismatches: {mismatches}" if mismatches else "bases: two, e4, z2",
    )
    return cert


# -- 3: Kleisli calculus ----------------------------------------------------------


def suite_kleisli(probe_size: int = 3, grade_bound: int = 4) -> Certificate:
    cert = Certificate("suite kleisli-calculus")
    M = maybe_monad(probes=finset_probes(probe_size))
    cc = certify_cartesian(M)
    probes = M.probes

    disagreements = 0
    for X in probes:
        for Y in probes:
            embedded = {
                tuple(sorted(((x, g.support(x)) for x in X), key=repr))
                for g in (embed_E(M, f) for f in _all_maps(X, Y))
            }
            for phi in kl_hom(M, X, Y):
                key = tuple(sorted(((x, phi.support(x)) for x in X), key=repr))
                if in_E(phi, cc)[0] != (key in embedded):
                    disagreements += 1
    cert.add("in_E agrees with the image of embed_E", disagreements == 0,
             f"disagreements: {disagreements}")

    lc = verify_left_cancellable(M, probes, cc)
    cert.add("left-cancellability of E (zero counterexamples)", lc.ok)

    bad = checked = 0
    for X in probes:
        for Y in probes:
            for f in _all_maps(X, Y):
                for U in probes:
                    for psi in kl_hom(M, U, Y):
                        sq = kl_pullback_along_E(M, f, psi)
                        checked += 1
                        if not is_pullback_in_kl(sq):
                            bad += 1
    cert.add("kl_pullback_along_E squares are Kl-pullbacks", bad == 0,
             f"{checked} squares, {bad} failures")

    ir = verify_iso_reflection(M, probes, cc)
    cert.add("embed_E reflects isomorphisms (zero counterexamples)", ir.ok)
    return cert


# -- 4: G-algebras are groupoids (counting over reflexive graphs) ------------------


def _reflexive_graphs(max_objects: int = 2, max_arrows: int = 4):
    """All reflexive graphs (d0, d1, s0 fixed) with ≤ max_objects objects and
    ≤ max_arrows arrows, identities first."""
    out = []
    for n in range(1, max_objects + 1):
        objs = list(range(n))
        for extra in range(0, max_arrows - n + 1):
            names = [("id", k) for k in objs] + [("a", j) for j in range(extra)]
            for endpoints in product(product(objs, objs), repeat=extra):
                X0 = FinSetObj("G0", objs)
                X1 = FinSetObj("G1", names)
                d0t = {("id", k): k for k in objs}
                d1t = dict(d0t)
                for j, (dm, cd) in enumerate(endpoints):
                    d1t[("a", j)] = dm
                    d0t[("a", j)] = cd
                out.append(
                    (FinMap(X1, X0, d0t), FinMap(X1, X0, d1t),
                     FinMap(X0, X1, {k: ("id", k) for k in objs}))
                )
    return out


def _count_groupoid_structures(d0, d1, s0):
    """DFS over composition tables with unit pinning, endpoint constraints,
    and incremental associativity propagation; counts tables that certify as
    internal groupoids."""
    X1, X0 = d0.dom, d0.cod
    arrows = list(X1)
    pairs = [(f, g) for f in arrows for g in arrows if d0(f) == d1(g)]
    pinned = {}
    for f in arrows:
        pinned[(s0(d1(f)), f)] = f
        pinned[(f, s0(d0(f)))] = f
    free = [p for p in pairs if p not in pinned]
    candidates = {
        (f, g): [v for v in arrows if d1(v) == d1(f) and d0(v) == d0(g)]
        for (f, g) in free
    }
    table = dict(pinned)
    found = []

    def consistent(table):
        # associativity on fully determined triples
        for (f, g) in pairs:
            fg = table.get((f, g))
            if fg is None:
                continue
            for h in arrows:
                if d0(g) != d1(h):
                    continue
                gh = table.get((g, h))
                lhs = table.get((fg, h))
                rhs = table.get((f, gh)) if gh is not None else None
                if lhs is not None and rhs is not None and lhs != rhs:
                    return False
        return True

    def dfs(i):
        if i == len(free):
            X2 = FinSetObj("X2", pairs)
            C = InternalCategory(
                FINSET, X0, X1, d0, d1, s0,
                FinMap(X2, X1, dict(table)), name="cand",
            )
            if validate_internal_category(C).ok and is_groupoid(C):
                found.append(C)
            return
        key = free[i]
        for v in candidates[key]:
            table[key] = v
            if consistent(table):
                dfs(i + 1)
            del table[key]

    dfs(0)
    return found


def _count_g_algebra_structures(G, d0, d1, s0):
    """DFS over division tables ξ.upper on R[d0] with section/unit pinning
    and incremental checks of the multiplication law; counts tables whose
    algebra validates."""
    X = PtObject(d0, s0)
    GX = G.T(X)
    X1, X0 = d0.dom, d0.cod
    arrows = list(X1)
    R = list(GX.upper_obj)
    pinned = {}
    for a in arrows:
        pinned[(a, a)] = s0(d1(a))
        pinned[(s0(d0(a)), a)] = a
    free = [p for p in R if p not in pinned]
    candidates = {
        (a, b): [v for v in arrows if d0(v) == d1(a) and d1(v) == d1(b)]
        for (a, b) in free
    }
    fibers = {}
    for a in arrows:
        fibers.setdefault(d0(a), []).append(a)
    table = dict(pinned)
    found = []

    def consistent(table):
        # ξ(b,c) = ξ(ξ(a,b), ξ(a,c)) on determined triples with common d0
        for fib in fibers.values():
            for a in fib:
                for b in fib:
                    ab = table.get((a, b))
                    if ab is None:
                        continue
                    for c in fib:
                        ac = table.get((a, c))
                        bc = table.get((b, c))
                        if ac is None or bc is None:
                            continue
                        outer = table.get((ab, ac))
                        if outer is not None and outer != bc:
                            return False
        return True

    def dfs(i):
        if i == len(free):
            xi = PtMorphism(
                GX, X, FinMap(GX.upper_obj, X1, dict(table)), d1
            )
            alg = Algebra(G, X, xi)
            if validate_algebra(alg).ok:
                found.append(alg)
            return
        key = free[i]
        for v in candidates[key]:
            table[key] = v
            if consistent(table):
                dfs(i + 1)
            del table[key]

    dfs(0)
    return found


def suite_carac(probe_size: int = 3, grade_bound: int = 4) -> Certificate:
    cert = Certificate("suite carac (G-algebras are groupoids)")
    G = mk_G_monad()
    graphs = _reflexive_graphs(2, 4)
    mismatches = []
    total_g = total_a = 0
    rt_ok = True
    for idx, (d0, d1, s0) in enumerate(graphs):
        gs = _count_groupoid_structures(d0, d1, s0)
        algs = _count_g_algebra_structures(G, d0, d1, s0)
        total_g += len(gs)
        total_a += len(algs)
        if len(gs) != len(algs):
            mismatches.append((idx, len(gs), len(algs)))
        for C in gs:
            alg = translate_G_algebra_groupoid(G, "backward", C)
            C2 = translate_G_algebra_groupoid(G, "forward", alg)
            if C2.m.table != C.m.table:
                rt_ok = False
        for alg in algs:
            C = translate_G_algebra_groupoid(G, "forward", alg)
            alg2 = translate_G_algebra_groupoid(G, "backward", C)
            if alg2.structure.upper.table != alg.structure.upper.table:
                rt_ok = False
    cert.add(
        "G-algebra count equals groupoid count on every reflexive graph",
        not mismatches,
        f"{len(graphs)} graphs, {total_g} groupoids, {total_a} algebras"
        + (f"; mismatches {mismatches}" if mismatches else ""),
    )
    cert.add("translate_G_algebra_groupoid round-trips", rt_ok)
    ge4 = e4()
    n_e4 = len(_count_groupoid_structures(ge4.d0, ge4.d1, ge4.s0))
    cert.add("E4's graph carries exactly one groupoid structure", n_e4 == 1,
             f"count: {n_e4}")
    return cert


# -- 5: T-categories are Kl(T)-categories with d0 in E ------------------------------


def _mmain_corpus(probe_size: int):
    """(monad, cartesian certificate, T-category) triples: E7, three embedded
    algebras, four slice-monad T-categories over 𝟚 and E4."""
    out = []
    C7, _ = e7()
    M7 = C7.monad
    out.append((M7, certify_cartesian(M7), C7))
    Mm = maybe_monad(probes=finset_probes(probe_size))
    ccm = certify_cartesian(Mm)
    for n in (1, 2):
        A = FinSetObj("A", [f"a{i}" for i in range(n)])
        TC, c = tc_embed_algebra(free_algebra(Mm, A))
        c.require()
        out.append((Mm, ccm, TC))
    Mw = writer_monad(z2_writer_monoid(), probes=finset_probes(probe_size))
    ccw = certify_cartesian(Mw)
    A = FinSetObj("A", ["a"])
    TC, c = tc_embed_algebra(free_algebra(Mw, A))
    c.require()
    out.append((Mw, ccw, TC))
    for C in (two(), e4()):
        MT = mk_TX_monad(C, max_probe_size=probe_size)
        cct = certify_cartesian(MT)
        for _, F in [x for x in _corpus_functors() if x[0].name == C.name][:2]:
            TC, c = translate_TX_tcat(MT, C, "backward", F)
            c.require()
            out.append((MT, cct, TC))
    return out


def suite_mmain(probe_size: int = 3, grade_bound: int = 4) -> Certificate:
    cert = Certificate("suite mmain (T-categories in Kl(T))")
    for M, cc, TC in _mmain_corpus(probe_size):
        K = translate_tcat_kl(M, cc, "forward", TC, bound=grade_bound + 2)
        valid = validate_internal_category(K).ok
        TC2, c2 = translate_tcat_kl(M, cc, "backward", K, bound=grade_bound + 2)
        o = TC.ops
        same = (
            c2.ok
            and o.eq(TC2.d0, TC.d0)
            and o.eq(TC2.s0, TC.s0)
            and o.eq(TC2.delta1, TC.delta1)
            and o.eq(TC2.d1_1, TC.d1_1)
        )
        cert.add(f"round trip through Kl: {TC.name}", valid and same)
    # rejection: a Kl-category whose d0-leg is not an embedded map
    C7, _ = e7()
    M7 = C7.monad
    cc7 = certify_cartesian(M7)
    K = translate_tcat_kl(M7, cc7, "forward", C7)
    bad_support = {x: () for x in K.X1}
    bad_d0 = KleisliMor(
        M7, K.X1, K.X0,
        GradedMap(K.X1, m_set(K.X0), bad_support.__getitem__,
                  tag=("table", bad_support)),
    )
    tampered = SimpleNamespace(X0=K.X0, X1=K.X1, d0=bad_d0, d1=K.d1,
                               s0=K.s0, m=K.m, name="tampered")
    try:
        translate_tcat_kl(M7, cc7, "backward", tampered)
        cert.add("backward rejects d0-leg outside E", False)
    except ValueError as exc:
        cert.add("backward rejects d0-leg outside E", "d0-leg" in str(exc),
                 str(exc))
    return cert


# -- 6: discrete fibrations are slice-monad algebras --------------------------------


def _enumerate_tx_algebras(MT, C, max_carrier: int):
    """Brute-force slice-monad algebra structures: every ξ table with the
    unit law pinned, validated against the algebra laws."""
    found = []
    for n in range(0, max_carrier + 1):
        Z = FinSetObj("Z", [f"z{i}" for i in range(n)])
        for anchor_vals in product(list(C.X0), repeat=n):
            h = SliceObj(Z, FinMap(Z, C.X0, dict(zip(list(Z), anchor_vals))))
            Th = MT.T(h)
            keys = list(Th.carrier)
            pin = {}
            for z in Z:
                pin[(z, C.s0(h.anchor(z)))] = z
            free = [k for k in keys if k not in pin]
            cands = [
                [z for z in Z if h.anchor(z) == C.d0(f)] for (_, f) in free
            ]
            for vals in product(*cands):
                table = dict(pin)
                table.update(dict(zip(free, vals)))
                xi = SliceMor(Th, h, FinMap(Th.carrier, Z, table))
                alg = Algebra(MT, h, xi)
                if validate_algebra(alg).ok:
                    found.append(alg)
    return found


def _enumerate_dfibs(C, max_carrier: int):
    """Brute-force discrete fibrations into C: the cell set is forced to the
    canonical fiber pairs and s0/m are forced by unique lifting, so the only
    free data is the codomain map — every candidate is then validated as an
    internal functor that is a discrete fibration with category source."""
    found = []
    for n in range(0, max_carrier + 1):
        Z = FinSetObj("Y0", [f"z{i}" for i in range(n)])
        for anchor_vals in product(list(C.X0), repeat=n):
            g0 = FinMap(Z, C.X0, dict(zip(list(Z), anchor_vals)))
            pairs = [(z, f) for z in Z for f in C.X1 if C.d1(f) == g0(z)]
            Y1 = FinSetObj("Y1", pairs)
            d1 = FinMap(Y1, Z, {(z, f): z for (z, f) in Y1})
            s0 = FinMap(Z, Y1, {z: (z, C.s0(g0(z))) for z in Z})
            cands = [
                [z for z in Z if g0(z) == C.d0(f)] for (_, f) in pairs
            ]
            for vals in product(*cands):
                d0 = FinMap(Y1, Z, dict(zip(pairs, vals)))
                comp = [(p, q) for p in Y1 for q in Y1 if d0(p) == d1(q)]
                X2 = FinSetObj("Y2", comp)
                try:
                    m = FinMap(
                        X2, Y1,
                        {(p, q): (p[0], C.m((p[1], q[1]))) for (p, q) in comp},
                    )
                except ValueError:
                    continue
                Y = InternalCategory(FINSET, Z, Y1, d0, d1, s0, m, name="cand")
                if not validate_internal_category(Y).ok:
                    continue
                F = InternalFunctor(
                    Y, C, g0, FinMap(Y1, C.X1, {(z, f): f for (z, f) in Y1})
                )
                if F.validate().ok and is_discrete_fibration(F):
                    found.append(F)
    return found


def suite_dfib(probe_size: int = 3, grade_bound: int = 4) -> Certificate:
    cert = Certificate("suite dfib (slice-monad algebras)")
    for C in (two(), e4()):
        MT = mk_TX_monad(C, max_probe_size=probe_size)
        max_carrier = 6 - len(C.X0)
        algs = _enumerate_tx_algebras(MT, C, max_carrier)
        dfibs = _enumerate_dfibs(C, max_carrier)
        cert.add(
            f"algebra count equals fibration count over {C.name}",
            len(algs) == len(dfibs),
            f"{len(algs)} algebras, {len(dfibs)} fibrations "
            f"(carriers up to {max_carrier})",
        )
        bij = True
        for alg in algs:
            F = translate_algebra_dfib(MT, C, "forward", alg)
            if not (F.validate().ok and is_discrete_fibration(F)):
                bij = False
                continue
            alg2 = translate_algebra_dfib(MT, C, "backward", F)
            if alg2.structure.map.table != alg.structure.map.table:
                bij = False
        cert.add(f"translate_algebra_dfib bijects over {C.name}", bij)
        if C.name == "e4":
            non_gpd = [F for F in dfibs if not is_groupoid(F.source)]
            cert.add(
                "every discrete fibration over e4 has groupoid domain",
                not non_gpd,
                f"{len(dfibs)} fibrations checked",
            )
    return cert


# -- 7: G-categories with cartesian 0-leg are internal categories --------------------


def suite_mmmain(probe_size: int = 3, grade_bound: int = 4) -> Certificate:
    cert = Certificate("suite mmmain (G-categories)")
    G = mk_G_monad()
    for C in _corpus_categories():
        if len(C.X1) > 4:
            continue
        TC, c = translate_gcat_cat(G, "backward", C)
        Y = translate_gcat_cat(G, "forward", TC)
        same = (
            c.ok
            and Y.d0.table == C.d0.table
            and Y.d1.table == C.d1.table
            and Y.s0.table == C.s0.table
            and Y.m.table == C.m.table
        )
        cert.add(f"round trip through G-categories: {C.name}", same)
    TC, _ = translate_gcat_cat(G, "backward", e4())
    non_identity = FinMap(
        TC.X0.upper_obj, TC.X0.upper_obj,
        {a: TC.X0.sec(TC.X0.epi(a)) for a in TC.X0.upper_obj},
    )
    tampered = SimpleNamespace(
        X0=TC.X0, X1=TC.X1, d0=TC.d0,
        delta1=SimpleNamespace(lower=non_identity, upper=TC.delta1.upper),
    )
    try:
        translate_gcat_cat(G, "forward", tampered)
        cert.add("forward rejects non-idomorphic 1-leg", False)
    except ValueError as exc:
        cert.add("forward rejects non-idomorphic 1-leg",
                 "idomorphic" in str(exc), str(exc))
    return cert


# -- 8: slice-monad T-categories are internal functors --------------------------------


def suite_tx_tcat(probe_size: int = 3, grade_bound: int = 4) -> Certificate:
    cert = Certificate("suite tx-tcat (functors as T-categories)")
    monads = {}
    mismatches = []
    for C, F in _corpus_functors():
        if C.name not in monads:
            monads[C.name] = mk_TX_monad(C, max_probe_size=probe_size)
        MT = monads[C.name]
        TC, c = translate_TX_tcat(MT, C, "backward", F)
        F2 = translate_TX_tcat(MT, C, "forward", TC)
        same = (
            c.ok
            and validate_internal_category(F2.source).ok
            and F2.validate().ok
            and {y: F2.f1(y) for y in F.source.X1}
            == {y: F.f1(y) for y in F.source.X1}
            and {x: F2.f0(x) for x in F.source.X0}
            == {x: F.f0(x) for x in F.source.X0}
        )
        cert.add(f"round trip: {F.name} over {C.name}", same)
        if is_t_groupoid(TC) != is_groupoid(F.source):
            mismatches.append(F.name)
    cert.add(
        "T-groupoid iff groupoid domain (zero mismatches)",
        not mismatches,
        f"mismatches: {mismatches}" if mismatches else "",
    )
    return cert


# -- 9: multicategories, operads, and the slice monad of a T-category -----------------


def _enumerate_txt_algebras(TXT, C7, n: int):
    X0 = C7.X0
    Z = FinSetObj("Z", [f"z{i}" for i in range(n)])
    h = SliceObj(Z, FinMap(Z, X0, {z: "*" for z in Z}))
    Th = TXT.T(h)
    keys = list(Th.carrier)
    found = []
    for vals in product(list(Z), repeat=len(keys)):
        xi = SliceMor(Th, h, FinMap(Th.carrier, Z, dict(zip(keys, vals))))
        alg = Algebra(TXT, h, xi)
        if validate_algebra(alg).ok:
            found.append(alg)
    return found, h


def _enumerate_dfib_tfunctors(C7, n: int):
    """Brute-force oracle: over a carrier of size n, the cells of a discrete
    fibration are forced to the canonical (cell, inputs) pairs, the identity
    and composition are forced by unique lifting, and the only free data is
    the codomain map — every candidate is checked against the T-category
    axioms and the fibration condition."""
    from .tcat import TFunctor

    M = C7.monad
    Z = FinSetObj("Y0", [f"z{i}" for i in range(n)])
    g0 = FinMap(Z, C7.X0, {z: "*" for z in Z})
    from .graded import graded_pullback_fiber, m_map

    P, _, _ = graded_pullback_fiber(C7.delta1, m_map(g0))
    pairs = list(P)
    Y1 = FinSetObj("Y1", pairs)
    delta_table = {(f, w): w for (f, w) in Y1}
    delta1 = GradedMap(Y1, m_set(Z), delta_table.__getitem__,
                       tag=("table", delta_table))
    s0 = FinMap(Z, Y1, {z: (C7.s0(g0(z)), (z,)) for z in Z})
    found = []
    cands = [list(Z) for _ in pairs]
    for vals in product(*(cands or [[]])) if pairs else [()]:
        d0 = FinMap(Y1, Z, dict(zip(pairs, vals)))
        graph = TGraph(M, Z, Y1, d0, delta1, s0, name="cand")
        C0 = TCategory(graph, None, name="cand")
        comp = {}
        ok = True
        for (y1, v) in C0.X2:
            f, _ = y1
            outer = tuple(p[0] for p in v)
            flat = tuple(z for p in v for z in p[1])
            if (f, outer) not in C7.X2:
                ok = False
                break
            comp[(y1, v)] = (C7.d1_1((f, outer)), flat)
        if not ok:
            continue
        try:
            d1_1 = FinMap(C0.X2, Y1, comp)
        except ValueError:
            continue
        cand, cert = build_tcategory(graph, d1_1, name="cand")
        if not cert.ok:
            continue
        F = TFunctor(cand, C7, g0, FinMap(Y1, C7.X1, {p: p[0] for p in Y1}))
        if validate_tfunctor(F).ok and is_dfib_tfunctor(F):
            found.append(F)
    return found


def suite_operad(probe_size: int = 3, grade_bound: int = 4) -> Certificate:
    cert = Certificate("suite operad (E7 and its slice monad)")
    C7, c7 = e7()
    cert.add("E7 certifies as a T-category", c7.ok)
    cert.add("E7 is a multicategory", is_multicategory(C7))
    cert.add("E7 is an operad (one object)", is_operad(C7))
    TXT = mk_TXT_monad(C7)
    cert.add("slice monad of E7 satisfies the monad laws",
             validate_monad(TXT).ok)
    for n in (1, 2):
        algs, h = _enumerate_txt_algebras(TXT, C7, n)
        oracles = _enumerate_dfib_tfunctors(C7, n)
        cert.add(
            f"algebra count equals fibration count at size {n}",
            len(algs) == len(oracles),
            f"{len(algs)} algebras, {len(oracles)} fibration functors",
        )
        bij = True
        for alg in algs:
            F = translate_TXT_algebra_dfib(TXT, C7, "forward", alg)
            if not (validate_tfunctor(F).ok and is_dfib_tfunctor(F)):
                bij = False
                continue
            alg2 = translate_TXT_algebra_dfib(TXT, C7, "backward", F)
            if alg2.structure.map.table != alg.structure.map.table:
                bij = False
        cert.add(f"translate_TXT_algebra_dfib bijects at size {n}", bij)
    return cert


# -- 10: structural checks ------------------------------------------------------------


def suite_structural(probe_size: int = 3, grade_bound: int = 4) -> Certificate:
    cert = Certificate("suite structural")
    for C in (two(), e4(), z2_monoid()):
        D, eps = dec(C)
        cert.add(
            f"Dec({C.name}) valid with discrete-cofibration counit",
            validate_internal_category(D).ok and is_discrete_cofibration(eps),
        )
    M = maybe_monad(probes=finset_probes(probe_size))
    A = FinSetObj("A", ["a"])
    alg = free_algebra(M, A)
    T = tbar(alg)
    cert.add(
        "tbar of the free maybe-algebra is an internal category in algebras",
        validate_internal_category(T).ok,
        f"|X1| = {len(T.ambient.obj_elements(T.X1))}",
    )
    for C in (two(), e4()):
        E, ec = embed_internal_tcat(M, C)
        R, counit = r_coreflection(E)
        iso = sorted(map(repr, R.X1)) == sorted(map(repr, C.X1))
        cert.add(
            f"r_coreflection counit is invertible on embedded {C.name}",
            ec.ok and validate_internal_category(R).ok
            and validate_tfunctor(counit).ok and iso,
        )
    cc = certify_cartesian(M)
    X = M.probes[2]
    eq = check_lambda_equalizer_in_kl(M, X, M.probes, cc)
    cert.add("unit equalizes (lambda_T, T lambda) in Kl with unique factorization",
             eq.ok)
    return cert


SUITES = {
    "laws": suite_monad_laws,
    "cartesian": suite_cartesianness,
    "kleisli": suite_kleisli,
    "carac": suite_carac,
    "mmain": suite_mmain,
    "dfib": suite_dfib,
    "mmmain": suite_mmmain,
    "tx-tcat": suite_tx_tcat,
    "operad": suite_operad,
    "structural": suite_structural,
}


def run_suite(name: str, probe_size: int = 3, grade_bound: int = 4) -> Certificate:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](probe_size=probe_size, grade_bound=grade_bound)
