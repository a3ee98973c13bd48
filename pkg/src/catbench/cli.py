"""Command-line entry point.

    workbench validate   [flags] files...
    workbench certify    [flags] files...
    workbench translate  --theorem NAME --input NAME [flags] files...
    workbench enumerate  --what groupoids|fibrations --category NAME [flags] files...
    workbench suite      --name NAME [flags] [files...]

Flags: --grade-bound N (default 4), --probe-size N (default 3),
--format plain|structured, --out PATH.  Exit codes: 0 all verdicts pass,
1 verdict failure, 2 input error.
"""

from __future__ import annotations

import argparse
import sys

from .reports import Certificate, Report
from .workspace import load_workspace, serialize_workspace, WorkspaceError
from .monads import validate_monad, certify_cartesian, validate_algebra
from .internal import validate_internal_category, is_groupoid
from .suites import SUITES, run_suite, _count_groupoid_structures, _enumerate_dfibs
from .tcat import translate_tcat_kl, translate_TX_tcat, is_multicategory, is_operad
from .monads import mk_TX_monad, mk_G_monad, translate_G_algebra_groupoid


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="workbench",
        description="finite category-theory workbench: validate, certify, "
        "translate, enumerate, and run acceptance suites",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, files_required=True):
        sp.add_argument("files", nargs="+" if files_required else "*",
                        help="workspace documents (YAML)")
        sp.add_argument("--grade-bound", type=int, default=4)
        sp.add_argument("--probe-size", type=int, default=3)
        sp.add_argument("--format", choices=["plain", "structured"],
                        default="plain")
        sp.add_argument("--out", default=None,
                        help="write the report to PATH instead of stdout")

    common(sub.add_parser("validate", help="validate every structure"))
    common(sub.add_parser("certify", help="cartesianness certificates for monads"))
    t = sub.add_parser("translate", help="apply a translation theorem")
    t.add_argument("--theorem", required=True,
                   choices=["mmain", "carac", "tx-tcat"])
    t.add_argument("--input", required=True, help="name of the input structure")
    common(t)
    e = sub.add_parser("enumerate", help="count structures up to a bound")
    e.add_argument("--what", required=True, choices=["groupoids", "fibrations"])
    e.add_argument("--category", required=True)
    e.add_argument("--bound", type=int, default=3,
                   help="carrier bound for fibration enumeration")
    common(e)
    s = sub.add_parser("suite", help="run a named acceptance suite")
    s.add_argument("--name", required=True,
                   choices=sorted(SUITES) + ["all"])
    common(s, files_required=False)
    return p


def _cmd_validate(args, ws) -> Report:
    rep = Report("validate")
    for name, C in ws.categories.items():
        c = validate_internal_category(C)
        c.title = f"category {name}"
        rep.add(c)
    for name, M in ws.monads.items():
        c = validate_monad(M)
        c.title = f"monad {name} ({M.name})"
        rep.add(c)
    for name, alg in ws.algebras.items():
        c = validate_algebra(alg)
        c.title = f"algebra {name}"
        rep.add(c)
    for name, TC in ws.tcategories.items():
        from .tcat import build_tcategory

        _, c = build_tcategory(TC.graph, TC.d1_1, name=name)
        c.title = f"tcategory {name}"
        rep.add(c)
    for name, F in ws.functors.items():
        c = F.validate()
        c.title = f"functor {name}"
        rep.add(c)
    if not rep.certificates:
        rep.note("workspace is empty")
    return rep


def _cmd_certify(args, ws) -> Report:
    rep = Report("certify")
    if not ws.monads:
        rep.note("no monads declared")
    for name, M in ws.monads.items():
        cc = certify_cartesian(M, grade_bound=args.grade_bound)
        summary = Certificate(f"cartesianness of {name} ({M.name})")
        summary.add("functor preserves pullbacks", cc.functor_cartesian)
        summary.add("unit squares are pullbacks", cc.unit_cartesian)
        summary.add("multiplication squares are pullbacks", cc.mult_cartesian)
        summary.checks.append(_verdict("half-cartesian", cc.half_cartesian))
        summary.checks.append(_verdict("hypercartesian", cc.hypercartesian))
        rep.add(summary)
    return rep


def _verdict(name, value):
    from .reports import CheckResult

    # informational: a negative verdict is a classification, not a failure
    return CheckResult(f"{name}: {'yes' if value else 'no'}", True, "")


def _cmd_translate(args, ws) -> Report:
    rep = Report("translate")
    if args.theorem == "mmain":
        if args.input not in ws.tcategories:
            raise WorkspaceError(f"unknown tcategory: {args.input!r}")
        TC = ws.tcategories[args.input]
        cc = certify_cartesian(TC.monad, grade_bound=args.grade_bound)
        K = translate_tcat_kl(TC.monad, cc, "forward", TC,
                              bound=args.grade_bound + 2)
        c = validate_internal_category(K)
        c.title = f"internal category in Kl({TC.monad.name}) from {args.input}"
        rep.add(c)
        TC2, c2 = translate_tcat_kl(TC.monad, cc, "backward", K,
                                    bound=args.grade_bound + 2)
        back = Certificate(f"backward translation of {args.input}")
        o = TC.ops
        back.add("round trip is the identity",
                 c2.ok and o.eq(TC2.d1_1, TC.d1_1) and o.eq(TC2.d0, TC.d0))
        rep.add(back)
        rep.note(f"added: {args.input}_kl (internal category in the Kleisli category)")
    elif args.theorem == "carac":
        if args.input not in ws.categories:
            raise WorkspaceError(f"unknown category: {args.input!r}")
        C = ws.categories[args.input]
        G = mk_G_monad()
        c = Certificate(f"G-algebra from {args.input}")
        if not is_groupoid(C):
            c.add("input is a groupoid", False)
        else:
            alg = translate_G_algebra_groupoid(G, "backward", C)
            c.add("input is a groupoid", True)
            c.add("algebra validates", validate_algebra(alg).ok)
            C2 = translate_G_algebra_groupoid(G, "forward", alg)
            c.add("round trip is the identity", C2.m.table == C.m.table)
            rep.note(f"added: {args.input}_alg (G-algebra)")
        rep.add(c)
    elif args.theorem == "tx-tcat":
        if args.input not in ws.functors:
            raise WorkspaceError(f"unknown functor: {args.input!r}")
        F = ws.functors[args.input]
        MT = mk_TX_monad(F.target, max_probe_size=args.probe_size)
        TC, c = translate_TX_tcat(MT, F.target, "backward", F)
        c.title = f"T-category over the slice monad of {F.target.name}"
        rep.add(c)
        F2 = translate_TX_tcat(MT, F.target, "forward", TC)
        back = Certificate(f"backward translation of {args.input}")
        back.add(
            "round trip is the identity",
            {y: F2.f1(y) for y in F.source.X1}
            == {y: F.f1(y) for y in F.source.X1},
        )
        rep.add(back)
        rep.note(f"added: {args.input}_tcat (T-category over {MT.name})")
    return rep


def _cmd_enumerate(args, ws) -> Report:
    rep = Report("enumerate")
    if args.category not in ws.categories:
        raise WorkspaceError(f"unknown category: {args.category!r}")
    C = ws.categories[args.category]
    c = Certificate(f"enumeration over {args.category}")
    if args.what == "groupoids":
        found = _count_groupoid_structures(C.d0, C.d1, C.s0)
        c.add("enumeration completed", True,
              f"{len(found)} groupoid structures on the underlying graph")
    else:
        found = _enumerate_dfibs(C, args.bound)
        c.add("enumeration completed", True,
              f"{len(found)} discrete fibrations with carrier up to {args.bound}")
    rep.add(c)
    return rep


def _cmd_suite(args, ws) -> Report:
    rep = Report("suite")
    names = sorted(SUITES) if args.name == "all" else [args.name]
    for name in names:
        rep.add(run_suite(name, probe_size=args.probe_size,
                          grade_bound=args.grade_bound))
    return rep


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        ws = load_workspace(args.files)
    except (WorkspaceError, OSError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    try:
        handler = {
            "validate": _cmd_validate,
            "certify": _cmd_certify,
            "translate": _cmd_translate,
            "enumerate": _cmd_enumerate,
            "suite": _cmd_suite,
        }[args.command]
        rep = handler(args, ws)
    except (WorkspaceError, KeyError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    text = rep.emit(args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0 if rep.ok else 1


if __name__ == "__main__":
    sys.exit(main())
