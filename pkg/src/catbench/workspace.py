"""Workspace documents: a human-editable YAML schema declaring finite sets,
maps, categories, monads, algebras, T-categories, and functors by name.

Schema (top-level keys, all optional):

    sets:
      A: [x0, x1]
    maps:
      f: {dom: A, cod: B, table: [[x0, y0], [x1, y0]]}
    categories:
      two:
        objects: [0, 1]
        arrows: {i0: [0, 0], i1: [1, 1], u: [0, 1]}
        identities: {0: i0, 1: i1}
        compose: [{of: [u, v], is: i0}]        # "u then v"
    monads:
      M: maybe          # identity | maybe | writer(z2) | list(bound=4)
      N: TX(two)        # | G
    algebras:
      a: {monad: M, carrier: A, structure: [[[just, x0], x0], [[nothing], x0]]}
    tcategories:
      e7: {builtin: e7}
      ops:              # explicit list-monad multicategory
        objects: ["*"]
        cells: {e: {cod: "*", inputs: ["*"]}, k: {cod: "*", inputs: []}}
        unit: {"*": e}
        compose: [{of: [e, [e]], is: e}, {of: [e, [k]], is: k}, {of: [k, []], is: k}]
    functors:
      F: {source: two, target: two, objects: {0: 0, 1: 1}, arrows: {u: u, i0: i0, i1: i1}}

YAML sequences inside element positions are read as tuples, so structured
atoms like [just, x0] round-trip.  Every structure is validated on load;
load → serialize → load is the identity on canonical forms.
"""

from __future__ import annotations

import yaml

from .sets import FinSetObj, FinMap
from .ambient import FINSET
from .corpus import finite_category, e7 as _e7
from .internal import InternalCategory, InternalFunctor, validate_internal_category
from .monads import (
    Monad,
    Algebra,
    identity_monad,
    maybe_monad,
    writer_monad,
    z2_writer_monoid,
    mk_list_monad,
    mk_TX_monad,
    mk_G_monad,
    validate_algebra,
)
from .graded import GradedMap, m_set
from .tcat import TGraph, TCategory, build_tcategory


class WorkspaceError(ValueError):
    """A document failed to parse, resolve, or validate."""


def _atom(v):
    """YAML value → canonical element: sequences become tuples."""
    if isinstance(v, list):
        return tuple(_atom(x) for x in v)
    return v


def _unatom(v):
    if isinstance(v, tuple):
        return [_unatom(x) for x in v]
    return v


class Workspace:
    def __init__(self):
        self.sets: dict = {}
        self.maps: dict = {}
        self.categories: dict = {}
        self.monads: dict = {}
        self.monad_specs: dict = {}
        self.algebras: dict = {}
        self.algebra_specs: dict = {}
        self.tcategories: dict = {}
        self.tcategory_specs: dict = {}
        self.functors: dict = {}

    # -- resolution helpers -----------------------------------------------

    def set_(self, name):
        if name not in self.sets:
            raise WorkspaceError(f"unresolved set reference: {name!r}")
        return self.sets[name]

    def category(self, name):
        if name not in self.categories:
            raise WorkspaceError(f"unresolved category reference: {name!r}")
        return self.categories[name]

    def monad(self, name):
        if name not in self.monads:
            raise WorkspaceError(f"unresolved monad reference: {name!r}")
        return self.monads[name]


def _build_monad(spec: str, ws: Workspace) -> Monad:
    spec = spec.strip()
    if spec == "identity":
        return identity_monad()
    if spec == "maybe":
        return maybe_monad()
    if spec == "G":
        return mk_G_monad()
    if spec.startswith("writer(") and spec.endswith(")"):
        arg = spec[7:-1]
        if arg != "z2":
            raise WorkspaceError(f"unknown writer monoid: {arg!r}")
        return writer_monad(z2_writer_monoid())
    if spec.startswith("list(") and spec.endswith(")"):
        arg = spec[5:-1]
        bound = 4
        if arg:
            key, _, val = arg.partition("=")
            if key.strip() != "bound":
                raise WorkspaceError(f"unknown list parameter: {arg!r}")
            bound = int(val)
        return mk_list_monad(bound)
    if spec.startswith("TX(") and spec.endswith(")"):
        return mk_TX_monad(ws.category(spec[3:-1]))
    raise WorkspaceError(f"unknown monad spec: {spec!r}")


def _build_category(name: str, doc: dict) -> InternalCategory:
    arrows = {_atom(a): (_atom(dc[0]), _atom(dc[1]))
              for a, dc in doc["arrows"].items()}
    comp = {}
    for entry in doc.get("compose", []):
        f, g = entry["of"]
        comp[(_atom(f), _atom(g))] = _atom(entry["is"])
    try:
        C = finite_category(
            name,
            objects=[_atom(o) for o in doc["objects"]],
            arrows=arrows,
            identities={_atom(k): _atom(v) for k, v in doc["identities"].items()},
            comp=comp,
        )
    except (ValueError, KeyError) as exc:
        raise WorkspaceError(f"category {name!r}: {exc}") from exc
    cert = validate_internal_category(C)
    if not cert.ok:
        bad = cert.failures()[0]
        raise WorkspaceError(
            f"category {name!r} fails {bad.name}"
            + (f" ({bad.detail})" if bad.detail else "")
        )
    return C


def _build_tcategory(name: str, doc: dict, ws: Workspace):
    if "builtin" in doc:
        if doc["builtin"] == "e7":
            C, cert = _e7()
        else:
            raise WorkspaceError(f"unknown builtin T-category: {doc['builtin']!r}")
    else:
        M = mk_list_monad()
        X0 = FinSetObj(name + "_X0", [_atom(o) for o in doc["objects"]])
        cells = {_atom(c): (
            _atom(spec["cod"]), tuple(_atom(i) for i in spec["inputs"])
        ) for c, spec in doc["cells"].items()}
        X1 = FinSetObj(name + "_X1", cells.keys())
        d0 = FinMap(X1, X0, {c: cells[c][0] for c in X1})
        arity_table = {c: cells[c][1] for c in X1}
        delta1 = GradedMap(X1, m_set(X0), arity_table.__getitem__,
                           tag=("table", arity_table))
        s0 = FinMap(X0, X1, {_atom(k): _atom(v) for k, v in doc["unit"].items()})
        graph = TGraph(M, X0, X1, d0, delta1, s0, name=name)
        C0 = TCategory(graph, None, name=name)
        comp = {}
        for entry in doc.get("compose", []):
            outer, inputs = entry["of"]
            comp[(_atom(outer), tuple(_atom(i) for i in inputs))] = _atom(entry["is"])
        missing = [q for q in C0.X2 if q not in comp]
        if missing:
            raise WorkspaceError(
                f"tcategory {name!r}: composition missing for {missing[0]!r}"
            )
        d1_1 = FinMap(C0.X2, X1, comp)
        C, cert = build_tcategory(graph, d1_1, name=name)
    if not cert.ok:
        bad = cert.failures()[0]
        raise WorkspaceError(f"tcategory {name!r} fails {bad.name}")
    return C


def _build_algebra(name: str, doc: dict, ws: Workspace) -> Algebra:
    M = ws.monad(doc["monad"])
    carrier = ws.set_(doc["carrier"])
    TX = M.T(carrier)
    table = {_atom(k): _atom(v) for k, v in (doc["structure"] or [])}
    try:
        xi = FinMap(TX, carrier, table)
    except ValueError as exc:
        raise WorkspaceError(f"algebra {name!r}: {exc}") from exc
    alg = Algebra(M, carrier, xi)
    cert = validate_algebra(alg)
    if not cert.ok:
        raise WorkspaceError(
            f"algebra {name!r} fails {cert.failures()[0].name}"
        )
    return alg


def _build_functor(name: str, doc: dict, ws: Workspace) -> InternalFunctor:
    S = ws.category(doc["source"])
    T = ws.category(doc["target"])
    f0 = FinMap(S.X0, T.X0, {_atom(k): _atom(v)
                             for k, v in doc["objects"].items()})
    f1 = FinMap(S.X1, T.X1, {_atom(k): _atom(v)
                             for k, v in doc["arrows"].items()})
    F = InternalFunctor(S, T, f0, f1, name=name)
    cert = F.validate()
    if not cert.ok:
        raise WorkspaceError(f"functor {name!r} fails {cert.failures()[0].name}")
    return F


def load_workspace(paths) -> Workspace:
    """Parse and validate one or more documents into a workspace."""
    ws = Workspace()
    docs = []
    for p in paths:
        with open(p) as fh:
            try:
                doc = yaml.safe_load(fh) or {}
            except yaml.YAMLError as exc:
                raise WorkspaceError(f"{p}: parse error: {exc}") from exc
        if not isinstance(doc, dict):
            raise WorkspaceError(f"{p}: document root must be a mapping")
        docs.append(doc)
    merged: dict = {}
    for doc in docs:
        for section, entries in doc.items():
            merged.setdefault(section, {}).update(entries or {})
    known = {"sets", "maps", "categories", "monads", "algebras",
             "tcategories", "functors"}
    unknown = set(merged) - known
    if unknown:
        raise WorkspaceError(f"unknown sections: {sorted(unknown)}")

    for name, elems in merged.get("sets", {}).items():
        ws.sets[name] = FinSetObj(name, [_atom(e) for e in elems])
    for name, doc in merged.get("maps", {}).items():
        dom, cod = ws.set_(doc["dom"]), ws.set_(doc["cod"])
        table = {_atom(k): _atom(v) for k, v in doc["table"]}
        try:
            ws.maps[name] = FinMap(dom, cod, table)
        except ValueError as exc:
            raise WorkspaceError(f"map {name!r}: {exc}") from exc
    for name, doc in merged.get("categories", {}).items():
        ws.categories[name] = _build_category(name, doc)
    for name, spec in merged.get("monads", {}).items():
        ws.monad_specs[name] = spec
        ws.monads[name] = _build_monad(spec, ws)
    for name, doc in merged.get("algebras", {}).items():
        ws.algebra_specs[name] = doc
        ws.algebras[name] = _build_algebra(name, doc, ws)
    for name, doc in merged.get("tcategories", {}).items():
        ws.tcategory_specs[name] = doc
        ws.tcategories[name] = _build_tcategory(name, doc, ws)
    for name, doc in merged.get("functors", {}).items():
        ws.functors[name] = _build_functor(name, doc, ws)
    return ws


def serialize_workspace(ws: Workspace) -> str:
    """Render a workspace back into the document schema (canonical order)."""
    out: dict = {}
    if ws.sets:
        out["sets"] = {n: [_unatom(e) for e in X] for n, X in ws.sets.items()}
    if ws.maps:
        out["maps"] = {
            n: {
                "dom": f.dom.name,
                "cod": f.cod.name,
                "table": [[_unatom(k), _unatom(v)]
                          for k, v in sorted(f.table.items(), key=repr)],
            }
            for n, f in ws.maps.items()
        }
    if ws.categories:
        cats = {}
        for n, C in ws.categories.items():
            idents = {x: C.s0(x) for x in C.X0}
            ident_arrows = set(idents.values())
            cats[n] = {
                "objects": [_unatom(x) for x in C.X0],
                "arrows": {
                    _key(a): [_unatom(C.d1(a)), _unatom(C.d0(a))] for a in C.X1
                },
                "identities": {_key(x): _unatom(idents[x]) for x in C.X0},
                "compose": [
                    {"of": [_unatom(f), _unatom(g)], "is": _unatom(C.m((f, g)))}
                    for (f, g) in sorted(C.X2, key=repr)
                    if f not in ident_arrows and g not in ident_arrows
                ],
            }
        out["categories"] = cats
    if ws.monad_specs:
        out["monads"] = dict(ws.monad_specs)
    if ws.algebra_specs:
        out["algebras"] = dict(ws.algebra_specs)
    if ws.tcategory_specs:
        out["tcategories"] = dict(ws.tcategory_specs)
    if ws.functors:
        out["functors"] = {
            n: {
                "source": F.source.name,
                "target": F.target.name,
                "objects": {_key(k): _unatom(F.f0(k)) for k in F.source.X0},
                "arrows": {_key(k): _unatom(F.f1(k)) for k in F.source.X1},
            }
            for n, F in ws.functors.items()
        }
    return yaml.safe_dump(out, sort_keys=True, default_flow_style=None)


def _key(v):
    """Mapping keys in YAML must be scalars; structured atoms are not
    supported as keys in serialized output."""
    if isinstance(v, tuple):
        raise WorkspaceError(
            "cannot serialize a structure keyed by tuple atoms"
        )
    return v
