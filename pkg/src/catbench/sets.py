"""Finite sets, total maps, and chosen finite limits.

Every constructed limit object has canonical tuple elements built from the
input atoms, so equality of objects and of maps is plain structural equality
and every downstream theorem check reduces to comparing tables.

Atoms are ints, strings, or (nested) tuples of atoms.  A total order on atoms
is fixed once so element listings are canonical.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable


def atom_key(a: Any):
    """Total order key over the atom universe (ints < strings < tuples)."""
    if isinstance(a, bool):
        return (0, int(a))
    if isinstance(a, int):
        return (0, a)
    if isinstance(a, str):
        return (1, a)
    if isinstance(a, tuple):
        return (2, tuple(atom_key(x) for x in a))
    raise TypeError(f"unsupported atom {a!r}")


class FinSetObj:
    """A finite set with a canonical (sorted) element tuple.

    Equality and hashing look only at the elements; the name is a label.
    """

    __slots__ = ("name", "elements", "_index")

    def __init__(self, name: str, elements: Iterable[Any]):
        elems = tuple(sorted(elements, key=atom_key))
        for i in range(1, len(elems)):
            if elems[i] == elems[i - 1]:
                raise ValueError(f"duplicate atom {elems[i]!r} in set {name!r}")
        self.name = name
        self.elements = elems
        self._index = {e: i for i, e in enumerate(elems)}

    def __contains__(self, a) -> bool:
        return a in self._index

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other) -> bool:
        return isinstance(other, FinSetObj) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"FinSetObj({self.name!r}, {list(self.elements)!r})"


class FinMap:
    """A total map between finite sets, stored extensionally."""

    __slots__ = ("dom", "cod", "table")

    def __init__(self, dom: FinSetObj, cod: FinSetObj, table: dict):
        missing = [x for x in dom if x not in table]
        if missing:
            raise ValueError(f"map table missing images for {missing!r}")
        bad = [x for x in dom if table[x] not in cod]
        if bad:
            raise ValueError(f"map images outside codomain at {bad!r}")
        self.dom = dom
        self.cod = cod
        self.table = {x: table[x] for x in dom}

    @staticmethod
    def identity(x: FinSetObj) -> "FinMap":
        return FinMap(x, x, {a: a for a in x})

    @staticmethod
    def from_fn(dom: FinSetObj, cod: FinSetObj, fn) -> "FinMap":
        return FinMap(dom, cod, {a: fn(a) for a in dom})

    def __call__(self, a):
        return self.table[a]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FinMap)
            and self.dom == other.dom
            and self.cod == other.cod
            and self.table == other.table
        )

    def __hash__(self) -> int:
        return hash((self.dom, self.cod, tuple(self.table[x] for x in self.dom)))

    def __repr__(self) -> str:
        return f"FinMap({self.dom.name}->{self.cod.name}, {self.table!r})"

    def is_injective(self) -> bool:
        return len(set(self.table.values())) == len(self.dom)

    def is_surjective(self) -> bool:
        return set(self.table.values()) == set(self.cod.elements)

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def inverse(self) -> "FinMap":
        if not self.is_bijective():
            raise ValueError("map is not a bijection")
        return FinMap(self.cod, self.dom, {v: k for k, v in self.table.items()})


def compose(g: FinMap, f: FinMap) -> FinMap:
    """g after f."""
    if f.cod != g.dom:
        raise ValueError("composition type mismatch")
    return FinMap(f.dom, g.cod, {x: g(f(x)) for x in f.dom})


@dataclass(frozen=True)
class Pullback:
    """A chosen pullback square: pa over f, pb over g, P = {(a,b): f(a)=g(b)}."""

    P: FinSetObj
    pa: FinMap
    pb: FinMap
    f: FinMap
    g: FinMap


def pullback(f: FinMap, g: FinMap, name: str = "pb") -> Pullback:
    """Chosen pullback of a cospan; elements are canonical pairs (a, b)."""
    if f.cod != g.cod:
        raise ValueError("pullback needs a cospan (common codomain)")
    fibers: dict = {}
    for b in g.dom:
        fibers.setdefault(g(b), []).append(b)
    pairs = [(a, b) for a in f.dom for b in fibers.get(f(a), ())]
    P = FinSetObj(name, pairs)
    pa = FinMap(P, f.dom, {p: p[0] for p in P})
    pb = FinMap(P, g.dom, {p: p[1] for p in P})
    return Pullback(P, pa, pb, f, g)


class NonCommutingSquare(ValueError):
    """Raised when a square handed to a pullback test does not even commute."""


def is_pullback_square(top: FinMap, left: FinMap, right: FinMap, bottom: FinMap) -> bool:
    """True iff the commuting square (top: A->B, left: A->C, right: B->D,
    bottom: C->D) is a pullback, via the canonical comparison bijection.

    A non-commuting square is an error, reported distinctly.
    """
    if top.dom != left.dom or top.cod != right.dom or left.cod != bottom.dom:
        raise ValueError("square boundary types do not match")
    if right.cod != bottom.cod:
        raise ValueError("square boundary types do not match")
    for a in top.dom:
        if right(top(a)) != bottom(left(a)):
            raise NonCommutingSquare(f"square does not commute at {a!r}")
    pb = pullback(bottom, right)
    seen = set()
    for a in top.dom:
        key = (left(a), top(a))
        if key in seen:
            return False  # comparison not injective
        seen.add(key)
    return len(seen) == len(pb.P)


def equalizer(f: FinMap, g: FinMap, name: str = "eq") -> tuple[FinSetObj, FinMap]:
    """Equalizer of a parallel pair, as the agreement subset with inclusion."""
    if f.dom != g.dom or f.cod != g.cod:
        raise ValueError("equalizer needs a parallel pair")
    E = FinSetObj(name, [x for x in f.dom if f(x) == g(x)])
    return E, FinMap(E, f.dom, {x: x for x in E})


def kernel_pair(f: FinMap, name: str = "R") -> tuple[FinSetObj, FinMap, FinMap, FinMap]:
    """Kernel pair R[f] = pullback(f, f), with the diagonal splitting s0."""
    pb = pullback(f, f, name=name)
    s0 = FinMap(f.dom, pb.P, {x: (x, x) for x in f.dom})
    return pb.P, pb.pa, pb.pb, s0


def mediate_pullback(pb: Pullback, a: FinMap, b: FinMap) -> FinMap:
    """The unique map into a chosen pullback from the cone (a, b)."""
    if a.dom != b.dom or a.cod != pb.f.dom or b.cod != pb.g.dom:
        raise ValueError("cone legs ill-typed for this pullback")
    table = {}
    for z in a.dom:
        p = (a(z), b(z))
        if p not in pb.P:
            raise ValueError(f"cone does not commute at {z!r}")
        table[z] = p
    return FinMap(a.dom, pb.P, table)
