"""Ambient (ground) categories with chosen finite limits.

Internal categories, monads, and T-categories are all expressed over an
ambient category given by this small duck-typed interface:

    identity(X) -> Mor                 compose(g, f) -> Mor
    mor_eq(f, g) -> bool               hom(X, Y) -> list[Mor]
    pullback(f, g, name) -> AmbientPullback(P, pa, pb)
    mediate(pb, a, b) -> Mor           is_pullback_square(top,left,right,bottom)
    equalizer(f, g, name) -> (E, e)    is_mono(f) -> bool

Morphisms always expose .dom and .cod.  Three instances live here:
plain finite sets, the slice over a fixed base, and split epimorphisms
(the fibration of points).  The Kleisli and algebra ambients are built in
their own modules on top of this one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .sets import (
    FinSetObj,
    FinMap,
    compose as fs_compose,
    pullback as fs_pullback,
    mediate_pullback as fs_mediate,
    is_pullback_square as fs_is_pullback_square,
    equalizer as fs_equalizer,
)


@dataclass(frozen=True)
class AmbientPullback:
    """A chosen pullback of the cospan (f, g): pa over f, pb over g."""

    P: object
    pa: object
    pb: object
    f: object
    g: object


class FinSetAmbient:
    """Finite sets and total maps."""

    name = "FinSet"

    def identity(self, X: FinSetObj) -> FinMap:
        return FinMap.identity(X)

    def compose(self, g: FinMap, f: FinMap) -> FinMap:
        return fs_compose(g, f)

    def mor_eq(self, f: FinMap, g: FinMap) -> bool:
        return f == g

    def hom(self, X: FinSetObj, Y: FinSetObj) -> list:
        out = []
        for images in product(Y.elements, repeat=len(X)):
            out.append(FinMap(X, Y, dict(zip(X.elements, images))))
        return out

    def pullback(self, f: FinMap, g: FinMap, name: str = "pb") -> AmbientPullback:
        pb = fs_pullback(f, g, name)
        return AmbientPullback(pb.P, pb.pa, pb.pb, f, g)

    def mediate(self, pb: AmbientPullback, a: FinMap, b: FinMap) -> FinMap:
        table = {}
        for z in a.dom:
            p = (a(z), b(z))
            if p not in pb.P:
                raise ValueError(f"cone does not commute at {z!r}")
            table[z] = p
        return FinMap(a.dom, pb.P, table)

    def is_pullback_square(self, top, left, right, bottom) -> bool:
        return fs_is_pullback_square(top, left, right, bottom)

    def equalizer(self, f: FinMap, g: FinMap, name: str = "eq"):
        return fs_equalizer(f, g, name)

    def is_mono(self, f: FinMap) -> bool:
        return f.is_injective()

    def obj_elements(self, X: FinSetObj):
        return list(X)

    def apply(self, f: FinMap, x):
        return f(x)


FINSET = FinSetAmbient()


# -- slice over a base -------------------------------------------------------


class SliceObj:
    """An object of Slice(FinSet, B): a carrier with an anchor map to B."""

    __slots__ = ("carrier", "anchor")

    def __init__(self, carrier: FinSetObj, anchor: FinMap):
        if anchor.dom != carrier:
            raise ValueError("anchor must start at the carrier")
        self.carrier = carrier
        self.anchor = anchor

    def __eq__(self, other):
        return (
            isinstance(other, SliceObj)
            and self.carrier == other.carrier
            and self.anchor == other.anchor
        )

    def __hash__(self):
        return hash((self.carrier, self.anchor))

    def __repr__(self):
        return f"SliceObj({self.carrier.name}/{self.anchor.cod.name})"


class SliceMor:
    """A carrier map commuting with the anchors."""

    __slots__ = ("dom", "cod", "map")

    def __init__(self, dom: SliceObj, cod: SliceObj, map_: FinMap):
        if map_.dom != dom.carrier or map_.cod != cod.carrier:
            raise ValueError("underlying map ill-typed for the slice")
        for x in dom.carrier:
            if cod.anchor(map_(x)) != dom.anchor(x):
                raise ValueError(f"map does not commute with anchors at {x!r}")
        self.dom = dom
        self.cod = cod
        self.map = map_

    def __call__(self, x):
        return self.map(x)

    def __eq__(self, other):
        return (
            isinstance(other, SliceMor)
            and self.dom == other.dom
            and self.cod == other.cod
            and self.map == other.map
        )

    def __hash__(self):
        return hash((self.dom, self.cod, self.map))

    def __repr__(self):
        return f"SliceMor({self.map!r})"


class SliceAmbient:
    """Slice(FinSet, base): limits are computed on carriers (the forgetful
    functor to FinSet creates them)."""

    def __init__(self, base: FinSetObj):
        self.base = base
        self.name = f"FinSet/{base.name}"

    def identity(self, X: SliceObj) -> SliceMor:
        return SliceMor(X, X, FinMap.identity(X.carrier))

    def compose(self, g: SliceMor, f: SliceMor) -> SliceMor:
        return SliceMor(f.dom, g.cod, fs_compose(g.map, f.map))

    def mor_eq(self, f, g) -> bool:
        return f == g

    def hom(self, X: SliceObj, Y: SliceObj) -> list:
        fibers = {}
        for y in Y.carrier:
            fibers.setdefault(Y.anchor(y), []).append(y)
        pools = [fibers.get(X.anchor(x), []) for x in X.carrier]
        out = []
        for images in product(*pools):
            table = dict(zip(X.carrier.elements, images))
            out.append(SliceMor(X, Y, FinMap(X.carrier, Y.carrier, table)))
        return out

    def pullback(self, f: SliceMor, g: SliceMor, name: str = "pb") -> AmbientPullback:
        pb = fs_pullback(f.map, g.map, name)
        anchor = FinMap(pb.P, self.base, {p: f.dom.anchor(p[0]) for p in pb.P})
        P = SliceObj(pb.P, anchor)
        return AmbientPullback(
            P,
            SliceMor(P, f.dom, pb.pa),
            SliceMor(P, g.dom, pb.pb),
            f,
            g,
        )

    def mediate(self, pb: AmbientPullback, a: SliceMor, b: SliceMor) -> SliceMor:
        table = {}
        for z in a.dom.carrier:
            p = (a(z), b(z))
            if p not in pb.P.carrier:
                raise ValueError(f"cone does not commute at {z!r}")
            table[z] = p
        return SliceMor(a.dom, pb.P, FinMap(a.dom.carrier, pb.P.carrier, table))

    def is_pullback_square(self, top, left, right, bottom) -> bool:
        return fs_is_pullback_square(top.map, left.map, right.map, bottom.map)

    def equalizer(self, f: SliceMor, g: SliceMor, name: str = "eq"):
        E, e = fs_equalizer(f.map, g.map, name)
        anchor = FinMap(E, self.base, {x: f.dom.anchor(x) for x in E})
        EO = SliceObj(E, anchor)
        return EO, SliceMor(EO, f.dom, e)

    def is_mono(self, f: SliceMor) -> bool:
        return f.map.is_injective()

    def obj_elements(self, X: SliceObj):
        return list(X.carrier)

    def apply(self, f: SliceMor, x):
        return f(x)


# -- split epimorphisms (the fibration of points) -----------------------------


class PtObject:
    """A split epimorphism: epi g: upper → lower with section t, g∘t = id."""

    __slots__ = ("epi", "sec")

    def __init__(self, epi: FinMap, sec: FinMap):
        if sec.dom != epi.cod or sec.cod != epi.dom:
            raise ValueError("section ill-typed")
        for y in epi.cod:
            if epi(sec(y)) != y:
                raise ValueError(f"section not split at {y!r}")
        self.epi = epi
        self.sec = sec

    @property
    def upper_obj(self) -> FinSetObj:
        return self.epi.dom

    @property
    def lower_obj(self) -> FinSetObj:
        return self.epi.cod

    def __eq__(self, other):
        return (
            isinstance(other, PtObject)
            and self.epi == other.epi
            and self.sec == other.sec
        )

    def __hash__(self):
        return hash((self.epi, self.sec))

    def __repr__(self):
        return f"PtObject({self.epi.dom.name}->{self.epi.cod.name})"


class PtMorphism:
    """A square between split epis commuting with both the epis and the
    sections."""

    __slots__ = ("dom", "cod", "upper", "lower")

    def __init__(self, dom: PtObject, cod: PtObject, upper: FinMap, lower: FinMap):
        if upper.dom != dom.upper_obj or upper.cod != cod.upper_obj:
            raise ValueError("upper component ill-typed")
        if lower.dom != dom.lower_obj or lower.cod != cod.lower_obj:
            raise ValueError("lower component ill-typed")
        for x in dom.upper_obj:
            if cod.epi(upper(x)) != lower(dom.epi(x)):
                raise ValueError(f"square breaks the epis at {x!r}")
        for y in dom.lower_obj:
            if upper(dom.sec(y)) != cod.sec(lower(y)):
                raise ValueError(f"square breaks the sections at {y!r}")
        self.dom = dom
        self.cod = cod
        self.upper = upper
        self.lower = lower

    def __eq__(self, other):
        return (
            isinstance(other, PtMorphism)
            and self.dom == other.dom
            and self.cod == other.cod
            and self.upper == other.upper
            and self.lower == other.lower
        )

    def __hash__(self):
        return hash((self.dom, self.cod, self.upper, self.lower))

    def __repr__(self):
        return f"PtMorphism({self.dom!r}->{self.cod!r})"


class PtAmbient:
    """Pt(FinSet): split epimorphisms, with limits computed levelwise."""

    name = "Pt(FinSet)"

    def identity(self, X: PtObject) -> PtMorphism:
        return PtMorphism(
            X, X, FinMap.identity(X.upper_obj), FinMap.identity(X.lower_obj)
        )

    def compose(self, g: PtMorphism, f: PtMorphism) -> PtMorphism:
        return PtMorphism(
            f.dom, g.cod, fs_compose(g.upper, f.upper), fs_compose(g.lower, f.lower)
        )

    def mor_eq(self, f, g) -> bool:
        return f == g

    def hom(self, X: PtObject, Y: PtObject) -> list:
        out = []
        for lower_images in product(Y.lower_obj.elements, repeat=len(X.lower_obj)):
            lower = FinMap(
                X.lower_obj, Y.lower_obj, dict(zip(X.lower_obj.elements, lower_images))
            )
            # upper images constrained fiberwise by the epi square
            pools = []
            for x in X.upper_obj:
                target = lower(X.epi(x))
                pools.append([u for u in Y.upper_obj if Y.epi(u) == target])
            for upper_images in product(*pools):
                upper = FinMap(
                    X.upper_obj,
                    Y.upper_obj,
                    dict(zip(X.upper_obj.elements, upper_images)),
                )
                try:
                    out.append(PtMorphism(X, Y, upper, lower))
                except ValueError:
                    continue
        return out

    def pullback(self, f: PtMorphism, g: PtMorphism, name: str = "pb") -> AmbientPullback:
        up = fs_pullback(f.upper, g.upper, name + "_up")
        lo = fs_pullback(f.lower, g.lower, name + "_lo")
        epi = FinMap(
            up.P, lo.P, {p: (f.dom.epi(p[0]), g.dom.epi(p[1])) for p in up.P}
        )
        sec = FinMap(
            lo.P, up.P, {q: (f.dom.sec(q[0]), g.dom.sec(q[1])) for q in lo.P}
        )
        P = PtObject(epi, sec)
        pa = PtMorphism(P, f.dom, up.pa, lo.pa)
        pb_ = PtMorphism(P, g.dom, up.pb, lo.pb)
        return AmbientPullback(P, pa, pb_, f, g)

    def mediate(self, pb: AmbientPullback, a: PtMorphism, b: PtMorphism) -> PtMorphism:
        upper = FinMap(
            a.dom.upper_obj,
            pb.P.upper_obj,
            {x: (a.upper(x), b.upper(x)) for x in a.dom.upper_obj},
        )
        lower = FinMap(
            a.dom.lower_obj,
            pb.P.lower_obj,
            {y: (a.lower(y), b.lower(y)) for y in a.dom.lower_obj},
        )
        return PtMorphism(a.dom, pb.P, upper, lower)

    def is_pullback_square(self, top, left, right, bottom) -> bool:
        return fs_is_pullback_square(
            top.upper, left.upper, right.upper, bottom.upper
        ) and fs_is_pullback_square(top.lower, left.lower, right.lower, bottom.lower)

    def equalizer(self, f: PtMorphism, g: PtMorphism, name: str = "eq"):
        Eu, eu = fs_equalizer(f.upper, g.upper, name + "_up")
        El, el = fs_equalizer(f.lower, g.lower, name + "_lo")
        epi = FinMap(Eu, El, {x: f.dom.epi(x) for x in Eu})
        sec = FinMap(El, Eu, {y: f.dom.sec(y) for y in El})
        E = PtObject(epi, sec)
        return E, PtMorphism(E, f.dom, eu, el)

    def is_mono(self, f: PtMorphism) -> bool:
        return f.upper.is_injective() and f.lower.is_injective()

    def obj_elements(self, X: PtObject):
        return [("up", x) for x in X.upper_obj] + [("lo", y) for y in X.lower_obj]

    def apply(self, f: PtMorphism, x):
        tag, v = x
        return (tag, f.upper(v) if tag == "up" else f.lower(v))


PT = PtAmbient()


def pt_is_cartesian(sq: PtMorphism) -> bool:
    """Membership in the distinguished class of Pt(FinSet): the underlying
    square (upper over lower) is a pullback."""
    return fs_is_pullback_square(sq.upper, sq.dom.epi, sq.cod.epi, sq.lower)
