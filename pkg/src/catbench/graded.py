"""Graded locally-finite sets and the free-monoid functor M.

The only registered infinite carrier is the word set M(X) = all tuples over X,
together with functor images thereof (M(M(X)), ...).  Elements are graded by
*weight*: an atom of a plain finite set has weight 0 and a word has weight

    weight(w) = len(w) + sum(weight(letter) for letter in w)

so every piece of fixed weight is finite even for nested word sets, and both
the unit x ↦ (x,) and the multiplication (concatenation) move weight
predictably: the unit raises weight by exactly 1 and concatenation strictly
lowers it (by the number of parts).  That makes every naturality or pullback
check below decidable degreewise.
"""

from __future__ import annotations

from itertools import product

from .sets import FinSetObj, FinMap


class GradedSet:
    """Interface for a locally finite graded set."""

    def weight(self, el) -> int:
        raise NotImplementedError

    def piece(self, n: int) -> list:
        """All elements of weight exactly n (a finite list)."""
        raise NotImplementedError

    def contains(self, el) -> bool:
        raise NotImplementedError

    def elements_up_to(self, n: int) -> list:
        out = []
        for k in range(n + 1):
            out.extend(self.piece(k))
        return out


def weight_of(carrier, el) -> int:
    if isinstance(carrier, GradedSet):
        return carrier.weight(el)
    return 0


def carrier_contains(carrier, el) -> bool:
    if isinstance(carrier, GradedSet):
        return carrier.contains(el)
    return el in carrier


def carrier_up_to(carrier, n: int) -> list:
    if isinstance(carrier, GradedSet):
        return carrier.elements_up_to(n)
    return list(carrier)


def _compositions(total: int, parts: int):
    """All tuples of `parts` naturals summing to `total`."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


class WordSet(GradedSet):
    """M(base): all finite words (tuples) over the base carrier."""

    def __init__(self, base):
        self.base = base  # FinSetObj or GradedSet

    def weight(self, word) -> int:
        return len(word) + sum(weight_of(self.base, a) for a in word)

    def contains(self, el) -> bool:
        return isinstance(el, tuple) and all(
            carrier_contains(self.base, a) for a in el
        )

    def piece(self, n: int) -> list:
        out = []
        for k in range(n + 1):
            inner = n - k  # weight left for the letters of a length-k word
            if isinstance(self.base, GradedSet):
                for comp in _compositions(inner, k):
                    pools = [self.base.piece(c) for c in comp]
                    out.extend(product(*pools))
            else:
                if inner == 0:
                    out.extend(product(self.base.elements, repeat=k))
        return out

    def __eq__(self, other):
        return isinstance(other, WordSet) and self.base == other.base

    def __hash__(self):
        return hash(("WordSet", self.base))

    def __repr__(self):
        return f"WordSet({self.base!r})"


class GradedMap:
    """A map whose codomain (and possibly domain) is graded.

    The `tag` records how the map was built, which is what makes fiber
    enumeration possible:
      ("table", dict)        finite extensional map
      ("unit",)              x ↦ (x,)
      ("mult",)              word of words ↦ concatenation
      ("letterwise", f)      M(f): apply f (FinMap or GradedMap) to each letter
      ("compose", g, f)      g after f
      ("opaque",)            callable only; fibers found by bounded search
    """

    def __init__(self, dom, cod, fn, tag=("opaque",)):
        self.dom = dom
        self.cod = cod
        self.fn = fn
        self.tag = tag

    def __call__(self, el):
        return self.fn(el)

    # -- fiber enumeration -------------------------------------------------

    def fiber(self, el) -> list:
        """Full preimage of el, when the tag guarantees it is finite."""
        kind = self.tag[0]
        if kind == "table":
            return [x for x, y in self.tag[1].items() if y == el]
        if kind == "unit":
            if isinstance(el, tuple) and len(el) == 1:
                return [el[0]] if carrier_contains(self.dom, el[0]) else []
            return []
        if kind == "letterwise":
            f = self.tag[1]
            if not isinstance(el, tuple):
                return []
            pools = [_fiber_of(f, a) for a in el]
            return [tuple(w) for w in product(*pools)]
        if kind == "compose":
            g, f = self.tag[1], self.tag[2]
            out = []
            for mid in _fiber_of(g, el):
                out.extend(_fiber_of(f, mid))
            return out
        raise ValueError(
            f"fiber not provably finite for map tagged {self.tag[0]!r}"
        )

    def fiber_up_to(self, el, bound: int) -> list:
        """Preimage of el among domain elements of weight ≤ bound."""
        try:
            fib = self.fiber(el)
        except ValueError:
            return [x for x in carrier_up_to(self.dom, bound) if self.fn(x) == el]
        return [x for x in fib if weight_of(self.dom, x) <= bound]


def _fiber_of(f, el) -> list:
    if isinstance(f, FinMap):
        return [x for x in f.dom if f(x) == el]
    return f.fiber(el)


def graded_apply(f, el):
    """Apply a FinMap or GradedMap uniformly."""
    if isinstance(f, FinMap):
        return f(el)
    return f(el)


# -- the free monoid functor ----------------------------------------------


def m_set(base) -> WordSet:
    return WordSet(base)


def m_map(f) -> GradedMap:
    """M(f): letterwise application."""
    dom = WordSet(f.dom)
    cod = WordSet(f.cod)
    fn = lambda w: tuple(graded_apply(f, a) for a in w)
    return GradedMap(dom, cod, fn, tag=("letterwise", f))


def m_unit(base) -> GradedMap:
    return GradedMap(base, WordSet(base), lambda x: (x,), tag=("unit",))


def m_mult(base) -> GradedMap:
    ww = WordSet(WordSet(base))
    fn = lambda w: tuple(a for part in w for a in part)
    return GradedMap(ww, WordSet(base), fn, tag=("mult",))


def graded_compose(g, f) -> GradedMap:
    dom = f.dom
    cod = g.cod if not isinstance(g, FinMap) else g.cod
    fn = lambda x: graded_apply(g, graded_apply(f, x))
    return GradedMap(dom, cod, fn, tag=("compose", g, f))


# -- limits ----------------------------------------------------------------


def graded_pullback_fiber(delta, Tmap: GradedMap, name: str = "gpb"):
    """Pullback {(x, w) : delta(x) = Tmap(w)} of a finite-domain map delta
    along a graded map with enumerable fibers.  Returns (P, p_x, p_w) with
    P a plain finite set of canonical pairs."""
    if isinstance(delta.dom, GradedSet):
        raise ValueError("graded_pullback_fiber needs a finite-domain first leg")
    pairs = []
    for x in delta.dom:
        for w in Tmap.fiber(graded_apply(delta, x)):
            pairs.append((x, w))
    P = FinSetObj(name, pairs)
    p_x = FinMap(P, delta.dom, {p: p[0] for p in P})
    p_w = GradedMap(P, Tmap.dom, lambda p: p[1], tag=("table", {p: p[1] for p in P}))
    return P, p_x, p_w


def graded_agree_up_to(f, g, carrier, bound: int) -> bool:
    """Do two maps out of `carrier` agree on all elements of weight ≤ bound?"""
    return all(
        graded_apply(f, x) == graded_apply(g, x) for x in carrier_up_to(carrier, bound)
    )


def graded_is_pullback(top, left, right, bottom, bound: int,
                       search_bound: int | None = None) -> bool:
    """Degreewise pullback check for a commuting square of graded carriers.

    A = dom(top) = dom(left).  The comparison a ↦ (left(a), top(a)) must be
    injective on A up to `search_bound`, and every cospan-compatible pair
    (c, b) with both weights ≤ `bound` must be hit by some a of weight
    ≤ `search_bound`.  The default search bound 2·bound+2 covers every map
    in the free-monoid family, where preimages of a weight-n element have
    weight ≤ 2n+2 (unit lowers weight by 1, concatenation lowers it by at
    most the number of parts ≤ weight, letterwise maps preserve it).
    """
    if search_bound is None:
        search_bound = 2 * bound + 2
    A = carrier_up_to(top.dom, search_bound)
    seen = {}
    for a in A:
        if graded_apply(right, graded_apply(top, a)) != graded_apply(
            bottom, graded_apply(left, a)
        ):
            raise ValueError(f"square does not commute at {a!r}")
        key = (graded_apply(left, a), graded_apply(top, a))
        if key in seen:
            return False
        seen[key] = a
    C = carrier_up_to(left.cod if not isinstance(left, FinMap) else left.cod, bound)
    B = carrier_up_to(top.cod if not isinstance(top, FinMap) else top.cod, bound)
    for c in C:
        bot_c = graded_apply(bottom, c)
        for b in B:
            if bot_c == graded_apply(right, b):
                if (c, b) not in seen:
                    return False
    return True
