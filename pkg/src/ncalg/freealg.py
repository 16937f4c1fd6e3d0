"""Words, noncommutative polynomials and graded presentations.

A word is a tuple of generator indices (the empty tuple is the unit).  An
``NcPoly`` is a finite map word -> nonzero coefficient over the active
field.  A ``Presentation`` is an ordered generator list with degrees plus a
list of homogeneous defining relations; it presents the graded algebra
A = k<V>/I.  All values here are immutable once constructed and safe to
share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

Word = Tuple[int, ...]

EMPTY_WORD: Word = ()


@dataclass(frozen=True)
class Generator:
    """A named degree-graded generator; ``index`` is its declaration position."""

    name: str
    index: int
    degree: int = 1

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"generator {self.name!r} must have positive degree")


class NcPoly:
    """A noncommutative polynomial: sparse map word -> coefficient.

    Zero coefficients are never stored.  Instances are treated as
    immutable; all arithmetic goes through functions taking the field
    explicitly.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Word, object]):
        self.terms = terms

    @staticmethod
    def zero() -> "NcPoly":
        return NcPoly({})

    @staticmethod
    def from_word(word: Word, coeff) -> "NcPoly":
        return NcPoly({tuple(word): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, NcPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"NcPoly({self.terms!r})"


def word_degree(word: Word, degs: Sequence[int]) -> int:
    if not word:
        return 0
    if degs is None:
        return len(word)
    return sum(degs[i] for i in word)


def poly_add(f: NcPoly, g: NcPoly, K) -> NcPoly:
    out = dict(f.terms)
    for w, c in g.terms.items():
        s = K.add(out.get(w, K.zero), c)
        if K.is_zero(s):
            out.pop(w, None)
        else:
            out[w] = s
    return NcPoly(out)


def poly_sub(f: NcPoly, g: NcPoly, K) -> NcPoly:
    out = dict(f.terms)
    for w, c in g.terms.items():
        s = K.sub(out.get(w, K.zero), c)
        if K.is_zero(s):
            out.pop(w, None)
        else:
            out[w] = s
    return NcPoly(out)


def poly_scale(f: NcPoly, c, K) -> NcPoly:
    if K.is_zero(c):
        return NcPoly.zero()
    return NcPoly({w: K.mul(d, c) for w, d in f.terms.items()})


def poly_neg(f: NcPoly, K) -> NcPoly:
    return NcPoly({w: K.neg(c) for w, c in f.terms.items()})


def multiply(f: NcPoly, g: NcPoly, K) -> NcPoly:
    """Free-algebra product: bilinear extension of word concatenation."""
    out: Dict[Word, object] = {}
    for u, a in f.terms.items():
        for v, b in g.terms.items():
            w = u + v
            s = K.add(out.get(w, K.zero), K.mul(a, b))
            if K.is_zero(s):
                out.pop(w, None)
            else:
                out[w] = s
    return NcPoly(out)


def lmul_word(word: Word, f: NcPoly) -> NcPoly:
    """Left-multiply by a word (coefficients untouched)."""
    if not word:
        return f
    return NcPoly({word + w: c for w, c in f.terms.items()})


def rmul_word(f: NcPoly, word: Word) -> NcPoly:
    if not word:
        return f
    return NcPoly({w + word: c for w, c in f.terms.items()})


def poly_degree(f: NcPoly, degs: Sequence[int]) -> Optional[int]:
    """Degree of a homogeneous polynomial; None for 0, error if inhomogeneous."""
    d: Optional[int] = None
    for w in f.terms:
        dw = word_degree(w, degs)
        if d is None:
            d = dw
        elif d != dw:
            raise ValueError("polynomial is not homogeneous")
    return d


def is_homogeneous(f: NcPoly, degs: Sequence[int]) -> bool:
    try:
        poly_degree(f, degs)
    except ValueError:
        return False
    return True


class Presentation:
    """Generators with degrees plus homogeneous relations over a field.

    Generator order is the declaration order and fixes the monomial order
    downstream.  Every relation must be homogeneous of degree >= 2 and use
    only declared generators.
    """

    def __init__(self, generators: Iterable[Generator], relations: List[NcPoly], field):
        self.generators: List[Generator] = list(generators)
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator names")
        for i, g in enumerate(self.generators):
            if g.index != i:
                raise ValueError(f"generator {g.name!r} has index {g.index}, expected {i}")
        self.field = field
        self.degs: Tuple[int, ...] = tuple(g.degree for g in self.generators)
        self.name_to_index = {g.name: g.index for g in self.generators}
        self.relations: List[NcPoly] = []
        for rel in relations:
            self._validate_relation(rel)
            self.relations.append(rel)

    def _validate_relation(self, rel: NcPoly) -> None:
        if rel.is_zero():
            raise ValueError("zero relation")
        n = len(self.generators)
        for w in rel.terms:
            for i in w:
                if not 0 <= i < n:
                    raise ValueError(f"relation uses undeclared generator index {i}")
        d = poly_degree(rel, self.degs)
        if d < 2:
            raise ValueError(f"relation has degree {d}, expected >= 2")

    # -- basic graded data ------------------------------------------------
    @property
    def ngens(self) -> int:
        return len(self.generators)

    def word_degree(self, word: Word) -> int:
        return word_degree(word, self.degs)

    def gen_poly(self, name: str) -> NcPoly:
        """The generator with this name, as a polynomial."""
        return NcPoly.from_word((self.name_to_index[name],), self.field.one)

    def word_str(self, word: Word) -> str:
        if not word:
            return "1"
        return "*".join(self.generators[i].name for i in word)

    def poly_str(self, f: NcPoly, order=None) -> str:
        """Render a polynomial; terms sorted descending by the monomial order."""
        if f.is_zero():
            return "0"
        if order is None:
            from .gbasis import DegLex

            order = DegLex(self)
        from .parser import _expr_str

        return _expr_str(self, f, order)


def graded_component_dim_free(p: Presentation, d: int) -> int:
    """dim of the free algebra component k<V>_d (number of words of degree d)."""
    if d < 0:
        raise ValueError("degree must be >= 0")
    counts = [0] * (d + 1)
    counts[0] = 1
    for e in range(1, d + 1):
        total = 0
        for gd in p.degs:
            if gd <= e:
                total += counts[e - gd]
        counts[e] = total
    return counts[d]
