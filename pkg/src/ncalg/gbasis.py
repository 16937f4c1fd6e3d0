"""Degree-truncated two-sided Groebner bases in the free algebra.

The monomial order is degree-lexicographic over the declared generator
order.  Completion processes overlap obstructions in ascending degree, so
a finished run is a Groebner basis for every degree up to the truncation
bound; per-degree completeness is tracked explicitly and every downstream
consumer checks it instead of assuming global completeness.

Construction is single-threaded and stateful; a completed ``TruncatedGB``
is immutable and may be shared freely (``normal_form`` is read-only).
"""

from __future__ import annotations

import heapq
from typing import Dict, List, Optional, Tuple

from .freealg import (NcPoly, Presentation, Word, lmul_word, poly_degree,
                      poly_scale, poly_sub, rmul_word, word_degree)


class GBError(RuntimeError):
    pass


class IncompleteBasisError(GBError):
    """An operation needed the basis complete at a degree it is not."""

    def __init__(self, degree: int, complete_through: int):
        super().__init__(
            f"Groebner basis incomplete at degree {degree} "
            f"(complete through {complete_through})")
        self.degree = degree
        self.complete_through = complete_through


class DegLex:
    """Degree-lexicographic word order: degree, then length, then letters.

    Total, multiplicative (u < v implies aub < avb) and degree-compatible.
    With all generators in degree one this is the usual deglex.
    """

    __slots__ = ("degs",)

    def __init__(self, pres: Presentation):
        self.degs = pres.degs

    def key(self, word: Word):
        return (word_degree(word, self.degs), len(word), word)

    def less(self, u: Word, v: Word) -> bool:
        return self.key(u) < self.key(v)

    def lead(self, f: NcPoly) -> Word:
        return max(f.terms, key=self.key)

    def describe(self) -> str:
        return "deglex"


def find_factor(word: Word, tip: Word, start: int = 0) -> int:
    """Leftmost index >= start where tip occurs in word as a factor, else -1."""
    lt = len(tip)
    for i in range(start, len(word) - lt + 1):
        if word[i:i + lt] == tip:
            return i
    return -1


class TruncatedGB:
    """A truncated two-sided Groebner basis over a presentation.

    Invariants: every element is homogeneous, monic and fully reduced
    against the others; every overlap obstruction of degree <=
    ``complete_through`` reduces to zero.
    """

    def __init__(self, pres: Presentation, order: DegLex, truncation: int):
        self.pres = pres
        self.order = order
        self.truncation = truncation
        self.complete_through = -1
        self.elements: List[NcPoly] = []
        self.leads: List[Word] = []
        self._alive: List[bool] = []
        # tips indexed by first letter, kept sorted descending by order
        self._by_first: Dict[int, List[int]] = {}

    # -- queries ---------------------------------------------------------
    def basis(self) -> List[NcPoly]:
        return [self.elements[i] for i in self._alive_indices()]

    def tips(self) -> List[Word]:
        return [self.leads[i] for i in self._alive_indices()]

    def _alive_indices(self) -> List[int]:
        return [i for i, a in enumerate(self._alive) if a]

    def is_complete_through(self, d: int) -> bool:
        return d <= self.complete_through

    def require_complete(self, d: int) -> None:
        if d > self.complete_through:
            raise IncompleteBasisError(d, self.complete_through)

    # -- reduction ---------------------------------------------------------
    def _find_reducer(self, word: Word) -> Optional[Tuple[int, int]]:
        """(element index, position) for the largest dividing tip, leftmost.

        Matches the reduction strategy: reduce by the basis element whose
        leading word is largest in the monomial order among all divisors.
        """
        best = None
        best_key = None
        for i in range(len(word)):
            for idx in self._by_first.get(word[i], ()):
                tip = self.leads[idx]
                lt = len(tip)
                if i + lt <= len(word) and word[i:i + lt] == tip:
                    k = (self.order.key(tip), -i)
                    if best_key is None or k > best_key:
                        best_key = k
                        best = (idx, i)
                    break  # list sorted descending: first match is largest here
        return best

    def normal_form(self, f: NcPoly, check_degree: bool = True) -> NcPoly:
        """Unique canonical representative of f modulo the ideal.

        Full tail reduction.  Raises IncompleteBasisError when f has a term
        of degree beyond the verified completeness bound.
        """
        if check_degree and f.terms:
            d = max(word_degree(w, self.pres.degs) for w in f.terms)
            self.require_complete(d)
        K = self.pres.field
        work = dict(f.terms)
        out: Dict[Word, object] = {}
        while work:
            w = max(work, key=self.order.key)
            c = work.pop(w)
            hit = self._find_reducer(w)
            if hit is None:
                out[w] = c
                continue
            idx, pos = hit
            g = self.elements[idx]
            tip = self.leads[idx]
            a, b = w[:pos], w[pos + len(tip):]
            # w - a*tip*b cancels; push down -c * a*(g - tip)*b
            for u, d0 in g.terms.items():
                if u == tip:
                    continue
                word2 = a + u + b
                s = K.sub(work.get(word2, K.zero), K.mul(c, d0))
                if K.is_zero(s):
                    work.pop(word2, None)
                else:
                    work[word2] = s
        return NcPoly(out)

    def is_normal_word(self, word: Word) -> bool:
        return self._find_reducer(word) is None

    # -- mutation (completion only) ---------------------------------------
    def _insert(self, f: NcPoly) -> int:
        lead = self.order.lead(f)
        c = f.terms[lead]
        K = self.pres.field
        if not K.is_zero(K.sub(c, K.one)):
            f = poly_scale(f, K.inv(c), K)
        idx = len(self.elements)
        self.elements.append(f)
        self.leads.append(lead)
        self._alive.append(True)
        lst = self._by_first.setdefault(lead[0], [])
        lst.append(idx)
        lst.sort(key=lambda i: self.order.key(self.leads[i]), reverse=True)
        return idx

    def _remove(self, idx: int) -> None:
        self._alive[idx] = False
        first = self.leads[idx][0]
        self._by_first[first] = [i for i in self._by_first[first] if i != idx]


def _overlaps(u: Word, v: Word):
    """Proper overlaps: nonempty suffix of u equals prefix of v, shorter than both."""
    for k in range(1, min(len(u), len(v))):
        if u[-k:] == v[:k]:
            yield k


def buchberger_truncated(pres: Presentation, order: Optional[DegLex] = None,
                         truncation: int = 8, max_elements: int = 200000) -> TruncatedGB:
    """Complete the defining relations to a Groebner basis through ``truncation``.

    Homogeneous relations only; requires truncation >= the largest relation
    degree.  Exceeding ``max_elements`` raises GBError (never silent).
    """
    if order is None:
        order = DegLex(pres)
    degs = pres.degs
    if pres.relations:
        dmax = max(poly_degree(r, degs) for r in pres.relations)
        if truncation < dmax:
            raise GBError(f"truncation {truncation} below max relation degree {dmax}")
    gb = TruncatedGB(pres, order, truncation)
    K = pres.field

    queue: List[Tuple[int, int, int, int, Word, Word]] = []
    counter = 0

    def enqueue_pairs(idx: int) -> None:
        nonlocal counter
        u = gb.leads[idx]
        for jdx in range(len(gb.elements)):
            if not gb._alive[jdx]:
                continue
            v = gb.leads[jdx]
            for k in _overlaps(u, v):
                w = u + v[k:]
                d = word_degree(w, degs)
                if d <= truncation:
                    counter += 1
                    heapq.heappush(queue, (d, counter, idx, jdx, w, v[k:]))
            if jdx != idx:
                for k in _overlaps(v, u):
                    w = v + u[k:]
                    d = word_degree(w, degs)
                    if d <= truncation:
                        counter += 1
                        heapq.heappush(queue, (d, counter, jdx, idx, w, u[k:]))

    def add_element(f: NcPoly) -> None:
        """Insert a fully reduced nonzero element; restore interreducedness."""
        idx = gb._insert(f)
        if len(gb.elements) > max_elements:
            raise GBError(f"basis exceeded {max_elements} elements")
        tip = gb.leads[idx]
        # back-reduce: existing elements with any word divisible by the new tip
        for jdx in gb._alive_indices():
            if jdx == idx or not gb._alive[jdx]:
                continue  # may have died in a recursive back-reduction
            g = gb.elements[jdx]
            if all(find_factor(w, tip) < 0 for w in g.terms):
                continue
            gb._remove(jdx)
            nf = gb.normal_form(g, check_degree=False)
            if nf.is_zero():
                continue
            newlead = order.lead(nf)
            if newlead == gb.leads[jdx]:
                # tail-only change: keep identity, obstructions still valid
                c = nf.terms[newlead]
                if not K.is_zero(K.sub(c, K.one)):
                    nf = poly_scale(nf, K.inv(c), K)
                gb.elements[jdx] = nf
                gb._alive[jdx] = True
                gb._by_first.setdefault(newlead[0], []).append(jdx)
                gb._by_first[newlead[0]].sort(
                    key=lambda i: order.key(gb.leads[i]), reverse=True)
            else:
                add_element(nf)
        enqueue_pairs(idx)

    for rel in pres.relations:
        nf = gb.normal_form(rel, check_degree=False)
        if not nf.is_zero():
            add_element(nf)

    while queue:
        d, _, i, j, w, right = heapq.heappop(queue)
        if not (gb._alive[i] and gb._alive[j]):
            continue
        u, v = gb.leads[i], gb.leads[j]
        # recheck: w = u + right must still equal (prefix) + v
        if u + right != w or w[-len(v):] != v:
            continue
        left = w[:len(w) - len(v)]
        s = poly_sub(rmul_word(gb.elements[i], right),
                     lmul_word(left, gb.elements[j]), K)
        nf = gb.normal_form(s, check_degree=False)
        if not nf.is_zero():
            add_element(nf)

    gb.complete_through = truncation
    return gb
