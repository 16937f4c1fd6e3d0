"""Exact counting and enumeration of normal words.

Normal words (words avoiding every Groebner tip as a factor) form a basis
of the quotient algebra, so graded dimensions are word counts.  Counting
uses an Aho-Corasick automaton over the tip set, which stays exact at
degrees where explicit enumeration would be astronomically large.  The
same automaton, extended with "suffix" patterns, counts basis monomials of
graded free modules modulo a left submodule: a monomial w*e_c lies in the
leading-monomial module exactly when some module lead for coordinate c is
a suffix of w.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from .freealg import Presentation, Word
from .gbasis import IncompleteBasisError, TruncatedGB


class FactorAutomaton:
    """Aho-Corasick automaton over kill patterns (tips) and flag patterns.

    Transitions entering a state whose output closure contains a kill
    pattern are redirected to a dead state; flag patterns only mark states
    (used for suffix exclusion).
    """

    DEAD = -1

    def __init__(self, nletters: int, kill: Sequence[Word], flag: Sequence[Word] = ()):
        self.nletters = nletters
        children: List[Dict[int, int]] = [{}]
        killed: List[bool] = [False]
        flagged: List[bool] = [False]

        def insert(pattern: Word, is_kill: bool):
            node = 0
            for a in pattern:
                nxt = children[node].get(a)
                if nxt is None:
                    nxt = len(children)
                    children[node][a] = nxt
                    children.append({})
                    killed.append(False)
                    flagged.append(False)
                node = nxt
            if is_kill:
                killed[node] = True
            else:
                flagged[node] = True

        for pat in kill:
            insert(tuple(pat), True)
        for pat in flag:
            insert(tuple(pat), False)

        n = len(children)
        fail = [0] * n
        order: List[int] = []
        from collections import deque

        dq = deque()
        for a, c in children[0].items():
            fail[c] = 0
            dq.append(c)
        while dq:
            s = dq.popleft()
            order.append(s)
            killed[s] = killed[s] or killed[fail[s]]
            flagged[s] = flagged[s] or flagged[fail[s]]
            for a, c in children[s].items():
                f = fail[s]
                while f and a not in children[f]:
                    f = fail[f]
                nxt = children[f].get(a, 0)
                fail[c] = nxt if nxt != c else 0
                dq.append(c)

        delta = [[0] * nletters for _ in range(n)]
        for a in range(nletters):
            delta[0][a] = children[0].get(a, 0)
        for s in order:
            for a in range(nletters):
                delta[s][a] = children[s].get(a, delta[fail[s]][a])
        # redirect killed targets to DEAD
        for s in range(n):
            for a in range(nletters):
                t = delta[s][a]
                if killed[t]:
                    delta[s][a] = self.DEAD
        self.delta = delta
        self.flagged = flagged
        self.nstates = n

    def step(self, state: int, letter: int) -> int:
        if state == self.DEAD:
            return self.DEAD
        return self.delta[state][letter]

    def scan(self, word: Word) -> int:
        """Final state after reading word, or DEAD if a kill pattern occurs."""
        s = 0
        for a in word:
            s = self.step(s, a)
            if s == self.DEAD:
                return self.DEAD
        return s


def _counts_by_degree(pres: Presentation, aut: FactorAutomaton, dmax: int,
                      exclude_flagged: bool) -> List[int]:
    degs = pres.degs
    # vec[d][state] = number of degree-d words ending in state, no kill factor
    vecs: List[List[int]] = [[0] * aut.nstates for _ in range(dmax + 1)]
    vecs[0][0] = 1
    for d in range(dmax):
        row = vecs[d]
        for s in range(aut.nstates):
            c = row[s]
            if not c:
                continue
            ds = aut.delta[s]
            for a in range(aut.nletters):
                t = ds[a]
                if t == aut.DEAD:
                    continue
                nd = d + degs[a]
                if nd <= dmax:
                    vecs[nd][t] += c
    out = []
    for d in range(dmax + 1):
        if exclude_flagged:
            out.append(sum(c for s, c in enumerate(vecs[d]) if not aut.flagged[s]))
        else:
            out.append(sum(vecs[d]))
    return out


def normal_word_counts(gb: TruncatedGB, dmax: int) -> List[int]:
    """dim A_d for d = 0..dmax; requires the basis complete through dmax."""
    gb.require_complete(dmax)
    aut = _tip_automaton(gb)
    return _counts_by_degree(gb.pres, aut, dmax, exclude_flagged=False)


def _tip_automaton(gb: TruncatedGB) -> FactorAutomaton:
    cached = getattr(gb, "_tip_aut", None)
    tips = tuple(sorted(gb.tips()))
    if cached is not None and cached[0] == tips:
        return cached[1]
    aut = FactorAutomaton(gb.pres.ngens, tips)
    gb._tip_aut = (tips, aut)
    return aut


def quotient_monomial_counts(gb: TruncatedGB, suffix_leads: Sequence[Word],
                             dmax: int) -> List[int]:
    """Counts of normal words of each degree with no ``suffix_leads`` suffix."""
    gb.require_complete(dmax)
    aut = FactorAutomaton(gb.pres.ngens, tuple(sorted(gb.tips())),
                          tuple(sorted(set(map(tuple, suffix_leads)))))
    return _counts_by_degree(gb.pres, aut, dmax, exclude_flagged=True)


def normal_words(gb: TruncatedGB, d: int, cap: Optional[int] = None) -> List[Word]:
    """All normal words of degree d in ascending lexicographic order."""
    gb.require_complete(d)
    aut = _tip_automaton(gb)
    degs = gb.pres.degs
    out: List[Word] = []
    stack: List[Tuple[Word, int, int]] = [((), 0, 0)]  # word, state, degree

    def rec(word: Word, state: int, deg: int):
        if deg == d:
            out.append(word)
            if cap is not None and len(out) > cap:
                raise MemoryError(f"more than {cap} normal words at degree {d}")
            return
        for a in range(aut.nletters):
            nd = deg + degs[a]
            if nd > d:
                continue
            t = aut.delta[state][a]
            if t == aut.DEAD:
                continue
            rec(word + (a,), t, nd)

    rec((), 0, 0)
    return out


class NormalBasis:
    """Normal-word bases of the graded components of the quotient algebra.

    Dimensions come from the counting automaton; explicit word lists are
    enumerated lazily (and only make sense at desk-scale dimensions).
    Valid through the basis completeness bound.
    """

    def __init__(self, gb: TruncatedGB, dmax: Optional[int] = None):
        self.gb = gb
        self.dmax = gb.complete_through if dmax is None else dmax
        gb.require_complete(self.dmax)
        self.dims: List[int] = normal_word_counts(gb, self.dmax)
        self._words: Dict[int, List[Word]] = {}
        self._index: Dict[int, Dict[Word, int]] = {}

    def dim(self, d: int) -> int:
        if d < 0:
            return 0
        if d > self.dmax:
            raise IncompleteBasisError(d, self.dmax)
        return self.dims[d]

    def words(self, d: int, cap: Optional[int] = 2_000_000) -> List[Word]:
        if d not in self._words:
            self._words[d] = normal_words(self.gb, d, cap=cap)
            self._index[d] = {w: i for i, w in enumerate(self._words[d])}
        return self._words[d]

    def index(self, d: int) -> Dict[Word, int]:
        self.words(d)
        return self._index[d]
