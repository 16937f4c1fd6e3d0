"""Independent oracles the engine is checked against.

Each oracle recomputes a quantity by a route disjoint from the engine's:
series inversion by polynomial long division over exact rationals, graded
quotient dimensions by a signed union-find over all free-algebra words
(no Groebner machinery), and kernels by explicit enumeration plus
pure-Python Gaussian elimination.
"""

from __future__ import annotations

from array import array
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import numpy as np


def series_inverse_oracle(denom: Sequence[int], dmax: int) -> List[int]:
    """Coefficients of 1 / (sum denom[k] g^k) through dmax, by long division."""
    c0 = Fraction(denom[0])
    if c0 == 0:
        raise ValueError("denominator has zero constant term")
    rem = [Fraction(1)] + [Fraction(0)] * dmax
    out = []
    for d in range(dmax + 1):
        q = rem[d] / c0
        out.append(q)
        for k in range(1, len(denom)):
            if d + k <= dmax:
                rem[d + k] -= q * Fraction(denom[k])
    assert all(x.denominator == 1 for x in out)
    return [int(x) for x in out]


def _two_term_relations(pres) -> List[Tuple[tuple, tuple, int]]:
    """Relations as (word_u, word_v, sign) with u = (-1)^sign v, or (u, None, 0)."""
    K = pres.field
    out = []
    for rel in pres.relations:
        terms = list(rel.terms.items())
        if len(terms) == 1:
            out.append((terms[0][0], None, 0))
        elif len(terms) == 2:
            (u, cu), (v, cv) = terms
            ratio = K.mul(cu, K.inv(cv))
            if K.is_zero(K.add(ratio, K.one)):
                sign = 0      # cu = -cv: cu*u + cv*v = 0 means u = v
            elif K.is_zero(K.sub(ratio, K.one)):
                sign = 1      # cu = cv: u = -v
            else:
                raise ValueError("oracle needs coefficient ratio +-1")
            out.append((u, v, sign))
        else:
            raise ValueError("oracle handles 1- or 2-term relations only")
    return out


def ideal_dims_unionfind(pres, dmax: int) -> List[int]:
    """dim A_d for d <= dmax by signed union-find over all degree-d words.

    Each a*r*b with a 2-term relation r identifies two word-nodes up to
    sign; a contradiction (w = -w) or a monomial relation kills the class.
    dim A_d is the number of surviving classes.  Requires all generators in
    degree one and relations with unit-ratio coefficients.
    """
    if any(g.degree != 1 for g in pres.generators):
        raise ValueError("oracle needs degree-one generators")
    n = pres.ngens
    rels = _two_term_relations(pres)
    dims = [1]
    for d in range(1, dmax + 1):
        N = n ** d
        parent = array("l", range(N))
        sign = array("b", [0]) * N
        dead = set()

        def find(x: int) -> Tuple[int, int]:
            path = []
            s = 0
            r = x
            while parent[r] != r:
                path.append(r)
                s ^= sign[r]
                r = parent[r]
            t = s
            for node in path:
                old = sign[node]
                parent[node] = r
                sign[node] = t
                t ^= old
            return r, s

        def union(x: int, y: int, rel_sign: int) -> None:
            rx, sx = find(x)
            ry, sy = find(y)
            if rx == ry:
                if sx ^ sy ^ rel_sign:
                    dead.add(rx)
                return
            parent[ry] = rx
            sign[ry] = sx ^ sy ^ rel_sign
            if ry in dead:
                dead.add(rx)

        def kill(x: int) -> None:
            rx, _ = find(x)
            dead.add(rx)

        for (u, v, rsign) in rels:
            lu = len(u)
            if v is not None and len(v) != lu:
                raise ValueError("inhomogeneous relation")
            uidx = 0
            for c in u:
                uidx = uidx * n + c
            vidx = None
            if v is not None:
                vidx = 0
                for c in v:
                    vidx = vidx * n + c
            for la in range(0, d - lu + 1):
                lb = d - lu - la
                na, nb = n ** la, n ** lb
                a = np.arange(na, dtype=np.int64)
                b = np.arange(nb, dtype=np.int64)
                base = (a * (n ** lu))[:, None] * nb + b[None, :]
                xs = (base + uidx * nb).ravel().tolist()
                if vidx is None:
                    for x in xs:
                        kill(x)
                else:
                    ys = (base + vidx * nb).ravel().tolist()
                    for x, y in zip(xs, ys):
                        union(x, y, rsign)
        # final count: compress vectorized, then count live roots
        par = np.frombuffer(parent, dtype=np.int64).copy()
        while True:
            nxt = par[par]
            if np.array_equal(nxt, par):
                break
            par = nxt
        dead_roots = {find(x)[0] for x in dead}
        roots = np.unique(par)
        live = sum(1 for r in roots.tolist() if r not in dead_roots)
        dims.append(live)
    return dims


# -- pure-python dense kernel oracle -------------------------------------------

def _oracle_rref(rows: List[List], field):
    A = [list(r) for r in rows]
    m = len(A)
    if m == 0:
        return [], []
    ncols = len(A[0])
    r = 0
    pivots = []
    for c in range(ncols):
        if r == m:
            break
        pr = None
        for i in range(r, m):
            if not field.is_zero(A[i][c]):
                pr = i
                break
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        inv = field.inv(A[r][c])
        A[r] = [field.mul(x, inv) for x in A[r]]
        for i in range(m):
            if i != r and not field.is_zero(A[i][c]):
                f = A[i][c]
                A[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    out = [row for row in A if any(not field.is_zero(x) for x in row)]
    return out, pivots


def _enumerate_normal_words(tips, n: int, d: int) -> List[tuple]:
    """All degree-d words with no tip factor, by direct generation."""
    def has_tip(w):
        for t in tips:
            lt = len(t)
            for i in range(len(w) - lt + 1):
                if w[i:i + lt] == t:
                    return True
        return False

    words = [()]
    for _ in range(d):
        nxt = []
        for w in words:
            for a in range(n):
                cand = w + (a,)
                if not has_tip(cand):
                    nxt.append(cand)
        words = nxt
    return words


def brute_kernel(pres, gb, fmap, j: int):
    """Kernel of the degree-j component by enumeration plus pure elimination.

    Returns (kernel rows in canonical rref form over the (gen, word) row
    index, the row index).  Independent of the engine's counting and of its
    numpy elimination.
    """
    from ncalg.freealg import lmul_word

    K = pres.field
    tips = [tuple(t) for t in gb.tips()]
    n = pres.ngens
    row_index = []
    for g, s in enumerate(fmap.source.shifts):
        if j - s < 0:
            continue
        for w in _enumerate_normal_words(tips, n, j - s):
            row_index.append((g, w))
    col_pos: Dict[Tuple[int, tuple], int] = {}
    for h, s in enumerate(fmap.target.shifts):
        if j - s < 0:
            continue
        for u in _enumerate_normal_words(tips, n, j - s):
            col_pos[(h, u)] = len(col_pos)
    rows = []
    for (g, w) in row_index:
        row = [K.zero] * len(col_pos) + [K.zero] * len(row_index)
        for h in range(fmap.target.rank):
            f = fmap.rows[g][h]
            if f.is_zero():
                continue
            nf = gb.normal_form(lmul_word(w, f))
            for u, c in nf.terms.items():
                row[col_pos[(h, u)]] = c
        rows.append(row)
    # augment identity to read off kernel combinations
    for i, row in enumerate(rows):
        row[len(col_pos) + i] = K.one
    red, _ = _oracle_rref(rows, K)
    nc = len(col_pos)
    kernel = [row[nc:] for row in red
              if all(K.is_zero(x) for x in row[:nc])]
    canon, _ = _oracle_rref(kernel, K) if kernel else ([], [])
    return canon, row_index


def c_relation_words_oracle(m: int) -> List[frozenset]:
    """Independent enumeration of the C(m) relation supports, from the recipe.

    Returns one frozenset of words (as name tuples) per relation; used to
    cross-check the built-in construction and the m -> m+1 differences.
    """
    rels = []

    def add(*terms):
        rels.append(frozenset(terms))

    add(("n", "p"), ("n", "q"))
    add(("n", "p"), ("n", "r"))
    add(("p", "s"), ("p", "t"))
    add(("q", "t"), ("q", "u"))
    add(("r", "s"), ("r", "u"))
    add(("s", "v"), ("s", "w"))
    add(("t", "w"), ("t", "x1"))
    add(("u", "v"), ("u", "x1"))
    add(("v", "x2"))
    add(("w", "x2"))
    for i in range(1, m - 2):
        add((f"x{i}", f"x{i + 1}"))
    add(("s", "v"), ("s", "y1"))
    add(("t", "w"), ("t", "y1"))
    add(("u", "x1"), ("u", "y1"))
    add(("s", "z1"))
    add(("t", "z1"))
    add(("u", "z1"))
    for i in range(2, m - 2):
        add((f"y{i - 1}", f"x{i}"), (f"z{i - 1}", f"y{i}"))
    if m >= 6:
        for i in range(1, m - 4):
            add((f"z{i}", f"z{i + 1}"))
    return rels
