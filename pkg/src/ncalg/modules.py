"""Graded free modules, maps, and left-module Groebner bases over A.

An element of a free left module is a row vector, and a map acts by
right multiplication by its matrix, so the matrix rows are images of the
source generators expressed over the target generators (the convention
the built-in block matrices are written in).  Left submodules of free modules (row modules of maps, left
annihilators, syzygies) get Groebner bases over the quotient algebra: a
left multiple of a basis vector is lead-reducible unless an ideal tip
straddles the boundary, so completion only processes those boundary
obstructions, in ascending internal degree.

Graded dimensions of row modules and kernels come from the counting
automaton (dim ker = dim source - dim image), which stays exact at degrees
where dense linear algebra over normal-word bases would be hopeless;
explicit kernel bases are computed densely and only make sense at
desk-scale component dimensions.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .counting import normal_words, quotient_monomial_counts, normal_word_counts
from .freealg import (NcPoly, Presentation, Word, lmul_word, poly_degree,
                      poly_scale, poly_sub, word_degree)
from .gbasis import TruncatedGB
from . import linalg

ModMono = Tuple[int, Word]  # (coordinate, word)
ModVecT = Dict[ModMono, object]


class ModuleError(RuntimeError):
    pass


@dataclass(frozen=True)
class GradedFreeModule:
    """A free left module ⊕ A[-j] described by its generator shifts."""

    shifts: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.shifts)

    def dims(self, gb: TruncatedGB, dmax: int) -> List[int]:
        adims = normal_word_counts(gb, dmax)
        out = []
        for d in range(dmax + 1):
            out.append(sum(adims[d - s] for s in self.shifts if 0 <= d - s <= dmax))
        return out


class FreeModuleMap:
    """A map of graded free modules given by right multiplication.

    Entry (i, j) is homogeneous of degree source.shifts[i] - target.shifts[j]
    (or zero).  The row convention follows the block matrices it models;
    note most linear-algebra libraries assume the transpose convention.
    """

    def __init__(self, pres: Presentation, source: GradedFreeModule,
                 target: GradedFreeModule, rows: Sequence[Sequence[NcPoly]],
                 validate: bool = True):
        self.pres = pres
        self.source = source
        self.target = target
        self.rows: List[List[NcPoly]] = [list(r) for r in rows]
        if len(self.rows) != source.rank:
            raise ModuleError(f"expected {source.rank} rows, got {len(self.rows)}")
        for r in self.rows:
            if len(r) != target.rank:
                raise ModuleError(f"expected {target.rank} columns, got {len(r)}")
        if validate:
            self._validate_homogeneity()
        self._row_gb: Dict[Tuple[int, bool], "ModuleGB"] = {}

    def _validate_homogeneity(self):
        degs = self.pres.degs
        for i, row in enumerate(self.rows):
            for j, f in enumerate(row):
                if f.is_zero():
                    continue
                want = self.source.shifts[i] - self.target.shifts[j]
                got = poly_degree(f, degs)
                if got != want:
                    raise ModuleError(
                        f"entry ({i},{j}) has degree {got}, expected {want}")

    def entry(self, i: int, j: int) -> NcPoly:
        return self.rows[i][j]

    def has_degree_zero_entry(self) -> bool:
        for row in self.rows:
            for f in row:
                if any(len(w) == 0 for w in f.terms):
                    return True
        return False

    def compose(self, other: "FreeModuleMap") -> "FreeModuleMap":
        """Matrix product self*other: the map v -> (v*self)*other."""
        if self.target.shifts != other.source.shifts:
            raise ModuleError("shape mismatch in composition")
        K = self.pres.field
        from .freealg import multiply, poly_add

        rows = []
        for i in range(self.source.rank):
            row = []
            for j in range(other.target.rank):
                acc = NcPoly.zero()
                for k in range(self.target.rank):
                    a = self.rows[i][k]
                    b = other.rows[k][j]
                    if a.is_zero() or b.is_zero():
                        continue
                    acc = poly_add(acc, multiply(a, b, K), K)
                row.append(acc)
            rows.append(row)
        return FreeModuleMap(self.pres, self.source, other.target, rows)

    def row_vec(self, i: int) -> ModVecT:
        out: ModVecT = {}
        for j, f in enumerate(self.rows[i]):
            for w, c in f.terms.items():
                out[(j, w)] = c
        return out

    def row_module_gb(self, gb: TruncatedGB, dmax: int,
                      track_cofactors: bool = False) -> "ModuleGB":
        """Cached module GB of the row module, complete through dmax."""
        for (d, tc), mg in self._row_gb.items():
            if d >= dmax and (tc or not track_cofactors):
                return mg
        vecs = [self.row_vec(i) for i in range(self.source.rank)]
        mg = ModuleGB(gb, self.target, vecs, dmax, track_cofactors=track_cofactors)
        self._row_gb[(dmax, track_cofactors)] = mg
        return mg


# -- flat module-vector helpers ------------------------------------------

def vec_is_zero(v: ModVecT) -> bool:
    return not v


def vec_add_scaled(v: ModVecT, w: ModVecT, c, K) -> None:
    """v += c*w in place."""
    for m, d in w.items():
        s = K.add(v.get(m, K.zero), K.mul(d, c))
        if K.is_zero(s):
            v.pop(m, None)
        else:
            v[m] = s


def vec_scale(v: ModVecT, c, K) -> ModVecT:
    return {m: K.mul(d, c) for m, d in v.items()}


def vec_lmul_word(v: ModVecT, word: Word) -> ModVecT:
    if not word:
        return dict(v)
    return {(cc, word + w): d for (cc, w), d in v.items()}


def vec_degree(v: ModVecT, shifts: Sequence[int], degs) -> Optional[int]:
    d = None
    for (c, w) in v:
        dw = word_degree(w, degs) + shifts[c]
        if d is None:
            d = dw
        elif d != dw:
            raise ModuleError("module vector not homogeneous")
    return d


def vec_to_polys(v: ModVecT, rank: int) -> List[NcPoly]:
    polys: List[Dict[Word, object]] = [dict() for _ in range(rank)]
    for (c, w), d in v.items():
        polys[c][w] = d
    return [NcPoly(t) for t in polys]


class _GBElem:
    __slots__ = ("vec", "lead", "degree", "cof", "alive")

    def __init__(self, vec: ModVecT, lead: ModMono, degree: int,
                 cof: Optional[Dict[int, NcPoly]]):
        self.vec = vec
        self.lead = lead
        self.degree = degree
        self.cof = cof
        self.alive = True


class ModuleGB:
    """Left-module Groebner basis of a submodule of a graded free module.

    Input vectors are A-normalized and completed through ``truncation``
    (internal degree).  When ``track_cofactors`` is set, each basis element
    carries its expression over the input rows; ``divide`` then rewrites
    membership witnesses over the original rows, which is what chain-map
    lifting consumes.
    """

    def __init__(self, gb: TruncatedGB, target: GradedFreeModule,
                 rows: Sequence[ModVecT], truncation: int,
                 track_cofactors: bool = False):
        gb.require_complete(truncation)
        self.gb = gb
        self.pres = gb.pres
        self.order = gb.order
        self.target = target
        self.truncation = truncation
        self.track = track_cofactors
        self.elements: List[_GBElem] = []
        self._by_coord: Dict[int, List[int]] = {}
        self.version = 0
        self._counts_cache: Dict[int, List[int]] = {}

        self._queue: List[Tuple[int, int, int, Word]] = []
        self._counter = 0

        K = self.pres.field
        for i, row in enumerate(rows):
            vec = dict(row)
            vec_degree(vec, target.shifts, self.pres.degs)  # homogeneity check
            cof = {i: NcPoly.from_word((), K.one)} if track_cofactors else None
            red, redcof = self._reduce(vec, cof)
            if vec_is_zero(red):
                continue
            self._add(red, redcof)
        self._complete()

    # -- monomial order on module monomials --------------------------------
    def _mkey(self, m: ModMono):
        return (self.order.key(m[1]), m[0])

    def _lead(self, vec: ModVecT) -> ModMono:
        return max(vec, key=self._mkey)

    # -- reduction ----------------------------------------------------------
    def _find_module_reducer(self, mono: ModMono) -> Optional[Tuple[int, Word]]:
        c, w = mono
        best = None
        best_key = None
        for idx in self._by_coord.get(c, ()):
            el = self.elements[idx]
            if not el.alive:
                continue
            v = el.lead[1]
            lv = len(v)
            if lv <= len(w) and w[len(w) - lv:] == v:
                k = (self.order.key(v), idx)
                if best_key is None or k > best_key:
                    best_key = k
                    best = (idx, w[:len(w) - lv])
        return best

    def _reduce(self, vec: ModVecT, cof: Optional[Dict[int, NcPoly]],
                collect: Optional[Dict[int, ModVecT]] = None):
        """Full A- plus module-reduction; returns (remainder, cofactor).

        ``collect`` (element index -> accumulated left factor as flat dict of
        word->coeff) records the module-reduction steps for division.
        """
        K = self.pres.field
        gb = self.gb
        work = dict(vec)
        out: ModVecT = {}
        while work:
            mono = max(work, key=self._mkey)
            coeff = work.pop(mono)
            c, w = mono
            hit = gb._find_reducer(w)
            if hit is not None:
                # ideal reduction inside the coordinate entry
                idx, pos = hit
                g = gb.elements[idx]
                tip = gb.leads[idx]
                a, b = w[:pos], w[pos + len(tip):]
                for u, d0 in g.terms.items():
                    if u == tip:
                        continue
                    m2 = (c, a + u + b)
                    s = K.sub(work.get(m2, K.zero), K.mul(coeff, d0))
                    if K.is_zero(s):
                        work.pop(m2, None)
                    else:
                        work[m2] = s
                continue
            mhit = self._find_module_reducer(mono)
            if mhit is None:
                out[mono] = coeff
                continue
            eidx, prefix = mhit
            el = self.elements[eidx]
            # subtract coeff * prefix * element; the lead cancels the popped term
            for (c2, w2), d0 in el.vec.items():
                if (c2, w2) == el.lead:
                    continue
                m2 = (c2, prefix + w2)
                s = K.sub(work.get(m2, K.zero), K.mul(coeff, d0))
                if K.is_zero(s):
                    work.pop(m2, None)
                else:
                    work[m2] = s
            if cof is not None and el.cof is not None:
                for ridx, poly in el.cof.items():
                    delta = poly_scale(lmul_word(prefix, poly), coeff, K)
                    cur = cof.get(ridx, NcPoly.zero())
                    nxt = poly_sub(cur, delta, K)
                    if nxt.is_zero():
                        cof.pop(ridx, None)
                    else:
                        cof[ridx] = nxt
            if collect is not None:
                slot = collect.setdefault(eidx, {})
                key = prefix
                s = K.add(slot.get(key, K.zero), coeff)
                if K.is_zero(s):
                    slot.pop(key, None)
                else:
                    slot[key] = s
        if cof is not None:
            cof = {r: self.gb.normal_form(pf, check_degree=False)
                   for r, pf in cof.items()}
            cof = {r: pf for r, pf in cof.items() if not pf.is_zero()}
        return out, cof

    # -- mutation -------------------------------------------------------------
    def _add(self, vec: ModVecT, cof: Optional[Dict[int, NcPoly]]) -> None:
        K = self.pres.field
        lead = self._lead(vec)
        c0 = vec[lead]
        if not K.is_zero(K.sub(c0, K.one)):
            inv = K.inv(c0)
            vec = vec_scale(vec, inv, K)
            if cof is not None:
                cof = {r: poly_scale(p, inv, K) for r, p in cof.items()}
        deg = vec_degree(vec, self.target.shifts, self.pres.degs)
        el = _GBElem(vec, lead, deg, cof)
        idx = len(self.elements)
        self.elements.append(el)
        self._by_coord.setdefault(lead[0], []).append(idx)
        self.version += 1
        self._counts_cache.clear()
        self._enqueue_obstructions(idx)
        self._back_reduce(idx)

    def _back_reduce(self, new_idx: int) -> None:
        nl = self.elements[new_idx].lead
        c, v = nl
        lv = len(v)
        for idx, el in enumerate(self.elements):
            if idx == new_idx or not el.alive:
                continue
            touched = any(cc == c and len(w) >= lv and w[len(w) - lv:] == v
                          for (cc, w) in el.vec)
            if not touched:
                continue
            el.alive = False
            red, redcof = self._reduce(dict(el.vec), dict(el.cof) if el.cof is not None else None)
            if vec_is_zero(red):
                continue
            newlead = self._lead(red)
            if newlead == el.lead:
                K = self.pres.field
                c1 = red[newlead]
                if not K.is_zero(K.sub(c1, K.one)):
                    inv = K.inv(c1)
                    red = vec_scale(red, inv, K)
                    if redcof is not None:
                        redcof = {r: poly_scale(p, inv, K) for r, p in redcof.items()}
                el.vec = red
                el.cof = redcof
                el.alive = True
                self.version += 1
                self._counts_cache.clear()
            else:
                self._add(red, redcof)

    def _enqueue_obstructions(self, idx: int) -> None:
        el = self.elements[idx]
        v = el.lead[1]
        degs = self.pres.degs
        for tip in self.gb.tips():
            lt = len(tip)
            for k in range(1, min(lt - 1, len(v)) + 1):
                if tip[lt - k:] == v[:k]:
                    t1 = tip[:lt - k]
                    d = word_degree(t1, degs) + el.degree
                    if d <= self.truncation:
                        self._counter += 1
                        heapq.heappush(self._queue, (d, self._counter, idx, t1))

    def _complete(self) -> None:
        while self._queue:
            d, _, idx, t1 = heapq.heappop(self._queue)
            el = self.elements[idx]
            if not el.alive:
                continue
            vec = vec_lmul_word(el.vec, t1)
            cof = None
            if self.track and el.cof is not None:
                K = self.pres.field
                cof = {r: self.gb.normal_form(lmul_word(t1, p), check_degree=False)
                       for r, p in el.cof.items()}
                cof = {r: p for r, p in cof.items() if not p.is_zero()}
            red, redcof = self._reduce(vec, cof)
            if not vec_is_zero(red):
                self._add(red, redcof)
        self.complete_through = self.truncation

    # -- queries ---------------------------------------------------------------
    def leads_by_coord(self) -> Dict[int, List[Word]]:
        out: Dict[int, List[Word]] = {}
        for el in self.elements:
            if el.alive:
                out.setdefault(el.lead[0], []).append(el.lead[1])
        return out

    def submodule_dims(self, dmax: int) -> List[int]:
        """dim of the submodule per internal degree 0..dmax."""
        if dmax in self._counts_cache:
            return self._counts_cache[dmax]
        if dmax > self.complete_through:
            raise ModuleError(
                f"module basis complete through {self.complete_through}, need {dmax}")
        adims = normal_word_counts(self.gb, dmax)
        leads = self.leads_by_coord()
        total = [0] * (dmax + 1)
        for c, shift in enumerate(self.target.shifts):
            suffixes = leads.get(c, [])
            if suffixes:
                qc = quotient_monomial_counts(self.gb, suffixes, dmax)
            else:
                qc = adims
            for d in range(dmax + 1):
                dd = d - shift
                if 0 <= dd <= dmax:
                    total[d] += adims[dd] - qc[dd]
        self._counts_cache[dmax] = total
        return total

    def divide(self, vec: ModVecT, require_zero: bool = False):
        """Reduce vec; returns (cofactors over original rows, remainder).

        Cofactors require the basis built with ``track_cofactors``.
        """
        deg = vec_degree(vec, self.target.shifts, self.pres.degs)
        if deg is not None and deg > self.complete_through:
            raise ModuleError(
                f"division at degree {deg} beyond completeness {self.complete_through}")
        collect: Dict[int, ModVecT] = {}
        red, _ = self._reduce(dict(vec), None, collect=collect)
        if require_zero and not vec_is_zero(red):
            raise ModuleError("element not in submodule (nonzero remainder)")
        cofs: Dict[int, NcPoly] = {}
        if self.track:
            K = self.pres.field
            for eidx, slot in collect.items():
                el = self.elements[eidx]
                if el.cof is None:
                    continue
                for prefix, coeff in slot.items():
                    for ridx, poly in el.cof.items():
                        add = poly_scale(lmul_word(prefix, poly), coeff, K)
                        cur = cofs.get(ridx, NcPoly.zero())
                        from .freealg import poly_add

                        nxt = poly_add(cur, add, K)
                        if nxt.is_zero():
                            cofs.pop(ridx, None)
                        else:
                            cofs[ridx] = nxt
            cofs = {r: self.gb.normal_form(p, check_degree=False)
                    for r, p in cofs.items()}
            cofs = {r: p for r, p in cofs.items() if not p.is_zero()}
        return cofs, red


# -- graded kernels -----------------------------------------------------------

def image_dims(fmap: FreeModuleMap, gb: TruncatedGB, dmax: int) -> List[int]:
    if fmap.source.rank == 0:
        return [0] * (dmax + 1)
    return fmap.row_module_gb(gb, dmax).submodule_dims(dmax)


def kernel_dims(fmap: FreeModuleMap, gb: TruncatedGB, dmax: int) -> List[int]:
    """dim ker per internal degree, by rank-nullity against counted images."""
    src = fmap.source.dims(gb, dmax)
    img = image_dims(fmap, gb, dmax)
    return [src[d] - img[d] for d in range(dmax + 1)]


def _source_row_index(fmap: FreeModuleMap, gb: TruncatedGB, j: int):
    row_index: List[Tuple[int, Word]] = []
    for g, s in enumerate(fmap.source.shifts):
        if j - s < 0:
            continue
        for w in normal_words(gb, j - s):
            row_index.append((g, w))
    return row_index


def sparse_component_rows(fmap: FreeModuleMap, gb: TruncatedGB, j: int):
    """Degree-j component rows as sparse {(target gen, word): coeff} maps."""
    row_index = _source_row_index(fmap, gb, j)
    rows = []
    for (g, w) in row_index:
        entries: Dict[Tuple[int, Word], object] = {}
        for h in range(fmap.target.rank):
            f = fmap.rows[g][h]
            if f.is_zero():
                continue
            nf = gb.normal_form(lmul_word(w, f))
            for u, c in nf.terms.items():
                entries[(h, u)] = c
        rows.append(entries)
    return rows, row_index


def dense_component_matrix(fmap: FreeModuleMap, gb: TruncatedGB, j: int,
                           cap_entries: int = 60_000_000):
    """The degree-j component of the map over explicit normal-word bases.

    Returns (matrix rows, row index [(gen, word)], col index [(gen, word)]).
    """
    K = fmap.pres.field
    nrows = sum(1 for g, s in enumerate(fmap.source.shifts) if j - s >= 0
                for _ in [0])
    adims = normal_word_counts(gb, j)
    ncols = sum(adims[j - s] for s in fmap.target.shifts if 0 <= j - s)
    est_rows = sum(adims[j - s] for s in fmap.source.shifts if 0 <= j - s)
    if est_rows * max(1, ncols) > cap_entries:
        raise ModuleError(
            f"dense component at degree {j} needs {est_rows}x{ncols} "
            f"matrix; beyond cap")
    col_index: List[Tuple[int, Word]] = []
    col_pos: Dict[Tuple[int, Word], int] = {}
    for h, s in enumerate(fmap.target.shifts):
        if j - s < 0:
            continue
        for u in normal_words(gb, j - s):
            col_pos[(h, u)] = len(col_index)
            col_index.append((h, u))
    sparse, row_index = sparse_component_rows(fmap, gb, j)
    rows = []
    for entries in sparse:
        row = [K.zero] * len(col_index)
        for key, c in entries.items():
            row[col_pos[key]] = c
        rows.append(row)
    return rows, row_index, col_index


def _null_vectors_to_polys(null, row_index, rank, K) -> List[List[NcPoly]]:
    out = []
    for nv in null:
        vec: ModVecT = {}
        for pos, c in enumerate(nv):
            if K.is_zero(c):
                continue
            g, w = row_index[pos]
            vec[(g, w)] = c
        out.append(vec_to_polys(vec, rank))
    return out


def _vector_annihilates(polys: List[NcPoly], fmap: FreeModuleMap,
                        gb: TruncatedGB) -> bool:
    from .freealg import multiply, poly_add

    K = fmap.pres.field
    for h in range(fmap.target.rank):
        acc = NcPoly.zero()
        for g, f in enumerate(polys):
            if f.is_zero() or fmap.rows[g][h].is_zero():
                continue
            acc = poly_add(acc, multiply(f, fmap.rows[g][h], K), K)
        if not gb.normal_form(acc).is_zero():
            return False
    return True


def _projected_kernel(fmap: FreeModuleMap, gb: TruncatedGB, j: int,
                      want: int) -> List[List[NcPoly]]:
    """Kernel basis via a seeded random compression of the constraints.

    Sound by construction: every candidate from the compressed system is
    verified exactly (normal forms), and the caller's dimension count fixes
    how many independent vectors must exist.  Retries with a wider
    projection on the (astronomically unlikely) unlucky draw.
    """
    import numpy as np

    from .field import PrimeField

    K = fmap.pres.field
    if not isinstance(K, PrimeField):
        raise ModuleError("projected kernel solve requires a prime field")
    p = K.p
    sparse, row_index = sparse_component_rows(fmap, gb, j)
    nrows = len(sparse)
    for attempt in range(4):
        # width must dominate the rank (nrows - want) for the projection to
        # preserve the kernel; the slack makes an unlucky draw astronomically rare
        width = (nrows - want) + 32 * (2 ** attempt)
        if nrows * width > 150_000_000:
            raise ModuleError(
                f"projected kernel at degree {j} needs {nrows}x{width}; too large")
        cols: Dict[Tuple[int, Word], "np.ndarray"] = {}

        def colvec(key):
            v = cols.get(key)
            if v is None:
                h, u = key
                seed = np.random.SeedSequence(
                    entropy=[17 + attempt, j, h, *[x + 1 for x in u]])
                v = np.random.default_rng(seed).integers(0, p, size=width,
                                                         dtype=np.int64)
                cols[key] = v
            return v

        D = np.zeros((len(sparse), width), dtype=np.int64)
        for i, entries in enumerate(sparse):
            acc = np.zeros(width, dtype=np.int64)
            for key, c in entries.items():
                acc = (acc + int(c) * colvec(key)) % p
            D[i] = acc
        null = linalg.left_nullspace([list(map(int, r)) for r in D], K)
        if len(null) < want:
            raise ModuleError(
                f"projected kernel at degree {j} lost dimensions: "
                f"{len(null)} < {want}")
        cands = _null_vectors_to_polys(null, row_index, fmap.source.rank, K)
        good = [v for v in cands if _vector_annihilates(v, fmap, gb)]
        if len(null) == want and len(good) == want:
            return good
    raise ModuleError(f"projected kernel did not stabilize at degree {j}")


def graded_kernel(fmap: FreeModuleMap, gb: TruncatedGB, j: int,
                  cap_entries: int = 4_000_000) -> List[List[NcPoly]]:
    """Basis of {v in source_j : v*matrix = 0}, coordinates in normal form.

    A counting fast path certifies empty kernels without any linear
    algebra.  Small components are solved densely over explicit
    normal-word bases; larger ones through the verified random projection.
    """
    gb.require_complete(j)
    dims = kernel_dims(fmap, gb, j)
    if dims[j] == 0:
        return []
    K = fmap.pres.field
    adims = normal_word_counts(gb, j)
    est_rows = sum(adims[j - s] for s in fmap.source.shifts if 0 <= j - s)
    est_cols = sum(adims[j - s] for s in fmap.target.shifts if 0 <= j - s)
    from .field import PrimeField

    needs_projection = (est_rows * max(1, est_cols) > cap_entries
                        and est_cols > (est_rows - dims[j]) + 64
                        and isinstance(K, PrimeField))
    if needs_projection:
        return _projected_kernel(fmap, gb, j, dims[j])
    rows, row_index, _ = dense_component_matrix(fmap, gb, j, cap_entries)
    null = linalg.left_nullspace(rows, K)
    if len(null) != dims[j]:
        raise ModuleError(
            f"kernel dimension mismatch at degree {j}: counted {dims[j]}, "
            f"dense found {len(null)}")
    return _null_vectors_to_polys(null, row_index, fmap.source.rank, K)
