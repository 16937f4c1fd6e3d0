"""Yoneda products on Ext via chain-map lifting over the minimal resolution.

In a minimal resolution the differentials vanish on generators, so
Ext^{i,j}(k,k) is the dual of the degree-j generator slots of the i-th
module.  A class e in Ext^{i,j} determines a cocycle P^i -> k[-j]; lifting
it through the resolution gives chain maps G_s: P^{i+s} -> P^s[-j], and
the product e1 * e2 reads the scalar parts of e2's lift at stage i1 against
e1's coordinates.  Composition here is plain matrix composition with no
Koszul signs; the generation-degree claims checked downstream are
dimension-level and therefore convention-independent.

Lifting solves each row by division against the row module of the next
differential (with cofactor tracking), never by dense linear algebra, so
it stays cheap at the degrees where Ext lives.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .freealg import NcPoly, Presentation
from .gbasis import TruncatedGB
from .modules import (FreeModuleMap, GradedFreeModule, ModuleError, ModuleGB,
                      vec_is_zero)
from .resolution import BettiTable
from . import linalg


class LiftError(RuntimeError):
    """A lifting obstruction: impossible over a verified-exact resolution."""


@dataclass(frozen=True)
class ExtClass:
    """An element of Ext^{i,j}(k,k): coordinates over the degree-j slots."""

    i: int
    j: int
    coords: Tuple

    def is_zero(self, K) -> bool:
        return all(K.is_zero(c) for c in self.coords)


class ExtAlgebra:
    """Product structure on the Ext table of a computed minimal resolution."""

    def __init__(self, pres: Presentation, gb: TruncatedGB, table: BettiTable):
        self.pres = pres
        self.gb = gb
        self.table = table
        self.maps = table.maps
        self._modgb: Dict[int, ModuleGB] = {}
        self._lifts: Dict[Tuple[int, int, int], List[FreeModuleMap]] = {}

    # -- bookkeeping -----------------------------------------------------
    def module(self, i: int) -> GradedFreeModule:
        if i == 0:
            return GradedFreeModule((0,))
        return self.maps[i - 1].source

    def slots(self, i: int, j: int) -> List[int]:
        """Generator indices of P^i in internal degree j."""
        return [g for g, s in enumerate(self.module(i).shifts) if s == j]

    def basis(self, i: int, j: int) -> List[ExtClass]:
        K = self.pres.field
        slots = self.slots(i, j)
        out = []
        for k in range(len(slots)):
            coords = [K.zero] * len(slots)
            coords[k] = K.one
            out.append(ExtClass(i, j, tuple(coords)))
        return out

    def unit(self) -> ExtClass:
        return ExtClass(0, 0, (self.pres.field.one,))

    def _division_gb(self, s: int) -> ModuleGB:
        """Cofactor-tracking module GB of the rows of the step-s map."""
        mg = self._modgb.get(s)
        if mg is None:
            f = self.maps[s - 1]
            vecs = [f.row_vec(r) for r in range(f.source.rank)]
            mg = ModuleGB(self.gb, f.target, vecs, self.table.jmax,
                          track_cofactors=True)
            self._modgb[s] = mg
        return mg

    # -- lifting ------------------------------------------------------------
    def lift_cocycle(self, e: ExtClass, stages: Optional[int] = None
                     ) -> List[FreeModuleMap]:
        """Chain maps G_0..G_stages lifting the cocycle of e.

        G_s maps P^{i+s} to P^s[-j]; commutation G_s . lambda_s =
        lambda_{i+s} . G_{s-1} holds by construction and is what each
        division solves.  Raises LiftError when a division leaves a
        remainder, which a verified-exact resolution cannot produce.
        """
        K = self.pres.field
        L = len(self.maps)
        if stages is None:
            stages = L - e.i
        if e.i + stages > L:
            raise ModuleError(
                f"lift to stage {stages} needs P^{e.i + stages}, beyond bounds")
        key = (e.i, e.j, e.coords)
        cached = self._lifts.get(key)
        if cached is not None and len(cached) > stages:
            return cached[:stages + 1]
        src = self.module(e.i)
        slots = self.slots(e.i, e.j)
        coords = {g: c for g, c in zip(slots, e.coords)}
        rows = []
        for g, s in enumerate(src.shifts):
            c = coords.get(g, K.zero)
            entry = NcPoly.from_word((), c) if not K.is_zero(c) else NcPoly.zero()
            rows.append([entry])
        lifts = [FreeModuleMap(self.pres, src, GradedFreeModule((e.j,)), rows)]
        for s in range(1, stages + 1):
            rhs = self.maps[e.i + s - 1].compose(lifts[s - 1])
            mg = self._division_gb(s)
            tgt = GradedFreeModule(tuple(d + e.j for d in self.module(s).shifts))
            out_rows = []
            for r in range(rhs.source.rank):
                vec = rhs.row_vec(r)
                cofs, rem = mg.divide(vec)
                if not vec_is_zero(rem):
                    raise LiftError(
                        f"lifting obstruction at stage {s}, row {r} "
                        f"(class at ({e.i},{e.j}))")
                row = [cofs.get(q, NcPoly.zero())
                       for q in range(self.module(s).rank)]
                out_rows.append(row)
            lifts.append(FreeModuleMap(self.pres, self.module(e.i + s), tgt,
                                       out_rows))
        self._lifts[key] = lifts
        return lifts

    def check_lift(self, e: ExtClass, lifts: Sequence[FreeModuleMap]) -> bool:
        """Re-verify the chain-map property of a lift by normal forms."""
        for s in range(1, len(lifts)):
            lam = self.maps[s - 1]
            shifted = FreeModuleMap(
                self.pres,
                GradedFreeModule(tuple(d + e.j for d in lam.source.shifts)),
                GradedFreeModule(tuple(d + e.j for d in lam.target.shifts)),
                lam.rows)
            lhs = lifts[s].compose(shifted)
            rhs = self.maps[e.i + s - 1].compose(lifts[s - 1])
            for r in range(lhs.source.rank):
                for c in range(lhs.target.rank):
                    from .freealg import poly_sub

                    diff = poly_sub(lhs.rows[r][c], rhs.rows[r][c],
                                    self.pres.field)
                    if not self.gb.normal_form(diff).is_zero():
                        return False
        return True

    # -- products ----------------------------------------------------------
    def product(self, e1: ExtClass, e2: ExtClass) -> ExtClass:
        """Yoneda composition e1 * e2 in Ext^{i1+i2, j1+j2}."""
        K = self.pres.field
        if e1.i == 0:
            return ExtClass(e2.i, e2.j,
                            tuple(K.mul(e1.coords[0], c) for c in e2.coords))
        if e2.i == 0:
            return ExtClass(e1.i, e1.j,
                            tuple(K.mul(e2.coords[0], c) for c in e1.coords))
        i, j = e1.i + e2.i, e1.j + e2.j
        if i > self.table.imax or j > self.table.jmax:
            raise ModuleError(
                f"product lands at ({i},{j}), beyond verified bounds")
        lifts = self.lift_cocycle(e2, stages=e1.i)
        G = lifts[e1.i]
        out_slots = self.slots(i, j)
        src_slots = self.slots(e1.i, e1.j)
        coords = []
        for g in out_slots:
            acc = K.zero
            for h, c1 in zip(src_slots, e1.coords):
                if K.is_zero(c1):
                    continue
                entry = G.rows[g][h]
                eps = entry.terms.get((), K.zero)
                acc = K.add(acc, K.mul(eps, c1))
            coords.append(acc)
        return ExtClass(i, j, tuple(coords))


def yoneda_product(e1: ExtClass, e2: ExtClass, ext: ExtAlgebra) -> ExtClass:
    """Composition product on Ext classes (see ExtAlgebra.product)."""
    return ext.product(e1, e2)


@dataclass
class GenerationProfile:
    """Where the Ext algebra needs new generators, within verified bounds."""

    imax: int
    jmax: int
    cells: Dict[Tuple[int, int], Tuple[int, int]]  # (i,j) -> (b, spanned dim)
    new_generators: Dict[Tuple[int, int], int]     # (i,j) -> count of new gens

    def summary(self) -> str:
        gens = ", ".join(f"({i},{j}) x{c}"
                         for (i, j), c in sorted(self.new_generators.items()))
        return (f"Ext algebra generators within i<={self.imax}, j<={self.jmax}: "
                f"{gens if gens else 'none found'}")


def generation_profile(ext: ExtAlgebra) -> GenerationProfile:
    """Per-bidegree dimension of the product-generated subspace vs b(i,j).

    The span at (i, j) accumulates products of the full Ext spaces at every
    split (i1,j1) + (i2,j2) with i1, i2 >= 1; a positive difference b - dim
    means new algebra generators are required there.  Bidegrees outside the
    table bounds are not reported (no extrapolation).
    """
    table = ext.table
    K = ext.pres.field
    cells: Dict[Tuple[int, int], Tuple[int, int]] = {}
    new_gens: Dict[Tuple[int, int], int] = {}
    for (i, j), b in sorted(table.cells.items()):
        if b == 0 or i == 0:
            continue
        if i == 1:
            cells[(i, j)] = (b, 0)
            new_gens[(i, j)] = b
            continue
        products: List[List] = []
        for i1 in range(1, i):
            i2 = i - i1
            for j1 in range(1, j):
                j2 = j - j1
                if table.b(i1, j1) == 0 or table.b(i2, j2) == 0:
                    continue
                for e1 in ext.basis(i1, j1):
                    for e2 in ext.basis(i2, j2):
                        prod = ext.product(e1, e2)
                        products.append(list(prod.coords))
        spanned = linalg.rank(products, K) if products else 0
        cells[(i, j)] = (b, spanned)
        if b - spanned > 0:
            new_gens[(i, j)] = b - spanned
    return GenerationProfile(imax=table.imax, jmax=table.jmax,
                             cells=cells, new_generators=new_gens)


def diagonal_power_span_dims(ext: ExtAlgebra, upto: int) -> Dict[int, Tuple[int, int]]:
    """dim of the span of i-fold products of Ext^{1,1} inside Ext^{i,i}.

    Returns {i: (b(i,i), spanned)} for 2 <= i <= upto.
    """
    table = ext.table
    K = ext.pres.field
    out: Dict[int, Tuple[int, int]] = {}
    prev: List[ExtClass] = ext.basis(1, 1)
    for i in range(2, upto + 1):
        products = []
        classes = []
        for e1 in ext.basis(1, 1):
            for f in prev:
                prod = ext.product(e1, f)
                products.append(list(prod.coords))
        rref_rows, _ = linalg.rref(products, K) if products else ([], [])
        spanned = len(rref_rows)
        out[i] = (table.b(i, i), spanned)
        prev = [ExtClass(i, i, tuple(r)) for r in rref_rows]
    return out
