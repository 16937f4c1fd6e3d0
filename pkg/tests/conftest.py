"""Shared session fixtures: the built-in algebras with their Groebner bases,
built-in complexes and independently computed Betti tables.  Building these once
keeps the whole suite (acceptance included) at desk-scale runtime; wall-clock
timings are recorded for the runtime-bound criteria."""

import time
from dataclasses import dataclass, field
from typing import Dict

import pytest

from ncalg.constructions import build_B, build_C, build_paper_complex
from ncalg.gbasis import TruncatedGB, buchberger_truncated
from ncalg.resolution import BettiTable, minimal_resolution


@dataclass
class AlgebraContext:
    pres: object
    gb: TruncatedGB
    complex: object
    table: BettiTable
    timings: Dict[str, float] = field(default_factory=dict)


def _build(family: str, m=None, imax=None, jmax=None) -> AlgebraContext:
    timings = {}
    t0 = time.perf_counter()
    if family == "B":
        pres = build_B()
        jmax = 8 if jmax is None else jmax
        imax = 5 if imax is None else imax
    else:
        pres = build_C(m)
        jmax = m + 3 if jmax is None else jmax
        imax = m + 1 if imax is None else imax
    gb = buchberger_truncated(pres, truncation=jmax)
    timings["gb"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    pc = build_paper_complex(family, m, pres=pres)
    timings["complex"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    table = minimal_resolution(pres, gb, imax=imax, jmax=jmax)
    timings["resolution"] = time.perf_counter() - t0
    return AlgebraContext(pres=pres, gb=gb, complex=pc, table=table,
                          timings=timings)


@pytest.fixture(scope="session")
def bctx() -> AlgebraContext:
    return _build("B")


@pytest.fixture(scope="session")
def cctx() -> Dict[int, AlgebraContext]:
    return {m: _build("C", m) for m in (5, 6, 7)}
