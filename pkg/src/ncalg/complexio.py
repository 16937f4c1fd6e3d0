"""Text format for complexes of free-module maps (.maps files).

Line-oriented with ``#`` comments::

    modules 5
    shifts 0
    shifts 1 1 1 1 1 1 1 1 1 1 1 1 1
    shifts 2 2 2 ...
    ...
    map 1
    n
    p
    ...
    map 2
    n*p - n*q | 0 | ...

``modules`` counts P^0..P^L; a ``shifts`` line per module in that order
(a bare ``shifts`` means a rank-zero module).  ``map i`` is followed by
rank(P^i) rows, each listing rank(P^{i-1}) entries separated by ``|`` in
presentation-expression syntax, ``0`` for zero entries.
"""

from __future__ import annotations

from typing import List

from .freealg import Presentation
from .modules import FreeModuleMap, GradedFreeModule
from .parser import ParseError, parse_expression


def format_complex(maps: List[FreeModuleMap], header: str = "") -> str:
    lines = []
    if header:
        for h in header.splitlines():
            lines.append(f"# {h}")
    modules = [maps[0].target] + [f.source for f in maps]
    lines.append(f"modules {len(modules)}")
    for mod in modules:
        lines.append(("shifts " + " ".join(str(s) for s in mod.shifts)).rstrip())
    pres = maps[0].pres
    from .gbasis import DegLex
    from .parser import _expr_str

    order = DegLex(pres)
    for k, f in enumerate(maps, start=1):
        lines.append(f"map {k}")
        for row in f.rows:
            cells = []
            for e in row:
                cells.append("0" if e.is_zero() else _expr_str(pres, e, order))
            lines.append(" | ".join(cells))
    return "\n".join(lines) + "\n"


def parse_complex(text: str, pres: Presentation) -> List[FreeModuleMap]:
    """Parse a .maps file against a presentation; returns maps[0] = step-1 map."""
    lines = text.splitlines()
    idx = 0

    def next_content():
        nonlocal idx
        while idx < len(lines):
            stripped = lines[idx].split("#", 1)[0].strip()
            idx += 1
            if stripped:
                return stripped, idx
        return None, idx

    stmt, ln = next_content()
    if stmt is None or not stmt.startswith("modules"):
        raise ParseError("expected 'modules <count>'", ln, 1)
    try:
        count = int(stmt.split()[1])
    except (IndexError, ValueError):
        raise ParseError("malformed 'modules' line", ln, 1) from None
    if count < 2:
        raise ParseError("need at least two modules", ln, 1)
    modules: List[GradedFreeModule] = []
    for _ in range(count):
        stmt, ln = next_content()
        if stmt is None or not stmt.startswith("shifts"):
            raise ParseError("expected 'shifts ...'", ln, 1)
        parts = stmt.split()[1:]
        try:
            shifts = tuple(int(x) for x in parts)
        except ValueError:
            raise ParseError("malformed shift list", ln, 1) from None
        modules.append(GradedFreeModule(shifts))
    maps: List[FreeModuleMap] = []
    for k in range(1, count):
        stmt, ln = next_content()
        if stmt is None or stmt != f"map {k}":
            raise ParseError(f"expected 'map {k}'", ln, 1)
        src, tgt = modules[k], modules[k - 1]
        rows = []
        for _ in range(src.rank):
            stmt, ln = next_content()
            if stmt is None:
                raise ParseError(f"map {k}: missing rows", ln, 1)
            cells = [c.strip() for c in stmt.split("|")]
            if len(cells) != tgt.rank:
                raise ParseError(
                    f"map {k}: expected {tgt.rank} entries, got {len(cells)}",
                    ln, 1)
            rows.append([parse_expression(c, pres) for c in cells])
        maps.append(FreeModuleMap(pres, src, tgt, rows))
    return maps
