"""Command-line interface: build algebras, compute, verify, report.

Subcommands: make-algebra, make-complex, gb, hilbert, resolve, verify,
ext-gens, paper-check.  Exit codes are a stable contract: 0 success,
1 claim/verification failure, 2 usage or parse errors.  Reports are
deterministic (sorted keys, no timestamps) and carry provenance metadata:
field, monomial order, degree bounds, tool version, seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import List, Optional

from . import __version__
from .constructions import (B_HILBERT_DENOMINATOR, annihilator_suite, build_B,
                            build_C, build_paper_complex, expected_betti_B,
                            expected_betti_C)
from .counting import normal_word_counts
from .field import FieldError, parse_field_spec
from .freealg import Presentation
from .gbasis import GBError, buchberger_truncated
from .modules import ModuleError
from .parser import ParseError, format_presentation, parse_presentation
from .resolution import (koszulity_report, left_annihilator_report,
                         minimal_resolution, verify_complex, verify_exactness,
                         verify_minimality)
from .series import PowerSeries, hilbert_series, invert_series, poincare_at_minus_one


def _default_field() -> str:
    """Default field spec; the NCALG_FIELD environment variable overrides."""
    return os.environ.get("NCALG_FIELD", "p:32003")

EXIT_OK = 0
EXIT_CLAIM = 1
EXIT_USAGE = 2


@dataclass
class RunConfig:
    """Validated bounds and output options for a run."""

    field_spec: str
    imax: int
    jmax: int
    maxdeg: int
    fmt: str
    seed: int

    def __post_init__(self):
        if not (self.maxdeg >= self.jmax >= self.imax >= 1):
            raise ValueError(
                f"bounds must satisfy maxdeg >= jmax >= imax >= 1, got "
                f"maxdeg={self.maxdeg}, jmax={self.jmax}, imax={self.imax}")


def _metadata(cfg: RunConfig) -> dict:
    return {
        "tool": "ncalg",
        "version": __version__,
        "field": cfg.field_spec,
        "order": "deglex",
        "imax": cfg.imax,
        "jmax": cfg.jmax,
        "maxdeg": cfg.maxdeg,
        "seed": cfg.seed,
    }


def _load_presentation(args) -> Presentation:
    if getattr(args, "input", None):
        with open(args.input, "r", encoding="utf-8") as fh:
            pres = parse_presentation(fh.read())
        if args.field is not None and pres.field.describe() != args.field:
            print(f"note: file declares field {pres.field.describe()}, "
                  f"ignoring --field {args.field}", file=sys.stderr)
        args.field = pres.field.describe()
        return pres
    field = parse_field_spec(args.field or _default_field())
    args.field = field.describe()
    fam = getattr(args, "family", None)
    if fam == "C":
        if args.m is None:
            raise ValueError("--family C requires --m")
        return build_C(args.m, field)
    if fam == "B":
        return build_B(field, variant=getattr(args, "b_variant", "rank14"))
    raise ValueError("provide --input FILE or --family {B,C}")


def _emit(payload: dict, text_lines: List[str], fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    elif fmt == "csv":
        for row in payload.get("csv", []):
            out.write(",".join(str(x) for x in row) + "\n")
    else:
        for line in text_lines:
            out.write(line + "\n")


def _write_or_stdout(path: Optional[str], text: str) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- subcommands ---------------------------------------------------------------

def cmd_make_algebra(args) -> int:
    pres = _load_presentation(args)
    name = args.family if args.family else "algebra"
    header = f"ncalg make-algebra: family {name}" + (
        f" m={args.m}" if args.m else "")
    _write_or_stdout(args.out, format_presentation(pres, header=header))
    return EXIT_OK


def cmd_make_complex(args) -> int:
    from .complexio import format_complex

    pc = build_paper_complex(args.family, args.m,
                             field=parse_field_spec(args.field or _default_field()))
    _write_or_stdout(args.out, format_complex(pc.maps, header=pc.provenance))
    return EXIT_OK


def cmd_gb(args) -> int:
    pres = _load_presentation(args)
    gb = buchberger_truncated(pres, truncation=args.maxdeg)
    order = gb.order
    basis = sorted(gb.basis(), key=lambda f: order.key(order.lead(f)))
    dims = normal_word_counts(gb, args.maxdeg)
    sidecar = {
        "metadata": _metadata(_cfg(args)),
        "leading_words": [pres.word_str(order.lead(f)) for f in basis],
        "complete_through": gb.complete_through,
        "completeness": {str(d): gb.is_complete_through(d)
                         for d in range(args.maxdeg + 1)},
        "dims": dims,
    }
    lines = [f"# Groebner basis through degree {args.maxdeg} (order deglex)"]
    for f in basis:
        lines.append(f"rel {pres.poly_str(f)};")
    if args.format == "json":
        sidecar["basis"] = [pres.poly_str(f) for f in basis]
        print(json.dumps(sidecar, sort_keys=True, indent=2))
    else:
        _write_or_stdout(args.out, "\n".join(lines) + "\n")
        if args.sidecar:
            with open(args.sidecar, "w", encoding="utf-8") as fh:
                json.dump(sidecar, fh, sort_keys=True, indent=2)
    return EXIT_OK


def cmd_hilbert(args) -> int:
    pres = _load_presentation(args)
    gb = buchberger_truncated(pres, truncation=args.maxdeg)
    hs = hilbert_series(gb, args.maxdeg)
    payload = {"metadata": _metadata(_cfg(args)), "dims": hs.coeffs,
               "csv": [["degree", "dim"]] + [[d, c] for d, c in enumerate(hs.coeffs)]}
    lines = [" ".join(str(c) for c in hs.coeffs)]
    _emit(payload, lines, args.format, sys.stdout)
    return EXIT_OK


def cmd_resolve(args) -> int:
    pres = _load_presentation(args)
    cfg = _cfg(args)
    gb = buchberger_truncated(pres, truncation=cfg.maxdeg)
    table = minimal_resolution(pres, gb, imax=cfg.imax, jmax=cfg.jmax)
    rep = koszulity_report(table)
    payload = {
        "metadata": _metadata(cfg),
        "betti": [[i, j, v] for (i, j, v) in table.nonzero_cells()],
        "terminated_at": table.terminated_at,
        "gldim_verified": table.gldim_verified(),
        "minimal": table.minimal,
        "koszulity": {
            "m_koszul_verified": rep.m_koszul_verified,
            "not_koszul": rep.not_koszul,
            "off_diagonal": [[i, j, v] for (i, j, v) in rep.off_diagonal],
            "delta_fit": {str(j): i for j, i in sorted(rep.delta_fit.items())},
            "delta_violations": rep.delta_violations,
        },
        "csv": [["i", "j", "dim"]] + [[i, j, v] for (i, j, v) in table.nonzero_cells()],
    }
    lines = [table.format_text(), "", rep.summary()]
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, sort_keys=True, indent=2)
    _emit(payload, lines, args.format, sys.stdout)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .complexio import parse_complex

    pres = _load_presentation(args)
    with open(args.complex, "r", encoding="utf-8") as fh:
        maps = parse_complex(fh.read(), pres)
    jmax = args.jmax if args.jmax else max(s for f in maps for s in f.source.shifts) + 2
    gb = buchberger_truncated(pres, truncation=max(jmax, args.maxdeg))
    ccert = verify_complex(maps, gb)
    minimal = verify_minimality(maps)
    ecert = verify_exactness(maps, gb, jmax) if ccert.ok else None
    ok = ccert.ok and minimal and (ecert is not None and ecert.ok)
    payload = {
        "metadata": _metadata(_cfg(args)),
        "complex_ok": ccert.ok,
        "complex_failures": [[pos, r, c, nf] for (pos, r, c, nf) in ccert.failures],
        "minimal": minimal,
        "exact": None if ecert is None else ecert.ok,
        "exactness_failures": [] if ecert is None else
            [[pos, j, kd, imd] for (pos, j, kd, imd) in ecert.failures],
        "jmax": jmax,
    }
    lines = [
        f"complex (all composites zero): {'ok' if ccert.ok else 'FAIL'}",
        f"minimality (no degree-0 entries): {'ok' if minimal else 'FAIL'}",
        f"exactness through degree {jmax}: "
        + ("skipped" if ecert is None else ("ok" if ecert.ok else "FAIL")),
    ]
    for (pos, r, c, nf) in ccert.failures[:10]:
        lines.append(f"  composite at step {pos}, entry ({r},{c}) reduces to {nf}")
    if ecert is not None:
        for (pos, j, kd, imd) in ecert.failures[:10]:
            lines.append(f"  position {pos} degree {j}: ker {kd} != im {imd}")
    _emit(payload, lines, args.format, sys.stdout)
    return EXIT_OK if ok else EXIT_CLAIM


def cmd_ext_gens(args) -> int:
    from .yoneda import ExtAlgebra, generation_profile

    pres = _load_presentation(args)
    cfg = _cfg(args)
    gb = buchberger_truncated(pres, truncation=cfg.maxdeg)
    table = minimal_resolution(pres, gb, imax=cfg.imax, jmax=cfg.jmax)
    ext = ExtAlgebra(pres, gb, table)
    prof = generation_profile(ext)
    payload = {
        "metadata": _metadata(cfg),
        "cells": {f"{i},{j}": [b, s] for (i, j), (b, s) in sorted(prof.cells.items())},
        "new_generators": {f"{i},{j}": c
                           for (i, j), c in sorted(prof.new_generators.items())},
        "csv": [["i", "j", "dim", "spanned"]] +
               [[i, j, b, s] for (i, j), (b, s) in sorted(prof.cells.items())],
    }
    _emit(payload, [prof.summary()], args.format, sys.stdout)
    return EXIT_OK


def cmd_paper_check(args) -> int:
    ms = [int(x) for x in args.m.split(",")] if args.m else [5, 6]
    for m in ms:
        if m < 5:
            print(f"m={m} rejected: the construction needs m >= 5 "
                  f"(m=3 has no presentation here; the m=4 analogue is algebra B, "
                  f"always included)", file=sys.stderr)
            return EXIT_USAGE
    args.field = args.field or _default_field()
    field = parse_field_spec(args.field)
    claims: List[tuple] = []

    def claim(name: str, ok: bool):
        claims.append((name, ok))
        print(f"{'PASS' if ok else 'FAIL'}  {name}")

    # algebra B, always included
    pres = build_B(field, variant=args.b_variant)
    gb = buchberger_truncated(pres, truncation=8)
    hs = hilbert_series(gb, 8)
    closed = invert_series(PowerSeries(B_HILBERT_DENOMINATOR + [0] * 3), 8)
    claim("B: Hilbert series matches (1-13g+14g^2-7g^3+g^5)^-1 through deg 8",
          hs == closed)
    if args.b_variant == "rank14":
        pc = build_paper_complex("B", field=field)
        claim("B: (R.,psi) is a complex", verify_complex(pc.maps, gb).ok)
        claim("B: (R.,psi) is minimal", verify_minimality(pc.maps))
        claim("B: (R.,psi) is exact through degree 8",
              verify_exactness(pc.maps, gb, 8).ok)
        table = minimal_resolution(pres, gb, imax=5, jmax=8)
        claim("B: Betti table equals ranks/shifts of R.",
              table.cells == expected_betti_B())
        ph = poincare_at_minus_one(table.cells, 8).mul(hs, truncation=8)
        claim("B: P(-1,g) * H(g) = 1 through degree 8",
              ph == PowerSeries([1] + [0] * 8))
    for m in ms:
        pres = build_C(m, field)
        claim(f"C({m}): 3m generators and 4+3m relations",
              pres.ngens == 3 * m and len(pres.relations) == 4 + 3 * m)
        jmax = m + 3
        gb = buchberger_truncated(pres, truncation=jmax)
        pc = build_paper_complex("C", m, pres=pres)
        claim(f"C({m}): (P.,lambda) is a complex", verify_complex(pc.maps, gb).ok)
        claim(f"C({m}): (P.,lambda) is minimal", verify_minimality(pc.maps))
        claim(f"C({m}): (P.,lambda) is exact through degree {jmax}",
              verify_exactness(pc.maps, gb, jmax).ok)
        table = minimal_resolution(pres, gb, imax=m + 1, jmax=jmax)
        claim(f"C({m}): Betti table equals ranks/shifts of P.",
              table.cells == expected_betti_C(m))
        claim(f"C({m}): global dimension {m} (row {m+1} empty through {jmax})",
              table.gldim_verified() == m)
        rep = koszulity_report(table)
        claim(f"C({m}): {m}-Koszul but not Koszul (witness b({m},{m+1})=1)",
              rep.m_koszul_verified >= m and rep.not_koszul
              and rep.off_diagonal == [(m, m + 1, 1)])
        hs = hilbert_series(gb, jmax)
        ph = poincare_at_minus_one(table.cells, jmax).mul(hs, truncation=jmax)
        claim(f"C({m}): P(-1,g) * H(g) = 1 through degree {jmax}",
              ph == PowerSeries([1] + [0] * jmax))
        ann_ok = True
        for name, xrows, yrows in annihilator_suite(pres):
            rep2 = left_annihilator_report(pres, gb, xrows, yrows, jmax)
            if not rep2.ok:
                ann_ok = False
                print(f"      annihilator check failed: {name}")
        claim(f"C({m}): annihilator identity suite", ann_ok)
    failed = [name for name, ok in claims if not ok]
    print(f"{len(claims) - len(failed)}/{len(claims)} claims pass")
    if failed:
        for name in failed:
            print(f"FAILED: {name}", file=sys.stderr)
        return EXIT_CLAIM
    return EXIT_OK


# -- argument plumbing -----------------------------------------------------------

def _cfg(args) -> RunConfig:
    imax = getattr(args, "imax", None) or 1
    jmax = getattr(args, "jmax", None) or max(imax, getattr(args, "maxdeg", None) or 1)
    maxdeg = getattr(args, "maxdeg", None) or jmax
    return RunConfig(field_spec=args.field or _default_field(), imax=imax, jmax=jmax,
                     maxdeg=maxdeg, fmt=getattr(args, "format", "text"),
                     seed=getattr(args, "seed", 0))


def _add_common(sp, with_bounds=False, with_input=True):
    sp.add_argument("--field", default=None,
                    help="coefficient field: p:<prime> or q (default p:32003; "
                         "a presentation file's own declaration wins)")
    sp.add_argument("--format", choices=["text", "json", "csv"], default="text")
    sp.add_argument("--seed", type=int, default=0,
                    help="seed recorded in reports (randomized tests live in "
                         "the test suite)")
    if with_input:
        sp.add_argument("--input", help="presentation file")
        sp.add_argument("--family", choices=["B", "C"],
                        help="built-in family instead of --input")
        sp.add_argument("--m", type=int, help="family parameter for C")
        sp.add_argument("--b-variant", choices=["rank14", "prose"],
                        default="rank14", help="relation set for B")
    if with_bounds:
        sp.add_argument("--imax", type=int, required=True)
        sp.add_argument("--jmax", type=int, required=True)
        sp.add_argument("--maxdeg", type=int,
                        help="Groebner truncation degree (default jmax)")


def build_arg_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ncalg",
        description="workbench for finitely presented graded algebras")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("make-algebra", help="emit a built-in presentation")
    _add_common(sp)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_make_algebra)

    sp = sub.add_parser("make-complex", help="emit a built-in complex (.maps)")
    _add_common(sp, with_input=False)
    sp.add_argument("--family", choices=["B", "C"], required=True)
    sp.add_argument("--m", type=int)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_make_complex)

    sp = sub.add_parser("gb", help="truncated Groebner basis")
    _add_common(sp)
    sp.add_argument("--maxdeg", type=int, required=True)
    sp.add_argument("--order", choices=["deglex"], default="deglex")
    sp.add_argument("--out")
    sp.add_argument("--sidecar", help="write the JSON sidecar here")
    sp.set_defaults(func=cmd_gb)

    sp = sub.add_parser("hilbert", help="graded dimensions")
    _add_common(sp)
    sp.add_argument("--maxdeg", type=int, required=True)
    sp.set_defaults(func=cmd_hilbert)

    for name in ("resolve", "betti"):
        sp = sub.add_parser(name, help="minimal resolution and Betti table")
        _add_common(sp, with_bounds=True)
        sp.add_argument("--out", help="write the JSON report here")
        sp.set_defaults(func=cmd_resolve)

    sp = sub.add_parser("verify", help="verify a complex from a .maps file")
    _add_common(sp)
    sp.add_argument("--complex", required=True)
    sp.add_argument("--jmax", type=int)
    sp.add_argument("--maxdeg", type=int, default=8)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("ext-gens", help="Ext algebra generation profile")
    _add_common(sp, with_bounds=True)
    sp.set_defaults(func=cmd_ext_gens)

    sp = sub.add_parser("paper-check", help="machine-check the central claims")
    _add_common(sp, with_input=False)
    sp.add_argument("--m", help="comma-separated list (default 5,6)")
    sp.add_argument("--b-variant", choices=["rank14", "prose"], default="rank14")
    sp.set_defaults(func=cmd_paper_check)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_arg_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, FieldError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (GBError, ModuleError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CLAIM


if __name__ == "__main__":
    sys.exit(main())
