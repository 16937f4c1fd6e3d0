"""Parser and canonical serializer for the presentation text format.

The format is line-oriented with ``#`` comments::

    field p:32003          # or: field q
    gens n p q r           # one or more lines, order significant
    deg all 1              # or: deg <name> <k>
    rel n*p - n*q;         # expr ::= [-] term (+- term)*
                           # term ::= [coeff *] name (* name)*

``rel`` statements end at ``;`` and may span lines; several statements may
share a line if ``;``-separated.  Relations are normalized to leading
coefficient 1 under the degree-lex order at ingestion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .field import FieldError, PrimeField, parse_field_spec
from .freealg import Generator, NcPoly, Presentation, poly_degree


class ParseError(ValueError):
    """A diagnostic with 1-based line and column."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


@dataclass(frozen=True)
class _Tok:
    kind: str  # name | int | op | end
    text: str
    line: int
    col: int


_OPS = set("*+-:;/")


def _tokenize(text: str) -> List[_Tok]:
    toks: List[_Tok] = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        i, n = 0, len(line)
        while i < n:
            ch = line[i]
            if ch.isspace():
                i += 1
                continue
            col = i + 1
            if ch.isalpha() or ch == "_":
                j = i + 1
                while j < n and (line[j].isalnum() or line[j] == "_"):
                    j += 1
                toks.append(_Tok("name", line[i:j], ln, col))
                i = j
            elif ch.isdigit():
                j = i + 1
                while j < n and line[j].isdigit():
                    j += 1
                if j < n and (line[j].isalpha() or line[j] == "_"):
                    raise ParseError(f"malformed token {line[i:j+1]!r}", ln, col)
                toks.append(_Tok("int", line[i:j], ln, col))
                i = j
            elif ch in _OPS:
                toks.append(_Tok("op", ch, ln, col))
                i += 1
            else:
                raise ParseError(f"malformed token {ch!r}", ln, col)
        toks.append(_Tok("end", "", ln, n + 1))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.pos = 0
        self.field = None
        self.gen_names: List[str] = []
        self.gen_lines: List[Tuple[str, int, int]] = []
        self.degs = {}
        self.deg_all: Optional[int] = None
        self.rels: List[Tuple[List, int, int]] = []  # (terms, line, col)

    def peek(self) -> _Tok:
        return self.toks[self.pos]

    def next(self) -> _Tok:
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def skip_ends(self):
        while self.pos < len(self.toks) and self.peek().kind == "end":
            self.pos += 1

    def at_eof(self) -> bool:
        return self.pos >= len(self.toks)

    def parse(self) -> Presentation:
        while True:
            self.skip_ends()
            if self.at_eof():
                break
            t = self.next()
            if t.kind != "name":
                raise ParseError(f"expected statement keyword, got {t.text!r}", t.line, t.col)
            if t.text == "field":
                self.parse_field()
            elif t.text == "gens":
                self.parse_gens()
            elif t.text == "deg":
                self.parse_deg()
            elif t.text == "rel":
                self.parse_rel()
            else:
                raise ParseError(f"unknown statement {t.text!r}", t.line, t.col)
        return self.build()

    def _end_statement(self, t: _Tok):
        nxt = self.peek()
        if nxt.kind == "end":
            self.next()
        elif nxt.kind == "op" and nxt.text == ";":
            self.next()
        else:
            raise ParseError(f"unexpected {nxt.text!r} at end of statement", nxt.line, nxt.col)

    def parse_field(self):
        t = self.next()
        if t.kind != "name" or t.text not in ("p", "q"):
            raise ParseError("field must be 'q' or 'p:<prime>'", t.line, t.col)
        if t.text == "q":
            spec = "q"
        else:
            colon = self.next()
            if colon.kind != "op" or colon.text != ":":
                raise ParseError("expected ':' after 'p'", colon.line, colon.col)
            num = self.next()
            if num.kind != "int":
                raise ParseError("expected prime after 'p:'", num.line, num.col)
            spec = f"p:{num.text}"
        try:
            self.field = parse_field_spec(spec)
        except FieldError as e:
            raise ParseError(str(e), t.line, t.col) from None
        self._end_statement(t)

    def parse_gens(self):
        got = False
        while self.peek().kind == "name":
            t = self.next()
            if t.text in self.gen_names:
                raise ParseError(f"duplicate name {t.text!r}", t.line, t.col)
            self.gen_names.append(t.text)
            self.gen_lines.append((t.text, t.line, t.col))
            got = True
        if not got:
            t = self.peek()
            raise ParseError("expected generator names", t.line, t.col)
        self._end_statement(self.peek())

    def parse_deg(self):
        t = self.next()
        if t.kind != "name":
            raise ParseError("expected 'all' or a generator name", t.line, t.col)
        num = self.next()
        if num.kind != "int":
            raise ParseError("expected integer degree", num.line, num.col)
        d = int(num.text)
        if d < 1:
            raise ParseError("degree must be positive", num.line, num.col)
        if t.text == "all":
            self.deg_all = d
        else:
            if t.text not in self.gen_names:
                raise ParseError(f"unknown generator {t.text!r}", t.line, t.col)
            self.degs[t.text] = d
        self._end_statement(t)

    def parse_rel(self):
        start = self.peek()
        terms = []  # list of (coeff:int, [names], line, col)
        sign = 1
        t = self.peek()
        if t.kind == "op" and t.text == "-":
            self.next()
            sign = -1
        while True:
            terms.append(self.parse_term(sign))
            self.skip_ends()  # rel may span lines
            if self.at_eof():
                raise ParseError("relation not terminated by ';'", start.line, start.col)
            t = self.peek()
            if t.kind == "op" and t.text == ";":
                self.next()
                break
            if t.kind == "op" and t.text in "+-":
                self.next()
                sign = 1 if t.text == "+" else -1
                self.skip_ends()
            else:
                raise ParseError(f"expected '+', '-' or ';', got {t.text!r}", t.line, t.col)
        self.rels.append((terms, start.line, start.col))

    def parse_term(self, sign: int):
        from fractions import Fraction

        self.skip_ends()
        t = self.peek()
        coeff = sign
        if t.kind == "int":
            self.next()
            coeff = sign * int(t.text)
            nxt = self.peek()
            if nxt.kind == "op" and nxt.text == "/":
                self.next()
                den = self.next()
                if den.kind != "int":
                    raise ParseError("expected denominator", den.line, den.col)
                coeff = Fraction(coeff, int(den.text))
            star = self.next()
            if star.kind != "op" or star.text != "*":
                raise ParseError("expected '*' after coefficient", star.line, star.col)
            t = self.peek()
        if t.kind != "name":
            raise ParseError(f"expected generator name, got {t.text!r}", t.line, t.col)
        names = [(self.next())]
        while self.peek().kind == "op" and self.peek().text == "*":
            self.next()
            nt = self.next()
            if nt.kind != "name":
                raise ParseError(f"expected generator name, got {nt.text!r}", nt.line, nt.col)
            names.append(nt)
        return (coeff, names, t.line, t.col)

    def build(self) -> Presentation:
        field = self.field if self.field is not None else PrimeField()
        gens = [Generator(name, i, self.degs.get(name, self.deg_all or 1))
                for i, (name, _, _) in enumerate(self.gen_lines)]
        index = {g.name: g.index for g in gens}
        degs = tuple(g.degree for g in gens)
        relations = []
        for terms, rline, rcol in self.rels:
            poly = {}
            for coeff, names, _, _ in terms:
                word = []
                for nt in names:
                    if nt.text not in index:
                        raise ParseError(f"unknown generator {nt.text!r}", nt.line, nt.col)
                    word.append(index[nt.text])
                w = tuple(word)
                c = field.add(poly.get(w, field.zero), field.of(coeff))
                if field.is_zero(c):
                    poly.pop(w, None)
                else:
                    poly[w] = c
            f = NcPoly(poly)
            if f.is_zero():
                raise ParseError("relation is identically zero", rline, rcol)
            try:
                d = poly_degree(f, degs)
            except ValueError:
                raise ParseError("relation not homogeneous", rline, rcol) from None
            if d < 2:
                raise ParseError(f"relation not homogeneous of degree >= 2 (degree {d})",
                                 rline, rcol)
            relations.append(f)
        pres = Presentation(gens, [], field)
        # monic-normalize under the presentation's degree-lex order
        from .gbasis import DegLex

        order = DegLex(pres)
        normed = []
        for f in relations:
            lead = max(f.terms, key=order.key)
            c = f.terms[lead]
            if not field.is_zero(field.sub(c, field.one)):
                inv = field.inv(c)
                f = NcPoly({w: field.mul(cc, inv) for w, cc in f.terms.items()})
            normed.append(f)
        return Presentation(gens, normed, field)


def parse_presentation(text: str) -> Presentation:
    """Parse presentation text; raises ParseError with line/column on bad input."""
    return _Parser(text).parse()


def parse_expression(text: str, pres: Presentation) -> NcPoly:
    """Parse a single polynomial expression over a presentation's generators.

    Same term grammar as ``rel`` statements; "0" denotes the zero
    polynomial.  Degenerate sums of named terms may be inhomogeneous here;
    homogeneity is the caller's concern (map entries are validated by the
    module layer).
    """
    if text.strip() == "0":
        return NcPoly.zero()
    toks = [t for t in _tokenize(text) if t.kind != "end"]
    if not toks:
        raise ParseError("empty expression", 1, 1)
    K = pres.field
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else _Tok("end", "", toks[-1].line,
                                                      toks[-1].col + 1)

    from fractions import Fraction

    poly: dict = {}
    sign = 1
    if peek().kind == "op" and peek().text == "-":
        pos += 1
        sign = -1
    while True:
        t = peek()
        coeff = sign
        if t.kind == "int":
            pos += 1
            coeff = sign * int(t.text)
            nxt = peek()
            if nxt.kind == "op" and nxt.text == "/":
                pos += 1
                den = peek()
                if den.kind != "int":
                    raise ParseError("expected denominator", den.line, den.col)
                pos += 1
                coeff = Fraction(coeff, int(den.text))
            star = peek()
            if not (star.kind == "op" and star.text == "*"):
                raise ParseError("expected '*' after coefficient", star.line, star.col)
            pos += 1
            t = peek()
        if t.kind != "name":
            raise ParseError(f"expected generator name, got {t.text!r}", t.line, t.col)
        word = []
        while True:
            nt = peek()
            if nt.kind != "name":
                raise ParseError(f"expected generator name, got {nt.text!r}",
                                 nt.line, nt.col)
            if nt.text not in pres.name_to_index:
                raise ParseError(f"unknown generator {nt.text!r}", nt.line, nt.col)
            word.append(pres.name_to_index[nt.text])
            pos += 1
            nxt = peek()
            if nxt.kind == "op" and nxt.text == "*":
                pos += 1
                continue
            break
        w = tuple(word)
        c = K.add(poly.get(w, K.zero), K.of(coeff))
        if K.is_zero(c):
            poly.pop(w, None)
        else:
            poly[w] = c
        nxt = peek()
        if nxt.kind == "end":
            break
        if nxt.kind == "op" and nxt.text in "+-":
            pos += 1
            sign = 1 if nxt.text == "+" else -1
            continue
        raise ParseError(f"unexpected {nxt.text!r}", nxt.line, nxt.col)
    return NcPoly(poly)


def format_presentation(pres: Presentation, header: str = "") -> str:
    """Canonical serialization: deterministic layout, terms in monomial order."""
    from .gbasis import DegLex

    order = DegLex(pres)
    lines = []
    if header:
        for h in header.splitlines():
            lines.append(f"# {h}")
    lines.append(f"field {pres.field.describe()}")
    names = [g.name for g in pres.generators]
    for i in range(0, len(names), 12):
        lines.append("gens " + " ".join(names[i:i + 12]))
    if all(d == pres.degs[0] for d in pres.degs) and pres.degs:
        lines.append(f"deg all {pres.degs[0]}")
    else:
        for g in pres.generators:
            lines.append(f"deg {g.name} {g.degree}")
    for rel in pres.relations:
        lines.append(f"rel {_expr_str(pres, rel, order)};")
    return "\n".join(lines) + "\n"


def _expr_str(pres: Presentation, f: NcPoly, order) -> str:
    """Deterministic rendering; upper-half residues print as subtraction."""
    K = pres.field
    items = sorted(f.terms.items(), key=lambda t: order.key(t[0]), reverse=True)
    out = ""
    for w, c in items:
        body = "*".join(pres.generators[i].name for i in w) if w else "1"
        neg = K.to_str(K.neg(c))
        cs = K.to_str(c)
        if len(neg) < len(cs) or (len(neg) == len(cs) and neg < cs):
            sign, mag = " - ", neg
        else:
            sign, mag = " + ", cs
        term = body if mag == "1" else f"{mag}*{body}"
        if not out:
            out = term if sign == " + " else f"-{term}"
        else:
            out += sign + term
    return out
