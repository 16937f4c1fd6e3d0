"""Built-in algebra families and their explicit resolutions.

``build_C(m)`` constructs the quadratic algebra with 3m generators and
4+3m relations (m >= 5); ``build_B`` the closely related 13-generator
algebra.  ``build_paper_complex`` assembles the named block matrices
(alpha, beta, gamma, ..., eta) into the explicit complexes these algebras
carry, as first-class verifiable maps.  Block shapes are fixed:

    alpha 3x9, alpha' 3x6, beta 6x4, beta' 3x3, gamma 4x2, gamma' 3x1,
    chi_j 2x2, delta 3x3, epsilon 3x1, zeta_j jxj, eta 1x4, eta' 2x4.

Placement rule inside each assembled matrix: a block's columns align with
the rows of the previous matrix that it annihilates on the left (eta's
last three columns over the delta rows, alpha's last six over the beta
rows, and so on down the chain); everything else is zero.  Assembly
failures name the offending block.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .field import PrimeField
from .freealg import Generator, NcPoly, Presentation, poly_neg
from .modules import FreeModuleMap, GradedFreeModule, ModuleError


class AssemblyError(RuntimeError):
    def __init__(self, block: str, message: str):
        super().__init__(f"block {block}: {message}")
        self.block = block


# -- presentations -------------------------------------------------------------

def c_generator_sets(m: int) -> List[List[str]]:
    """The generating sets S_1 .. S_{m+1}, in order."""
    if m < 5:
        raise ValueError(f"family C is constructed for m >= 5, got {m}")
    sets = [["n"], ["p", "q", "r"], ["s", "t", "u"],
            ["v", "w", "x1", "y1", "z1"]]
    for i in range(2, m - 3):
        sets.append([f"x{i}", f"y{i}", f"z{i}"])
    sets.append([f"x{m - 3}", f"y{m - 3}"])
    sets.append([f"x{m - 2}"])
    return sets


def _mk_pres(gen_names: Sequence[str], rel_specs, field) -> Presentation:
    gens = [Generator(name, i, 1) for i, name in enumerate(gen_names)]
    idx = {name: i for i, name in enumerate(gen_names)}
    K = field
    rels = []
    for spec in rel_specs:
        terms = {}
        for coeff, names in spec:
            w = tuple(idx[nm] for nm in names)
            c = K.add(terms.get(w, K.zero), K.of(coeff))
            if K.is_zero(c):
                terms.pop(w, None)
            else:
                terms[w] = c
        rels.append(NcPoly(terms))
    return Presentation(gens, rels, K)


def _bin(a: str, b: str, c: str, d: str):
    """The relation ab - cd."""
    return [(1, [a, b]), (-1, [c, d])]


def _mono(a: str, b: str):
    return [(1, [a, b])]


def c_relation_specs(m: int):
    """The defining relations of C(m), in the listed order."""
    if m < 5:
        raise ValueError(f"family C is constructed for m >= 5, got {m}")
    rels = [
        _bin("n", "p", "n", "q"),
        _bin("n", "p", "n", "r"),
        _bin("p", "s", "p", "t"),
        _bin("q", "t", "q", "u"),
        _bin("r", "s", "r", "u"),
        _bin("s", "v", "s", "w"),
        _bin("t", "w", "t", "x1"),
        _bin("u", "v", "u", "x1"),
        _mono("v", "x2"),
        _mono("w", "x2"),
    ]
    for i in range(1, m - 2):
        rels.append(_mono(f"x{i}", f"x{i + 1}"))
    rels.extend([
        _bin("s", "v", "s", "y1"),
        _bin("t", "w", "t", "y1"),
        _bin("u", "x1", "u", "y1"),
        _mono("s", "z1"),
        _mono("t", "z1"),
        _mono("u", "z1"),
    ])
    # y_{i-1} x_i + z_{i-1} y_i needs y_{i-1} and z_{i-1}, so i starts at 2
    for i in range(2, m - 2):
        rels.append([(1, [f"y{i - 1}", f"x{i}"]), (1, [f"z{i - 1}", f"y{i}"])])
    if m >= 6:
        for i in range(1, m - 4):
            rels.append(_mono(f"z{i}", f"z{i + 1}"))
    return rels


def build_C(m: int, field=None) -> Presentation:
    """The family member C(m): 3m generators, 4+3m quadratic relations."""
    if m < 5:
        raise ValueError(
            f"family C is constructed for m >= 5 (m=3,4 are not built by this "
            f"recipe; the m=4 analogue ships as algebra B), got {m}")
    field = field if field is not None else PrimeField()
    names = [nm for s in c_generator_sets(m) for nm in s]
    pres = _mk_pres(names, c_relation_specs(m), field)
    assert pres.ngens == 3 * m and len(pres.relations) == 4 + 3 * m
    return pres


B_GENERATORS = ["n", "p", "q", "r", "s", "t", "u", "v", "w", "x1", "y1", "a", "b"]

_B_PROSE = [
    _bin("n", "p", "n", "q"),
    _bin("n", "p", "n", "r"),
    _bin("p", "s", "p", "t"),
    _bin("q", "t", "q", "u"),
    _bin("r", "s", "r", "u"),
    _bin("s", "v", "s", "w"),
    _bin("t", "w", "t", "x1"),
    _bin("u", "v", "u", "x1"),
    _bin("v", "a", "v", "b"),
    _bin("w", "a", "w", "b"),
    _bin("x1", "a", "x1", "b"),
]

_B_EXTRA = [
    _bin("s", "v", "s", "y1"),
    _bin("t", "w", "t", "y1"),
    _bin("u", "x1", "u", "y1"),
]


def build_B(field=None, variant: str = "rank14") -> Presentation:
    """The 13-generator algebra B.

    ``rank14`` (default) takes the fourteen rows of psi_2 psi_1 as defining
    relations: the eleven listed ones plus sv-sy1, tw-ty1, ux1-uy1, which
    the rank of R^2 = B[-2]^14 forces.  ``prose`` keeps only the eleven
    listed relations, for side-by-side comparison.
    """
    field = field if field is not None else PrimeField()
    if variant == "rank14":
        rels = _B_PROSE[:8] + _B_EXTRA + _B_PROSE[8:]
    elif variant == "prose":
        rels = list(_B_PROSE)
    else:
        raise ValueError(f"unknown B variant {variant!r}")
    return _mk_pres(B_GENERATORS, rels, field)


# -- block matrices --------------------------------------------------------------

def _sym(pres: Presentation, expr) -> NcPoly:
    """0 | name | (coeff, [names...]) | list of such terms -> NcPoly."""
    K = pres.field
    if expr == 0:
        return NcPoly.zero()
    if isinstance(expr, str):
        return pres.gen_poly(expr)
    if isinstance(expr, tuple):
        coeff, names = expr
        w = tuple(pres.name_to_index[nm] for nm in names)
        return NcPoly.from_word(w, K.of(coeff))
    terms = {}
    for coeff, names in expr:
        w = tuple(pres.name_to_index[nm] for nm in names)
        c = K.add(terms.get(w, K.zero), K.of(coeff))
        if K.is_zero(c):
            terms.pop(w, None)
        else:
            terms[w] = c
    return NcPoly(terms)


def _matrix(pres: Presentation, spec) -> List[List[NcPoly]]:
    return [[_sym(pres, e) for e in row] for row in spec]


def block_alpha(p):
    return _matrix(p, [
        [0, 0, 0, "p", 0, 0, (-1, ["p"]), "p", 0],
        [0, 0, 0, 0, "q", 0, 0, (-1, ["q"]), "q"],
        [0, 0, 0, 0, 0, "r", (-1, ["r"]), 0, "r"],
    ])


def block_alpha_prime(p):
    return _matrix(p, [
        ["p", 0, 0, (-1, ["p"]), "p", 0],
        [0, "q", 0, 0, (-1, ["q"]), "q"],
        [0, 0, "r", (-1, ["r"]), 0, "r"],
    ])


def block_beta(p):
    return _matrix(p, [
        ["s", (-1, ["s"]), 0, 0],
        [0, "t", (-1, ["t"]), 0],
        ["u", 0, (-1, ["u"]), 0],
        ["s", 0, 0, (-1, ["s"])],
        [0, "t", 0, (-1, ["t"])],
        [0, 0, "u", (-1, ["u"])],
    ])


def block_beta_prime(p):
    return _matrix(p, [
        ["s", (-1, ["s"]), 0],
        [0, "t", (-1, ["t"])],
        ["u", 0, (-1, ["u"])],
    ])


def block_gamma(p):
    return _matrix(p, [["v", 0], ["w", 0], ["x1", 0], ["y1", "z1"]])


def block_gamma_prime(p):
    return _matrix(p, [["v"], ["w"], ["x1"]])


def block_chi(p, j: int):
    return _matrix(p, [[f"x{j}", 0], [f"y{j}", f"z{j}"]])


def block_delta(p):
    return _matrix(p, [
        [(-1, ["p"]), "p", 0],
        [0, (-1, ["q"]), "q"],
        [(-1, ["r"]), 0, "r"],
    ])


def block_epsilon(p):
    return _matrix(p, [["s"], ["t"], ["u"]])


def block_zeta(p, j: int):
    return _matrix(p, [[f"z{i + 1}" if i == c else 0 for c in range(j)]
                       for i in range(j)])


def block_eta(p):
    return _matrix(p, [[0, "n", "n", (-1, ["n"])]])


def block_eta_prime(p):
    return _matrix(p, [[0, "n", (-1, ["n"]), 0], [0, "n", 0, (-1, ["n"])]])


BLOCK_SHAPES = {
    "alpha": (3, 9), "alpha'": (3, 6), "beta": (6, 4), "beta'": (3, 3),
    "gamma": (4, 2), "gamma'": (3, 1), "delta": (3, 3), "epsilon": (3, 1),
    "eta": (1, 4), "eta'": (2, 4),
}


# -- complex assembly -------------------------------------------------------------

@dataclass
class PaperComplex:
    """The explicit complex carried by a built-in algebra."""

    family: str            # "C" or "B"
    m: Optional[int]
    pres: Presentation
    maps: List[FreeModuleMap]   # maps[0] is the step-1 map
    provenance: str

    @property
    def length(self) -> int:
        return len(self.maps)

    def module_ranks(self) -> List[int]:
        out = [self.maps[0].target.rank]
        for f in self.maps:
            out.append(f.source.rank)
        return out


class _Assembler:
    """Place named blocks into a rows x cols matrix of polynomials."""

    def __init__(self, pres: Presentation, nrows: int, ncols: int):
        self.pres = pres
        self.rows = [[NcPoly.zero() for _ in range(ncols)] for _ in range(nrows)]
        self.nrows = nrows
        self.ncols = ncols

    def place(self, name: str, block: List[List[NcPoly]], r0: int, c0: int):
        h, w = len(block), len(block[0]) if block else 0
        if r0 < 0 or c0 < 0 or r0 + h > self.nrows or c0 + w > self.ncols:
            raise AssemblyError(name, f"{h}x{w} at ({r0},{c0}) exceeds "
                                      f"{self.nrows}x{self.ncols}")
        for i in range(h):
            for j in range(w):
                if not block[i][j].is_zero():
                    if not self.rows[r0 + i][c0 + j].is_zero():
                        raise AssemblyError(name, f"overlap at ({r0+i},{c0+j})")
                    self.rows[r0 + i][c0 + j] = block[i][j]


def _row_blocks_lambda(m: int, i: int) -> List[Tuple[str, int]]:
    """Row-block structure (names and heights) of lambda_i."""
    if i == 1:
        return [("column", 3 * m)]
    if i == 2:
        blocks = [("eta'", 2), ("delta", 3), ("epsilon", 3)]
        if m >= 6:
            blocks.append((f"zeta{m - 5}", m - 5))
        blocks.append(("beta", 6))
        blocks.append(("gamma", 4))
        for j in range(2, m - 3):
            blocks.append((f"chi{j}", 2))
        blocks.append((f"x{m - 3}", 1))
        return blocks
    if i == m - 2:
        return [("eta", 1), ("delta", 3), ("alpha", 3), ("beta", 6), ("gamma'", 3)]
    if i == m - 1:
        return [("eta", 1), ("alpha", 3), ("beta'", 3)]
    if i == m:
        return [("top", 1)]
    if i == 3:
        blocks = [("eta", 1), ("delta", 3), ("epsilon", 3)]
        if m - 6 >= 1:
            blocks.append((f"zeta{m - 6}", m - 6))
        blocks.append(("alpha'", 3))
        blocks.append(("beta", 6))
        blocks.append(("gamma", 4))
        for j in range(2, m - 4):
            blocks.append((f"chi{j}", 2))
        blocks.append((f"x{m - 4}", 1))
        return blocks
    # 4 <= i <= m-3
    blocks = [("eta", 1), ("delta", 3), ("epsilon", 3)]
    if m - i - 3 >= 1:
        blocks.append((f"zeta{m - i - 3}", m - i - 3))
    blocks.append(("alpha", 3))
    blocks.append(("beta", 6))
    blocks.append(("gamma", 4))
    for j in range(2, m - i - 1):
        blocks.append((f"chi{j}", 2))
    blocks.append((f"x{m - i - 1}", 1))
    return blocks


def _offsets(blocks: List[Tuple[str, int]]) -> Dict[str, int]:
    out = {}
    pos = 0
    for name, h in blocks:
        out[name] = pos
        pos += h
    out["__total__"] = pos
    return out


def _target_anchor(tgt: Dict[str, int], *names: str) -> int:
    for nm in names:
        if nm in tgt:
            return tgt[nm]
    raise AssemblyError(names[0], "target block not found")


def _assemble_lambda(pres: Presentation, m: int, i: int) -> List[List[NcPoly]]:
    """The matrix of lambda_i as placed blocks over lambda_{i-1}'s rows."""
    me = _row_blocks_lambda(m, i)
    below = _row_blocks_lambda(m, i - 1)
    tgt = _offsets(below)
    nrows = sum(h for _, h in me)
    ncols = tgt["__total__"]
    asm = _Assembler(pres, nrows, ncols)
    r = 0
    for name, h in me:
        if name == "eta":
            # last three columns over the delta rows of the target
            asm.place("eta", block_eta(pres), r, tgt["delta"] - 1)
        elif name == "eta'":
            asm.place("eta'", block_eta_prime(pres), r, 0)
        elif name == "delta":
            if i == 2:
                asm.place("delta", block_delta(pres), r, tgt_col_lambda1(m, "s"))
            else:
                asm.place("delta", block_delta(pres), r, tgt["epsilon"])
        elif name == "epsilon":
            if i == 2:
                asm.place("epsilon", block_epsilon(pres), r, tgt_col_lambda1(m, "z1"))
            else:
                zeta_name = _first_zeta(below)
                if zeta_name is None:
                    raise AssemblyError("epsilon", "no zeta rows in target")
                asm.place("epsilon", block_epsilon(pres), r, tgt[zeta_name])
        elif name.startswith("zeta"):
            k = int(name[4:])
            if i == 2:
                asm.place(name, block_zeta(pres, k), r, tgt_col_lambda1(m, "z2"))
            else:
                zeta_name = _first_zeta(below)
                asm.place(name, block_zeta(pres, k), r, tgt[zeta_name] + 1)
        elif name == "alpha":
            # last six columns over the beta rows
            asm.place("alpha", block_alpha(pres), r, tgt["beta"] - 3)
        elif name == "alpha'":
            asm.place("alpha'", block_alpha_prime(pres), r, tgt["beta"])
        elif name == "beta":
            if i == 2:
                asm.place("beta", block_beta(pres), r, tgt_col_lambda1(m, "v"))
            else:
                asm.place("beta", block_beta(pres), r, tgt["gamma"])
        elif name == "beta'":
            asm.place("beta'", block_beta_prime(pres), r, tgt["gamma'"])
        elif name == "gamma":
            if i == 2:
                asm.place("gamma", block_gamma(pres), r, tgt_col_lambda1(m, "x2"))
            else:
                asm.place("gamma", block_gamma(pres), r, _target_anchor(tgt, "chi2"))
        elif name == "gamma'":
            asm.place("gamma'", block_gamma_prime(pres), r, ncols - 1)
        elif name.startswith("chi"):
            j = int(name[3:])
            if i == 2:
                asm.place(name, block_chi(pres, j), r, tgt_col_lambda1(m, f"x{j + 1}"))
            else:
                asm.place(name, block_chi(pres, j), r, _target_anchor(tgt, f"chi{j + 1}"))
        elif name.startswith("x"):
            poly = pres.gen_poly(name)
            asm.place(name, [[poly]], r, ncols - 1)
        elif name == "top":
            np_ = _sym(pres, [(1, ["n", "p"])])
            row = [[NcPoly.zero()] * 4 + [np_, np_,
                                          _sym(pres, [(-1, ["n", "p"])])]]
            asm.place("top", row, r, 0)
        else:
            raise AssemblyError(name, "unknown block")
        r += h
    return asm.rows


def _first_zeta(blocks: List[Tuple[str, int]]) -> Optional[str]:
    for name, _ in blocks:
        if name.startswith("zeta"):
            return name
    return None


def lambda1_order(m: int) -> List[str]:
    """Coordinate order of P^1: the transpose row of lambda_1.

    The z generators are pulled forward so that the epsilon and zeta blocks
    of lambda_2 sit over consecutive coordinates.
    """
    names = ["n", "p", "q", "r", "s", "t", "u"]
    names += [f"z{i}" for i in range(1, m - 3)]
    names += ["v", "w", "x1", "y1"]
    for i in range(2, m - 1):
        names.append(f"x{i}")
        if i <= m - 3:
            names.append(f"y{i}")
    return names


def tgt_col_lambda1(m: int, name: str) -> int:
    return lambda1_order(m).index(name)


def build_paper_complex_C(m: int, pres: Optional[Presentation] = None,
                          field=None) -> PaperComplex:
    """The complex (P., lambda) of C(m), fully assembled and shape-checked."""
    if pres is None:
        pres = build_C(m, field)
    maps: List[FreeModuleMap] = []
    # lambda_1: column of generators in the declared transpose-row order
    order = lambda1_order(m)
    if len(order) != 3 * m:
        raise AssemblyError("column", f"lambda_1 order lists {len(order)} names")
    col = [[pres.gen_poly(nm)] for nm in order]
    p0 = GradedFreeModule((0,))
    p1 = GradedFreeModule((1,) * (3 * m))
    maps.append(FreeModuleMap(pres, p1, p0, col))
    prev = p1
    for i in range(2, m + 1):
        rows = _assemble_lambda(pres, m, i)
        shift = i if i < m else m + 1
        src = GradedFreeModule((shift,) * len(rows))
        try:
            maps.append(FreeModuleMap(pres, src, prev, rows))
        except ModuleError as e:
            raise AssemblyError(f"lambda_{i}", str(e)) from None
        prev = src
    ranks = [f.source.rank for f in maps]
    expect = [rank_P(m, i) for i in range(1, m + 1)]
    if ranks != expect:
        raise AssemblyError("lambda", f"ranks {ranks} != expected {expect}")
    return PaperComplex("C", m, pres, maps,
                        provenance=f"(P.,lambda) for C({m})")


def rank_P(m: int, i: int) -> int:
    """Declared rank of P^i for C(m)."""
    if i == 0:
        return 1
    if i == 1:
        return 3 * m
    if i == 2:
        return 3 * m + 4
    if i == m - 2:
        return 16
    if i == m - 1:
        return 7
    if i == m:
        return 1
    if 3 <= i <= m - 3:
        return 3 * m + 12 - 3 * i
    raise ValueError(f"no module P^{i} for m={m}")


def shift_P(m: int, i: int) -> int:
    return m + 1 if i == m else i


def build_paper_complex_B(pres: Optional[Presentation] = None,
                          field=None) -> PaperComplex:
    """The complex (R., psi) of B.

    The displayed psi_1 omits y1; the shapes (R^1 = B[-1]^13 and beta's four
    columns) force its presence, so the assembled column includes it.
    """
    if pres is None:
        pres = build_B(field)
    maps: List[FreeModuleMap] = []
    order = B_GENERATORS
    col = [[pres.gen_poly(nm)] for nm in order]
    r0 = GradedFreeModule((0,))
    r1 = GradedFreeModule((1,) * 13)
    maps.append(FreeModuleMap(pres, r1, r0, col))
    # psi_2: block diagonal eta', delta, beta, (gamma' | -gamma')
    asm = _Assembler(pres, 14, 13)
    asm.place("eta'", block_eta_prime(pres), 0, 0)
    asm.place("delta", block_delta(pres), 2, 4)
    asm.place("beta", block_beta(pres), 5, 7)
    gp = block_gamma_prime(pres)
    K = pres.field
    gg = [[gp[i][0], poly_neg(gp[i][0], K)] for i in range(3)]
    asm.place("gamma'|-gamma'", gg, 11, 11)
    r2 = GradedFreeModule((2,) * 14)
    maps.append(FreeModuleMap(pres, r2, r1, asm.rows))
    # psi_3: eta over the delta rows, alpha's tail over beta, beta' over gamma
    asm = _Assembler(pres, 7, 14)
    asm.place("eta", block_eta(pres), 0, 1)
    asm.place("alpha", block_alpha(pres), 1, 2)
    asm.place("beta'", block_beta_prime(pres), 4, 11)
    r3 = GradedFreeModule((3,) * 7)
    maps.append(FreeModuleMap(pres, r3, r2, asm.rows))
    # psi_4 = (0,0,0,0, np, np, -np)
    np_ = _sym(pres, [(1, ["n", "p"])])
    nnp = _sym(pres, [(-1, ["n", "p"])])
    row = [[NcPoly.zero()] * 4 + [np_, np_, nnp]]
    r4 = GradedFreeModule((5,))
    maps.append(FreeModuleMap(pres, r4, r3, row))
    return PaperComplex("B", None, pres, maps, provenance="(R.,psi) for B")


def build_paper_complex(family: str, m: Optional[int] = None,
                        pres: Optional[Presentation] = None,
                        field=None) -> PaperComplex:
    if family == "C":
        if m is None:
            raise ValueError("family C needs m")
        return build_paper_complex_C(m, pres, field)
    if family == "B":
        return build_paper_complex_B(pres, field)
    raise ValueError(f"unknown family {family!r}")


# -- expected invariants -----------------------------------------------------------

def expected_betti_C(m: int) -> Dict[Tuple[int, int], int]:
    """The Betti cells the ranks and shifts of (P., lambda) predict."""
    cells = {(0, 0): 1}
    for i in range(1, m):
        cells[(i, shift_P(m, i))] = rank_P(m, i)
    cells[(m, m + 1)] = 1
    return cells


def expected_betti_B() -> Dict[Tuple[int, int], int]:
    return {(0, 0): 1, (1, 1): 13, (2, 2): 14, (3, 3): 7, (4, 5): 1}


B_HILBERT_DENOMINATOR = [1, -13, 14, -7, 0, 1]  # 1 - 13g + 14g^2 - 7g^3 + g^5


def s3s4_span_dimension(pres: Presentation, gb) -> int:
    """dim of the span of S_3 * S_4 inside A_2 (reported as a structural check)."""
    from . import linalg
    from .counting import normal_words
    from .freealg import multiply

    s3 = ["s", "t", "u"]
    s4 = ["v", "w", "x1", "y1", "z1"]
    words = normal_words(gb, 2)
    pos = {w: i for i, w in enumerate(words)}
    K = pres.field
    rows = []
    for a in s3:
        for b in s4:
            f = gb.normal_form(multiply(pres.gen_poly(a), pres.gen_poly(b), K))
            row = [K.zero] * len(words)
            for w, c in f.terms.items():
                row[pos[w]] = c
            rows.append(row)
    return linalg.rank(rows, K)


def annihilator_suite(pres: Presentation):
    """The annihilator claims as (name, X rows, Y generator rows) triples.

    ann(n)=0, ann(eta)=0, ann(eta')=0, ann(alpha)=0, ann(lambda_m row)=0;
    ann(x2) = <rows of gamma'>; ann(beta) = <rows of alpha> (their
    beta-aligned six columns, i.e. alpha'); ann(delta) = <eta's
    delta-aligned part>; ann(gamma') = <rows of beta'>; ann(beta') =
    <(np, np, -np)>, reading the undefined "lambda_{m+1}" as the lambda_m
    matrix restricted to the beta'-rows.
    """
    npoly = pres.gen_poly("n")
    np_ = _sym(pres, [(1, ["n", "p"])])
    nnp = _sym(pres, [(-1, ["n", "p"])])
    lam_m_row = [[NcPoly.zero()] * 4 + [np_, np_, nnp]]
    eta_delta_part = _matrix(pres, [["n", "n", (-1, ["n"])]])
    return [
        ("ann(n) = 0", [[npoly]], []),
        ("ann(eta) = 0", block_eta(pres), []),
        ("ann(eta') = 0", block_eta_prime(pres), []),
        ("ann(alpha) = 0", block_alpha(pres), []),
        ("ann(lambda_m) = 0", lam_m_row, []),
        ("ann(x2) = <rows gamma'>", [[pres.gen_poly("x2")]],
         block_gamma_prime(pres)),
        ("ann(beta) = <rows alpha>", block_beta(pres), block_alpha_prime(pres)),
        ("ann(delta) = <eta>", block_delta(pres), eta_delta_part),
        ("ann(gamma') = <rows beta'>", block_gamma_prime(pres),
         block_beta_prime(pres)),
        ("ann(beta') = <lambda_m part>", block_beta_prime(pres),
         [[np_, np_, nnp]]),
    ]
