"""Cell modules, the cyclic vector v_f and the annihilator basis A_f."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Mapping

from .coefficients import (
    DELTA,
    ONE,
    ZERO,
    DeltaPoly,
    clear_denominators,
    format_poly,
    kernel_basis,
    rank_evaluations,
    rank_exact,
)
from .diagrams import WalledDiagram, word_to_diagram
from .elements import AlgebraElement
from .normal_form import _basis, _index, enumerate_D, enumerate_SL, enumerate_SR
from .rewriting import parse_bstar, reduce
from .symmetric import (
    GroupElement,
    Partition,
    Tableau,
    annihilator_basis_symmetric,
    apply_to_tableau,
    check_tableau,
    format_partition,
    format_tableau,
    parse_partition,
    partitions,
    perm_to_word,
    sigma_set,
    specht_dim,
    specht_module,
    standard_tableaux,
    word_to_perm,
)
from .words import Context, ShapeError, Word, run


# ------------------------------------------------------------------ labels

@dataclass(frozen=True, order=True)
class ModuleLabel:
    f: int
    lamL: Partition
    lamR: Partition

    def check(self, ctx: Context) -> None:
        if not 0 <= self.f <= min(ctx.r, ctx.s):
            raise ValueError(f"f={self.f} outside 0..{min(ctx.r, ctx.s)}")
        if sum(self.lamL) != ctx.r - self.f or sum(self.lamR) != ctx.s - self.f:
            raise ValueError(f"label {self} does not satisfy |L| = r-f and |R| = s-f")

    def __str__(self) -> str:
        return f"f={self.f} L={format_partition(self.lamL)} R={format_partition(self.lamR)}"


def parse_label(text: str) -> ModuleLabel:
    parts = dict(tok.split("=", 1) for tok in text.split())
    try:
        return ModuleLabel(int(parts["f"]), parse_partition(parts["L"]), parse_partition(parts["R"]))
    except KeyError as exc:
        raise ValueError(f"label must look like 'f=1 L=[1] R=[]', got {text!r}") from exc


def module_labels(ctx: Context) -> list[ModuleLabel]:
    out = []
    for f in range(min(ctx.r, ctx.s) + 1):
        for lamL in partitions(ctx.r - f):
            for lamR in partitions(ctx.s - f):
                out.append(ModuleLabel(f, lamL, lamR))
    return out


def module_dim(label: ModuleLabel, ctx: Context) -> int:
    label.check(ctx)
    f = label.f
    return comb(ctx.r, f) * comb(ctx.s, f) * factorial(f) * specht_dim(label.lamL) * specht_dim(label.lamR)


# ------------------------------------------------------------------ vectors

Matching = tuple[tuple[int, int], ...]


@dataclass(frozen=True, order=True)
class ModuleVector:
    """|l' -> l, tL, tR> with 1-based node numbers; arcs sorted by left end."""

    matching: Matching
    tL: Tableau
    tR: Tableau

    def to_dict(self) -> dict:
        return {
            "matching": [list(p) for p in self.matching],
            "tL": [list(row) for row in self.tL],
            "tR": [list(row) for row in self.tR],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> ModuleVector:
        return cls(
            tuple(sorted((int(a), int(b)) for a, b in data["matching"])),
            tuple(tuple(int(x) for x in row) for row in data["tL"]),
            tuple(tuple(int(x) for x in row) for row in data["tR"]),
        )

    def __str__(self) -> str:
        arcs = ",".join(f"{a}->{b}" for a, b in self.matching)
        return f"|{arcs}; {format_tableau(self.tL)}; {format_tableau(self.tR)}>"


@dataclass(frozen=True)
class ModuleElement:
    terms: Mapping[ModuleVector, DeltaPoly] = field(default_factory=dict)

    @classmethod
    def build(cls, pairs: Iterable[tuple[ModuleVector, DeltaPoly]]) -> ModuleElement:
        acc: dict[ModuleVector, DeltaPoly] = {}
        for v, c in pairs:
            acc[v] = acc.get(v, ZERO) + c
        return cls({v: c for v, c in acc.items() if c})

    @classmethod
    def vector(cls, v: ModuleVector) -> ModuleElement:
        return cls({v: ONE})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: ModuleElement) -> ModuleElement:
        return ModuleElement.build(itertools.chain(self.terms.items(), other.terms.items()))

    def __neg__(self) -> ModuleElement:
        return ModuleElement({v: -c for v, c in self.terms.items()})

    def __sub__(self, other: ModuleElement) -> ModuleElement:
        return self + (-other)

    def scale(self, c: DeltaPoly) -> ModuleElement:
        return ModuleElement.build((v, x * c) for v, x in self.terms.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def to_dict(self) -> list[dict]:
        return [{"coeff": format_poly(c), "vector": v.to_dict()} for v, c in sorted(self.terms.items())]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for v, c in sorted(self.terms.items()):
            coeff = "" if c == ONE else f"({format_poly(c)})*"
            parts.append(f"{coeff}{v}")
        return " + ".join(parts)


def v_f(label: ModuleLabel, ctx: Context) -> ModuleVector:
    label.check(ctx)
    r, f = ctx.r, label.f
    matching = tuple(sorted((r - m + 1, r + m) for m in range(1, f + 1)))
    return ModuleVector(matching, check_tableau(label.lamL), check_tableau(label.lamR))


def module_basis(label: ModuleLabel, ctx: Context) -> list[ModuleVector]:
    label.check(ctx)
    r, s, f = ctx.r, ctx.s, label.f
    out = []
    for lp in itertools.combinations(range(1, r + 1), f):
        for l in itertools.permutations(range(r + 1, r + s + 1), f):
            matching = tuple(sorted(zip(lp, l)))
            for tL in standard_tableaux(label.lamL):
                for tR in standard_tableaux(label.lamR):
                    out.append(ModuleVector(matching, tL, tR))
    out.sort()
    return out


# ------------------------------------------------------------------ action

@dataclass(frozen=True)
class RawAction:
    """Outcome of stacking a diagram under a partial one-row diagram.

    ``piL[k]`` is the new rank (0-based) among free left nodes of the line
    that sat at the k-th free left node; similarly ``piR``.
    """

    loops: int
    matching: Matching
    piL: tuple[int, ...]
    piR: tuple[int, ...]


@lru_cache(maxsize=500_000)
def raw_action(d: WalledDiagram, matching: Matching) -> RawAction | None:
    """None when two propagating lines join into an arc."""
    n, r = d.n, d.r
    P = d.partner
    arc = {}
    for a, b in matching:
        arc[a - 1], arc[b - 1] = b - 1, a - 1
    free_top = [x for x in range(n) if x not in arc]
    visited: set[int] = set()
    new_arcs: list[tuple[int, int]] = []
    line_end: dict[int, int] = {}
    done: set[int] = set()
    for b in range(n, 2 * n):
        if b in done:
            continue
        done.add(b)
        x = P[b]
        if x >= n:
            done.add(x)
            new_arcs.append((b - n, x - n))
            continue
        while True:
            visited.add(x)
            if x not in arc:
                line_end[x] = b - n
                break
            y = arc[x]
            visited.add(y)
            z = P[y]
            if z >= n:
                done.add(z)
                new_arcs.append((b - n, z - n))
                break
            x = z
    if len(line_end) != len(free_top):
        return None
    loops = 0
    for x in range(n):
        if x in visited:
            continue
        loops += 1
        y = x
        while y not in visited:
            visited.add(y)
            z = arc[y]
            visited.add(z)
            y = P[z]
    arc_nodes = {u for pair in new_arcs for u in pair}
    new_free_L = [u for u in range(r) if u not in arc_nodes]
    new_free_R = [u for u in range(r, n) if u not in arc_nodes]
    rankL = {u: k for k, u in enumerate(new_free_L)}
    rankR = {u: k for k, u in enumerate(new_free_R)}
    piL = tuple(rankL[line_end[x]] for x in free_top if x < r)
    piR = tuple(rankR[line_end[x]] for x in free_top if x >= r)
    new_matching = tuple(sorted((min(a, b) + 1, max(a, b) + 1) for a, b in new_arcs))
    return RawAction(loops, new_matching, piL, piR)


@lru_cache(maxsize=None)
def _straighten(lam: Partition, t: Tableau) -> tuple[tuple[Tableau, Fraction], ...]:
    mod = specht_module(lam)
    coords = mod.coords_of_tableau(t)
    return tuple((mod.tableaux[k], c) for k, c in enumerate(coords) if c)


def _shape(t: Tableau) -> Partition:
    return tuple(len(row) for row in t)


def act_diagram(d: WalledDiagram, v: ModuleVector, ctx: Context | None = None) -> ModuleElement:
    raw = raw_action(d, v.matching)
    if raw is None:
        return ModuleElement()
    partsL = _straighten(_shape(v.tL), apply_to_tableau(raw.piL, v.tL))
    partsR = _straighten(_shape(v.tR), apply_to_tableau(raw.piR, v.tR))
    scale = DeltaPoly.monomial(raw.loops)
    return ModuleElement.build(
        (ModuleVector(raw.matching, tL, tR), scale * (cL * cR))
        for tL, cL in partsL
        for tR, cR in partsR
    )


def act_word(w: Word, m: ModuleElement | ModuleVector, ctx: Context) -> ModuleElement:
    if isinstance(m, ModuleVector):
        m = ModuleElement.vector(m)
    e, d = word_to_diagram(tuple(w), ctx)
    scale = DeltaPoly.monomial(e)
    out: list[tuple[ModuleVector, DeltaPoly]] = []
    for v, c in m.terms.items():
        for u, x in act_diagram(d, v).terms.items():
            out.append((u, x * c * scale))
    return ModuleElement.build(out)


def act_element(a: AlgebraElement, m: ModuleElement | ModuleVector, ctx: Context | None = None) -> ModuleElement:
    ctx = ctx or a.ctx
    if isinstance(m, ModuleVector):
        m = ModuleElement.vector(m)
    out: list[tuple[ModuleVector, DeltaPoly]] = []
    for w, c in a.terms.items():
        for u, x in act_word(w, m, ctx).terms.items():
            out.append((u, x * c))
    return ModuleElement.build(out)


def annihilates(a: AlgebraElement, label: ModuleLabel, ctx: Context) -> bool:
    return not act_element(a, v_f(label, ctx), ctx)


# ------------------------------------------------------------------ word families

def _nf(w: Word, ctx: Context) -> Word:
    d, out = reduce(tuple(w), ctx)
    if d:
        raise ShapeError(f"{w} is not a permutation word")
    return out


def _unique(words: Iterable[Word]) -> list[Word]:
    seen: dict[Word, None] = {}
    for w in words:
        seen.setdefault(w, None)
    return list(seen)


def shuffles_L(ctx: Context, f: int) -> list[Word]:
    m = ctx.r - f
    out = []
    for code in itertools.combinations_with_replacement(range(-1, f), m):
        out.append(tuple(a for k, i in enumerate(code, start=1) for a in run(k + i, k)))
    return out


def shuffles_R(ctx: Context, f: int) -> list[Word]:
    r = ctx.r
    out = []
    # run with bottom r+m has code c_m, weakly increasing in m, -1 <= c_m < s-f
    for code in itertools.combinations_with_replacement(range(-1, ctx.s - f), f):
        out.append(tuple(a for m, c in enumerate(code, start=1) for a in run(r + m + c, r + m)))
    return out


def block_SL(ctx: Context, f: int) -> list[Word]:
    lo = ctx.r - f + 1
    return [w for w in enumerate_SL(ctx.r) if all(lo <= a for a in w)]


def block_SR(ctx: Context, f: int) -> list[Word]:
    hi = ctx.r + f - 1
    return [w for w in enumerate_SR(ctx.s, ctx) if all(a <= hi for a in w)]


def theta_set(ctx: Context, f: int) -> list[Word]:
    return _unique(
        _nf(a + b + c, ctx)
        for a in shuffles_L(ctx, f)
        for b in block_SL(ctx, f)
        for c in shuffles_R(ctx, f)
    )


def sigma_words_L(label: ModuleLabel) -> list[Word]:
    return [perm_to_word(p) for p in sigma_set(label.lamL)]


def sigma_words_R(label: ModuleLabel, ctx: Context) -> list[Word]:
    return [perm_to_word(p, offset=ctx.r + label.f) for p in sigma_set(label.lamR)]


def sigma_words(label: ModuleLabel, ctx: Context) -> list[Word]:
    return [a + b for a in sigma_words_L(label) for b in sigma_words_R(label, ctx)]


def X_set(label: ModuleLabel, ctx: Context) -> list[Word]:
    label.check(ctx)
    return _unique(_nf(th + sg, ctx) for th in theta_set(ctx, label.f) for sg in sigma_words(label, ctx))


def varpi(x: Word, ctx: Context) -> Word:
    """Replace the last run [r+i_f, r-j_f] of a D-word by [r+i_f, r+1]."""
    b = parse_bstar(tuple(x), ctx)
    if b.left or b.right or not b.runs:
        raise ShapeError(f"{x} is not a D-word")
    r = ctx.r
    runs = list(b.runs)
    out: list[int] = []
    for i, j in runs[:-1]:
        out += run(r + i, r - j)
    out += run(r + runs[-1][0], r + 1)
    return tuple(out)


def Dbar(ctx: Context, t: int) -> list[Word]:
    return _unique(varpi(x, ctx) for x in enumerate_D(ctx, t))


def Bbar(ctx: Context, t: int) -> list[Word]:
    return [g + y for g in enumerate_SL(ctx.r) for y in Dbar(ctx, t)]


def star(y: Word, k: int, ctx: Context, t: int | None = None) -> Word | None:
    """y * [r, r-k] for y in the barred D-set; None stands for the empty result.

    The grade t defaults to the number of s_r letters plus one. At t = 1 the
    guard is vacuous.
    """
    r = ctx.r
    if not 0 <= k < r:
        raise ShapeError(f"run [r, r-{k}] leaves the generator range")
    if t is None:
        t = y.count(r) + 1
    if t > 1:
        b = parse_bstar(tuple(y), ctx)
        if b.left or len(b.runs) != t - 1:
            raise ShapeError(f"{y} is not a barred D-word of grade {t}")
        if b.runs[-1][1] <= k:
            return None
    return tuple(y) + run(r, r - k)


def wpp(ctx: Context, i: int) -> list[Word]:
    r, s = ctx.r, ctx.s
    ranges = [range(0, s - m) for m in range(1, i + 1)]
    return [
        tuple(a for m, k in enumerate(ks, start=1) for a in run(r + m + k, r + m))
        for ks in itertools.product(*ranges)
    ]


def _right_product(label: ModuleLabel, ctx: Context) -> list[Word]:
    return _unique(
        _nf(a + b + c, ctx)
        for a in shuffles_R(ctx, label.f)
        for b in block_SR(ctx, label.f)
        for c in sigma_words_R(label, ctx)
    )


def upsilon(ctx: Context, f: int, k: int, label: ModuleLabel) -> list[Word]:
    """Elements of Sh^R S^R_f Sigma^R fixing the right nodes r+1..r+k-1."""
    if label.f != f:
        raise ValueError("label grade does not match f")
    r, n = ctx.r, ctx.n
    out = []
    for w in _right_product(label, ctx):
        p = word_to_perm(w, n)
        if all(p[x] == x for x in range(r, min(n, r + k - 1))):
            out.append(w)
    return out


# ------------------------------------------------------------------ annihilator

def _group_word_element(g: GroupElement, offset: int) -> list[tuple[Word, Fraction]]:
    return [(perm_to_word(p, offset), c) for p, c in g.items()]


def _companion_perm(lead: Word, label: ModuleLabel, ctx: Context) -> tuple[int, Word] | None:
    """A permutation word rho with lead v_f = delta^e rho v_f, or None if lead v_f = 0."""
    e, d = word_to_diagram(lead, ctx)
    vf = v_f(label, ctx)
    raw = raw_action(d, vf.matching)
    if raw is None:
        return None
    r, s, f = ctx.r, ctx.s, label.f
    n = ctx.n
    rho = [0] * n
    arcs = sorted(raw.matching, key=lambda p: -p[0])
    for m, (a, b) in enumerate(arcs, start=1):
        rho[r - m] = a - 1
        rho[r + m - 1] = b - 1
    used = {u for pair in raw.matching for u in pair}
    freeL = [u for u in range(1, r + 1) if u not in used]
    freeR = [u for u in range(r + 1, n + 1) if u not in used]
    for k in range(r - f):
        rho[k] = freeL[raw.piL[k]] - 1
    for k in range(s - f):
        rho[r + f + k] = freeR[raw.piR[k]] - 1
    return e + raw.loops, _nf(perm_to_word(tuple(rho)), ctx)


@dataclass(frozen=True)
class Part1Entry:
    family: str
    t: int
    lead: Word
    element: AlgebraElement
    printed_companion: bool


def _part1_entries(label: ModuleLabel, ctx: Context, printed: bool) -> list[Part1Entry]:
    r, s, f = ctx.r, ctx.s, label.f
    out: list[Part1Entry] = []
    ups = {k: upsilon(ctx, f, k, label) for k in range(1, f + 3)}
    SL = enumerate_SL(r)

    def emit(family: str, t: int, g: Word, y: Word, k: int, ws: list[Word], zs: list[Word], coeff):
        yk = star(y, k, ctx, t)
        if yk is None:
            return
        for w in ws:
            for z in zs:
                lead = _nf(g + yk + w + z, ctx)
                pairs = [(lead, ONE)]
                if coeff is not None:
                    pairs.append((g + y + z, -coeff))
                elem = AlgebraElement.build(ctx, pairs)
                used_printed = True
                if not printed and not annihilates(elem, label, ctx):
                    used_printed = False
                    comp = _companion_perm(lead, label, ctx)
                    pairs = [(lead, ONE)]
                    if comp is not None:
                        pairs.append((comp[1], -DeltaPoly.monomial(comp[0])))
                    elem = AlgebraElement.build(ctx, pairs)
                out.append(Part1Entry(family, t, lead, elem, used_printed))

    for t in range(1, min(r, s) + 1):
        for y in Dbar(ctx, t):
            for g in SL:
                for i in range(0, f):
                    emit("loop", t, g, y, i, wpp(ctx, i), ups[i + 2], DELTA)
                for i in range(0, min(f, s - 1)):
                    emit("loop-right", t, g, y, i, wpp(ctx, i + 1), ups[i + 2], ONE)
                for i in range(1, min(f, r - 1) + 1):
                    for j in range(i + 1, r + 1):
                        emit("left-run", t, g, y, r - j + i, wpp(ctx, i - 1), ups[i + 1], ONE)
                ks = [f] if printed else list(range(f, r))
                for k in ks:
                    if k < r:
                        emit("zero", t, g, y, k, wpp(ctx, f), ups[f + 1], None)
    return out


def annihilator_part1(label: ModuleLabel, ctx: Context, printed: bool = False) -> list[AlgebraElement]:
    """Loop families: two-term elements whose leading word carries t letters s_r.

    With ``printed=True`` the families are built literally: the companion is
    delta*g*y*z or g*y*z as written and the zero family uses k = f only.
    Otherwise the zero family runs over k = f..r-1 and any companion that
    fails to annihilate is replaced by the permutation reproducing the action.
    """
    label.check(ctx)
    return [e.element for e in _part1_entries(label, ctx, printed)]


def part1_entries(label: ModuleLabel, ctx: Context, printed: bool = False) -> list[Part1Entry]:
    label.check(ctx)
    return _part1_entries(label, ctx, printed)


def expected_leading_words(label: ModuleLabel, ctx: Context) -> set[Word]:
    """The union over t of S^L_r D^(t) Upsilon^1_f."""
    ups = upsilon(ctx, label.f, 1, label)
    out = set()
    for t in range(1, min(ctx.r, ctx.s) + 1):
        for g in enumerate_SL(ctx.r):
            for x in enumerate_D(ctx, t):
                for z in ups:
                    out.add(g + x + z)
    return out


def annihilator_part2(label: ModuleLabel, ctx: Context, printed: bool = False) -> list[AlgebraElement]:
    """Theta_f x_c Sigma_f where one letter s_{r+i} of x becomes s_{r+i} - s_{r-i}.

    The replaced letter is the rightmost one (it acts first on Sigma_f v_f);
    ``printed=True`` replaces the leftmost letter instead.
    """
    label.check(ctx)
    r, f = ctx.r, label.f
    out = []
    thetas = theta_set(ctx, f)
    sigmas = sigma_words(label, ctx)
    for x in block_SR(ctx, f):
        if not x:
            continue
        if printed:
            a, head, tail = x[0], (), x[1:]
        else:
            a, head, tail = x[-1], x[:-1], ()
        i = a - r
        for th in thetas:
            for sg in sigmas:
                out.append(AlgebraElement.build(ctx, [
                    (th + head + (r + i,) + tail + sg, ONE),
                    (th + head + (r - i,) + tail + sg, -ONE),
                ]))
    return out


def annihilator_part3(label: ModuleLabel, ctx: Context, printed: bool = False) -> list[AlgebraElement]:
    """Elements carrying a symmetric-group annihilator of a check tableau.

    The right-annihilator family runs over every grade t >= 1 (``printed``
    keeps the single grade t = f), followed by the grade-zero family.
    """
    label.check(ctx)
    r, s, f = ctx.r, ctx.s, label.f
    offR = r + f
    gL = [_group_word_element(g, 0) for g in annihilator_basis_symmetric(label.lamL)]
    gR = [_group_word_element(g, offR) for g in annihilator_basis_symmetric(label.lamR)]
    sigL = sigma_words_L(label)
    sigR = sigma_words_R(label, ctx)
    SRf = block_SR(ctx, f)
    out = []
    grades = [f] if printed else list(range(1, min(r, s) + 1))
    if gR:
        for t in grades:
            if t == 0:
                continue
            for g in enumerate_SL(r):
                for x in enumerate_D(ctx, t):
                    for h in shuffles_R(ctx, f):
                        for b in SRf:
                            pre = g + x + h + b
                            for elem in gR:
                                out.append(AlgebraElement.build(ctx, [(pre + w, c) for w, c in elem]))
    for th in theta_set(ctx, f):
        for b in SRf:
            pre = th + b
            for elem in gL:
                for sr in sigR:
                    out.append(AlgebraElement.build(ctx, [(pre + w + sr, c) for w, c in elem]))
            for sl in sigL:
                for elem in gR:
                    out.append(AlgebraElement.build(ctx, [(pre + sl + w, c) for w, c in elem]))
            for e1 in gL:
                for e2 in gR:
                    out.append(AlgebraElement.build(
                        ctx, [(pre + w1 + w2, c1 * c2) for w1, c1 in e1 for w2, c2 in e2]))
    return out


def annihilator(label: ModuleLabel, ctx: Context, printed: bool = False) -> list[AlgebraElement]:
    """A_f: parts 1 to 3 with duplicates removed (first occurrence wins)."""
    seen: dict[AlgebraElement, None] = {}
    for part in (annihilator_part1, annihilator_part2, annihilator_part3):
        for a in part(label, ctx, printed):
            if a:
                seen.setdefault(a, None)
    return list(seen)


# ------------------------------------------------------------------ verification

def element_matrix(elements: Iterable[AlgebraElement], ctx: Context) -> list[list[DeltaPoly]]:
    index = {nw.word: k for k, nw in enumerate(_basis(ctx))}
    rows = []
    for a in elements:
        row = [ZERO] * len(index)
        for w, c in a.terms.items():
            row[index[w]] = c
        rows.append(row)
    return rows


def orbit_matrix(words: Iterable[Word], label: ModuleLabel, ctx: Context) -> list[list[DeltaPoly]]:
    basis = module_basis(label, ctx)
    index = {v: k for k, v in enumerate(basis)}
    vf = v_f(label, ctx)
    rows = []
    for w in words:
        row = [ZERO] * len(basis)
        for v, c in act_word(w, vf, ctx).terms.items():
            row[index[v]] = c
        rows.append(row)
    return rows


def action_matrix(label: ModuleLabel, ctx: Context) -> list[list[DeltaPoly]]:
    """Column b holds b v_f in the module basis, for every basis word b."""
    rows = orbit_matrix([nw.word for nw in _basis(ctx)], label, ctx)
    return [list(col) for col in zip(*rows)] if rows else []


@dataclass
class TheoremReport:
    label: ModuleLabel
    size: int
    n_A: int
    n_X: int
    dim: int
    rank: int
    ranks: list[int]
    exact: bool
    orbit_rank: int
    failures: list[str]

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = (f"{status} {self.label} rank={self.rank} |A|={self.n_A} |X|={self.n_X} "
                f"dim={self.dim} orbit_rank={self.orbit_rank}")
        if self.failures:
            text += " (" + "; ".join(self.failures) + ")"
        return text

    def to_dict(self) -> dict:
        return {
            "label": str(self.label), "passed": self.passed, "size": self.size,
            "n_A": self.n_A, "n_X": self.n_X, "dim": self.dim, "rank": self.rank,
            "ranks": self.ranks, "exact": self.exact, "orbit_rank": self.orbit_rank,
            "failures": self.failures,
        }


def verify_theorem1(label: ModuleLabel, ctx: Context, exact: bool | None = None,
                    trials: int = 3) -> TheoremReport:
    """Check that A_f annihilates v_f and that A_f together with X_f spans the algebra."""
    label.check(ctx)
    if exact is None:
        exact = max(ctx.r, ctx.s) <= 2
    size = factorial(ctx.n)
    dim = module_dim(label, ctx)
    A = annihilator(label, ctx)
    X = X_set(label, ctx)
    failures = []
    bad = sum(1 for a in A if not annihilates(a, label, ctx))
    if bad:
        failures.append(f"{bad} elements of A_f do not annihilate v_f")
    if len(A) + len(X) != size:
        failures.append(f"#A_f + #X_f = {len(A) + len(X)} != {size}")
    if len(X) != dim:
        failures.append(f"#X_f = {len(X)} != dim {dim}")
    M = element_matrix(A + [AlgebraElement.word(ctx, x) for x in X], ctx)
    if exact:
        rank = rank_exact(M)
        ranks = [rank]
    else:
        ranks = rank_evaluations(M, trials=trials)
        rank = min(ranks)
    if rank != size or any(x != size for x in ranks):
        failures.append(f"rank {ranks} != {size}")
    orbit_rank = rank_exact(orbit_matrix(X, label, ctx))
    if orbit_rank != dim:
        failures.append(f"X_f v_f has rank {orbit_rank} != {dim}")
    return TheoremReport(label, size, len(A), len(X), dim, rank, ranks, exact, orbit_rank, failures)


def annihilator_equals_kernel(label: ModuleLabel, ctx: Context) -> bool:
    """span(A_f) equals the kernel of a -> a v_f, computed with exact elimination."""
    A = element_matrix(annihilator(label, ctx), ctx)
    kernel = kernel_basis(action_matrix(label, ctx), ncols=factorial(ctx.n))
    rank_A = rank_exact(A)
    if rank_A != len(kernel):
        return False
    K = [clear_denominators(v) for v in kernel]
    return rank_exact(A + K) == rank_A
