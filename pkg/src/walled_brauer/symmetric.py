"""Specht modules of the symmetric group via polytabloids.

Permutations are 0-based image tuples: ``perm[x]`` is the image of point
``x``. Tableau entries are 1-based labels, so a permutation acts on a
tableau by replacing each entry ``k`` with ``perm[k-1] + 1``. Group algebra
elements are dicts from permutations to Fractions.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

Partition = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]
Perm = tuple[int, ...]
GroupElement = dict[Perm, Fraction]


def partitions(n: int) -> list[Partition]:
    """Partitions of n in decreasing lexicographic order."""
    out: list[Partition] = []

    def rec(rem: int, cap: int, acc: list[int]) -> None:
        if rem == 0:
            out.append(tuple(acc))
            return
        for part in range(min(rem, cap), 0, -1):
            rec(rem - part, part, acc + [part])

    rec(n, n, [])
    return out


def conjugate(lam: Partition) -> Partition:
    return tuple(sum(1 for part in lam if part > c) for c in range(lam[0])) if lam else ()


def check_tableau(lam: Partition) -> Tableau:
    """Fill the diagram column by column, top to bottom, left to right."""
    rows = [[0] * part for part in lam]
    k = 1
    for c, height in enumerate(conjugate(lam)):
        for i in range(height):
            rows[i][c] = k
            k += 1
    return tuple(tuple(row) for row in rows)


def column_reading(t: Tableau) -> tuple[int, ...]:
    cols = max((len(row) for row in t), default=0)
    return tuple(row[c] for c in range(cols) for row in t if c < len(row))


@lru_cache(maxsize=None)
def standard_tableaux(lam: Partition) -> tuple[Tableau, ...]:
    """All standard tableaux, ordered by column reading word (check tableau first)."""
    n = sum(lam)
    out: list[Tableau] = []
    rows: list[list[int]] = [[] for _ in lam]

    def rec(k: int) -> None:
        if k > n:
            out.append(tuple(tuple(row) for row in rows))
            return
        for i, part in enumerate(lam):
            if len(rows[i]) < part and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                rec(k + 1)
                rows[i].pop()

    rec(1)
    out.sort(key=column_reading)
    return tuple(out)


def hook_length_dim(lam: Partition) -> int:
    conj = conjugate(lam)
    hooks = prod(lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i]))
    return factorial(sum(lam)) // hooks


def specht_dim(lam: Partition) -> int:
    return len(standard_tableaux(lam))


def is_standard(t: Tableau) -> bool:
    for i, row in enumerate(t):
        if any(row[c] >= row[c + 1] for c in range(len(row) - 1)):
            return False
        if i and any(t[i - 1][c] >= row[c] for c in range(len(row))):
            return False
    return True


def apply_to_tableau(perm: Perm, t: Tableau) -> Tableau:
    return tuple(tuple(perm[k - 1] + 1 for k in row) for row in t)


def compose(p: Perm, q: Perm) -> Perm:
    """The product p*q (apply q first)."""
    return tuple(p[q[x]] for x in range(len(q)))


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for x, y in enumerate(p):
        out[y] = x
    return tuple(out)


def sign(p: Perm) -> int:
    seen = [False] * len(p)
    s = 1
    for x in range(len(p)):
        if not seen[x]:
            length = 0
            y = x
            while not seen[y]:
                seen[y] = True
                y = p[y]
                length += 1
            if length % 2 == 0:
                s = -s
    return s


def identity(n: int) -> Perm:
    return tuple(range(n))


def perm_to_word(p: Perm, offset: int = 0) -> tuple[int, ...]:
    """A reduced word a_1...a_m with p = s_{a_1} o ... o s_{a_m}.

    Generator s_i swaps points i-1 and i (0-based); ``offset`` shifts indices.
    """
    p = list(p)
    word: list[int] = []
    while True:
        i = next((i for i in range(len(p) - 1) if p[i] > p[i + 1]), None)
        if i is None:
            break
        p[i], p[i + 1] = p[i + 1], p[i]
        word.append(i + 1 + offset)
    return tuple(reversed(word))


def word_to_perm(word: tuple[int, ...], n: int, offset: int = 0) -> Perm:
    p = list(range(n))
    for a in reversed(word):
        i = a - offset - 1
        # left-multiply by the transposition (i, i+1)
        p = [i + 1 if y == i else i if y == i + 1 else y for y in p]
    return tuple(p)


def _tabloid(t: Tableau) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(sorted(row)) for row in t)


def _solve_inverse(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(mat)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(k for k in range(col, n) if aug[k][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for k in range(n):
            if k != col and aug[k][col]:
                a = aug[k][col]
                aug[k] = [x - a * y for x, y in zip(aug[k], aug[col])]
    return [row[n:] for row in aug]


class SpechtModule:
    """The Specht module S(lam) with its standard polytabloid basis."""

    def __init__(self, lam: Partition) -> None:
        self.lam = tuple(lam)
        self.n = sum(self.lam)
        self.tableaux = standard_tableaux(self.lam)
        self.dim = len(self.tableaux)
        self.index = {t: k for k, t in enumerate(self.tableaux)}
        self._col_group = self._column_group(check_tableau(self.lam))
        self._std_tabloids = [_tabloid(t) for t in self.tableaux]
        self._std_pos = {tb: k for k, tb in enumerate(self._std_tabloids)}
        mat = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for c, t in enumerate(self.tableaux):
            for tb, coeff in self.polytabloid(t).items():
                k = self._std_pos.get(tb)
                if k is not None:
                    mat[k][c] += coeff
        self._inv = _solve_inverse(mat)
        self._rep_cache: dict[Perm, list[list[Fraction]]] = {}

    def _column_group(self, t: Tableau) -> list[tuple[Perm, int]]:
        # permutations of entry positions within columns, as maps on box order
        cols = conjugate(self.lam)
        per_col = []
        for c, height in enumerate(cols):
            per_col.append(list(itertools.permutations(range(height))))
        out = []
        for choice in itertools.product(*per_col):
            sgn = 1
            for perm in choice:
                sgn *= sign(perm)
            out.append((choice, sgn))
        return out

    def polytabloid(self, t: Tableau) -> dict[tuple, int]:
        """e_t as a map tabloid -> integer coefficient."""
        cols = conjugate(self.lam)
        out: dict[tuple, int] = {}
        for choice, sgn in self._col_group:
            rows = [list(row) for row in t]
            for c, perm in enumerate(choice):
                entries = [t[i][c] for i in range(cols[c])]
                for i in range(cols[c]):
                    rows[i][c] = entries[perm[i]]
            key = tuple(tuple(sorted(row)) for row in rows)
            out[key] = out.get(key, 0) + sgn
        return {k: v for k, v in out.items() if v}

    def coords_of_tableau(self, t: Tableau) -> list[Fraction]:
        """Coordinates of the polytabloid e_t (t any filling) in the standard basis."""
        if t in self.index:
            v = [Fraction(0)] * self.dim
            v[self.index[t]] = Fraction(1)
            return v
        rhs = [Fraction(0)] * self.dim
        for tb, coeff in self.polytabloid(t).items():
            k = self._std_pos.get(tb)
            if k is not None:
                rhs[k] += coeff
        return [sum((a * b for a, b in zip(row, rhs)), Fraction(0)) for row in self._inv]

    def rep_matrix(self, perm: Perm) -> list[list[Fraction]]:
        """Column c holds the coordinates of perm * e_{t_c}."""
        cached = self._rep_cache.get(perm)
        if cached is None:
            cols = [self.coords_of_tableau(apply_to_tableau(perm, t)) for t in self.tableaux]
            cached = [[cols[c][k] for c in range(self.dim)] for k in range(self.dim)]
            self._rep_cache[perm] = cached
        return cached

    def act_perm(self, perm: Perm, v: list[Fraction]) -> list[Fraction]:
        m = self.rep_matrix(tuple(perm))
        return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in m]

    def act_group_element(self, g: GroupElement, v: list[Fraction]) -> list[Fraction]:
        out = [Fraction(0)] * self.dim
        for perm, c in g.items():
            w = self.act_perm(perm, v)
            out = [x + c * y for x, y in zip(out, w)]
        return out


@lru_cache(maxsize=None)
def specht_module(lam: Partition) -> SpechtModule:
    return SpechtModule(tuple(lam))


def act_perm(perm: Perm, v: list[Fraction], lam: Partition) -> list[Fraction]:
    return specht_module(tuple(lam)).act_perm(tuple(perm), v)


def basis_vector(lam: Partition, t: Tableau) -> list[Fraction]:
    mod = specht_module(tuple(lam))
    v = [Fraction(0)] * mod.dim
    v[mod.index[t]] = Fraction(1)
    return v


def sigma_set(lam: Partition) -> list[Perm]:
    """For each standard tableau t, the permutation carrying check_tableau(lam) to t."""
    base = check_tableau(lam)
    n = sum(lam)
    out = []
    for t in standard_tableaux(tuple(lam)):
        p = [0] * n
        for row_b, row_t in zip(base, t):
            for a, b in zip(row_b, row_t):
                p[a - 1] = b - 1
        out.append(tuple(p))
    return out


# ------------------------------------------------ group algebra annihilator

@lru_cache(maxsize=None)
def _annihilator_echelon(lam: Partition) -> tuple[tuple[Perm, ...], tuple[int, ...], tuple]:
    """RREF data of the map g -> g * e_check over the group basis.

    Returns (permutations in column order, pivot columns, reduced rows).
    """
    n = sum(lam)
    mod = specht_module(lam)
    perms = tuple(itertools.permutations(range(n)))
    base = check_tableau(lam)
    cols = [mod.coords_of_tableau(apply_to_tableau(p, base)) for p in perms]
    rows = [[cols[c][k] for c in range(len(perms))] for k in range(mod.dim)]
    pivots: list[int] = []
    rank = 0
    for col in range(len(perms)):
        piv = next((k for k in range(rank, len(rows)) if rows[k][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for k in range(len(rows)):
            if k != rank and rows[k][col]:
                a = rows[k][col]
                rows[k] = [x - a * y for x, y in zip(rows[k], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return perms, tuple(pivots), tuple(tuple(row) for row in rows[:rank])


def annihilator_basis_symmetric(lam: Partition) -> list[GroupElement]:
    """Basis of {g in Q[S_n] : g e_check = 0} from the reduced echelon form.

    One element per non-pivot permutation p: p minus its pivot expansion.
    """
    perms, pivots, rows = _annihilator_echelon(tuple(lam))
    pivot_set = set(pivots)
    out = []
    for col, perm in enumerate(perms):
        if col in pivot_set:
            continue
        g: GroupElement = {perm: Fraction(1)}
        for k, pc in enumerate(pivots):
            if rows[k][col]:
                g[perms[pc]] = -rows[k][col]
        out.append(g)
    return out


def annihilates_check(g: GroupElement, lam: Partition) -> bool:
    mod = specht_module(tuple(lam))
    base = check_tableau(lam)
    v = [Fraction(0)] * mod.dim
    for perm, c in g.items():
        w = mod.coords_of_tableau(apply_to_tableau(perm, base))
        v = [x + c * y for x, y in zip(v, w)]
    return not any(v)


def in_annihilator_span(g: GroupElement, lam: Partition) -> bool:
    """Exact membership of g in the span of annihilator_basis_symmetric(lam)."""
    perms, pivots, _ = _annihilator_echelon(tuple(lam))
    pivot_set = set(pivots)
    basis = annihilator_basis_symmetric(lam)
    residual = dict(g)
    free_cols = [c for c in range(len(perms)) if c not in pivot_set]
    for col, b in zip(free_cols, basis):
        c = residual.get(perms[col], Fraction(0))
        if c:
            for perm, x in b.items():
                residual[perm] = residual.get(perm, Fraction(0)) - c * x
    return not any(residual.values())


def column_transposition_elements(lam: Partition) -> list[GroupElement]:
    """1 + tau for every transposition tau of two entries in a column of the check tableau."""
    n = sum(lam)
    base = check_tableau(lam)
    out = []
    for c in range(len(base[0]) if base else 0):
        col = [row[c] for row in base if c < len(row)]
        for a, b in itertools.combinations(col, 2):
            tau = list(range(n))
            tau[a - 1], tau[b - 1] = b - 1, a - 1
            out.append({identity(n): Fraction(1), tuple(tau): Fraction(1)})
    return out


def garnir_elements(lam: Partition) -> list[GroupElement]:
    """Garnir elements of the check tableau for every adjacent column pair and row.

    For columns c, c+1 and row i, A is the part of column c from row i down
    and B the part of column c+1 from the top to row i; the element is the
    signed sum over the shuffles of A and B.
    """
    n = sum(lam)
    base = check_tableau(lam)
    conj = conjugate(lam)
    out = []
    for c in range(len(conj) - 1):
        for i in range(conj[c + 1]):
            A = [base[k][c] for k in range(i, conj[c])]
            B = [base[k][c + 1] for k in range(0, i + 1)]
            pool = sorted(A + B)
            g: GroupElement = {}
            for chosen in itertools.combinations(pool, len(A)):
                rest = [x for x in pool if x not in chosen]
                p = list(range(n))
                for src, dst in zip(A, chosen):
                    p[src - 1] = dst - 1
                for src, dst in zip(B, rest):
                    p[src - 1] = dst - 1
                perm = tuple(p)
                g[perm] = g.get(perm, Fraction(0)) + sign(perm)
            out.append({k: v for k, v in g.items() if v})
    return out


def format_partition(lam: Partition) -> str:
    return "[" + ",".join(str(x) for x in lam) + "]"


def format_tableau(t: Tableau) -> str:
    return "[" + ",".join("[" + ",".join(str(x) for x in row) + "]" for row in t) + "]"


def parse_partition(text: str) -> Partition:
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"partition must look like [3,1], got {text!r}")
    inner = body[1:-1].strip()
    lam = tuple(int(x) for x in inner.split(",")) if inner else ()
    if any(x <= 0 for x in lam) or any(lam[k] < lam[k + 1] for k in range(len(lam) - 1)):
        raise ValueError(f"not a partition: {text!r}")
    return lam
