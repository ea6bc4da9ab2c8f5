"""The lattice H = Z^{2g} with its symplectic intersection form.

Vectors are plain tuples of ints in the order (a_1..a_g, b_1..b_g), so
``A_i`` has a 1 in slot ``i - 1`` and ``B_i`` a 1 in slot ``g + i - 1``.
Tuples compare lexicographically, which is the order used for every
observable listing.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

Vector = tuple  # tuple[int, ...] of even length


class GenusMismatch(ValueError):
    pass


@dataclass(frozen=True)
class GenusConfig:
    g: int

    def __post_init__(self):
        if not isinstance(self.g, int) or self.g < 1:
            raise ValueError(f"genus must be a positive integer, got {self.g!r}")

    @property
    def rank(self) -> int:
        return 2 * self.g


def genus_of(x: Sequence[int]) -> int:
    n = len(x)
    if n == 0 or n % 2:
        raise ValueError(f"lattice vector must have positive even length, got {n}")
    return n // 2


def check_same_genus(*vs: Sequence[int]) -> int:
    g = None
    for v in vs:
        h = genus_of(v)
        if g is None:
            g = h
        elif h != g:
            raise GenusMismatch(f"genus mismatch: {g} vs {h}")
    return g


def zero(g: int) -> Vector:
    return (0,) * (2 * g)


def basis_a(g: int, i: int) -> Vector:
    """A_i for 1 <= i <= g."""
    if not 1 <= i <= g:
        raise IndexError(i)
    v = [0] * (2 * g)
    v[i - 1] = 1
    return tuple(v)


def basis_b(g: int, i: int) -> Vector:
    """B_i for 1 <= i <= g."""
    if not 1 <= i <= g:
        raise IndexError(i)
    v = [0] * (2 * g)
    v[g + i - 1] = 1
    return tuple(v)


def add(*vs: Sequence[int]) -> Vector:
    check_same_genus(*vs)
    return tuple(map(sum, zip(*vs)))


def neg(x: Sequence[int]) -> Vector:
    return tuple(-c for c in x)


def scale(c: int, x: Sequence[int]) -> Vector:
    return tuple(c * v for v in x)


def intersection(x: Sequence[int], y: Sequence[int]) -> int:
    """<x, y> = sum_i a_i(x) b_i(y) - b_i(x) a_i(y)."""
    g = check_same_genus(x, y)
    return sum(x[i] * y[g + i] - x[g + i] * y[i] for i in range(g))


def is_primitive(x: Sequence[int]) -> bool:
    # gcd of the zero vector is 0, so 0 is not primitive
    return math.gcd(*x) == 1


# --- integer linear algebra -------------------------------------------------

def hermite_normal_form(rows: Iterable[Sequence[int]], ncols: int) -> list[list[int]]:
    """Row-style HNF of the integer matrix with the given rows.

    Columns are processed left to right; within a column the rows below the
    current pivot are combined by Euclid's algorithm until one nonzero entry
    remains, which is made positive, and entries above it are reduced into
    [0, pivot). Zero rows are dropped. The result is unique for the row
    lattice, so the output is deterministic.
    """
    m = [list(r) for r in rows]
    for r in m:
        if len(r) != ncols:
            raise ValueError("ragged matrix")
    pivot_row = 0
    for col in range(ncols):
        if pivot_row >= len(m):
            break
        while True:
            nz = [i for i in range(pivot_row, len(m)) if m[i][col] != 0]
            if not nz:
                break
            i_min = min(nz, key=lambda i: abs(m[i][col]))
            m[pivot_row], m[i_min] = m[i_min], m[pivot_row]
            p = m[pivot_row]
            done = True
            for i in range(pivot_row + 1, len(m)):
                if m[i][col]:
                    q = m[i][col] // p[col]
                    m[i] = [a - q * b for a, b in zip(m[i], p)]
                    if m[i][col]:
                        done = False
            if done:
                break
        if m[pivot_row][col] == 0:
            continue
        if m[pivot_row][col] < 0:
            m[pivot_row] = [-a for a in m[pivot_row]]
        p = m[pivot_row]
        for i in range(pivot_row):
            q = m[i][col] // p[col]
            if q:
                m[i] = [a - q * b for a, b in zip(m[i], p)]
        pivot_row += 1
    return [r for r in m if any(r)]


def hnf_diagonal(vs: Iterable[Sequence[int]], g: int) -> list[int]:
    """Pivot entries of the HNF of the rows ``vs`` (length = rank)."""
    h = hermite_normal_form(vs, 2 * g)
    return [next(a for a in r if a) for r in h]


def z_spans(vs: Iterable[Sequence[int]], cfg: GenusConfig) -> bool:
    vs = list(vs)
    for v in vs:
        if len(v) != cfg.rank:
            raise GenusMismatch(f"vector {v} does not have length {cfg.rank}")
    diag = hnf_diagonal(vs, cfg.g)
    return len(diag) == cfg.rank and all(d == 1 for d in diag)


def determinant(rows: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by fraction-free Bareiss elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("matrix is not square")
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1] if n else 1


def is_z_basis(vs: Sequence[Sequence[int]], cfg: GenusConfig) -> bool:
    if len(vs) != cfg.rank or any(len(v) != cfg.rank for v in vs):
        return False
    return abs(determinant(vs)) == 1


def monoid_member(x: Sequence[int], S: Iterable[Sequence[int]],
                  bound: int) -> Optional[list[Vector]]:
    """Look for x as a sum of at most ``bound`` elements of S.

    Breadth-first over partial sums inside the box of radius
    bound * max|coordinate of S|, expanding generators in lexicographic
    order. Returns the witness (sorted list of summands) or None when no
    representation with <= bound summands exists. None is not a proof of
    non-membership.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    x = tuple(x)
    gens = sorted({tuple(s) for s in S})
    check_same_genus(x, *gens)
    if not gens:
        return None
    radius = bound * max(max(abs(c) for c in s) for s in gens)
    origin = zero(genus_of(x))
    # parent[v] = (previous partial sum, generator added)
    parent: dict = {origin: None}
    frontier = [origin]
    for _ in range(bound):
        if x in parent:
            break
        nxt = []
        for v in frontier:
            for s in gens:
                w = tuple(a + b for a, b in zip(v, s))
                if w in parent or max(map(abs, w)) > radius:
                    continue
                parent[w] = (v, s)
                nxt.append(w)
        frontier = nxt
    if x not in parent:
        return None
    witness = []
    v = x
    while parent[v] is not None:
        v, s = parent[v]
        witness.append(s)
    return sorted(witness)


# --- text form ----------------------------------------------------------------

_VEC_RE = re.compile(r"\s*\[\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\]\s*$")


def format_vector(x: Sequence[int]) -> str:
    return "[" + ",".join(str(c) for c in x) + "]"


def parse_vector(text: str) -> Vector:
    m = _VEC_RE.match(text)
    if not m:
        raise ValueError(f"malformed lattice vector {text!r}")
    v = tuple(int(c) for c in m.group(1).split(","))
    genus_of(v)
    return v
