"""Exact rational feasibility by Fourier-Motzkin elimination.

Small systems only: equalities are eliminated first by substitution, the
remaining inequalities by pairwise combination with duplicate removal.
A feasible system yields a solution by back-substitution.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Optional, Sequence


def _normalize(coeffs: tuple, rhs: Fraction) -> tuple:
    # scale so the coefficients are coprime integers; keeps dedup effective
    nums = [c for c in coeffs if c] + ([rhs] if rhs else [])
    if not nums:
        return coeffs, rhs
    den = 1
    for c in nums:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if g == 0:
        # constant constraint 0 >= rhs: only the sign of rhs matters
        return coeffs, Fraction((rhs > 0) - (rhs < 0))
    return tuple(Fraction(c, g) for c in ints), rhs * den / g


def solve(n: int, ineqs: Sequence[tuple[Sequence, object]] = (),
          eqs: Sequence[tuple[Sequence, object]] = ()) -> Optional[list[Fraction]]:
    """A rational x with a.x >= b for every (a, b) in ineqs and a.x == b for
    every (a, b) in eqs, or None if there is none."""
    G = [(tuple(Fraction(c) for c in a), Fraction(b)) for a, b in ineqs]
    E = [(tuple(Fraction(c) for c in a), Fraction(b)) for a, b in eqs]
    if any(len(a) != n for a, _ in G + E):
        raise ValueError("coefficient rows must have length n")

    # x[p] = const + sum coeffs[j] x[j], recorded in elimination order
    substitutions = []
    while E:
        a, b = E.pop()
        p = next((j for j in range(n) if a[j]), None)
        if p is None:
            if b:
                return None
            continue
        expr = tuple(Fraction(0) if j == p else -a[j] / a[p] for j in range(n))
        const = b / a[p]
        substitutions.append((p, expr, const))

        def sub(row, rhs):
            c = row[p]
            if not c:
                return row, rhs
            new = tuple(Fraction(0) if j == p else row[j] + c * expr[j] for j in range(n))
            return new, rhs - c * const

        E = [sub(*r) for r in E]
        G = [sub(*r) for r in G]

    eliminated = {p for p, _, _ in substitutions}
    order = [j for j in range(n) if j not in eliminated]
    stages = []
    system = {_normalize(a, b) for a, b in G}
    for j in order:
        stages.append((j, system))
        pos = [r for r in system if r[0][j] > 0]
        negs = [r for r in system if r[0][j] < 0]
        nxt = {r for r in system if not r[0][j]}
        for ap, bp in pos:
            for an, bn in negs:
                s, t = -an[j], ap[j]
                row = tuple(s * x + t * y for x, y in zip(ap, an))
                nxt.add(_normalize(row, s * bp + t * bn))
        system = {r for r in nxt if any(r[0]) or r[1] > 0}
    if any(b > 0 for a, b in system if not any(a)):
        return None

    x = [Fraction(0)] * n
    for j, sysj in reversed(stages):
        lo = hi = None
        for a, b in sysj:
            if not a[j]:
                continue
            bound = (b - sum(a[k] * x[k] for k in range(n) if k != j)) / a[j]
            if a[j] > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        x[j] = lo if lo is not None else (hi if hi is not None else Fraction(0))
    for p, expr, const in reversed(substitutions):
        x[p] = const + sum(c * x[k] for k, c in enumerate(expr) if c)
    return x
