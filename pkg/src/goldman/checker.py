"""Necessary conditions for a subset S of H to Lie-generate QH, and a
brute-force reachability oracle for nested brackets of elements of S.

Nested brackets [s1,[s2,[...,[s_{n-1},s_n]...]]] of basis elements are
integer multiples of [s1+...+s_n], so the Lie subalgebra generated by
{[s] : s in S} sits inside Q M, M the submonoid generated by S. Hence a
generating S must contain 0 (brackets never land on [0]) and generate H as
a monoid. Monoid generation of the lattice is decided as
  S \\ {0} spans H over Z,  and
  lambda_s >= 1, sum lambda_s s = 0  has a rational solution
(the second says the cone of S is all of R^{2g}).
"""
from __future__ import annotations

import csv
import enum
import io
import itertools
from math import gcd
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import fm
from .lattice import (GenusConfig, GenusMismatch, Vector, format_vector, hnf_diagonal,
                      intersection, is_z_basis, parse_vector, z_spans, zero)


class Reason(enum.Enum):
    MissingZero = "MissingZero"
    NotSpanning = "NotSpanning"
    BasisCone = "BasisCone"
    ConeNotFull = "ConeNotFull"


@dataclass(frozen=True)
class SetReport:
    """Pass means: 0 in S and S generates H as a monoid. It says nothing
    about Lie generation beyond these necessary conditions."""

    reason: Optional[Reason]
    details: str
    relation: Optional[dict] = None      # s -> lambda_s >= 1 with sum lambda_s s = 0
    functional: Optional[tuple] = None   # y with y.s >= 0 on S, not identically 0

    @property
    def passed(self) -> bool:
        return self.reason is None

    def __str__(self):
        return "PASS" if self.passed else f"REJECT {self.reason.value}"


def positive_relation(vs: Sequence[Vector]) -> Optional[list[Fraction]]:
    """lambda with every lambda_i >= 1 and sum lambda_i v_i = 0, or None."""
    n = len(vs)
    if n == 0:
        return []
    dim = len(vs[0])
    ineqs = [([int(i == j) for j in range(n)], 1) for i in range(n)]
    eqs = [([v[c] for v in vs], 0) for c in range(dim)]
    return fm.solve(n, ineqs, eqs)


def separating_functional(vs: Sequence[Vector], dim: int) -> Optional[list[Fraction]]:
    """y with y.v >= 0 for all v and y.(sum v) >= 1, or None.

    Exactly one of this and positive_relation succeeds (Gordan's
    alternative), so this is the certificate for a cone that is not full.
    """
    if not vs:
        return [Fraction(0)] * dim
    total = [sum(col) for col in zip(*vs)]
    ineqs = [(list(v), 0) for v in vs] + [(total, 1)]
    return fm.solve(dim, ineqs)


def check_necessary(S: Iterable[Sequence[int]], cfg: GenusConfig) -> SetReport:
    S = sorted({tuple(s) for s in S})
    for s in S:
        if len(s) != cfg.rank:
            raise GenusMismatch(f"{format_vector(s)} is not a genus-{cfg.g} vector")
    z = zero(cfg.g)
    if z not in S:
        return SetReport(Reason.MissingZero, "0 is not in S; brackets never produce [0]")
    nonzero = [s for s in S if s != z]
    if not z_spans(nonzero, cfg):
        diag = hnf_diagonal(nonzero, cfg.g)
        return SetReport(Reason.NotSpanning,
                         f"HNF pivots {diag} (rank {len(diag)} of {cfg.rank})")
    if len(nonzero) == cfg.rank and is_z_basis(nonzero, cfg):
        return SetReport(Reason.BasisCone,
                         f"S \\ {{0}} is a Z-basis; its monoid is the cone of "
                         f"nonnegative combinations, missing {format_vector(tuple(-c for c in nonzero[0]))}")
    lam = positive_relation(nonzero)
    if lam is None:
        y = separating_functional(nonzero, cfg.rank)
        y = _integral(y) if y is not None else None
        return SetReport(Reason.ConeNotFull,
                         f"no relation with all coefficients >= 1; functional {y} is >= 0 on S",
                         functional=y)
    relation = dict(zip(nonzero, lam))
    text = ", ".join(f"{format_vector(s)}:{c}" for s, c in relation.items())
    return SetReport(None, f"relation {text}", relation=relation)


def _integral(y: Sequence[Fraction]) -> tuple:
    den = 1
    for c in y:
        den = den * c.denominator // gcd(den, c.denominator)
    return tuple(int(c * den) for c in y)


# --- reachability oracle --------------------------------------------------------------

def box(radius: int, g: int) -> Iterable[Vector]:
    return itertools.product(range(-radius, radius + 1), repeat=2 * g)


def in_box(v: Sequence[int], radius: int) -> bool:
    return all(-radius <= c <= radius for c in v)


@dataclass
class ReachReport:
    g: int
    window: int
    search_window: int
    max_len: int
    witness: dict = field(default_factory=dict)   # vector -> shortest sequence found
    clipped: int = 0   # candidate sums dropped for leaving the search window

    @property
    def reached(self) -> list[Vector]:
        return sorted(v for v in self.witness if in_box(v, self.window))

    @property
    def first_length(self) -> dict:
        return {v: len(self.witness[v]) for v in self.reached}

    def missing(self) -> list[Vector]:
        return [v for v in box(self.window, self.g) if v not in self.witness]

    @property
    def covers_window(self) -> bool:
        return not self.missing()

    def rows(self):
        for v in self.reached:
            w = self.witness[v]
            yield format_vector(v), len(w), " ".join(format_vector(s) for s in w)

    def table(self) -> str:
        lines = [f"# window {self.window} search_window {self.search_window} "
                 f"max_len {self.max_len} reached {len(self.reached)} "
                 f"of {(2 * self.window + 1) ** (2 * self.g)} clipped {self.clipped}"]
        lines += [f"{v}\t{n}\t{w}" for v, n, w in self.rows()]
        return "\n".join(lines) + "\n"

    def csv(self) -> str:
        buf = io.StringIO()
        out = csv.writer(buf, lineterminator="\n")
        out.writerow(["vector", "first_length", "witness"])
        out.writerows(self.rows())
        return buf.getvalue()


def oracle_reachable(S: Iterable[Sequence[int]], max_len: int, window: int,
                     search_window: Optional[int] = None,
                     g: Optional[int] = None) -> ReachReport:
    """Lattice vectors v in the window with [v] reached by a nested bracket
    of at most max_len elements of S with nonzero coefficient.

    Level m+1 is {s + t : s in S, t in level m, <s, t> != 0}, restricted to
    the search window. Only nonvanishing of the coefficient is tracked: it
    is a product of pairings, nonzero iff every factor is. Witnesses
    (s_1, ..., s_n) read outermost first. Absence proves nothing.
    """
    S = sorted({tuple(s) for s in S})
    if g is None:
        if not S:
            raise ValueError("cannot infer genus from an empty set")
        g = len(S[0]) // 2
    if any(len(s) != 2 * g for s in S):
        raise GenusMismatch("vectors of mixed genus")
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    if search_window is None:
        search_window = 4 * window
    if search_window < window:
        raise ValueError("search_window must contain window")
    report = ReachReport(g, window, search_window, max_len)
    witness = report.witness
    level = []
    for s in S:
        witness[s] = (s,)
        level.append(s)
    for _ in range(max_len - 1):
        nxt = set()
        for t in level:
            for s in S:
                if not intersection(s, t):
                    continue
                v = tuple(a + b for a, b in zip(s, t))
                if not in_box(v, search_window):
                    report.clipped += 1
                    continue
                nxt.add(v)
                if v not in witness:
                    witness[v] = (s,) + witness[t]
        nxt = sorted(nxt)
        if nxt == level:
            break
        level = nxt
    return report


# --- set files ------------------------------------------------------------------------

def parse_set(text: str) -> list[Vector]:
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append(parse_vector(line))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    return out
