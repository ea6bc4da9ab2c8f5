"""Executable check of every ad-chain identity used in the constructions.

Each identity is evaluated with the plain element-level bracket (no words,
no certificates) and compared exactly with its stated constant times the
stated basis element.
"""
from __future__ import annotations

import itertools
import random
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Optional

from .algebra import Element, ad_chain_apply, basis_element, bracket, zero_element
from .lattice import add, basis_a, basis_b, neg, scale, zero
from .synthesis import negsum, proposition_x, sum_a, sum_b
from .words import nested_coefficient

COEFF_RANGE = [c for c in range(-4, 5) if c]


def _e(v) -> Element:
    return basis_element(v)


@dataclass
class SuiteReport:
    counts: dict = field(default_factory=lambda: defaultdict(lambda: [0, 0]))
    failures: list = field(default_factory=list)

    def record(self, family: str, g: int, ok: bool, case):
        c = self.counts[(family, g)]
        c[0] += 1
        if ok:
            c[1] += 1
        else:
            self.failures.append((family, g, case))

    @property
    def ok(self) -> bool:
        return not self.failures

    def table(self) -> str:
        width = max(len(f) for f, _ in self.counts) if self.counts else 10
        lines = []
        for (family, g), (total, passed) in sorted(self.counts.items()):
            status = "PASS" if total == passed else "FAIL"
            lines.append(f"{family:<{width}}  g={g}  {passed:>6}/{total:<6} {status}")
        for family, g, case in self.failures[:20]:
            lines.append(f"  failed {family} g={g}: {case}")
        lines.append("ALL PASS" if self.ok else f"{len(self.failures)} FAILURES")
        return "\n".join(lines) + "\n"


# Each generator yields (family, case description, lhs, expected constant, expected vector).
Case = tuple


def orthogonal_samples(g: int, k: int, n: int, rng: random.Random, radius: int = 3):
    """n random X with zero A_k and B_k coordinates (just X = 0 when g = 1)."""
    if g == 1:
        return [zero(1)]
    out = []
    for _ in range(n):
        x = [rng.randint(-radius, radius) for _ in range(2 * g)]
        x[k - 1] = x[g + k - 1] = 0
        out.append(tuple(x))
    return out


def lemma1_cases(g: int, samples: int, rng: random.Random) -> Iterator[Case]:
    for k in range(1, g + 1):
        pA, mA = _e(basis_a(g, k)), _e(neg(basis_a(g, k)))
        pB, mB = _e(basis_b(g, k)), _e(neg(basis_b(g, k)))
        Av, Bv = basis_a(g, k), basis_b(g, k)
        for X in orthogonal_samples(g, k, samples, rng):
            base = _e(add(X, Av))

            def tgt(a, b):
                return add(X, scale(a, Av), scale(b, Bv))

            for a in COEFF_RANGE:
                if a > 0:
                    lhs = ad_chain_apply([mB] + [pA] * (a - 1) + [pB], base)
                    yield "lemma1.a_pos", (k, X, a), lhs, -a, tgt(a, 0)
                else:
                    lhs = ad_chain_apply([pB] + [mA] * (1 - a) + [mB], base)
                    yield "lemma1.a_neg", (k, X, a), lhs, -a, tgt(a, 0)
            for b in COEFF_RANGE:
                if b > 0:
                    lhs = ad_chain_apply([mA] + [pB] * b, base)
                    yield "lemma1.b_pos", (k, X, b), lhs, (-1) ** (b + 1) * b, tgt(0, b)
                else:
                    lhs = ad_chain_apply([mA] + [mB] * (-b), base)
                    yield "lemma1.b_neg", (k, X, b), lhs, -b, tgt(0, b)
            for a, b in itertools.product(COEFF_RANGE, COEFF_RANGE):
                start = _e(tgt(a, 0))
                if b > 0:
                    lhs = ad_chain_apply([pB] * b, start)
                    yield "lemma1.ab_pos", (k, X, a, b), lhs, (-a) ** b, tgt(a, b)
                else:
                    lhs = ad_chain_apply([mB] * (-b), start)
                    yield "lemma1.ab_neg", (k, X, a, b), lhs, a ** (-b), tgt(a, b)


def claim1_cases(g: int) -> Iterator[Case]:
    for n in range(2, g + 1):
        for idx in itertools.combinations(range(1, g + 1), n):
            i1, i_n = idx[0], idx[-1]
            prev = add(*[basis_a(g, i) for i in idx[:-1]]) if n > 2 else basis_a(g, i1)
            ops = [_e(neg(basis_b(g, i1))), _e(neg(basis_a(g, i1))),
                   _e(add(basis_a(g, i1), basis_a(g, i_n))), _e(basis_b(g, i1))]
            lhs = ad_chain_apply(ops, _e(prev))
            yield "lemma2.claim1", idx, lhs, 1, add(prev, basis_a(g, i_n))


def upper_cases(g: int) -> Iterator[Case]:
    X = _e(negsum(g))
    As = [_e(basis_a(g, i)) for i in range(1, g + 1)]
    Bs = [_e(basis_b(g, i)) for i in range(1, g + 1)]
    SA, SB = _e(sum_a(g)), _e(sum_b(g))
    lhs = ad_chain_apply(Bs + [a for a in As for _ in (0, 1)], X)
    yield "upper.sumA", (), lhs, (-1) ** g, sum_a(g)
    lhs = ad_chain_apply(As + [b for b in Bs for _ in (0, 1)], X)
    yield "upper.sumB", (), lhs, 1, sum_b(g)
    for i in range(1, g + 1):
        lhs = ad_chain_apply([SB] + As[:i - 1] + As[i:], X)
        yield "upper.negA", (i,), lhs, (-1) ** (g - 1), neg(basis_a(g, i))
        lhs = ad_chain_apply([SA] + Bs[:i - 1] + Bs[i:], X)
        yield "upper.negB", (i,), lhs, -1, neg(basis_b(g, i))
    for i, j in itertools.combinations(range(1, g + 1), 2):
        lhs = ad_chain_apply([SB, SA, As[i - 1], As[j - 1]], X)
        yield "upper.AiAj", (i, j), lhs, 2 * g, add(basis_a(g, i), basis_a(g, j))


def proposition_cases(g: int) -> Iterator[Case]:
    X = proposition_x(g)
    Y = _e(sum_b(g))
    As = [_e(basis_a(g, i)) for i in range(1, g + 1)]
    if g == 1:
        A = As[0]
        yield "prop1.XY", (), bracket(X, Y), -1, neg(basis_a(1, 1))
        yield "prop1.negB", (), bracket(X - Y, A), 1, neg(basis_b(1, 1))
        yield ("prop1.negsum", (), bracket(_e(neg(basis_a(1, 1))), _e(neg(basis_b(1, 1)))),
               1, negsum(1))
        yield "prop1.zero", (), X - _e(negsum(1)) - Y, 1, zero(1)
        return
    Z = _e(negsum(g))
    yield "prop.negsumB", (), ad_chain_apply(As, X), (-1) ** g, neg(sum_b(g))
    yield "prop.XY", (), bracket(X, Y), -g, neg(sum_a(g))
    yield "prop.Z", (), bracket(_e(neg(sum_a(g))), _e(neg(sum_b(g)))), g, negsum(g)
    for i in range(1, g + 1):
        lhs = ad_chain_apply([Y] + As[:i - 1] + As[i:], Z)
        yield "prop.negA", (i,), lhs, (-1) ** (g - 1), neg(basis_a(g, i))
        lhs = ad_chain_apply([_e(neg(basis_a(g, i))), As[i - 1]], X) + Z
        yield "prop.B", (i,), lhs, -1, basis_b(g, i)
    rest = X - Z
    for i in range(1, g + 1):
        rest = rest - _e(basis_b(g, i))
    yield "prop.zero", (), rest, 1, zero(g)


def nested_cases(g: int, samples: int, rng: random.Random) -> Iterator[Case]:
    """Right-nested brackets of basis elements against the product formula."""
    for _ in range(samples):
        n = rng.randint(1, 6)
        seq = [tuple(rng.randint(-2, 2) for _ in range(2 * g)) for _ in range(n)]
        lhs = _e(seq[-1])
        for s in reversed(seq[:-1]):
            lhs = bracket(_e(s), lhs)
        c, v = nested_coefficient(seq)
        yield "lemma3.nested", tuple(seq), lhs, c, v


def run_suite(g_max: int, samples: int = 50, seed: int = 0,
              perturb: Optional[str] = None,
              lemma1_genera: Optional[list] = None) -> SuiteReport:
    """Check every identity for g = 1..g_max.

    ``perturb`` names a family whose expected constants are all shifted by
    one; the suite must then fail (a mutation check on the harness itself).
    """
    if g_max < 1:
        raise ValueError("g_max must be >= 1")
    rng = random.Random(seed)
    report = SuiteReport()
    genera = range(1, g_max + 1)
    if lemma1_genera is None:
        lemma1_genera = list(genera)
    sources: list[tuple[int, Callable[[], Iterator[Case]]]] = []
    for g in genera:
        if g in lemma1_genera:
            sources.append((g, lambda g=g: lemma1_cases(g, samples, rng)))
        sources.append((g, lambda g=g: claim1_cases(g)))
        sources.append((g, lambda g=g: upper_cases(g)))
        sources.append((g, lambda g=g: proposition_cases(g)))
        sources.append((g, lambda g=g: nested_cases(g, samples, rng)))
    for g, make in sources:
        for family, case, lhs, const, vec in make():
            if family == perturb:
                const += 1
            expected = Fraction(const) * _e(vec) if const else zero_element(g)
            report.record(family, g, lhs == expected, case)
    return report
