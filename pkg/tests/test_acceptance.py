"""End-to-end acceptance checks, all at exact equality.

Each test carries a ``criterion`` marker; conftest prints one PASS/FAIL line
per criterion at the end of the run.
"""
import itertools
import random
from fractions import Fraction

import pytest

from goldman.algebra import Element, basis_element, bracket
from goldman.checker import check_necessary, oracle_reachable
from goldman.identities import run_suite
from goldman.lattice import GenusConfig, is_primitive, z_spans, zero
from goldman.synthesis import (proposition_table, proposition_table_certificates, substitute,
                               synthesize_from_proposition, synthesize_from_upper, upper_table,
                               upper_table_certificates)
from goldman.words import GeneratorTable, eval_word, nested_coefficient, right_nested, verify


def criterion(n, title):
    return pytest.mark.criterion(n, title)


# --- 1 ----------------------------------------------------------------------------------

@criterion(1, "construction identities, g <= 4")
def test_identity_suite():
    report = run_suite(4, samples=50, seed=0, lemma1_genera=[2, 3])
    assert report.ok, report.table()
    families = {f for f, _ in report.counts}
    for fam in ["lemma1.a_pos", "lemma1.a_neg", "lemma1.b_pos", "lemma1.b_neg",
                "lemma1.ab_pos", "lemma1.ab_neg", "lemma2.claim1", "upper.sumA", "upper.sumB",
                "upper.negA", "upper.negB", "upper.AiAj", "prop1.XY", "prop1.negB",
                "prop1.negsum", "prop1.zero", "prop.negsumB", "prop.XY", "prop.Z",
                "prop.negA", "prop.B", "prop.zero"]:
        assert fam in families, fam
    # every k <= g, every (a, b), 50 X per k
    assert report.counts[("lemma1.ab_pos", 3)][0] == 3 * 50 * 8 * 4


# --- 2 and 7 ----------------------------------------------------------------------------

def window_certificates(g):
    for x in itertools.product(range(-3, 4), repeat=2 * g):
        yield x, synthesize_from_upper(x, g)


@criterion(2, "2g+2 generators: every target in [-3,3]^2g, g = 1, 2")
@pytest.mark.parametrize("g,count", [(1, 49), (2, 2401)])
def test_upper_bound_window(g, count):
    seen = 0
    for x, cert in window_certificates(g):
        assert cert.table == upper_table(g)
        assert cert.target == x
        assert verify(cert), x
        seen += 1
    assert seen == count


@criterion(7, "no [0] leaf for nonzero targets, g = 1, 2")
@pytest.mark.parametrize("g", [1, 2])
def test_quotient_by_zero(g):
    for x, cert in window_certificates(g):
        if any(x):
            assert "zero" not in cert.leaves(), x
    # the 2g+1 remaining generators are primitive
    prims = [v for n, e in upper_table(g).entries if n != "zero" for v in e.support()]
    assert len(prims) == 2 * g + 1
    assert all(is_primitive(v) for v in prims)


# --- 3 ----------------------------------------------------------------------------------

@criterion(3, "g+2 generators via composition, g = 1, 2, 3")
@pytest.mark.parametrize("g", [1, 2, 3])
def test_proposition_generators(g):
    table = proposition_table(g)
    assert len(table.names()) == g + 2
    prop = proposition_table_certificates(g, compact=True)
    for name, cert in upper_table_certificates(g).items():
        if name not in upper_table(g).names():
            continue
        composed = substitute(cert, prop)
        assert composed.table == table and verify(composed), name
    rng = random.Random(100 + g)
    for _ in range(100):
        x = tuple(rng.randint(-3, 3) for _ in range(2 * g))
        cert = synthesize_from_proposition(x, g)
        assert cert.table == table and cert.target == x and verify(cert), x


# --- 4 ----------------------------------------------------------------------------------

@criterion(4, "at least 2g+2 generators needed at g = 1")
def test_lower_bound_exhaustive():
    cfg = GenusConfig(1)
    pts = list(itertools.product(range(-2, 3), repeat=2))
    small = 0
    for k in range(4):
        for S in itertools.combinations(pts, k):
            assert not check_necessary(S, cfg).passed, S
            small += 1
    assert small == 1 + 25 + 300 + 2300
    passing = 0
    for S in itertools.combinations(pts, 4):
        r = check_necessary(S, cfg)
        if r.passed:
            passing += 1
            assert zero(1) in S
            assert z_spans([s for s in S if any(s)], cfg)
    assert passing > 0


# --- 5 ----------------------------------------------------------------------------------

@criterion(5, "reachability oracle agrees with rejections")
def test_oracle_consistency():
    cfg = GenusConfig(1)
    rng = random.Random(5)
    rejected = 0
    for _ in range(200):
        S = {tuple(rng.randint(-2, 2) for _ in range(2)) for _ in range(rng.randint(1, 6))}
        if not check_necessary(S, cfg).passed:
            rejected += 1
            r = oracle_reachable(S, 10, 2, 8)
            assert not r.covers_window, S
    assert rejected > 0
    full = oracle_reachable([(1, 0), (0, 1), (-1, -1), (0, 0)], 10, 2, 8)
    assert full.covers_window


# --- 6 ----------------------------------------------------------------------------------

def random_element(rng, g):
    terms = {}
    for _ in range(rng.randint(0, 4)):
        v = tuple(rng.randint(-3, 3) for _ in range(2 * g))
        terms[v] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    return Element(g, terms)


@criterion(6, "Lie algebra axioms and the nested-bracket product formula")
def test_algebra_properties():
    rng = random.Random(6)
    for _ in range(10_000):
        g = rng.randint(1, 3)
        e, f, h = (random_element(rng, g) for _ in range(3))
        s, t = Fraction(rng.randint(-3, 3), rng.randint(1, 3)), Fraction(rng.randint(-3, 3))
        ef = bracket(e, f)
        assert not (ef + bracket(f, e))
        assert not (bracket(ef, h) + bracket(bracket(f, h), e) + bracket(bracket(h, e), f))
        assert not (bracket(s * e + t * f, h) - s * bracket(e, h) - t * bracket(f, h))
        assert zero(g) not in ef.terms


@criterion(6, "Lie algebra axioms and the nested-bracket product formula")
def test_nested_product_formula():
    rng = random.Random(7)
    for _ in range(1_000):
        g = rng.randint(1, 3)
        seq = [tuple(rng.randint(-2, 2) for _ in range(2 * g)) for _ in range(rng.randint(1, 6))]
        names = [f"s{i}" for i in range(len(seq))]
        table = GeneratorTable(zip(names, map(basis_element, seq)))
        c, v = nested_coefficient(seq)
        got = eval_word(right_nested(names), table)
        assert got == c * basis_element(v)
