import json
import random
from fractions import Fraction

import pytest

from goldman.algebra import basis_element
from goldman.lattice import zero
from goldman.synthesis import proposition_table, upper_table_certificates
from goldman.words import (Br, Certificate, CertificateParseError, Gen, GeneratorTable,
                           UnresolvedName, chain, eval_word, evaluate, leaf_certificate,
                           nested_coefficient, parse, right_nested, serialize, verify)


def table(**vecs):
    return GeneratorTable((n, basis_element(v)) for n, v in vecs.items())


def test_eval_examples():
    t = table(A=(1, 0), C=(-1, -1))
    assert eval_word(Gen("A"), t) == basis_element((1, 0))
    assert eval_word(Br(Gen("A"), Br(Gen("A"), Gen("C"))), t).terms == {(1, -1): 1}
    p = proposition_table(1)
    assert eval_word(Br(Gen("Xgen"), Gen("Ygen")), p) == -1 * basis_element((-1, 0))
    with pytest.raises(UnresolvedName):
        eval_word(Gen("nope"), t)


def test_eval_is_linear_in_combo():
    t = table(A=(1, 0), B=(0, 1), C=(-1, -1))
    p1 = ((2, Br(Gen("A"), Gen("B"))),)
    p2 = ((Fraction(-1, 3), Br(Gen("C"), Br(Gen("A"), Gen("B")))), (5, Gen("C")))
    assert evaluate(p1 + p2, t) == evaluate(p1, t) + evaluate(p2, t)


def test_nested_coefficient_examples():
    assert nested_coefficient([(3, -1)]) == (1, (3, -1))
    assert nested_coefficient([(1, 0), (0, 1)]) == (1, (1, 1))
    # <A, -B> <A, -A-B> = (-1)(-1)
    assert nested_coefficient([(1, 0), (1, 0), (-1, -1)]) == (1, (1, -1))
    with pytest.raises(ValueError):
        nested_coefficient([])


def test_nested_coefficient_matches_evaluator():
    rng = random.Random(5)
    for _ in range(300):
        g = rng.randint(1, 2)
        pool = {f"s{i}": tuple(rng.randint(-2, 2) for _ in range(2 * g)) for i in range(5)}
        t = table(**pool)
        names = [rng.choice(sorted(pool)) for _ in range(rng.randint(1, 6))]
        c, v = nested_coefficient([pool[n] for n in names])
        expected = c * basis_element(v) if c else basis_element(v) * 0
        assert eval_word(right_nested(names), t) == expected


def test_verify_examples():
    certs = upper_table_certificates(1)
    good = certs["sumA"]
    assert good.scalar == -1 and verify(good)
    bad = Certificate(good.table, good.combo, good.target, 1)
    v = verify(bad)
    assert not v and v.difference
    z = Certificate(table(Z0=(0, 0)), ((1, Gen("Z0")),), zero(1), 1)
    assert verify(z)


def test_verify_pass_means_exact_claim():
    for cert in upper_table_certificates(2).values():
        assert verify(cert)
        assert evaluate(cert.combo, cert.table) * (1 / cert.scalar) == basis_element(cert.target)


def test_certificate_construction_checks():
    t = table(A=(1, 0))
    with pytest.raises(ValueError):
        Certificate(t, ((1, Gen("A")),), (1, 0), 0)
    with pytest.raises(ValueError):
        Certificate(t, ((0, Gen("A")),), (1, 0), 1)


def test_table_invariants():
    with pytest.raises(ValueError):
        GeneratorTable([("a", basis_element((1, 0))), ("a", basis_element((0, 1)))])
    with pytest.raises(ValueError):
        GeneratorTable([("", basis_element((1, 0)))])
    with pytest.raises(ValueError):
        GeneratorTable([("a", basis_element((1, 0))), ("b", basis_element((1, 0, 0, 0)))])


@pytest.mark.parametrize("g", [1, 2])
def test_round_trip(g):
    for cert in upper_table_certificates(g).values():
        again = parse(serialize(cert))
        assert again == cert
        assert verify(again)


def test_round_trip_multi_part_and_rationals():
    t = table(A=(1, 0), B=(0, 1))
    c = Certificate(t, ((Fraction(1, 2), Br(Gen("A"), Gen("B"))), (Fraction(-3, 7), Gen("A"))),
                    (1, 1), Fraction(5, 3))
    assert parse(serialize(c)) == c


def test_serialized_fields():
    doc = json.loads(serialize(upper_table_certificates(1)["negA1"]))
    assert {"genus", "generators", "combo", "target", "scalar"} <= set(doc)
    assert doc["combo"][0]["word"][0] == "br"
    assert doc["target"] == "[-1,0]"


def test_deep_words_survive_round_trip():
    t = table(A=(1, 0), B=(0, 1))
    w = chain([Gen("A"), Gen("B")] * 400, Gen("A"))
    c = Certificate(t, ((1, w),), (1, 0), 1)
    assert parse(serialize(c)) == c


def test_parse_errors():
    text = serialize(upper_table_certificates(1)["negA1"])
    with pytest.raises(CertificateParseError) as exc:
        parse(text[: len(text) // 2])
    assert "char" in exc.value.position
    doc = json.loads(text)
    doc["combo"][0]["word"] = ["br", ["gen", "ghost"], ["gen", "A1"]]
    with pytest.raises(CertificateParseError, match="unresolved name"):
        parse(json.dumps(doc))
    doc = json.loads(text)
    del doc["scalar"]
    with pytest.raises(CertificateParseError, match="scalar"):
        parse(json.dumps(doc))
    doc = json.loads(text)
    doc["combo"][0]["word"] = ["bracket", 1]
    with pytest.raises(CertificateParseError, match="tag"):
        parse(json.dumps(doc))


def test_leaf_certificate_requires_basis_value():
    with pytest.raises(ValueError):
        leaf_certificate(proposition_table(1), "Xgen")
    c = leaf_certificate(proposition_table(2), "Ygen")
    assert c.target == (0, 0, 1, 1) and verify(c)
