"""Constructive certificates over the three standard generator tables.

``lemma2`` table: [+-A_i], [+-B_i], [A_i+A_j] (i<j), [0].
``upper`` table: [A_i], [B_i], [-sum A - sum B], [0]  (2g+2 generators).
``proposition`` table: [A_1..A_g], X = [-sum A - sum B] + [B_1]+..+[B_g] + [0],
Y = [B_1+..+B_g]  (g+2 generators, X is not a basis element).

Every construction returns a Certificate whose scalar is the constant that
the corresponding ad-chain identity produces. Sub-certificates used as ad
operators are normalized (part scalars divided by their own scalar), so
only the chain's own constant ends up in the outer scalar.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .algebra import Element, basis_element, linear_combine
from .lattice import (GenusMismatch, Vector, add, basis_a, basis_b, genus_of,
                      intersection, neg, scale, zero)
from .words import (Br, Certificate, Gen, GeneratorTable, _postorder,
                    leaf_certificate, verify)


class SynthesisError(ValueError):
    pass


# --- standard tables ------------------------------------------------------------

def sum_a(g: int) -> Vector:
    return tuple([1] * g + [0] * g)


def sum_b(g: int) -> Vector:
    return tuple([0] * g + [1] * g)


def negsum(g: int) -> Vector:
    """-A_1-...-A_g-B_1-...-B_g."""
    return (-1,) * (2 * g)


@lru_cache(maxsize=None)
def lemma2_table(g: int) -> GeneratorTable:
    entries = []
    entries += [(f"A{i}", basis_a(g, i)) for i in range(1, g + 1)]
    entries += [(f"B{i}", basis_b(g, i)) for i in range(1, g + 1)]
    entries += [(f"negA{i}", neg(basis_a(g, i))) for i in range(1, g + 1)]
    entries += [(f"negB{i}", neg(basis_b(g, i))) for i in range(1, g + 1)]
    entries += [(f"A{i}+A{j}", add(basis_a(g, i), basis_a(g, j)))
                for i in range(1, g + 1) for j in range(i + 1, g + 1)]
    entries.append(("zero", zero(g)))
    return GeneratorTable((n, basis_element(v)) for n, v in entries)


@lru_cache(maxsize=None)
def upper_table(g: int) -> GeneratorTable:
    entries = [(f"A{i}", basis_a(g, i)) for i in range(1, g + 1)]
    entries += [(f"B{i}", basis_b(g, i)) for i in range(1, g + 1)]
    entries += [("negsum", negsum(g)), ("zero", zero(g))]
    return GeneratorTable((n, basis_element(v)) for n, v in entries)


def proposition_x(g: int) -> Element:
    parts = [basis_element(negsum(g)), basis_element(zero(g))]
    parts += [basis_element(basis_b(g, i)) for i in range(1, g + 1)]
    return linear_combine(((1, e) for e in parts), g)


@lru_cache(maxsize=None)
def proposition_table(g: int) -> GeneratorTable:
    entries = [(f"A{i}", basis_element(basis_a(g, i))) for i in range(1, g + 1)]
    entries.append(("Xgen", proposition_x(g)))
    entries.append(("Ygen", basis_element(sum_b(g))))
    return GeneratorTable(entries)


# --- combo plumbing ----------------------------------------------------------------

def _unit(cert: Certificate) -> tuple:
    """Parts of a combo evaluating to exactly [cert.target]."""
    return tuple((c / cert.scalar, w) for c, w in cert.combo)


def _bracket_parts(p: Sequence, q: Sequence) -> tuple:
    return tuple((a * b, Br(u, v)) for a, u in p for b, v in q)


def _apply(ops: Sequence[Certificate], parts: Sequence) -> tuple:
    """ad(ops[0]) ... ad(ops[-1]) applied to a combo."""
    for op in reversed(ops):
        parts = _bracket_parts(_unit(op), parts)
    return tuple(parts)


def _chain_cert(ops: Sequence[Certificate], base: Certificate,
                target: Vector, factor) -> Certificate:
    # chain(base.combo) = factor * base.scalar * [target]
    return Certificate(base.table, _apply(ops, base.combo), target,
                       Fraction(factor) * base.scalar)


def _leaf(table: GeneratorTable, name: str) -> Certificate:
    return leaf_certificate(table, name)


# --- one-index extension along A_k, B_k -------------------------------------------------

def lemma1_extend(base: Certificate, k: int, a: int, b: int,
                  gen_certs: Mapping[Vector, Certificate],
                  check: bool = True) -> Certificate:
    """From a certificate for [X + A_k] build one for [X + a A_k + b B_k].

    X must pair to zero with A_k and B_k. ``gen_certs`` maps each of
    A_k, -A_k, B_k, -B_k to a certificate over base's table. When a and b
    are both nonzero the [X + a A_k] certificate is built first and then
    pushed along B_k.
    """
    if a == 0 and b == 0:
        raise SynthesisError("(a, b) must not be (0, 0)")
    g = genus_of(base.target)
    A, B = basis_a(g, k), basis_b(g, k)
    X = tuple(t - s for t, s in zip(base.target, A))
    if intersection(A, X) or intersection(B, X):
        raise SynthesisError(f"X = {X} is not orthogonal to A_{k}, B_{k}")
    if check and not verify(base):
        raise SynthesisError("base certificate does not verify")
    try:
        pA, nA, pB, nB = (gen_certs[v] for v in (A, neg(A), B, neg(B)))
    except KeyError as exc:
        raise SynthesisError(f"missing generator certificate for {exc.args[0]}") from None

    def target(p, q):
        return add(X, scale(p, A), scale(q, B))

    if a == 0:
        if b > 0:
            return _chain_cert([nA] + [pB] * b, base, target(0, b), (-1) ** (b + 1) * b)
        return _chain_cert([nA] + [nB] * (-b), base, target(0, b), -b)
    if a == 1:
        cert = base
    elif a > 0:
        cert = _chain_cert([nB] + [pA] * (a - 1) + [pB], base, target(a, 0), -a)
    else:
        cert = _chain_cert([pB] + [nA] * (1 - a) + [nB], base, target(a, 0), -a)
    if b > 0:
        cert = _chain_cert([pB] * b, cert, target(a, b), (-a) ** b)
    elif b < 0:
        cert = _chain_cert([nB] * (-b), cert, target(a, b), a ** (-b))
    return cert


# --- finite generation from the lemma2 table --------------------------------------------

def _lemma2_gen_certs(g: int, k: int) -> dict:
    t = lemma2_table(g)
    return {basis_a(g, k): _leaf(t, f"A{k}"), neg(basis_a(g, k)): _leaf(t, f"negA{k}"),
            basis_b(g, k): _leaf(t, f"B{k}"), neg(basis_b(g, k)): _leaf(t, f"negB{k}")}


def claim1_certificate(indices: Sequence[int], g: int) -> Certificate:
    """[A_{i1} + ... + A_{in}] over the lemma2 table, scalar 1."""
    t = lemma2_table(g)
    idx = sorted(indices)
    if not idx or len(set(idx)) != len(idx):
        raise SynthesisError("indices must be distinct and nonempty")
    if len(idx) == 1:
        return _leaf(t, f"A{idx[0]}")
    if len(idx) == 2:
        return _leaf(t, f"A{idx[0]}+A{idx[1]}")
    i1, i_n = idx[0], idx[-1]
    prev = claim1_certificate(idx[:-1], g)
    ops = [_leaf(t, f"negB{i1}"), _leaf(t, f"negA{i1}"),
           _leaf(t, f"A{i1}+A{i_n}"), _leaf(t, f"B{i1}")]
    target = add(prev.target, basis_a(g, i_n))
    return _chain_cert(ops, prev, target, 1)


def lemma2_certificate(x: Sequence[int], g: int) -> Certificate:
    x = tuple(x)
    if len(x) != 2 * g:
        raise GenusMismatch(f"{x} is not a genus-{g} vector")
    t = lemma2_table(g)
    support = [i for i in range(1, g + 1) if x[i - 1] or x[g + i - 1]]
    if not support:
        return _leaf(t, "zero")
    cert = claim1_certificate(support, g)
    # each pass replaces the A_k summand of the current target by a A_k + b B_k
    for k in support:
        cert = lemma1_extend(cert, k, x[k - 1], x[g + k - 1], _lemma2_gen_certs(g, k),
                             check=False)
    return cert


# --- the 2g+2 generator table ------------------------------------------------------------

@lru_cache(maxsize=None)
def _upper_sums(g: int) -> tuple[Certificate, Certificate]:
    """Certificates for [sum A] and [sum B] over the upper table."""
    t = upper_table(g)
    W = _leaf(t, "negsum")
    As = [_leaf(t, f"A{i}") for i in range(1, g + 1)]
    Bs = [_leaf(t, f"B{i}") for i in range(1, g + 1)]
    cA = _chain_cert(Bs + [a for a in As for _ in (0, 1)], W, sum_a(g), (-1) ** g)
    cB = _chain_cert(As + [b for b in Bs for _ in (0, 1)], W, sum_b(g), 1)
    return cA, cB


@lru_cache(maxsize=None)
def upper_table_certificates(g: int) -> dict:
    """Certificate over upper_table(g) for every lemma2_table(g) generator.

    Also carries ``sumA`` and ``sumB``, the two sum identities the other
    families are built from.
    """
    t = upper_table(g)
    W = _leaf(t, "negsum")
    As = [_leaf(t, f"A{i}") for i in range(1, g + 1)]
    Bs = [_leaf(t, f"B{i}") for i in range(1, g + 1)]
    cA, cB = _upper_sums(g)
    # as ad operators the sums are generators themselves when g = 1
    opA, opB = (As[0], Bs[0]) if g == 1 else (cA, cB)
    out = {"sumA": cA, "sumB": cB}
    for i in range(1, g + 1):
        out[f"A{i}"] = As[i - 1]
        out[f"B{i}"] = Bs[i - 1]
    for i in range(1, g + 1):
        others_a = As[:i - 1] + As[i:]
        others_b = Bs[:i - 1] + Bs[i:]
        out[f"negA{i}"] = _chain_cert([opB] + others_a, W, neg(basis_a(g, i)), (-1) ** (g - 1))
        out[f"negB{i}"] = _chain_cert([opA] + others_b, W, neg(basis_b(g, i)), -1)
    for i in range(1, g + 1):
        for j in range(i + 1, g + 1):
            out[f"A{i}+A{j}"] = _chain_cert([opB, opA, As[i - 1], As[j - 1]], W,
                                            add(basis_a(g, i), basis_a(g, j)), 2 * g)
    out["zero"] = _leaf(t, "zero")
    return out


# --- substitution ----------------------------------------------------------------------

def substitute(cert: Certificate, mapping: Mapping[str, Certificate],
               check: bool = True) -> Certificate:
    """Replace every generator leaf of ``cert`` by a certificate for its value.

    A leaf whose generator value is c*[v] becomes c/s * combo, where
    ``mapping[name]`` claims combo = s*[v]. Multi-part combos are distributed
    over the brackets. The outer scalar and target are preserved.
    """
    used = sorted(cert.leaves())
    missing = [n for n in used if n not in mapping]
    if missing:
        raise SynthesisError(f"no certificate for generator(s) {missing}")
    if not used:
        raise SynthesisError("certificate has no leaves")
    new_table = mapping[used[0]].table
    replacement = {}
    for name in used:
        m = mapping[name]
        if m.table != new_table:
            raise SynthesisError("mapped certificates do not share one table")
        value = cert.table[name]
        if len(value) != 1 or value.support()[0] != m.target:
            raise SynthesisError(f"certificate for {name!r} does not target its value")
        if check and not verify(m):
            raise SynthesisError(f"certificate for {name!r} does not verify")
        c = value.coefficient(m.target)
        replacement[name] = tuple((c * p / m.scalar, w) for p, w in m.combo)

    parts_of: dict[int, tuple] = {}
    for node in _postorder(w for _, w in cert.combo):
        if isinstance(node, Gen):
            parts_of[id(node)] = replacement[node.name]
        else:
            parts_of[id(node)] = _bracket_parts(parts_of[id(node.left)],
                                                parts_of[id(node.right)])
    combo = tuple((c * p, w) for c, top in cert.combo for p, w in parts_of[id(top)])
    return Certificate(new_table, combo, cert.target, cert.scalar)


def synthesize_from_upper(x: Sequence[int], g: int) -> Certificate:
    """Certificate for [x] over the 2g+2 generators of upper_table(g)."""
    return substitute(lemma2_certificate(x, g), upper_table_certificates(g), check=False)


# --- the g+2 generator table --------------------------------------------------------------

@lru_cache(maxsize=None)
def proposition_internal_certificates(g: int) -> dict:
    """Intermediate certificates over proposition_table(g), keyed by role.

    g = 1: ``negA``, ``negB``, ``negsum``. g >= 2: ``negsumB``, ``negsumA``,
    ``negsum``, ``negA{i}``.
    """
    t = proposition_table(g)
    X = Certificate(t, ((1, Gen("Xgen")),), negsum(g), 1)  # only meaningful inside brackets
    Y = _leaf(t, "Ygen")
    As = [_leaf(t, f"A{i}") for i in range(1, g + 1)]
    out = {}
    if g == 1:
        out["negA"] = Certificate(t, ((1, Br(Gen("Xgen"), Gen("Ygen"))),), neg(basis_a(1, 1)), -1)
        # [X - Y, [A_1]]
        out["negB"] = Certificate(t, ((1, Br(Gen("Xgen"), Gen("A1"))),
                                      (-1, Br(Gen("Ygen"), Gen("A1")))),
                                  neg(basis_b(1, 1)), 1)
        out["negsum"] = Certificate(t, _bracket_parts(_unit(out["negA"]), _unit(out["negB"])),
                                    negsum(1), 1)
        return out
    out["negsumB"] = _chain_cert(As, X, neg(sum_b(g)), (-1) ** g)
    out["negsumA"] = Certificate(t, ((1, Br(Gen("Xgen"), Gen("Ygen"))),), neg(sum_a(g)), -g)
    Z = Certificate(t, _bracket_parts(_unit(out["negsumA"]), _unit(out["negsumB"])),
                    negsum(g), g)
    out["negsum"] = Z
    Zu = Certificate(t, _unit(Z), negsum(g), 1)
    for i in range(1, g + 1):
        others = As[:i - 1] + As[i:]
        out[f"negA{i}"] = _chain_cert([Y] + others, Zu, neg(basis_a(g, i)), (-1) ** (g - 1))
    return out


def _compact_b(g: int, i: int) -> Certificate:
    """Single-word certificate for [B_i], g >= 2.

    u = ad(A_i)^g (Y) = [g A_i + sum B] pairs to zero with every term of X
    except [B_i], so [u, X] = g [g A_i + sum B + B_i]; then ad([-sum B])
    contributes g and each ad([-A_i]) contributes -1.
    """
    t = proposition_table(g)
    internal = proposition_internal_certificates(g)
    Ai = _leaf(t, f"A{i}")
    u = _chain_cert([Ai] * g, _leaf(t, "Ygen"), add(scale(g, basis_a(g, i)), sum_b(g)), 1)
    X = Certificate(t, ((1, Gen("Xgen")),), negsum(g), 1)
    ops = [internal[f"negA{i}"]] * g + [internal["negsumB"], u]
    return _chain_cert(ops, X, basis_b(g, i), (-1) ** g * g * g)


def _compact_neg_b1() -> Certificate:
    """Single-word certificate for [-B_1] at g = 1.

    [[A,X],A] = -[A-B] - [2A+B]; bracketing with X gives
    2[-2B] - 2[2A+2B], and [A+B] = [A,Y] kills the second term, leaving
    4[A-B]. Finally [X,Y] = -[-A] turns that into 4[-B].
    """
    t = proposition_table(1)
    A, X, Y = Gen("A1"), Gen("Xgen"), Gen("Ygen")
    word = Br(Br(Br(Br(Br(A, X), A), X), Br(A, Y)), Br(X, Y))
    return Certificate(t, ((1, word),), neg(basis_b(1, 1)), 4)


@lru_cache(maxsize=None)
def proposition_table_certificates(g: int, compact: bool = False) -> dict:
    """Certificate over proposition_table(g) for each upper_table(g) generator.

    With ``compact`` every certificate except the one for [0] is a single
    word: for g >= 2 [B_i] avoids the two-part ad([-A_i])ad([A_i])(X) + Z,
    and for g = 1 [-A_1-B_1] avoids the two-part [X - Y, [A_1]]. Substituting
    multi-part certificates into long words multiplies the part count.
    """
    t = proposition_table(g)
    internal = proposition_internal_certificates(g)
    X = ((1, Gen("Xgen")),)
    out = {f"A{i}": _leaf(t, f"A{i}") for i in range(1, g + 1)}
    Z = internal["negsum"]
    out["negsum"] = Z
    if g == 1:
        out["B1"] = _leaf(t, "Ygen")
        if compact:
            Z = Certificate(t, _bracket_parts(_unit(internal["negA"]),
                                              _unit(_compact_neg_b1())), negsum(1), 1)
            out["negsum"] = Z
        # [0] = X - [-A_1-B_1] - Y
        combo = X + tuple((-c, w) for c, w in _unit(Z)) + ((-1, Gen("Ygen")),)
        out["zero"] = Certificate(t, combo, zero(1), 1)
        return out
    for i in range(1, g + 1):
        Ai = _leaf(t, f"A{i}")
        two_part = Certificate(t, _apply([internal[f"negA{i}"], Ai], X) + _unit(Z),
                                  basis_b(g, i), -1)
        out[f"B{i}"] = _compact_b(g, i) if compact else two_part
    # [0] = X - Z - [B_1] - ... - [B_g]
    combo = X + tuple((-c, w) for c, w in _unit(Z))
    for i in range(1, g + 1):
        combo += tuple((-c, w) for c, w in _unit(out[f"B{i}"]))
    out["zero"] = Certificate(t, combo, zero(g), 1)
    return out


def synthesize_from_proposition(x: Sequence[int], g: int) -> Certificate:
    """Certificate for [x] over the g+2 generators of proposition_table(g)."""
    return substitute(synthesize_from_upper(x, g),
                      proposition_table_certificates(g, compact=True), check=False)


def synthesize(x: Sequence[int], g: int, source: str = "upper") -> Certificate:
    if source == "upper":
        return synthesize_from_upper(x, g)
    if source == "proposition":
        return synthesize_from_proposition(x, g)
    if source == "lemma2":
        return lemma2_certificate(x, g)
    raise ValueError(f"unknown generator table {source!r}")
