"""Bracket words over a generator table, and certificates built from them.

A certificate claims ``eval(combo) == scalar * [target]``. Words can get
deep (long ad chains composed by substitution), so every traversal here is
iterative and shared subtrees are evaluated once.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .algebra import (Element, basis_element, bracket, format_element,
                      format_rational, linear_combine, parse_element)
from .lattice import GenusMismatch, Vector, format_vector, intersection, parse_vector


class Gen:
    __slots__ = ("name",)

    def __init__(self, name: str):
        self.name = name

    def __eq__(self, other):
        return words_equal(self, other)

    def __hash__(self):
        return hash(("gen", self.name))

    def __repr__(self):
        return f"Gen({self.name!r})"


class Br:
    __slots__ = ("left", "right")

    def __init__(self, left: "Word", right: "Word"):
        self.left = left
        self.right = right

    def __eq__(self, other):
        return words_equal(self, other)

    __hash__ = None

    def __repr__(self):
        return f"Br({self.left!r}, {self.right!r})"


Word = Gen | Br


def words_equal(u, v) -> bool:
    stack = [(u, v)]
    while stack:
        a, b = stack.pop()
        if a is b:
            continue
        if isinstance(a, Gen) and isinstance(b, Gen):
            if a.name != b.name:
                return False
        elif isinstance(a, Br) and isinstance(b, Br):
            stack.append((a.left, b.left))
            stack.append((a.right, b.right))
        else:
            return False
    return True


def chain(ops: Sequence[Word], target: Word) -> Word:
    """The word ad(ops[0]) ... ad(ops[-1]) (target)."""
    w = target
    for op in reversed(ops):
        w = Br(op, w)
    return w


def right_nested(names: Sequence[str]) -> Word:
    """[s1,[s2,[...,[s_{n-1},s_n]...]]] over generator names."""
    if not names:
        raise ValueError("empty word")
    return chain([Gen(n) for n in names[:-1]], Gen(names[-1]))


def _postorder(roots: Iterable[Word]) -> Iterator[Word]:
    """Each distinct node (by identity) once, children before parents."""
    seen = set()
    for root in roots:
        stack = [(root, False)]
        while stack:
            node, expanded = stack.pop()
            if id(node) in seen:
                continue
            if isinstance(node, Gen) or expanded:
                seen.add(id(node))
                yield node
            else:
                stack.append((node, True))
                stack.append((node.right, False))
                stack.append((node.left, False))


def leaves(word: Word) -> set[str]:
    return {n.name for n in _postorder([word]) if isinstance(n, Gen)}


def word_stats(word: Word) -> tuple[int, int]:
    """(number of leaves counted with multiplicity, depth)."""
    info: dict[int, tuple[int, int]] = {}
    for n in _postorder([word]):
        if isinstance(n, Gen):
            info[id(n)] = (1, 0)
        else:
            (l1, d1), (l2, d2) = info[id(n.left)], info[id(n.right)]
            info[id(n)] = (l1 + l2, 1 + max(d1, d2))
    return info[id(word)]


class UnresolvedName(KeyError):
    def __str__(self):
        return f"unresolved name {self.args[0]!r}"


class GeneratorTable:
    """Ordered, named generators sharing one genus."""

    def __init__(self, entries: Iterable[tuple[str, Element]]):
        self.entries = tuple((n, e) for n, e in entries)
        if not self.entries:
            raise ValueError("generator table is empty")
        self._by_name = {}
        for name, e in self.entries:
            if not name:
                raise ValueError("generator names must be nonempty")
            if name in self._by_name:
                raise ValueError(f"duplicate generator name {name!r}")
            self._by_name[name] = e
        self.g = self.entries[0][1].g
        if any(e.g != self.g for _, e in self.entries):
            raise GenusMismatch("generator values do not share one genus")

    def __getitem__(self, name: str) -> Element:
        try:
            return self._by_name[name]
        except KeyError:
            raise UnresolvedName(name) from None

    def __contains__(self, name):
        return name in self._by_name

    def __len__(self):
        return len(self.entries)

    def names(self) -> list[str]:
        return [n for n, _ in self.entries]

    def __eq__(self, other):
        if not isinstance(other, GeneratorTable):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"GeneratorTable({self.names()})"


Combo = tuple  # tuple[tuple[Fraction, Word], ...]


def evaluate(combo: Sequence[tuple[object, Word]], table: GeneratorTable) -> Element:
    """sum of scalar * eval(word); leaves look up the table, nodes bracket."""
    values: dict[int, Element] = {}
    words = [w for _, w in combo]
    for node in _postorder(words):
        if isinstance(node, Gen):
            values[id(node)] = table[node.name]
        else:
            values[id(node)] = bracket(values[id(node.left)], values[id(node.right)])
    return linear_combine(((c, values[id(w)]) for c, w in combo), table.g)


def eval_word(word: Word, table: GeneratorTable) -> Element:
    return evaluate(((1, word),), table)


def nested_coefficient(seq: Sequence[Sequence[int]]) -> tuple[Fraction, Vector]:
    """Closed form of a right-nested bracket of basis elements.

    [s1,[s2,[...,[s_{n-1},s_n]...]]] = prod_i <s_i, s_{i+1}+...+s_n> [s1+...+s_n]
    """
    if not seq:
        raise ValueError("nested_coefficient needs a nonempty sequence")
    seq = [tuple(s) for s in seq]
    suffix = seq[-1]
    coef = 1
    for s in reversed(seq[:-1]):
        coef *= intersection(s, suffix)
        suffix = tuple(a + b for a, b in zip(s, suffix))
    return Fraction(coef), suffix


@dataclass(frozen=True, eq=False)
class Certificate:
    """Claim: evaluate(combo, table) == scalar * [target]."""

    table: GeneratorTable
    combo: Combo
    target: Vector
    scalar: Fraction

    def __post_init__(self):
        object.__setattr__(self, "scalar", Fraction(self.scalar))
        object.__setattr__(self, "target", tuple(self.target))
        object.__setattr__(self, "combo",
                           tuple((Fraction(c), w) for c, w in self.combo))
        if not self.scalar:
            raise ValueError("certificate scalar must be nonzero")
        if any(not c for c, _ in self.combo):
            raise ValueError("combo scalars must be nonzero")

    def __eq__(self, other):
        if not isinstance(other, Certificate):
            return NotImplemented
        return (self.table == other.table and self.target == other.target
                and self.scalar == other.scalar
                and len(self.combo) == len(other.combo)
                and all(c1 == c2 and words_equal(w1, w2)
                        for (c1, w1), (c2, w2) in zip(self.combo, other.combo)))

    __hash__ = None

    def leaves(self) -> set[str]:
        out = set()
        for _, w in self.combo:
            out |= leaves(w)
        return out

    def stats(self) -> dict:
        sizes = [word_stats(w) for _, w in self.combo]
        return {"parts": len(sizes),
                "leaves": sum(s[0] for s in sizes),
                "depth": max((s[1] for s in sizes), default=0)}

    def normalized(self) -> "Certificate":
        """Same claim with scalar 1 (part scalars divided by the old scalar)."""
        s = self.scalar
        return Certificate(self.table, tuple((c / s, w) for c, w in self.combo),
                           self.target, 1)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    difference: Element

    def __bool__(self):
        return self.ok


def verify(cert: Certificate) -> Verdict:
    diff = evaluate(cert.combo, cert.table) - cert.scalar * basis_element(cert.target)
    return Verdict(not diff, diff)


def leaf_certificate(table: GeneratorTable, name: str) -> Certificate:
    """The trivial certificate for a generator whose value is a basis element."""
    e = table[name]
    if len(e) != 1:
        raise ValueError(f"generator {name!r} is not a scalar multiple of a basis element")
    (v, c), = e.items()
    return Certificate(table, ((1, Gen(name)),), v, c)


# --- serialization ---------------------------------------------------------------

class CertificateParseError(ValueError):
    def __init__(self, position, reason):
        super().__init__(f"{position}: {reason}")
        self.position = position
        self.reason = reason


def word_to_json(word: Word):
    built: dict[int, list] = {}
    for n in _postorder([word]):
        if isinstance(n, Gen):
            built[id(n)] = ["gen", n.name]
        else:
            built[id(n)] = ["br", built[id(n.left)], built[id(n.right)]]
    return built[id(word)]


def word_from_json(obj, where="word") -> Word:
    # iterative so that deep words do not hit the recursion limit
    result = {}
    stack = [(obj, where, False)]
    while stack:
        node, path, expanded = stack.pop()
        if not isinstance(node, list) or not node:
            raise CertificateParseError(path, "word must be a nonempty array")
        tag = node[0]
        if tag == "gen":
            if len(node) != 2 or not isinstance(node[1], str) or not node[1]:
                raise CertificateParseError(path, 'expected ["gen", name]')
            result[id(node)] = Gen(node[1])
        elif tag == "br":
            if len(node) != 3:
                raise CertificateParseError(path, 'expected ["br", word, word]')
            if expanded:
                result[id(node)] = Br(result[id(node[1])], result[id(node[2])])
            else:
                stack.append((node, path, True))
                stack.append((node[2], path + "[2]", False))
                stack.append((node[1], path + "[1]", False))
        else:
            raise CertificateParseError(path, f"unknown word tag {tag!r}")
    return result[id(obj)]


def certificate_to_dict(cert: Certificate) -> dict:
    return {
        "genus": cert.table.g,
        "generators": {n: format_element(e) for n, e in cert.table.entries},
        "combo": [{"scalar": format_rational(c), "word": word_to_json(w)}
                  for c, w in cert.combo],
        "target": format_vector(cert.target),
        "scalar": format_rational(cert.scalar),
        "meta": cert.stats(),
    }


def serialize(cert: Certificate) -> str:
    return json.dumps(certificate_to_dict(cert), separators=(",", ":")) + "\n"


def _rational(text, path) -> Fraction:
    if not isinstance(text, (str, int)) or isinstance(text, bool):
        raise CertificateParseError(path, "rational must be a string p/q or an integer")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CertificateParseError(path, f"bad rational {text!r}") from exc


def parse(text: str) -> Certificate:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateParseError(f"line {exc.lineno} column {exc.colno} (char {exc.pos})",
                                    exc.msg) from exc
    if not isinstance(doc, dict):
        raise CertificateParseError("$", "certificate must be a JSON object")
    for key in ("genus", "generators", "combo", "target", "scalar"):
        if key not in doc:
            raise CertificateParseError("$", f"missing field {key!r}")
    g = doc["genus"]
    if not isinstance(g, int) or isinstance(g, bool) or g < 1:
        raise CertificateParseError("$.genus", "genus must be a positive integer")
    gens = doc["generators"]
    if not isinstance(gens, dict) or not gens:
        raise CertificateParseError("$.generators", "expected a nonempty object")
    entries = []
    for name, text_e in gens.items():
        try:
            entries.append((name, parse_element(text_e, g)))
        except (ValueError, TypeError) as exc:
            raise CertificateParseError(f"$.generators.{name}", str(exc)) from exc
    try:
        table = GeneratorTable(entries)
    except ValueError as exc:
        raise CertificateParseError("$.generators", str(exc)) from exc
    if not isinstance(doc["combo"], list) or not doc["combo"]:
        raise CertificateParseError("$.combo", "expected a nonempty array")
    combo = []
    for i, part in enumerate(doc["combo"]):
        path = f"$.combo[{i}]"
        if not isinstance(part, dict) or "scalar" not in part or "word" not in part:
            raise CertificateParseError(path, "expected {scalar, word}")
        c = _rational(part["scalar"], path + ".scalar")
        if not c:
            raise CertificateParseError(path + ".scalar", "combo scalars must be nonzero")
        w = word_from_json(part["word"], path + ".word")
        for name in sorted(leaves(w)):
            if name not in table:
                raise CertificateParseError(path + ".word", f"unresolved name {name!r}")
        combo.append((c, w))
    try:
        target = parse_vector(doc["target"]) if isinstance(doc["target"], str) else None
    except ValueError as exc:
        raise CertificateParseError("$.target", str(exc)) from exc
    if target is None or len(target) != 2 * g:
        raise CertificateParseError("$.target", f"expected a vector of length {2 * g}")
    scalar = _rational(doc["scalar"], "$.scalar")
    if not scalar:
        raise CertificateParseError("$.scalar", "scalar must be nonzero")
    return Certificate(table, tuple(combo), target, scalar)
