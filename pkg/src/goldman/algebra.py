"""Sparse exact-rational elements of QH and the bracket [[x],[y]] = <x,y>[x+y]."""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .lattice import (GenusMismatch, Vector, format_vector, genus_of,
                      intersection, zero)


class Element:
    """A finite rational combination of lattice vectors.

    Immutable. Zero coefficients are never stored, and the genus is kept
    explicitly so that the zero element still knows where it lives.
    """

    __slots__ = ("g", "_terms", "_hash")

    def __init__(self, g: int, terms: Mapping[Sequence[int], object] | None = None):
        self.g = g
        clean = {}
        for v, c in (terms or {}).items():
            v = tuple(v)
            if genus_of(v) != g:
                raise GenusMismatch(f"term {v} does not live in genus {g}")
            c = Fraction(c)
            if c:
                clean[v] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, g: int, terms: dict) -> "Element":
        # caller guarantees tuple keys, Fraction values, no zeros
        e = cls.__new__(cls)
        e.g = g
        e._terms = terms
        e._hash = None
        return e

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms in lexicographic order of the vectors."""
        return sorted(self._terms.items())

    def support(self) -> list[Vector]:
        return sorted(self._terms)

    def coefficient(self, v: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(v), Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.g == other.g and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.g, frozenset(self._terms.items())))
        return self._hash

    def _check(self, other: "Element"):
        if self.g != other.g:
            raise GenusMismatch(f"genus mismatch: {self.g} vs {other.g}")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        out = dict(self._terms)
        for v, c in other._terms.items():
            s = out.get(v, 0) + c
            if s:
                out[v] = s
            else:
                out.pop(v, None)
        return Element._raw(self.g, out)

    def __neg__(self) -> "Element":
        return Element._raw(self.g, {v: -c for v, c in self._terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __mul__(self, c) -> "Element":
        c = Fraction(c)
        if not c:
            return Element._raw(self.g, {})
        return Element._raw(self.g, {v: c * a for v, a in self._terms.items()})

    __rmul__ = __mul__

    def __repr__(self):
        return f"Element({format_element(self)!r}, g={self.g})"

    def __str__(self):
        return format_element(self)


def basis_element(x: Sequence[int]) -> Element:
    x = tuple(x)
    return Element._raw(genus_of(x), {x: Fraction(1)})


def zero_element(g: int) -> Element:
    return Element._raw(g, {})


def linear_combine(parts: Iterable[tuple[object, Element]], g: int | None = None) -> Element:
    parts = list(parts)
    if g is None:
        if not parts:
            raise ValueError("cannot infer genus of an empty combination")
        g = parts[0][1].g
    out: dict = {}
    for c, e in parts:
        if e.g != g:
            raise GenusMismatch(f"genus mismatch: {g} vs {e.g}")
        c = Fraction(c)
        if not c:
            continue
        for v, a in e._terms.items():
            s = out.get(v, 0) + c * a
            if s:
                out[v] = s
            else:
                out.pop(v, None)
    return Element._raw(g, out)


def bracket(e1: Element, e2: Element) -> Element:
    e1._check(e2)
    g = e1.g
    out: dict = {}
    for x, c1 in e1._terms.items():
        for y, c2 in e2._terms.items():
            k = intersection(x, y)
            if not k:
                continue
            v = tuple(a + b for a, b in zip(x, y))
            s = out.get(v, 0) + k * c1 * c2
            if s:
                out[v] = s
            else:
                out.pop(v, None)
    return Element._raw(g, out)


def ad_chain_apply(ops: Sequence[Element], target: Element) -> Element:
    """ad(ops[0]) ad(ops[1]) ... ad(ops[-1]) (target).

    The last operator is applied first, as in ad(u)ad(v)(w) = [u,[v,w]].
    """
    out = target
    for op in reversed(ops):
        out = bracket(op, out)
    return out


def project_away_zero(e: Element) -> Element:
    """Image of e in QH / Q[0]: drop the coefficient of the zero vector."""
    z = zero(e.g)
    return Element._raw(e.g, {v: c for v, c in e._terms.items() if v != z})


# --- text form ------------------------------------------------------------------

def format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_element(e: Element) -> str:
    if not e:
        return "0"
    return " + ".join(f"{format_rational(c)}*{format_vector(v)}" for v, c in e.items())


_TERM_RE = re.compile(
    r"\s*(?:(?P<coef>[+-]?\d+(?:/\d+)?)\s*\*\s*)?"
    r"(?P<sign>-)?\[\s*(?P<vec>-?\d+(?:\s*,\s*-?\d+)*)\s*\]\s*")


def parse_element(text: str, g: int | None = None) -> Element:
    """Parse ``c1*[v1] + c2*[v2] + ...``; a bare ``[v]`` means coefficient 1.

    ``0`` is the zero element (needs ``g``). Errors name the character offset.
    """
    if text.strip() == "0":
        if g is None:
            raise ValueError("the zero element needs an explicit genus")
        return zero_element(g)
    pos = 0
    parts = []
    while True:
        m = _TERM_RE.match(text, pos)
        if not m:
            raise ValueError(f"malformed element at offset {pos}: {text[pos:pos + 20]!r}")
        coef = Fraction(m.group("coef") or 1)
        if m.group("sign"):
            coef = -coef
        vec = tuple(int(c) for c in m.group("vec").split(","))
        if g is None:
            g = genus_of(vec)
        elif len(vec) != 2 * g:
            raise GenusMismatch(f"vector at offset {m.start('vec')} does not have length {2 * g}")
        parts.append((coef, basis_element(vec)))
        pos = m.end()
        if pos == len(text):
            break
        if text[pos] != "+":
            raise ValueError(f"expected '+' at offset {pos}")
        pos += 1
    return linear_combine(parts, g)
