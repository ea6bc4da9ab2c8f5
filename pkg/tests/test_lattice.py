import itertools
import random
from math import gcd

import pytest
from hypothesis import given, strategies as st

from goldman.lattice import (GenusConfig, GenusMismatch, add, basis_a, basis_b, determinant,
                             format_vector, hermite_normal_form, hnf_diagonal, intersection,
                             is_primitive, is_z_basis, monoid_member, parse_vector, z_spans,
                             zero)


def gram_pairing(x, y):
    # oracle: expand bilinearly over basis pairs with the symplectic Gram matrix
    g = len(x) // 2

    def gram(i, j):
        if i < g and j == i + g:
            return 1
        if j < g and i == j + g:
            return -1
        return 0

    return sum(x[i] * y[j] * gram(i, j) for i in range(2 * g) for j in range(2 * g))


def vectors(g, lo=-5, hi=5):
    return st.tuples(*[st.integers(lo, hi)] * (2 * g))


def test_intersection_examples():
    assert intersection(basis_a(1, 1), basis_b(1, 1)) == 1
    x = add(basis_a(2, 1), (0, 0, 0, 2))
    y = add(basis_b(2, 1), basis_a(2, 2))
    assert gram_pairing(x, y) == -1
    assert intersection(x, y) == -1
    with pytest.raises(GenusMismatch):
        intersection((1, 0), (1, 0, 0, 0))


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_symplectic_basis_relations(g):
    for i, j in itertools.product(range(1, g + 1), repeat=2):
        assert intersection(basis_a(g, i), basis_a(g, j)) == 0
        assert intersection(basis_b(g, i), basis_b(g, j)) == 0
        assert intersection(basis_a(g, i), basis_b(g, j)) == int(i == j)


@given(st.integers(1, 3).flatmap(lambda g: st.tuples(vectors(g), vectors(g), vectors(g))))
def test_skew_and_bilinear(xyz):
    x, y, z = xyz
    assert intersection(x, x) == 0
    assert intersection(x, y) == -intersection(y, x)
    assert intersection(add(x, z), y) == intersection(x, y) + intersection(z, y)
    assert intersection(x, y) == gram_pairing(x, y)


@pytest.mark.parametrize("g", [1, 2, 3])
def test_nondegenerate_on_window(g):
    basis = [basis_a(g, i) for i in range(1, g + 1)] + [basis_b(g, i) for i in range(1, g + 1)]
    for x in itertools.product(range(-2, 3), repeat=2 * g):
        if any(x):
            assert any(intersection(x, e) for e in basis)


def test_is_primitive():
    assert is_primitive(basis_a(1, 1))
    assert not is_primitive((2, 4))
    assert not is_primitive(zero(2))
    assert is_primitive((2, 3, 0, 0))


def index_by_minors(vs, n):
    """gcd of maximal minors (index of the row lattice when of full rank)."""
    out = 0
    for rows in itertools.combinations(vs, n):
        out = gcd(out, determinant(rows))
    return out


def test_z_spans_examples():
    c = GenusConfig(1)
    assert z_spans([(1, 0), (0, 1), (-1, -1)], c)
    assert not z_spans([(2, 0), (0, 1)], c)
    assert hnf_diagonal([(2, 0), (0, 1)], 1) == [2, 1]
    assert not z_spans([], c)


def test_hnf_against_minors():
    rng = random.Random(7)
    for _ in range(300):
        g = rng.randint(1, 2)
        n = 2 * g
        vs = [tuple(rng.randint(-4, 4) for _ in range(n)) for _ in range(rng.randint(0, n + 2))]
        diag = hnf_diagonal(vs, g)
        idx = index_by_minors(vs, n) if len(vs) >= n else 0
        if idx:
            assert len(diag) == n
            prod = 1
            for d in diag:
                prod *= d
            assert prod == idx
        else:
            assert len(diag) < n
        assert z_spans(vs, GenusConfig(g)) == (idx == 1)


def test_hnf_shape():
    rows = [(4, 6), (2, 2), (6, 9)]
    h = hermite_normal_form(rows, 2)
    assert h[0][0] * h[1][1] == index_by_minors(rows, 2)
    for i, row in enumerate(h):
        p = next(j for j, a in enumerate(row) if a)
        assert row[p] > 0
        for above in h[:i]:
            assert 0 <= above[p] < row[p]


def test_is_z_basis():
    c = GenusConfig(1)
    assert is_z_basis([(1, 0), (0, 1)], c)
    assert is_z_basis([(1, 1), (0, 1)], c)
    assert not is_z_basis([(2, 0), (0, 1)], c)
    assert not is_z_basis([(1, 0)], c)


def test_spanning_if_some_subset_is_basis():
    rng = random.Random(3)
    c = GenusConfig(1)
    for _ in range(200):
        vs = [tuple(rng.randint(-2, 2) for _ in range(2)) for _ in range(rng.randint(2, 5))]
        if any(is_z_basis(list(sub), c) for sub in itertools.combinations(vs, 2)):
            assert z_spans(vs, c)


def brute_monoid(x, S, bound):
    for n in range(bound + 1):
        for combo in itertools.combinations_with_replacement(sorted(S), n):
            if tuple(map(sum, zip(*combo))) == tuple(x) or (n == 0 and not any(x)):
                return sorted(combo)
    return None


def test_monoid_member_examples():
    A, B = basis_a(1, 1), basis_b(1, 1)
    assert monoid_member(add(A, B), [A, B], 2) == sorted([A, B])
    assert monoid_member((-1, 0), [A, B, (-1, -1)], 3) == sorted([B, (-1, -1)])
    assert monoid_member((-1, 0), [A, B], 10) is None


def test_monoid_member_against_enumeration():
    rng = random.Random(11)
    for _ in range(150):
        S = {tuple(rng.randint(-2, 2) for _ in range(2)) for _ in range(rng.randint(1, 4))}
        x = tuple(rng.randint(-3, 3) for _ in range(2))
        w = monoid_member(x, S, 4)
        expected = brute_monoid(x, S, 4)
        assert (w is None) == (expected is None)
        if w is not None:
            assert len(w) <= 4
            assert all(s in S for s in w)
            assert tuple(map(sum, zip(*w))) == x if w else not any(x)


def test_text_form():
    assert format_vector((2, 0, 0, -1)) == "[2,0,0,-1]"
    assert parse_vector("[2, 0,0,-1]") == (2, 0, 0, -1)
    for bad in ["[1,2,3]", "2,0", "[1,a]", "[]"]:
        with pytest.raises(ValueError):
            parse_vector(bad)
