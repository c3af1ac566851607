import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cocyclelab.errors import InvalidType, ZeroRoot
from cocyclelab.roots import (
    SimpleType,
    all_simple_types,
    build_root_system,
    dot,
    parse_types,
    positive_root_count,
    reflect,
)

F = Fraction
H = Fraction(1, 2)


def unit(n, i, c=1):
    v = [F(0)] * n
    v[i] = F(c)
    return v


def pm_pairs(n):
    """All +-e_i +- e_j, i < j."""
    out = set()
    for i, j in itertools.combinations(range(n), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            v = [F(0)] * n
            v[i], v[j] = F(si), F(sj)
            out.add(tuple(v))
    return out


def oracle_roots(family, n):
    """Root sets written down directly from the classical lattice descriptions."""
    if family == "A":
        out = set()
        for i, j in itertools.permutations(range(n + 1), 2):
            v = [F(0)] * (n + 1)
            v[i], v[j] = F(1), F(-1)
            out.add(tuple(v))
        return out
    if family == "B":
        return pm_pairs(n) | {tuple(unit(n, i, s)) for i in range(n) for s in (1, -1)}
    if family == "C":
        return pm_pairs(n) | {tuple(unit(n, i, 2 * s)) for i in range(n) for s in (1, -1)}
    if family == "D":
        return pm_pairs(n)
    if family == "E" and n == 8:
        halves = {tuple(H * s for s in signs) for signs in itertools.product((1, -1), repeat=8)
                  if signs.count(-1) % 2 == 0}
        return pm_pairs(8) | halves
    if family == "F":
        halves = {tuple(H * s for s in signs) for signs in itertools.product((1, -1), repeat=4)}
        return pm_pairs(4) | {tuple(unit(4, i, s)) for i in range(4) for s in (1, -1)} | halves
    if family == "G":
        out = set()
        for i, j in itertools.permutations(range(3), 2):
            v = [F(0)] * 3
            v[i], v[j] = F(1), F(-1)
            out.add(tuple(v))
        for i in range(3):
            for s in (1, -1):
                v = [F(-s)] * 3
                v[i] = F(2 * s)
                out.add(tuple(v))
        return out
    raise NotImplementedError


CLASSICAL = [SimpleType(f, n) for f in "ABCD" for n in range(1, 7) if not (f == "D" and n < 2)]


@pytest.mark.parametrize("t", CLASSICAL + [SimpleType("E", 8), SimpleType("F", 4), SimpleType("G", 2)],
                         ids=str)
def test_root_set_matches_lattice_description(t):
    rs = build_root_system([t])
    assert set(rs.all_roots) == oracle_roots(t.family, t.rank)


@pytest.mark.parametrize("n", [6, 7])
def test_e6_e7_sit_inside_e8(n):
    e8 = set(build_root_system("E8").all_roots)
    rs = build_root_system(f"E{n}")
    assert len(rs.all_roots) == {6: 72, 7: 126}[n]
    assert set(rs.all_roots) <= e8


def test_examples():
    assert len(build_root_system("A2").all_roots) == 6
    assert build_root_system("A2").rank == 2
    assert len(build_root_system("G2").all_roots) == 12
    prod = build_root_system("A1,A1")
    assert len(prod.all_roots) == 4 and prod.rank == 2
    assert positive_root_count(build_root_system("A2")) == 3
    assert positive_root_count(build_root_system("B2")) == 4
    assert positive_root_count(build_root_system("E8")) == 120


@pytest.mark.parametrize("t", all_simple_types(8), ids=str)
def test_invariants_all_types(t):
    rs = build_root_system([t])
    roots = set(rs.all_roots)
    assert positive_root_count(rs) == t.positive_root_count()
    assert len(rs.positive_roots) * 2 == len(rs.all_roots)
    assert {tuple(-x for x in r) for r in rs.positive_roots} | set(rs.positive_roots) == roots
    for a in rs.simple_roots:
        for b in rs.all_roots:
            assert reflect(a, b) in roots
    assert rs.rank == t.rank


def test_product_blocks_are_orthogonal():
    rs = build_root_system("B2,A2,G2")
    assert rs.rank == 6 and rs.ambient_dim == 2 + 3 + 3
    assert len(rs.all_roots) == 8 + 6 + 12
    blocks = [range(0, 2), range(2, 5), range(5, 8)]

    def block(r):
        return {k for k, sl in enumerate(blocks) if any(r[i] for i in sl)}

    for r in rs.all_roots:
        assert len(block(r)) == 1
    for r, s in itertools.product(rs.all_roots, repeat=2):
        if block(r) != block(s):
            assert dot(r, s) == 0


def test_canonical_order_is_lexicographic_and_deterministic():
    a = build_root_system("F4").all_roots
    assert list(a) == sorted(a)
    assert a == build_root_system("F4").all_roots


def test_reflect_examples():
    a = (F(1), F(-1), F(0))
    assert reflect(a, a) == tuple(-x for x in a)
    v = (F(1), F(1), F(5))
    assert reflect(a, v) == v
    w = (F(3, 7), F(-2), F(1, 3))
    assert reflect(a, reflect(a, w)) == w


def test_zero_root():
    with pytest.raises(ZeroRoot):
        reflect((F(0), F(0)), (F(1), F(2)))


rationals = st.builds(Fraction, st.integers(-100, 100), st.integers(1, 50))


@settings(max_examples=100, deadline=None)
@given(st.lists(rationals, min_size=3, max_size=3), st.lists(rationals, min_size=3, max_size=3),
       st.lists(rationals, min_size=3, max_size=3))
def test_reflection_is_an_isometry(a, u, v):
    if all(x == 0 for x in a):
        return
    su, sv = reflect(a, u), reflect(a, v)
    assert dot(su, sv) == dot(u, v)
    assert reflect(a, su) == tuple(u)


@pytest.mark.parametrize("family,rank", [("E", 5), ("E", 9), ("F", 3), ("G", 3), ("D", 1), ("A", 0),
                                         ("B", 0), ("H", 3)])
def test_invalid_types(family, rank):
    with pytest.raises(InvalidType):
        SimpleType(family, rank)


def test_parse_types():
    assert parse_types("B2,a2") == [SimpleType("B", 2), SimpleType("A", 2)]
    assert parse_types(" e7 ") == [SimpleType("E", 7)]
    for bad in ("", "X2", "A", "A2,,B2", "E9", "A-1"):
        with pytest.raises(InvalidType):
            parse_types(bad)
    with pytest.raises(InvalidType):
        build_root_system([])
