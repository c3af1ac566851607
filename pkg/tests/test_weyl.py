from fractions import Fraction

import pytest
import sympy

from cocyclelab.errors import NotInvolution
from cocyclelab.roots import all_simple_types, build_root_system
from cocyclelab.weyl import (
    LongestElementReport,
    apply_action,
    involution_signature,
    is_minus_one,
    longest_element,
    matmul,
    simple_root_permutation,
)


def weyl_group_matrices(rs):
    """Enumerate the Weyl group as integer matrices in the simple-root basis (small ranks only)."""
    C = rs.cartan_matrix()
    n = rs.rank
    gens = []
    for i in range(n):
        m = [[int(r == c) for c in range(n)] for r in range(n)]
        for c in range(n):
            m[i][c] -= C[i][c]
        gens.append(tuple(map(tuple, m)))
    ident = tuple(tuple(int(r == c) for c in range(n)) for r in range(n))
    seen, frontier = {ident}, [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                p = tuple(tuple(sum(g[r][k] * w[k][c] for k in range(n)) for c in range(n)) for r in range(n))
                if p not in seen:
                    seen.add(p)
                    nxt.append(p)
        frontier = nxt
    return seen


def brute_force_w0(rs):
    pos = [rs.coefficients[r] for r in rs.positive_roots]
    hits = []
    for w in weyl_group_matrices(rs):
        if all(any(x < 0 for x in (sum(w[i][j] * c[j] for j in range(rs.rank)) for i in range(rs.rank)))
               for c in pos):
            hits.append(w)
    assert len(hits) == 1
    return hits[0]


@pytest.mark.parametrize("type_str,order", [("A1", 2), ("A3", 24), ("B3", 48), ("C3", 48), ("G2", 12),
                                        ("D4", 192), ("A2,A1", 12)])
def test_action_matches_brute_force_group_search(type_str, order):
    rs = build_root_system(type_str)
    assert len(weyl_group_matrices(rs)) == order
    rep = longest_element(rs)
    w0 = brute_force_w0(rs)
    assert [[int(x) for x in row] for row in rep.action] == [list(r) for r in w0]


def test_examples():
    rep = longest_element(build_root_system("A1"))
    assert len(rep.word) == 1 and rep.action == ((Fraction(-1),),) and rep.minus_one
    rep = longest_element(build_root_system("A2"))
    assert len(rep.word) == 3 and not rep.minus_one
    rep = longest_element(build_root_system("G2"))
    assert len(rep.word) == 6 and rep.minus_one


@pytest.mark.parametrize("type_str,sig", [("A2", (1, 1)), ("G2", (0, 2)), ("A1,A1", (0, 2))])
def test_signature_examples(type_str, sig):
    assert involution_signature(longest_element(build_root_system(type_str))) == sig


@pytest.mark.parametrize("type_str,expected", [("B3", True), ("A3", False), ("D3", False)])
def test_minus_one_examples(type_str, expected):
    assert is_minus_one(longest_element(build_root_system(type_str))) is expected


@pytest.mark.parametrize("t", all_simple_types(8), ids=str)
def test_report_invariants(t):
    rs = build_root_system([t])
    rep = longest_element(rs)
    n = rs.rank
    ident = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    assert len(rep.word) == t.positive_root_count()
    assert matmul(rep.action, rep.action) == ident
    s, t_ = rep.signature
    assert s + t_ == n and s - t_ == sum(rep.action[i][i] for i in range(n))
    assert rep.minus_one == (s == 0) == (rep.action == tuple(tuple(-x for x in r) for r in ident))
    assert simple_root_permutation(rep) is not None
    for r in rs.positive_roots:
        image = apply_action(rep, rs.coefficients[r])
        assert all(x <= 0 for x in image) and any(x < 0 for x in image)


@pytest.mark.parametrize("type_str", ["A4", "D5", "E6", "B3,A2"])
def test_signature_matches_eigenspace_oracle(type_str):
    rep = longest_element(build_root_system(type_str))
    m = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in rep.action])
    eye = sympy.eye(m.rows)
    s = m.rows - (m - eye).rank()
    t = m.rows - (m + eye).rank()
    assert rep.signature == (s, t)


def test_word_is_reduced_and_realizes_w0():
    rs = build_root_system("F4")
    rep = longest_element(rs)
    C = rs.cartan_matrix()
    n = rs.rank
    w = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for i in rep.word:
        s = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
        for c in range(n):
            s[i][c] -= C[i][c]
        w = matmul(s, w)
    assert tuple(map(tuple, w)) == rep.action
    # reversed word is a reduced word for w0^{-1} = w0
    w = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for i in reversed(rep.word):
        s = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
        for c in range(n):
            s[i][c] -= C[i][c]
        w = matmul(s, w)
    assert tuple(map(tuple, w)) == rep.action


def test_product_signature_and_minus_one_are_componentwise():
    parts = ["A2", "B2", "E6", "G2"]
    reps = {p: longest_element(build_root_system(p)) for p in parts}
    for a in parts:
        for b in parts:
            prod = longest_element(build_root_system(f"{a},{b}"))
            sa, sb = reps[a].signature, reps[b].signature
            assert prod.signature == (sa[0] + sb[0], sa[1] + sb[1])
            assert prod.minus_one == (reps[a].minus_one and reps[b].minus_one)


def test_minus_one_classification():
    computed = {str(t) for t in all_simple_types(8) if longest_element(build_root_system([t])).minus_one}
    expected = ({"A1", "E7", "E8", "F4", "G2"} | {f"B{n}" for n in range(1, 9)}
                | {f"C{n}" for n in range(1, 9)} | {f"D{n}" for n in (2, 4, 6, 8)})
    assert computed == expected


def test_not_involution_detected():
    rs = build_root_system("A2")
    bogus = LongestElementReport(rs, (0,), ((Fraction(1), Fraction(1)), (Fraction(0), Fraction(1))))
    with pytest.raises(NotInvolution):
        involution_signature(bogus)


def test_json_shape():
    d = longest_element(build_root_system("A2")).to_dict()
    assert set(d) == {"type", "rank", "word_length", "word", "basis", "action", "s", "t", "minus_one"}
    assert d["action"] == [["0/1", "-1/1"], ["-1/1", "0/1"]]
    assert d["word_length"] == 3 and (d["s"], d["t"]) == (1, 1)
