"""Classical root systems in exact rational coordinates.

Simple roots follow the Bourbaki realizations (A_n in the sum-zero hyperplane
of Q^{n+1}, E_6 and E_7 inside the E_8 lattice in Q^8, G_2 in the sum-zero
plane of Q^3). Products are block diagonal: each factor gets its own slice of
the ambient coordinates.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from cocyclelab.errors import InvalidType, ZeroRoot

Vector = tuple[Fraction, ...]

FAMILIES = "ABCDEFG"

_TYPE_RE = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")


@dataclass(frozen=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        family = self.family.upper() if isinstance(self.family, str) else self.family
        object.__setattr__(self, "family", family)
        if family not in FAMILIES or len(family) != 1:
            raise InvalidType(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise InvalidType(f"rank must be an integer, got {self.rank!r}")
        r = self.rank
        ok = {
            "A": r >= 1,
            "B": r >= 1,
            "C": r >= 1,
            "D": r >= 2,
            "E": r in (6, 7, 8),
            "F": r == 4,
            "G": r == 2,
        }[family]
        if not ok:
            raise InvalidType(f"{family}{r} is not a valid simple type")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @property
    def ambient_dim(self) -> int:
        return {"A": self.rank + 1, "E": 8, "G": 3}.get(self.family, self.rank)

    def positive_root_count(self) -> int:
        """Closed-form |positive roots| for this type."""
        n = self.rank
        if self.family == "A":
            return n * (n + 1) // 2
        if self.family in "BC":
            return n * n
        if self.family == "D":
            return n * (n - 1)
        return {"E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6}[str(self)]


def parse_types(type_str: str) -> list[SimpleType]:
    """Parse a comma-separated label such as ``"B2,A2"`` (case-insensitive)."""
    if not type_str or not type_str.strip():
        raise InvalidType("empty type specification")
    out = []
    for part in type_str.split(","):
        m = _TYPE_RE.match(part)
        if m is None:
            raise InvalidType(f"cannot parse type label {part.strip()!r}")
        out.append(SimpleType(m.group(1), int(m.group(2))))
    return out


def format_types(factors: Iterable[SimpleType]) -> str:
    return ",".join(str(f) for f in factors)


def _unit(n: int, i: int, scale=1) -> list[Fraction]:
    v = [Fraction(0)] * n
    v[i] = Fraction(scale)
    return v


def _diff(n: int, i: int, j: int) -> list[Fraction]:
    # e_i - e_j
    v = [Fraction(0)] * n
    v[i] += 1
    v[j] -= 1
    return v


def _e8_simple_roots() -> list[list[Fraction]]:
    h = Fraction(1, 2)
    a1 = [h, -h, -h, -h, -h, -h, -h, h]
    a2 = [Fraction(1), Fraction(1)] + [Fraction(0)] * 6
    rest = [_diff(8, i, i - 1) for i in range(1, 7)]  # e2-e1, ..., e7-e6
    return [a1, a2] + rest


def _simple_roots_of(t: SimpleType) -> list[list[Fraction]]:
    n, fam = t.rank, t.family
    if fam == "A":
        return [_diff(n + 1, i, i + 1) for i in range(n)]
    if fam in "BC":
        roots = [_diff(n, i, i + 1) for i in range(n - 1)]
        roots.append(_unit(n, n - 1, 1 if fam == "B" else 2))
        return roots
    if fam == "D":
        roots = [_diff(n, i, i + 1) for i in range(n - 1)]
        last = [Fraction(0)] * n
        last[n - 2] = last[n - 1] = Fraction(1)
        roots.append(last)
        return roots
    if fam == "E":
        return _e8_simple_roots()[:n]
    if fam == "F":
        h = Fraction(1, 2)
        return [_diff(4, 1, 2), _diff(4, 2, 3), _unit(4, 3), [h, -h, -h, -h]]
    # G2
    return [_diff(3, 0, 1), [Fraction(-2), Fraction(1), Fraction(1)]]


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def reflect(root: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    """Reflect ``v`` in the hyperplane orthogonal to ``root``, exactly."""
    rr = dot(root, root)
    if rr == 0:
        raise ZeroRoot("cannot reflect through the zero vector")
    c = 2 * dot(v, root) / rr
    return tuple(Fraction(x) - c * a for x, a in zip(v, root))


@dataclass(frozen=True)
class RootSystem:
    """A (product of) reduced root system(s).

    ``coefficients`` maps every root to its coordinates in the simple-root
    basis; these are integers, and a root is positive exactly when all of
    them are non-negative.
    """

    factors: tuple[SimpleType, ...]
    ambient_dim: int
    simple_roots: tuple[Vector, ...]
    all_roots: tuple[Vector, ...]
    positive_roots: tuple[Vector, ...]
    coefficients: dict = field(compare=False, repr=False)

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    @property
    def label(self) -> str:
        return format_types(self.factors)

    def factor_ranks(self) -> list[int]:
        return [f.rank for f in self.factors]

    def cartan_matrix(self) -> list[list[int]]:
        """Entry (i, j) is 2<a_j, a_i>/<a_i, a_i>, so s_i(a_j) = a_j - C[i][j] a_i."""
        out = []
        for ai in self.simple_roots:
            aa = dot(ai, ai)
            row = []
            for aj in self.simple_roots:
                c = 2 * dot(aj, ai) / aa
                assert c.denominator == 1
                row.append(int(c))
            out.append(row)
        return out

    def is_root(self, v: Sequence[Fraction]) -> bool:
        return tuple(Fraction(x) for x in v) in self.coefficients


def build_root_system(factors: Sequence[SimpleType] | str) -> RootSystem:
    """Generate all roots by closing the simple roots under simple reflections."""
    if isinstance(factors, str):
        factors = parse_types(factors)
    factors = tuple(factors)
    if not factors:
        raise InvalidType("factor list is empty")
    for f in factors:
        if not isinstance(f, SimpleType):
            raise InvalidType(f"expected SimpleType, got {f!r}")

    ambient = sum(f.ambient_dim for f in factors)
    simple: list[Vector] = []
    offset = 0
    for f in factors:
        for r in _simple_roots_of(f):
            v = [Fraction(0)] * ambient
            v[offset:offset + len(r)] = r
            simple.append(tuple(v))
        offset += f.ambient_dim

    rank = len(simple)
    norms = [dot(a, a) for a in simple]
    coeffs: dict[Vector, tuple[int, ...]] = {}
    queue: deque[Vector] = deque()
    for i, a in enumerate(simple):
        coeffs[a] = tuple(1 if j == i else 0 for j in range(rank))
        queue.append(a)
    while queue:
        beta = queue.popleft()
        cb = coeffs[beta]
        for i, a in enumerate(simple):
            c = 2 * dot(beta, a) / norms[i]
            if c == 0:
                continue
            image = tuple(x - c * y for x, y in zip(beta, a))
            if image not in coeffs:
                ci = list(cb)
                ci[i] -= int(c)
                coeffs[image] = tuple(ci)
                queue.append(image)

    all_roots = tuple(sorted(coeffs))
    positive = tuple(r for r in all_roots if all(c >= 0 for c in coeffs[r]))
    return RootSystem(
        factors=factors,
        ambient_dim=ambient,
        simple_roots=tuple(simple),
        all_roots=all_roots,
        positive_roots=positive,
        coefficients=coeffs,
    )


def positive_root_count(rs: RootSystem) -> int:
    return len(rs.positive_roots)


def all_simple_types(max_rank: int = 8) -> list[SimpleType]:
    """Every valid simple type with rank at most ``max_rank``."""
    out = []
    for fam in FAMILIES:
        for r in range(1, max_rank + 1):
            try:
                out.append(SimpleType(fam, r))
            except InvalidType:
                pass
    return out
