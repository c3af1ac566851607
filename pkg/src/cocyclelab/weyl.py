"""Longest element of the Weyl group via a greedy chamber walk."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from cocyclelab.errors import NotInvolution
from cocyclelab.roots import RootSystem, dot, reflect

Matrix = tuple[tuple[Fraction, ...], ...]

ACTION_BASIS = "simple_roots"


@dataclass(frozen=True)
class LongestElementReport:
    """Reduced word and action of w0 on the Cartan subspace.

    ``action`` is the matrix of w0 in the simple-root basis: column j holds
    the simple-root coordinates of w0(alpha_j). ``word`` lists 0-based simple
    reflection indices; w0 = s_{word[-1]} ... s_{word[0]}.
    """

    root_system: RootSystem
    word: tuple[int, ...]
    action: Matrix
    basis: str = ACTION_BASIS

    @property
    def rank(self) -> int:
        return self.root_system.rank

    @property
    def signature(self) -> tuple[int, int]:
        return involution_signature(self)

    @property
    def minus_one(self) -> bool:
        return is_minus_one(self)

    def to_dict(self) -> dict:
        s, t = self.signature
        return {
            "type": self.root_system.label,
            "rank": self.rank,
            "word_length": len(self.word),
            "word": list(self.word),
            "basis": self.basis,
            "action": [[f"{x.numerator}/{x.denominator}" for x in row] for row in self.action],
            "s": s,
            "t": t,
            "minus_one": self.minus_one,
        }


def _identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(a, b) -> list[list[Fraction]]:
    n, m, k = len(a), len(b[0]), len(b)
    return [[sum((a[i][l] * b[l][j] for l in range(k)), Fraction(0)) for j in range(m)] for i in range(n)]


def longest_element(rs: RootSystem) -> LongestElementReport:
    """Walk from -rho to the dominant chamber, recording the simple reflections.

    At each step the smallest index i with <v, alpha_i> < 0 is used. The walk
    crosses each root hyperplane once, so it takes exactly |positive roots|
    steps and ends at rho; the product of the reflections is w0.
    """
    rank = rs.rank
    rho = [sum((r[k] for r in rs.positive_roots), Fraction(0)) / 2 for k in range(rs.ambient_dim)]
    v = tuple(-x for x in rho)
    cartan = rs.cartan_matrix()
    action = _identity(rank)
    word: list[int] = []
    while True:
        i = next((j for j, a in enumerate(rs.simple_roots) if dot(v, a) < 0), None)
        if i is None:
            break
        v = reflect(rs.simple_roots[i], v)
        word.append(i)
        # left-multiply by the matrix of s_i: only row i changes
        row = [action[i][c] - sum((cartan[i][j] * action[j][c] for j in range(rank)), Fraction(0))
               for c in range(rank)]
        action[i] = row
    return LongestElementReport(
        root_system=rs,
        word=tuple(word),
        action=tuple(tuple(r) for r in action),
    )


def is_involution(action) -> bool:
    return matmul(action, action) == _identity(len(action))


def involution_signature(rep: LongestElementReport) -> tuple[int, int]:
    """Dimensions (s, t) of the +1 and -1 eigenspaces, from the trace."""
    if not is_involution(rep.action):
        raise NotInvolution("w0 action does not square to the identity")
    n = len(rep.action)
    tr = sum((rep.action[i][i] for i in range(n)), Fraction(0))
    s, t = (n + tr) / 2, (n - tr) / 2
    if s.denominator != 1 or t.denominator != 1 or s < 0 or t < 0:
        raise NotInvolution(f"trace {tr} is inconsistent with an involution of size {n}")
    return int(s), int(t)


def is_minus_one(rep: LongestElementReport) -> bool:
    return involution_signature(rep)[0] == 0


def apply_action(rep: LongestElementReport, coeffs) -> tuple[Fraction, ...]:
    """Apply w0 to a vector given in simple-root coordinates."""
    n = len(rep.action)
    return tuple(sum((rep.action[i][j] * coeffs[j] for j in range(n)), Fraction(0)) for i in range(n))


def simple_root_permutation(rep: LongestElementReport) -> list[int] | None:
    """Return sigma with w0(alpha_j) = -alpha_{sigma(j)}, or None if w0 does not act that way."""
    n = len(rep.action)
    sigma = []
    for j in range(n):
        col = [rep.action[i][j] for i in range(n)]
        hits = [i for i, x in enumerate(col) if x != 0]
        if len(hits) != 1 or col[hits[0]] != -1:
            return None
        sigma.append(hits[0])
    return sigma if sorted(sigma) == list(range(n)) else None
