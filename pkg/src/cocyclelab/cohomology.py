"""Dimension bookkeeping for the kernel of the boundary evaluation map.

Everything here is integer arithmetic on the involution signature (s, t) of
w0 acting on the Cartan subspace. The torus cohomology in degree k is the
k-th exterior power of the dual Cartan subspace, of dimension C(rank, k).
Group cohomology H^p(G) has no general formula and stays symbolic unless the
caller supplies its dimensions.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence, Union

from cocyclelab.errors import InvalidSignature

Entry = Union[int, str]

PAGE_LABELS = ("nalt_E1", "nalt_E2", "alt_E1", "alt_E2")


def torus_dims(rank: int, max_degree: int) -> list[int]:
    if rank < 1 or max_degree < 0:
        raise ValueError("need rank >= 1 and max_degree >= 0")
    return [comb(rank, k) for k in range(max_degree + 1)]


def _check_signature(signature) -> tuple[int, int]:
    s, t = signature
    if s < 0 or t < 0:
        raise InvalidSignature(f"negative signature entry in {signature!r}")
    if s + t < 1:
        raise InvalidSignature("signature must have positive rank")
    return int(s), int(t)


def fixed_dim_combinatorial(s: int, t: int, k: int) -> int:
    """Count wedge monomials of degree k with an even number of -1 factors."""
    return sum(comb(t, j) * comb(s, k - j) for j in range(0, k + 1, 2))


def fixed_dim_trace(s: int, t: int, k: int) -> int:
    """Fixed-subspace dimension from the trace of the induced involution."""
    trace = sum((-1) ** j * comb(t, j) * comb(s, k - j) for j in range(k + 1))
    twice = comb(s + t, k) + trace
    assert twice % 2 == 0
    return twice // 2


@dataclass(frozen=True)
class InvariantDims:
    rank: int
    signature: tuple[int, int]
    dims_HA: list[int]
    dims_HA_w0: list[int]
    dims_HA_equiv: list[int]

    @property
    def max_degree(self) -> int:
        return len(self.dims_HA) - 1

    def w0(self, k: int) -> int:
        """dim H^k(A)^{w0}, zero outside the stored range."""
        return self.dims_HA_w0[k] if 0 <= k < len(self.dims_HA_w0) else 0


def invariant_dims(signature: tuple[int, int], max_degree: int) -> InvariantDims:
    """Invariant and equivariant (image of 1 - w0) dimensions in degrees 0..max_degree."""
    s, t = _check_signature(signature)
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    rank = s + t
    ha = torus_dims(rank, max_degree)
    fixed = []
    for k in range(max_degree + 1):
        a, b = fixed_dim_combinatorial(s, t, k), fixed_dim_trace(s, t, k)
        if a != b:
            raise AssertionError(f"fixed-dimension formulas disagree at k={k}: {a} != {b}")
        fixed.append(a)
    return InvariantDims(
        rank=rank,
        signature=(s, t),
        dims_HA=ha,
        dims_HA_w0=fixed,
        dims_HA_equiv=[h - f for h, f in zip(ha, fixed)],
    )


@dataclass(frozen=True)
class CohomologyTable:
    """Per-degree dimensions of NH^p and its non-alternating / alternating parts.

    ``hg`` optionally holds known dimensions of H^p(G); when present the
    alternating and total boundary cohomology dimensions are filled in too.
    """

    invariants: InvariantDims
    max_degree: int
    dim_NH: list[int]
    dim_NH_nalt: list[int]
    dim_NH_alt: list[int]
    hg: list[int] | None = None

    def dim_H_alt(self, p: int) -> int | None:
        if self.hg is None or p >= len(self.hg):
            return None
        return self.dim_NH_alt[p] + self.hg[p]

    def dim_H_boundary(self, p: int) -> int | None:
        if self.hg is None or p >= len(self.hg):
            return None
        return self.dim_NH[p] + self.hg[p]

    def rows(self) -> list[dict]:
        inv = self.invariants
        out = []
        for p in range(self.max_degree + 1):
            row = {
                "degree": p,
                "HA": inv.dims_HA[p],
                "HA_w0": inv.dims_HA_w0[p],
                "HA_equiv": inv.dims_HA_equiv[p],
                "NH": self.dim_NH[p],
                "NH_nalt": self.dim_NH_nalt[p],
                "NH_alt": self.dim_NH_alt[p],
            }
            if self.hg is not None:
                row["HG"] = self.hg[p] if p < len(self.hg) else None
                row["H_alt"] = self.dim_H_alt(p)
                row["H_boundary"] = self.dim_H_boundary(p)
            out.append(row)
        return out


def kernel_table(inv: InvariantDims, max_degree: int | None = None,
                 hg: Sequence[int] | None = None) -> CohomologyTable:
    """NH^p_nalt = H^{p-2}(A)^{w0} for p >= 3 and NH^p_alt = H^{p-1}(A)^{w0} for p >= 2.

    In degree 2 only the alternating part survives, so NH^2 = H^1(A)^{w0};
    the degree-0 torus class never contributes.
    """
    if max_degree is None:
        max_degree = inv.max_degree
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    nalt = [inv.w0(p - 2) if p >= 3 else 0 for p in range(max_degree + 1)]
    alt = [inv.w0(p - 1) if p >= 2 else 0 for p in range(max_degree + 1)]
    if hg is not None:
        hg = [int(d) for d in hg]
        if any(d < 0 for d in hg):
            raise ValueError("dimensions of H^p(G) must be non-negative")
    return CohomologyTable(
        invariants=inv,
        max_degree=max_degree,
        dim_NH=[a + b for a, b in zip(nalt, alt)],
        dim_NH_nalt=nalt,
        dim_NH_alt=alt,
        hg=hg,
    )


def corollary_even_degree_check(inv: InvariantDims) -> bool:
    """True when H^{p-1}(A)^{w0} vanishes for every even p >= 2.

    Degrees are checked up to rank + 2, beyond which everything vanishes.
    """
    top = inv.rank + 2
    return all(_fixed(inv, p - 1) == 0 for p in range(2, top + 1, 2))


def _fixed(inv: InvariantDims, k: int) -> int:
    if k < len(inv.dims_HA_w0):
        return inv.dims_HA_w0[k]
    return fixed_dim_combinatorial(*inv.signature, k)


@dataclass(frozen=True)
class SpectralPage:
    """Page of the second spectral sequence; ``entries[(p, q)]`` is a dimension or a token.

    Tokens: ``"H^p(G)"`` for group cohomology, ``"C^q"`` for the cochain row
    on q boundary points, ``"H^k_alt(G/P)"`` / ``"H^k_nalt(G/P)"`` for the
    boundary cohomology that survives on the bottom row of the second page.
    """

    label: str
    max_p: int
    max_q: int
    entries: dict = field(repr=False)

    def row(self, p: int) -> list[Entry]:
        return [self.entries[(p, q)] for q in range(self.max_q + 1)]

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "max_p": self.max_p,
            "max_q": self.max_q,
            "rows": [self.row(p) for p in range(self.max_p + 1)],
        }


def spectral_pages(inv: InvariantDims, max_p: int, max_q: int,
                   hg: Sequence[int] | None = None) -> list[SpectralPage]:
    """The four pages nalt_E1, nalt_E2, alt_E1, alt_E2 up to (max_p, max_q)."""
    if max_p < 0 or max_q < 0:
        raise ValueError("page bounds must be non-negative")

    def ha(p):
        return comb(inv.rank, p)

    def fixed(p):
        return fixed_dim_combinatorial(*inv.signature, p)

    def group(p) -> Entry:
        if hg is not None and p < len(hg):
            return int(hg[p])
        return f"H^{p}(G)"

    pages = {label: {} for label in PAGE_LABELS}
    for q in range(max_q + 1):
        pages["nalt_E1"][(0, q)] = 0 if q < 2 else f"C^{q}"
        pages["nalt_E2"][(0, q)] = 0 if q < 2 else f"H^{q - 1}_nalt(G/P)"
        pages["alt_E1"][(0, q)] = 1 if q == 0 else f"C^{q}"
        pages["alt_E2"][(0, q)] = 0 if q < 2 else f"H^{q - 1}_alt(G/P)"
    for p in range(1, max_p + 1):
        for q in range(max_q + 1):
            nalt = fixed(p) if q == 2 else 0
            pages["nalt_E1"][(p, q)] = nalt
            pages["nalt_E2"][(p, q)] = nalt
            pages["alt_E1"][(p, q)] = {0: group(p), 1: ha(p), 2: ha(p) - fixed(p)}.get(q, 0)
            pages["alt_E2"][(p, q)] = {0: group(p), 1: fixed(p)}.get(q, 0)
    return [SpectralPage(label, max_p, max_q, pages[label]) for label in PAGE_LABELS]
