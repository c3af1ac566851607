"""Points of R^{d} u {oo}, Mobius generators acting on them, and the positive cross-ratio.

A hyperbolic space H^n has boundary dimension d = n - 1. Sampling helpers
take the hyperbolic dimensions n (one per factor); Mobius maps are built
directly on a boundary of dimension d.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from cocyclelab import kernels
from cocyclelab.errors import DegenerateTuple, MultipleInfinities, SamplingFailure

BOX_RADIUS = 10.0


class BoundaryPoint:
    """A finite point of R^dim, or the point at infinity of that boundary."""

    __slots__ = ("coords", "dim")

    def __init__(self, coords=None, dim: int | None = None):
        if coords is None:
            if dim is None or dim < 1:
                raise ValueError("the point at infinity needs a positive dimension")
            self.coords = None
            self.dim = int(dim)
            return
        arr = np.array(coords, dtype=np.float64).reshape(-1)
        if arr.size == 0 or (dim is not None and arr.size != dim):
            raise ValueError(f"expected {dim} coordinates, got {arr.size}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("boundary point coordinates must be finite")
        arr.setflags(write=False)
        self.coords = arr
        self.dim = arr.size

    @classmethod
    def infinity(cls, dim: int) -> "BoundaryPoint":
        return cls(None, dim)

    @property
    def is_infinite(self) -> bool:
        return self.coords is None

    def __eq__(self, other):
        if not isinstance(other, BoundaryPoint):
            return NotImplemented
        if self.dim != other.dim or self.is_infinite != other.is_infinite:
            return False
        return self.is_infinite or bool(np.array_equal(self.coords, other.coords))

    def __hash__(self):
        return hash((self.dim, None if self.coords is None else self.coords.tobytes()))

    def __repr__(self):
        if self.is_infinite:
            return f"BoundaryPoint.infinity({self.dim})"
        return f"BoundaryPoint({self.coords.tolist()})"


@dataclass(frozen=True)
class ProductBoundaryPoint:
    components: tuple[BoundaryPoint, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(c.dim for c in self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __len__(self):
        return len(self.components)


def pack(points: Sequence[BoundaryPoint]) -> tuple[np.ndarray, np.ndarray]:
    """Stack points into a (k, dim) array plus an infinity mask (infinite rows are zero)."""
    dim = points[0].dim
    P = np.zeros((len(points), dim))
    inf = np.zeros(len(points), dtype=np.uint8)
    for i, x in enumerate(points):
        if x.dim != dim:
            raise ValueError("points of different dimensions")
        if x.is_infinite:
            inf[i] = 1
        else:
            P[i] = x.coords
    return P, inf


def min_pairwise_distance(points: Sequence[BoundaryPoint]) -> float:
    """Smallest distance between distinct finite points; inf if fewer than two are finite."""
    finite = [x.coords for x in points if not x.is_infinite]
    best = math.inf
    for i in range(len(finite)):
        for j in range(i + 1, len(finite)):
            best = min(best, float(np.linalg.norm(finite[i] - finite[j])))
    return best


def check_generic(points: Sequence[BoundaryPoint], separation: float = 0.0) -> None:
    """Raise unless the points are pairwise distinct (by more than ``separation``) with at most one at infinity."""
    n_inf = sum(x.is_infinite for x in points)
    if n_inf > 1:
        raise MultipleInfinities(f"{n_inf} points at infinity")
    d = min_pairwise_distance(points)
    if d == 0.0 or d < separation:
        raise DegenerateTuple(f"points closer than allowed (distance {d:g})")


def cross_ratio(x0: BoundaryPoint, x1: BoundaryPoint, x2: BoundaryPoint, x3: BoundaryPoint,
                separation: float = 0.0) -> float:
    """Positive cross-ratio |x2-x0||x3-x1| / (|x2-x1||x3-x0|).

    Every norm factor involving the point at infinity is replaced by 1; each
    point appears once above and once below the line, so this is the limit.
    """
    pts = (x0, x1, x2, x3)
    check_generic(pts, separation)
    P, inf = pack(pts)
    return math.exp(kernels.log_cross_ratio(P, inf, [[0, 1, 2, 3]])[0])


@dataclass(frozen=True)
class Translate:
    b: tuple[float, ...]

    def apply(self, x: BoundaryPoint) -> BoundaryPoint:
        if x.is_infinite:
            return x
        return BoundaryPoint(x.coords + np.asarray(self.b))


@dataclass(frozen=True)
class Dilate:
    factor: float

    def __post_init__(self):
        if not self.factor > 0:
            raise ValueError("dilation factor must be positive")

    def apply(self, x: BoundaryPoint) -> BoundaryPoint:
        if x.is_infinite:
            return x
        return BoundaryPoint(self.factor * x.coords)


@dataclass(frozen=True)
class Orthogonal:
    Q: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        q = np.asarray(self.Q, dtype=np.float64)
        if q.ndim != 2 or q.shape[0] != q.shape[1]:
            raise ValueError("orthogonal generator needs a square matrix")
        if np.max(np.abs(q.T @ q - np.eye(q.shape[0]))) > 1e-12:
            raise ValueError("matrix is not orthogonal to 1e-12")

    def apply(self, x: BoundaryPoint) -> BoundaryPoint:
        if x.is_infinite:
            return x
        return BoundaryPoint(np.asarray(self.Q) @ x.coords)


@dataclass(frozen=True)
class Invert:
    """x -> x / |x|^2, exchanging 0 and infinity."""

    def apply(self, x: BoundaryPoint) -> BoundaryPoint:
        if x.is_infinite:
            return BoundaryPoint(np.zeros(x.dim))
        r2 = float(x.coords @ x.coords)
        if r2 == 0.0:
            return BoundaryPoint.infinity(x.dim)
        return BoundaryPoint(x.coords / r2)


Generator = Union[Translate, Dilate, Orthogonal, Invert]


@dataclass(frozen=True)
class MobiusMap:
    """Composition of generators, applied left to right."""

    generators: tuple[Generator, ...]

    def __call__(self, x: BoundaryPoint) -> BoundaryPoint:
        return apply_mobius(self, x)


def apply_mobius(m: MobiusMap, x: BoundaryPoint) -> BoundaryPoint:
    for g in m.generators:
        x = g.apply(x)
    return x


def apply_product(maps: Sequence[MobiusMap], t: Sequence[ProductBoundaryPoint]) -> list[ProductBoundaryPoint]:
    """Apply one map per factor to every point of a tuple."""
    return [ProductBoundaryPoint(tuple(apply_mobius(m, c) for m, c in zip(maps, pt.components)))
            for pt in t]


def random_orthogonal(rng: np.random.Generator, dim: int) -> np.ndarray:
    q, r = np.linalg.qr(rng.standard_normal((dim, dim)))
    return q * np.sign(np.diag(r))


def random_mobius(seed, dim: int) -> MobiusMap:
    """3 to 6 random generators on R^dim u {oo}; with probability 1/2 one of them is an inversion."""
    if dim < 1:
        raise ValueError("boundary dimension must be at least 1")
    rng = np.random.default_rng(seed)
    count = int(rng.integers(3, 7))
    gens: list[Generator] = []
    for _ in range(count):
        kind = int(rng.integers(3))
        if kind == 0:
            gens.append(Translate(tuple(rng.uniform(-2.0, 2.0, dim).tolist())))
        elif kind == 1:
            gens.append(Dilate(float(rng.uniform(0.2, 5.0))))
        else:
            q = random_orthogonal(rng, dim)
            gens.append(Orthogonal(tuple(map(tuple, q.tolist()))))
    if rng.random() < 0.5:
        gens[int(rng.integers(count))] = Invert()
    return MobiusMap(tuple(gens))


def _ball_point(rng: np.random.Generator, dim: int) -> np.ndarray:
    v = rng.standard_normal(dim)
    v /= np.linalg.norm(v)
    return BOX_RADIUS * rng.random() ** (1.0 / dim) * v


def random_generic_tuple(seed, count: int, dims: Sequence[int], separation: float = 0.1,
                         infinity_prob: float = 0.05, max_attempts: int = 1000) -> list[ProductBoundaryPoint]:
    """Sample ``count`` product points on the boundaries of H^n for each n in ``dims``.

    In every factor the finite points lie in the ball of radius 10 and are
    pairwise at least ``separation`` apart; with probability ``infinity_prob``
    one point of a factor is placed at infinity.
    """
    if count < 2:
        raise ValueError("count must be at least 2")
    if separation <= 0:
        raise ValueError("separation must be positive")
    if any(n < 2 for n in dims):
        raise ValueError("hyperbolic dimensions must be at least 2")
    rng = np.random.default_rng(seed)
    factors = []
    for n in dims:
        d = n - 1
        at_inf = int(rng.integers(count)) if rng.random() < infinity_prob else -1
        pts: list[np.ndarray] = []
        attempts = 0
        for i in range(count):
            if i == at_inf:
                pts.append(None)
                continue
            while True:
                cand = _ball_point(rng, d)
                if all(p is None or np.linalg.norm(cand - p) >= separation for p in pts):
                    break
                attempts += 1
                if attempts > max_attempts:
                    raise SamplingFailure(f"could not place {count} points {separation} apart in dimension {d}")
            pts.append(cand)
        factors.append([BoundaryPoint.infinity(d) if p is None else BoundaryPoint(p) for p in pts])
    return [ProductBoundaryPoint(tuple(f[i] for f in factors)) for i in range(count)]
