"""Pointwise cochains on tuples of product boundary points, and Monte Carlo checks.

A cochain of degree p is evaluated on (p+1)-tuples of ``ProductBoundaryPoint``.
Every cochain can also be evaluated on many re-indexings of one tuple at once
(``evaluate_rows``), which is how alternation and coboundaries are computed:
they only ever permute or drop points of the tuple they are given.
"""
from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from cocyclelab import kernels
from cocyclelab.boundary import (
    BoundaryPoint,
    ProductBoundaryPoint,
    apply_product,
    check_generic,
    cross_ratio,
    min_pairwise_distance,
    pack,
    random_generic_tuple,
    random_mobius,
)
from cocyclelab.errors import DegenerateTuple, DegreeTooLarge, InvalidCheck, SamplingFailure

MAX_ALT_DEGREE = 7

# trial conditioning
MIN_CROSS_RATIO = 1e-6
MAX_CROSS_RATIO = 1e6
MIN_TRANSFORMED_DISTANCE = 1e-6

Tuple = Sequence[ProductBoundaryPoint]


@lru_cache(maxsize=None)
def permutations_with_signs(n: int) -> tuple[np.ndarray, np.ndarray]:
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.intp).reshape(-1, n)
    signs = np.empty(len(perms))
    for k, p in enumerate(perms):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        signs[k] = -1.0 if inversions % 2 else 1.0
    return perms, signs


@lru_cache(maxsize=None)
def faces(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Index rows omitting one of n points, with the coboundary signs (-1)^i."""
    rows = np.array([[j for j in range(n) if j != i] for i in range(n)], dtype=np.intp).reshape(n, n - 1)
    signs = np.array([(-1.0) ** i for i in range(n)])
    return rows, signs


class Cochain:
    """Base class: subclasses implement ``evaluate_rows``."""

    degree: int
    name: str = "f"

    def evaluate_rows(self, t: Tuple, rows: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def __call__(self, t: Tuple) -> float:
        if len(t) != self.degree + 1:
            raise ValueError(f"{self.name} has degree {self.degree}, got a {len(t)}-tuple")
        rows = np.arange(self.degree + 1, dtype=np.intp).reshape(1, -1)
        return float(self.evaluate_rows(t, rows)[0])

    def __add__(self, other: "Cochain") -> "Cochain":
        return LinearCombination(((1.0, self), (1.0, other)))

    def __sub__(self, other: "Cochain") -> "Cochain":
        return LinearCombination(((1.0, self), (-1.0, other)))

    def __rmul__(self, c: float) -> "Cochain":
        return LinearCombination(((float(c), self),))

    def __repr__(self):
        return f"<{type(self).__name__} {self.name} degree={self.degree}>"


class FunctionCochain(Cochain):
    """Wrap a plain Python function of a (p+1)-tuple."""

    def __init__(self, degree: int, fn: Callable[[Tuple], float], name: str = "f"):
        self.degree = degree
        self.fn = fn
        self.name = name

    def evaluate_rows(self, t, rows):
        return np.array([self.fn([t[i] for i in r]) for r in np.asarray(rows)], dtype=np.float64)


class DetLogCocycle(Cochain):
    """det [[log b(x-window-1), log b(x-window-2)], [same for y]] on two-factor tuples.

    Degree 3 uses the windows (0,1,2,3) and (1,2,3,0); degree 4 uses
    (0,1,2,3) and (1,2,3,4).
    """

    def __init__(self, degree: int, name: str):
        if degree not in (3, 4):
            raise ValueError("only degrees 3 and 4 are defined")
        self.degree = degree
        self.name = name

    def evaluate_rows(self, t, rows):
        if any(len(pt) != 2 for pt in t):
            raise ValueError(f"{self.name} is defined on two-factor products only")
        X, xinf = pack([pt[0] for pt in t])
        Y, yinf = pack([pt[1] for pt in t])
        out = kernels.det_log(X, xinf, Y, yinf, rows)
        if np.isnan(out).any():
            raise DegenerateTuple(f"{self.name} evaluated on a degenerate tuple")
        return out


class LinearCombination(Cochain):
    def __init__(self, terms):
        self.terms = tuple(terms)
        degrees = {f.degree for _, f in self.terms}
        if len(degrees) != 1:
            raise ValueError("cannot combine cochains of different degrees")
        self.degree = degrees.pop()
        self.name = " + ".join(f"{c:g}*{f.name}" for c, f in self.terms)

    def evaluate_rows(self, t, rows):
        return sum(c * f.evaluate_rows(t, rows) for c, f in self.terms)


class Alternation(Cochain):
    """Signed average of ``f`` over all permutations of its arguments."""

    def __init__(self, f: Cochain):
        if f.degree > MAX_ALT_DEGREE:
            raise DegreeTooLarge(f"alternation limited to degree <= {MAX_ALT_DEGREE}, got {f.degree}")
        self.f = f
        self.degree = f.degree
        self.name = f"Alt({f.name})"

    def evaluate_rows(self, t, rows):
        rows = np.asarray(rows, dtype=np.intp)
        perms, signs = permutations_with_signs(self.degree + 1)
        composed = rows[:, perms].reshape(-1, self.degree + 1)
        vals = self.f.evaluate_rows(t, composed).reshape(len(rows), len(perms))
        return vals @ signs / len(perms)


class Coboundary(Cochain):
    """(delta f)(x_0..x_{p+1}) = sum_i (-1)^i f(x_0..^x_i..x_{p+1})."""

    def __init__(self, f: Cochain):
        self.f = f
        self.degree = f.degree + 1
        self.name = f"d({f.name})"

    def face_values(self, t, rows):
        """Signed face terms, shape (len(rows), degree + 1)."""
        rows = np.asarray(rows, dtype=np.intp)
        frows, signs = faces(self.degree + 1)
        composed = rows[:, frows].reshape(-1, self.degree)
        vals = self.f.evaluate_rows(t, composed).reshape(len(rows), len(frows))
        return vals * signs

    def evaluate_rows(self, t, rows):
        return self.face_values(t, rows).sum(axis=1)

    def terms(self, t) -> np.ndarray:
        rows = np.arange(self.degree + 1, dtype=np.intp).reshape(1, -1)
        return self.face_values(t, rows)[0]


def alternation(f: Cochain) -> Alternation:
    return Alternation(f)


def coboundary(f: Cochain) -> Coboundary:
    return Coboundary(f)


C3 = DetLogCocycle(3, "c3")
C4 = DetLogCocycle(4, "c4")


def c3(t: Tuple) -> float:
    return C3(t)


def c4(t: Tuple) -> float:
    return C4(t)


# --- Monte Carlo verification -------------------------------------------------

CHECKS = (
    "cocycle_c3",
    "cocycle_c4",
    "alt_c3_fixed",
    "alt_c4_zero",
    "invariance_c3",
    "invariance_c4",
    "crossratio_invariance",
    "reversal_c4",
)
PROPERTY_CHECKS = ("alt_idempotence", "coboundary_squared", "decomposition", "infinity_limit")


@dataclass(frozen=True)
class VerificationReport:
    check_name: str
    trials: int
    rejected: int
    max_abs_residual: float
    max_rel_residual: float
    tolerance: float
    passed: bool
    seed: int

    @property
    def rejected_fraction(self) -> float:
        return self.rejected / (self.trials + self.rejected)

    def to_dict(self) -> dict:
        return {
            "check_name": self.check_name,
            "trials": self.trials,
            "rejected": self.rejected,
            "max_abs_residual": self.max_abs_residual,
            "max_rel_residual": self.max_rel_residual,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "seed": self.seed,
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status} {self.check_name}: trials={self.trials} rejected={self.rejected} "
                f"max_abs={self.max_abs_residual:.3e} max_rel={self.max_rel_residual:.3e} "
                f"tol={self.tolerance:.1e} seed={self.seed}")


class _Reject(Exception):
    """The sampled configuration is too ill-conditioned to evaluate."""


def _ordered_quadruples(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n), 4)), dtype=np.intp).reshape(-1, 4)


def _condition(t: Tuple) -> None:
    """Reject tuples with nearly coincident points or extreme cross-ratios in any factor."""
    quads = _ordered_quadruples(len(t))
    lo, hi = math.log(MIN_CROSS_RATIO), math.log(MAX_CROSS_RATIO)
    for k in range(len(t[0])):
        pts = [pt[k] for pt in t]
        try:
            check_generic(pts)
        except DegenerateTuple:
            raise _Reject
        if min_pairwise_distance(pts) < MIN_TRANSFORMED_DISTANCE:
            raise _Reject
        if len(quads) == 0:
            continue
        P, inf = pack(pts)
        logs = kernels.log_cross_ratio(P, inf, quads)
        if np.isnan(logs).any() or logs.min() < lo or logs.max() > hi:
            raise _Reject


class _Trial:
    """Random inputs for one attempt, generated lazily from a seed sequence."""

    def __init__(self, ss: np.random.SeedSequence, dims: tuple[int, int], separation: float,
                 infinity_prob: float):
        self._tuple_ss, *self._mobius_ss = ss.spawn(1 + len(dims))
        self.dims = dims
        self.separation = separation
        self.infinity_prob = infinity_prob

    def points(self, count: int) -> list[ProductBoundaryPoint]:
        t = random_generic_tuple(self._tuple_ss, count, self.dims, self.separation, self.infinity_prob)
        _condition(t)
        return t

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self._mobius_ss[0])

    def transform(self, t: Tuple) -> list[ProductBoundaryPoint]:
        maps = [random_mobius(s, n - 1) for s, n in zip(self._mobius_ss, self.dims)]
        gt = apply_product(maps, t)
        _condition(gt)
        return gt


def _cocycle(c: Cochain):
    def run(trial: _Trial):
        terms = Coboundary(c).terms(trial.points(c.degree + 2))
        total = abs(terms.sum())
        return total, total / (np.abs(terms).sum() + 1.0)
    return run


def _alt_c3_fixed(trial):
    t = trial.points(4)
    v, a = C3(t), Alternation(C3)(t)
    return abs(a - v), abs(a - v) / (abs(v) + 1.0)


def _alt_c4_zero(trial):
    t = trial.points(5)
    perms, signs = permutations_with_signs(5)
    vals = C4.evaluate_rows(t, perms)
    alt = float(vals @ signs) / len(perms)
    scale = float(np.abs(vals).max())
    return abs(alt), abs(alt) / (scale + 1.0)


def _invariance(c: Cochain):
    def run(trial: _Trial):
        t = trial.points(c.degree + 1)
        gt = trial.transform(t)
        v, gv = c(t), c(gt)
        return abs(gv - v), abs(gv - v) / (abs(v) + 1.0)
    return run


def _crossratio_invariance(trial):
    t = trial.points(4)
    gt = trial.transform(t)
    worst_abs = worst_rel = 0.0
    for k in range(len(trial.dims)):
        P, inf = pack([pt[k] for pt in t])
        Q, qinf = pack([pt[k] for pt in gt])
        b = math.exp(kernels.log_cross_ratio(P, inf, [[0, 1, 2, 3]])[0])
        gb = math.exp(kernels.log_cross_ratio(Q, qinf, [[0, 1, 2, 3]])[0])
        worst_abs = max(worst_abs, abs(gb - b))
        worst_rel = max(worst_rel, abs(gb - b) / b)
    return worst_abs, worst_rel


def _reversal_c4(trial):
    t = trial.points(5)
    v, r = C4(t), C4(t[::-1])
    return abs(r + v), abs(r + v) / (abs(v) + 1.0)


def _alt_idempotence(trial):
    worst = (0.0, 0.0)
    for c in (C3, C4):
        t = trial.points(c.degree + 1)
        a = Alternation(c)(t)
        aa = Alternation(Alternation(c))(t)
        worst = max(worst, (abs(aa - a), abs(aa - a) / (abs(a) + 1.0)), key=lambda r: r[1])
    return worst


def _coboundary_squared(trial):
    worst = (0.0, 0.0)
    for c in (C3, C4):
        t = trial.points(c.degree + 3)
        dd = Coboundary(Coboundary(c))
        inner_rows, _ = faces(c.degree + 3)
        outer_rows, _ = faces(c.degree + 2)
        all_faces = inner_rows[:, outer_rows].reshape(-1, c.degree + 1)
        scale = float(np.abs(c.evaluate_rows(t, all_faces)).sum())
        v = abs(dd(t))
        worst = max(worst, (v, v / (scale + 1.0)), key=lambda r: r[1])
    return worst


def _decomposition(trial):
    worst = (0.0, 0.0)
    for c in (C3, C4):
        t = trial.points(c.degree + 1)
        alt_part = Alternation(c)
        rest = c - alt_part
        recombined = rest(t) + alt_part(t)
        v = abs(Alternation(rest)(t))
        scale = abs(c(t)) + abs(alt_part(t))
        err = max(v, abs(recombined - c(t)))
        worst = max(worst, (err, err / (scale + 1.0)), key=lambda r: r[1])
    return worst


INFINITY_LIMIT_RADIUS = 1e6


def _infinity_limit(trial):
    worst_abs = worst_rel = 0.0
    t = trial.points(3)
    rng = trial.rng()
    for k in range(len(trial.dims)):
        pts = [pt[k] for pt in t]
        if any(p.is_infinite for p in pts):
            raise _Reject
        d = pts[0].dim
        u = rng.standard_normal(d)
        u /= np.linalg.norm(u)
        far = cross_ratio(*pts, BoundaryPoint(INFINITY_LIMIT_RADIUS * u))
        lim = cross_ratio(*pts, BoundaryPoint.infinity(d))
        worst_abs = max(worst_abs, abs(far - lim))
        worst_rel = max(worst_rel, abs(far - lim) / lim)
    return worst_abs, worst_rel


_RUNNERS = {
    "cocycle_c3": _cocycle(C3),
    "cocycle_c4": _cocycle(C4),
    "alt_c3_fixed": _alt_c3_fixed,
    "alt_c4_zero": _alt_c4_zero,
    "invariance_c3": _invariance(C3),
    "invariance_c4": _invariance(C4),
    "crossratio_invariance": _crossratio_invariance,
    "reversal_c4": _reversal_c4,
    "alt_idempotence": _alt_idempotence,
    "coboundary_squared": _coboundary_squared,
    "decomposition": _decomposition,
    "infinity_limit": _infinity_limit,
}


def verify(check: str, dims: tuple[int, int] = (3, 4), trials: int = 1000, tol: float = 1e-8,
           seed: int = 0, separation: float = 0.1, infinity_prob: float = 0.05,
           max_resamples: int = 100, workers: int = 1) -> VerificationReport:
    """Run a seeded Monte Carlo check and report the worst residual.

    Trial i, attempt a draws everything from ``SeedSequence([seed, i, a])``,
    so results do not depend on scheduling. Attempts whose configuration is
    degenerate or badly conditioned are counted in ``rejected`` and redrawn.
    The check passes when the largest normalized residual is at most ``tol``.
    """
    if check not in _RUNNERS:
        raise InvalidCheck(f"unknown check {check!r}; expected one of {', '.join(_RUNNERS)}")
    if trials < 1 or not tol > 0:
        raise ValueError("need trials >= 1 and tol > 0")
    if seed < 0:
        raise ValueError("seed must be non-negative")
    dims = tuple(int(n) for n in dims)
    if len(dims) != 2 or min(dims) < 2:
        raise ValueError("dims must be two hyperbolic dimensions, each at least 2")
    runner = _RUNNERS[check]

    def one(i: int) -> tuple[float, float, int]:
        for a in range(max_resamples):
            trial = _Trial(np.random.SeedSequence([seed, i, a]), dims, separation, infinity_prob)
            try:
                abs_res, rel_res = runner(trial)
            except (_Reject, DegenerateTuple):
                continue
            return float(abs_res), float(rel_res), a
        raise SamplingFailure(f"trial {i}: {max_resamples} consecutive rejected configurations")

    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(one, range(trials)))
    else:
        results = [one(i) for i in range(trials)]

    max_abs = max(r[0] for r in results)
    max_rel = max(r[1] for r in results)
    return VerificationReport(
        check_name=check,
        trials=trials,
        rejected=sum(r[2] for r in results),
        max_abs_residual=max_abs,
        max_rel_residual=max_rel,
        tolerance=tol,
        passed=bool(max_rel <= tol),
        seed=seed,
    )
