"""Pure-Python log cross-ratio kernels, used when the compiled module is unavailable.

Both kernels take point arrays ``P`` of shape (k, d), a byte mask ``inf``
marking points at infinity, and integer ``rows`` of indices into ``P``.
A row evaluates to NaN when one of the four paired distances vanishes or
pairs two infinite points; callers turn NaN into an exception. Genericity
of whole tuples is checked by the callers, not here.
"""
import math

import numpy as np


def _factor(p, inf, i, j):
    if inf[i] or inf[j]:
        return None if (inf[i] and inf[j]) else 1.0
    s = 0.0
    for u, v in zip(p[i], p[j]):
        s += (u - v) * (u - v)
    return math.sqrt(s) if s else None


def _log_b(p, inf, a, b, c, d):
    f1 = _factor(p, inf, c, a)
    f2 = _factor(p, inf, d, b)
    f3 = _factor(p, inf, c, b)
    f4 = _factor(p, inf, d, a)
    if f1 is None or f2 is None or f3 is None or f4 is None:
        return math.nan
    return math.log((f1 * f2) / (f3 * f4))


def log_cross_ratio(P, inf, rows):
    p, m = P.tolist(), inf.tolist()
    return np.array([_log_b(p, m, *r[:4]) for r in rows.tolist()], dtype=np.float64)


def det_log(X, xinf, Y, yinf, rows):
    x, xm, y, ym = X.tolist(), xinf.tolist(), Y.tolist(), yinf.tolist()
    out = []
    for r in rows.tolist():
        a, b, c, d = r[:4]
        e = r[4 % len(r)]
        x1 = _log_b(x, xm, a, b, c, d)
        x2 = _log_b(x, xm, b, c, d, e)
        y1 = _log_b(y, ym, a, b, c, d)
        y2 = _log_b(y, ym, b, c, d, e)
        out.append(x1 * y2 - x2 * y1)
    return np.array(out, dtype=np.float64)
