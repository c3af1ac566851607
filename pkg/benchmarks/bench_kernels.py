"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--repeat 5] [--trials 200]

Two measurements per backend: raw det_log throughput over all 120
re-indexings of a 5-point tuple (the inner loop of alternation), and an
end-to-end ``verify`` run. The end-to-end run spawns a fresh interpreter per
backend because the backend is chosen once at import.
"""
from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import timeit

import numpy as np

from cocyclelab import _pykernels
from cocyclelab.cocycles import permutations_with_signs

try:
    from cocyclelab import _ckernels
except ImportError:
    _ckernels = None

_VERIFY_SNIPPET = """
import json, time
from cocyclelab import kernels
from cocyclelab.cocycles import verify
t0 = time.perf_counter()
r = verify({check!r}, dims=(3, 4), trials={trials}, seed=42)
print(json.dumps({{"backend": kernels.BACKEND, "seconds": time.perf_counter() - t0,
                  "max_rel": r.max_rel_residual}}))
"""


def kernel_timing(impl, repeat: int) -> float:
    rng = np.random.default_rng(0)
    X, Y = rng.standard_normal((5, 2)), rng.standard_normal((5, 3))
    xinf = np.zeros(5, dtype=np.uint8)
    yinf = np.zeros(5, dtype=np.uint8)
    rows, _ = permutations_with_signs(5)
    rows = np.ascontiguousarray(rows, dtype=np.intp)
    number = 200
    best = min(timeit.repeat(lambda: impl.det_log(X, xinf, Y, yinf, rows), number=number, repeat=repeat))
    return best / number


def verify_timing(pure: bool, check: str, trials: int) -> dict:
    env = dict(os.environ)
    env.pop("COCYCLELAB_PURE_PYTHON", None)
    if pure:
        env["COCYCLELAB_PURE_PYTHON"] = "1"
    code = _VERIFY_SNIPPET.format(check=check, trials=trials)
    out = subprocess.run([sys.executable, "-c", code], env=env, check=True, capture_output=True, text=True)
    return json.loads(out.stdout)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--check", default="alt_c4_zero")
    args = ap.parse_args()

    py = kernel_timing(_pykernels, args.repeat)
    print(f"det_log x120 rows   python  {py * 1e6:9.1f} us")
    if _ckernels is None:
        print("compiled extension not built; skipping the cython rows")
    else:
        cy = kernel_timing(_ckernels, args.repeat)
        print(f"det_log x120 rows   cython  {cy * 1e6:9.1f} us   speedup {py / cy:5.1f}x")

    results = [verify_timing(True, args.check, args.trials)]
    if _ckernels is not None:
        results.append(verify_timing(False, args.check, args.trials))
    for r in results:
        print(f"verify {args.check} ({args.trials} trials)  {r['backend']:>6}  {r['seconds']:7.2f} s"
              f"   max_rel {r['max_rel']:.1e}")
    if len(results) == 2 and results[0]["max_rel"] != results[1]["max_rel"]:
        print("note: backends disagree in the last bits of the residual")


if __name__ == "__main__":
    main()
