"""Timing comparison of the two kernel paths.

Kernel selection happens at import time, so this script times one path per
process: invoked without arguments it spawns itself twice (once with
``WBM2D_DISABLE_JIT=1``, once without) and prints a table; with
``--time-one`` it times the workloads in the current process and emits JSON.

Run from the repository root:

    python3 benchmarks/bench_kernels.py
"""

import argparse
import json
import os
import subprocess
import sys
import time


def _workloads():
    import numpy as np

    from wbm2d.geometry import BoundingBox, Disk, sample_boundary
    from wbm2d.specfun import bessel_j0, bessel_y0
    from wbm2d.wavebasis import make_spec, normal_derivative_matrix, values_matrix

    spec = make_spec(0.924, 20.0, BoundingBox(0.0, 0.0, 3.0, 3.0))
    sample = sample_boundary(Disk(1.5 + 1.5j, 1.0), 4000)
    xs = np.linspace(0.01, 20.0, 200_000)

    return {
        "bessel j0+y0 (200k args)": lambda: (bessel_j0(xs), bessel_y0(xs)),
        f"values matrix (4000x{spec.n})": lambda: values_matrix(spec, sample.points),
        f"normal-derivative matrix (4000x{spec.n})": lambda: normal_derivative_matrix(
            spec, sample.points, sample.normals
        ),
    }


def _time_one() -> None:
    from wbm2d.jitconfig import JIT_ENABLED

    results = {"jit": JIT_ENABLED, "timings_ms": {}}
    for name, fn in _workloads().items():
        fn()  # warmup; compiles on the jit path
        best = min(
            (lambda t0: (fn(), time.perf_counter() - t0)[1])(time.perf_counter())
            for _ in range(5)
        )
        results["timings_ms"][name] = best * 1e3
    print(json.dumps(results))


def _run_child(disable_jit: bool) -> dict:
    env = dict(os.environ)
    env["WBM2D_DISABLE_JIT"] = "1" if disable_jit else "0"
    env.pop("NUMBA_DISABLE_JIT", None)
    proc = subprocess.run(
        [sys.executable, os.path.abspath(__file__), "--time-one"],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    return json.loads(proc.stdout.strip().splitlines()[-1])


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--time-one", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args()
    if args.time_one:
        _time_one()
        return 0

    jit = _run_child(disable_jit=False)
    plain = _run_child(disable_jit=True)
    if not jit["jit"]:
        print("note: numba unavailable, both runs used the numpy path")

    width = max(len(k) for k in plain["timings_ms"])
    print(f"{'kernel':<{width}}  {'numba ms':>9}  {'numpy ms':>9}  {'speedup':>7}")
    for name, numpy_ms in plain["timings_ms"].items():
        numba_ms = jit["timings_ms"][name]
        print(
            f"{name:<{width}}  {numba_ms:>9.2f}  {numpy_ms:>9.2f}  "
            f"{numpy_ms / numba_ms:>6.1f}x"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
