"""Compare the compiled integer-polynomial kernel with the fallback.

Both implementations are imported side by side and timed on the
operations that dominate the symbolic runs: dense multiplication,
content-stripped gcd, pseudo-division, and homomorphic evaluation.
A final end-to-end number rebuilds a constraint set in a subprocess
with PELLIAN_PURE toggled, since the package binds its kernel once at
import time.

Usage: python3 benchmarks/bench_kernel.py [--scale N] [--seed S]
"""

import argparse
import os
import random
import statistics
import subprocess
import sys
import time

from pellian._kernel import _intpoly_py as pure

try:
    from pellian._kernel import _intpoly as compiled
except ImportError:
    compiled = None


def rand_poly(rng, degree, bits):
    return tuple(rng.getrandbits(bits) - (1 << (bits - 1))
                 for _ in range(degree + 1))


def timed(fn, reps):
    passes = []
    for _ in range(3):
        t0 = time.perf_counter()
        for _ in range(reps):
            fn()
        passes.append((time.perf_counter() - t0) / reps)
    return statistics.median(passes)


def workloads(rng, impl, scale):
    # pseudo-remainder coefficient growth makes gcd the slow one; its
    # inputs stay moderate so the fallback finishes in milliseconds
    f = impl.norm(rand_poly(rng, 60, 200))
    g = impl.norm(rand_poly(rng, 60, 200))
    u = impl.norm(rand_poly(rng, 20, 80))
    v = impl.norm(rand_poly(rng, 20, 80))
    w = impl.norm(rand_poly(rng, 8, 80))
    uw = impl.mul(u, w)
    vw = impl.mul(v, w)
    big = impl.mul(f, g)
    return [
        ("mul deg60*deg60, 200 bit", lambda: impl.mul(f, g), 50 * scale),
        ("gcd deg28, common deg8 factor", lambda: impl.gcd(uw, vw),
         10 * scale),
        ("pseudo_divmod deg120 by deg60", lambda: impl.pseudo_divmod(big, g),
         20 * scale),
        ("eval_hom deg60 at 3/7", lambda: impl.eval_hom(f, 3, 7),
         200 * scale),
    ]


def end_to_end(pure_backend):
    env = dict(os.environ)
    if pure_backend:
        env["PELLIAN_PURE"] = "1"
    else:
        env.pop("PELLIAN_PURE", None)
    code = ("import time; t0 = time.perf_counter(); "
            "from pellian.classify import build_constraints; "
            "build_constraints(12); "
            "print(time.perf_counter() - t0)")
    out = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--scale", type=int, default=1,
                    help="multiply every repetition count")
    ap.add_argument("--seed", type=int, default=20260823)
    args = ap.parse_args()

    if compiled is None:
        print("compiled kernel not built; showing the fallback only")
    impls = [("python", pure)]
    if compiled is not None:
        impls.append((compiled.BACKEND, compiled))

    results = {}
    for name, impl in impls:
        rng = random.Random(args.seed)
        for label, fn, reps in workloads(rng, impl, args.scale):
            results.setdefault(label, {})[name] = timed(fn, reps)

    width = max(len(label) for label in results)
    other = impls[-1][0]
    header = "{:<{w}}  {:>12}  {:>12}  {:>8}".format(
        "operation", "python", other, "speedup", w=width)
    print(header)
    print("-" * len(header))
    for label, by_impl in results.items():
        base = by_impl["python"]
        fast = by_impl[other]
        print("{:<{w}}  {:>10.1f}us  {:>10.1f}us  {:>7.1f}x".format(
            label, base * 1e6, fast * 1e6, base / fast, w=width))

    print()
    t_pure = end_to_end(pure_backend=True)
    t_fast = end_to_end(pure_backend=False)
    print("end to end: symbolic constraint set for torsion order 12")
    print("  pure python     {:.2f}s".format(t_pure))
    print("  selected kernel {:.2f}s  ({:.1f}x)".format(
        t_fast, t_pure / t_fast))


if __name__ == "__main__":
    main()
