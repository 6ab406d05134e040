"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Times orbit counting over a block of n and trial division on a few primes,
once per importable backend, and prints the speedup of each backend over
the pure-Python one.
"""

import argparse
import time

from circprime import kernels

ORBIT_INPUTS = [range(3, 2001), range(10_000, 10_050), [65_537, 99_991]]
TRIAL_INPUTS = [10**6 + 3, 10**9 + 7, 10**10 + 19]


def _orbit_block(mod, ns):
    for n in ns:
        mod.count_orbits(n)


def _trial_block(mod, name):
    fn = getattr(mod, name)
    for n in TRIAL_INPUTS:
        fn(n)


def cases():
    for ns in ORBIT_INPUTS:
        label = f"count_orbits n in [{min(ns)}, {max(ns)}] ({len(ns)} values)"
        yield label, lambda mod, ns=ns: _orbit_block(mod, ns)
    for name in ("trial_division", "optimized_trial_division"):
        yield f"{name} on {len(TRIAL_INPUTS)} primes up to 1e10", lambda mod, name=name: _trial_block(mod, name)


def best_of(fn, mod, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(mod)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    names = kernels.backends()
    mods = {name: kernels.get_backend(name) for name in names}
    print(f"active backend: {kernels.BACKEND}; available: {', '.join(names)}")
    header = f"{'case':<55}" + "".join(f"{n:>12}" for n in names) + f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for label, fn in cases():
        times = {name: best_of(fn, mods[name], args.repeat) for name in names}
        speedup = times["python"] / times[names[0]] if times[names[0]] > 0 else float("nan")
        print(f"{label:<55}" + "".join(f"{times[n]:>11.4f}s" for n in names) + f"{speedup:>9.1f}x")


if __name__ == "__main__":
    main()
