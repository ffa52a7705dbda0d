"""Time the compiled closure kernel against the pure-Python one.

    python3 benchmarks/bench_closure.py [--repeat 5] [--seed 0]

Each workload is a free act over a catalog monoid with random generating pairs.
Both backends must produce the same partition; the script aborts otherwise.
"""
import argparse
import random
import statistics
import time

from coact import kernels
from coact.acts import FreeAct, regular_act
from coact.congruence import congruence_closure
from coact.constructions import brandt, cyclic_group, full_transformation_monoid, u2


def workloads(seed: int):
    rng = random.Random(seed)
    cases = [
        ("T3 regular", regular_act(full_transformation_monoid(3))),
        ("T4 regular", regular_act(full_transformation_monoid(4))),
        ("B(Z3;4) free x3", FreeAct(brandt(cyclic_group(3), [1, 2, 3, 4]), ["x", "y", "z"])),
        ("B(U2;6) free x4", FreeAct(brandt(u2(), list(range(1, 7))), ["w", "x", "y", "z"])),
    ]
    for name, A in cases:
        for npairs in (1, 4):
            H = [(rng.randrange(A.size), rng.randrange(A.size)) for _ in range(npairs)]
            yield f"{name} |H|={npairs}", A, H


def timed(A, H, repeat: int):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        rho = congruence_closure(A, H)
        times.append(time.perf_counter() - t0)
    return statistics.median(times), rho.reps


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    backends = sorted(kernels.BACKENDS)
    if "cython" not in backends:
        print("compiled kernel not built; only the Python backend is available")
    print(f"{'workload':34s} {'|A|':>6s} " + " ".join(f"{b + ' ms':>12s}" for b in backends)
          + ("   speedup" if len(backends) > 1 else ""))
    previous = kernels.BACKEND
    try:
        for name, A, H in workloads(args.seed):
            row, parts = {}, set()
            for b in backends:
                kernels.use_backend(b)
                row[b], reps = timed(A, H, args.repeat)
                parts.add(reps)
            if len(parts) != 1:
                raise SystemExit(f"backends disagree on {name}")
            line = f"{name:34s} {A.size:6d} " + " ".join(f"{row[b] * 1e3:12.2f}" for b in backends)
            if len(backends) > 1:
                line += f"   {row['python'] / row['cython']:7.1f}x"
            print(line)
    finally:
        kernels.use_backend(previous)


if __name__ == "__main__":
    main()
