#!/usr/bin/env python3
"""Compare the compiled and pure-Python coefficient kernels.

Two layers:

* raw `insert` calls on dense random tables shaped like real bracket
  workloads (lifted binary components composed up to arity 6-7);
* one end-to-end workload per side: a triple derived bracket on random
  cochains at dims (2,2) and (3,3), driven through whichever backend
  `QTA_KERNEL` selects (so the script re-executes itself once per backend
  when run without arguments).

Usage: python benchmarks/bench_kernel.py [--backend c|python] [--repeat N]
"""

import argparse
import math
import os
import random
import subprocess
import sys
import time
from fractions import Fraction


def random_table(rng, sizes, cod, density=0.5):
    out = []
    for _ in range(math.prod(sizes) * cod):
        if rng.random() < density:
            out.append(Fraction(rng.randint(-3, 3), rng.choice([1, 2])))
        else:
            out.append(Fraction(0))
    return out


RAW_SHAPES = [
    # (f_sizes, f_cod, g_sizes, slot) on a total space of dim 4 and 6
    (((4, 4), 4, (4, 4), 0), "binary into binary, dim 4"),
    (((4, 4, 4), 4, (4, 4), 1), "ternary into binary, dim 4"),
    (((4, 4, 4, 4), 4, (4, 4, 4), 2), "arity 4 into ternary, dim 4"),
    (((6, 6), 6, (6, 6), 1), "binary into binary, dim 6"),
    (((6, 6, 6), 6, (6, 6), 0), "ternary into binary, dim 6"),
]


def bench_raw(kernel, rng, repeat):
    rows = []
    for (f_sizes, f_cod, g_sizes, slot), label in RAW_SHAPES:
        g_cod = f_sizes[slot]
        f = random_table(rng, f_sizes, f_cod)
        g = random_table(rng, g_sizes, g_cod)
        start = time.perf_counter()
        for _ in range(repeat):
            kernel.insert(f, f_sizes, f_cod, g, g_sizes, g_cod, slot)
        elapsed = (time.perf_counter() - start) / repeat
        rows.append((label, elapsed))
    return rows


def bench_end_to_end(rng):
    from qta import (
        A, APRIME, build_standard, controlling_structure, random_map,
        AssociativeAlgebra,
    )
    results = []
    for dim, table in ((2, [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]),
                       (3, [[[1, 0, 0], [0, 1, 0], [0, 0, 1]],
                            [[0, 1, 0], [0, 0, 1], [0, 0, 0]],
                            [[0, 0, 1], [0, 0, 0], [0, 0, 0]]])):
        alg = AssociativeAlgebra.from_table(table, dim)
        q = build_standard("reynolds", algebra=alg)
        s = controlling_structure(q, "left")
        args = [random_map(rng, (APRIME,) * a, A, q.dims) for a in (2, 1, 2)]
        start = time.perf_counter()
        s.bracket(3, args)
        elapsed = time.perf_counter() - start
        results.append((f"left l3 on degree (1,0,1) cochains, dims "
                        f"({dim},{dim})", elapsed))
    return results


def run_one(backend, repeat):
    os.environ["QTA_KERNEL"] = backend
    for mod in list(sys.modules):
        if mod.startswith("qta"):
            del sys.modules[mod]
    from qta import kernel, KERNEL_BACKEND
    assert KERNEL_BACKEND == ("c" if backend == "c" else "python")
    rng = random.Random(0)
    print(f"backend: {KERNEL_BACKEND}")
    for label, elapsed in bench_raw(kernel, rng, repeat):
        print(f"  raw insert  {label:38s} {elapsed * 1e3:9.3f} ms")
    for label, elapsed in bench_end_to_end(random.Random(1)):
        print(f"  end-to-end  {label:38s} {elapsed * 1e3:9.3f} ms")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--backend", choices=("c", "python"))
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if args.backend:
        run_one(args.backend, args.repeat)
        return
    for backend in ("python", "c"):
        code = subprocess.call(
            [sys.executable, __file__, "--backend", backend,
             "--repeat", str(args.repeat)],
            env={**os.environ, "QTA_KERNEL": backend})
        if code != 0:
            if backend == "c":
                print("compiled kernel unavailable; pure numbers only")
            else:
                sys.exit(code)


if __name__ == "__main__":
    main()
