#!/usr/bin/env python3
"""Benchmark the compiled GF(2) kernels against the numpy fallback.

Times the two inner loops that dominate runtime: bit-packed row reduction
and the exhaustive Gray-code minimum-block-weight scan.  Run after an
editable install; if the compiled extension is missing only the fallback
column is reported.
"""

import time

import numpy as np

from building_homology import _gf2py, gf2

try:
    from building_homology import _gf2core
except ImportError:
    _gf2core = None


def timeit(fn, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_rref(rng, m, n):
    M = rng.integers(0, 2, size=(m, n)).astype(np.uint8)
    W = gf2.pack_rows(M)

    rows = [("rref", f"{m}x{n}")]
    out = {}
    for label, impl in (("compiled", _gf2core), ("python", _gf2py)):
        if impl is None:
            continue
        out[label] = timeit(lambda: impl.rref_words(W.copy(), n))
    return f"{m}x{n}", out


def bench_min_weight(rng, d, nblocks):
    sizes = rng.integers(1, 3, size=nblocks)
    n = int(sizes.sum())
    block_of = np.repeat(np.arange(nblocks, dtype=np.int32), sizes)
    B = rng.integers(0, 2, size=(d, n)).astype(np.uint8)
    W = gf2.pack_rows(B)
    out = {}
    results = set()
    for label, impl in (("compiled", _gf2core), ("python", _gf2py)):
        if impl is None:
            continue
        out[label] = timeit(lambda: results.add(impl.min_block_weight(W, n, block_of)))
    assert len(results) <= 1, "backends disagree"
    return f"d={d}, {nblocks} blocks", out


def report(title, case, out):
    comp = out.get("compiled")
    py = out.get("python")
    speed = f"{py / comp:7.1f}x" if comp and py else "      -"
    comp_s = f"{comp * 1e3:9.2f}" if comp else "        -"
    py_s = f"{py * 1e3:9.2f}" if py else "        -"
    print(f"{title:12s} {case:20s} {comp_s} {py_s} {speed}")


def main():
    rng = np.random.default_rng(0)
    print(f"active backend: {gf2.BACKEND}")
    print(f"{'kernel':12s} {'case':20s} {'compiled':>9s} {'python':>9s} {'speedup':>8s}")
    print(f"{'':12s} {'':20s} {'(ms)':>9s} {'(ms)':>9s}")
    for m, n in ((256, 512), (1024, 2048)):
        case, out = bench_rref(rng, m, n)
        report("rref", case, out)
    for d, nblocks in ((16, 200), (20, 315)):
        case, out = bench_min_weight(rng, d, nblocks)
        report("min-weight", case, out)


if __name__ == "__main__":
    main()
