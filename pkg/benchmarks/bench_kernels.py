"""Compiled kernels against their fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat N]

Prints best-of-N wall time per case and the speedup.  Results of both paths
are checked for equality before timing.
"""

import argparse
import random
import timeit

import numpy as np

from orcurv import platonic, tiling_patch
from orcurv.kernels import HAVE_NUMBA, run_bfs, run_transport


def transport_case(m, n, seed):
    rng = random.Random(seed)
    q = m * n * 12
    def split(k):
        cuts = sorted(rng.randint(0, q) for _ in range(k - 1))
        return [b - a for a, b in zip([0] + cuts, cuts + [q])]
    cost = [[rng.randint(0, 6) for _ in range(n)] for _ in range(m)]
    return cost, split(m), split(n)


def bench(label, fast, slow, repeat):
    tf = min(timeit.repeat(fast, number=1, repeat=repeat))
    ts = min(timeit.repeat(slow, number=1, repeat=repeat))
    print(f"{label:<34} jit {tf * 1e3:9.3f} ms   fallback {ts * 1e3:9.3f} ms   x{ts / tf:6.1f}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not HAVE_NUMBA:
        print("numba unavailable or disabled; both columns time the fallback")

    for m, n in [(7, 7), (13, 13), (25, 25), (40, 40)]:
        cases = [transport_case(m, n, s) for s in range(20)]
        for cost, s, d in cases[:3]:
            a, b = run_transport(cost, s, d, use_jit=True), run_transport(cost, s, d, use_jit=False)
            assert (a[0] == b[0]).all()
        run_transport(*cases[0], use_jit=True)  # compile
        bench(
            f"transport {m}x{n} (20 instances)",
            lambda: [run_transport(*c, use_jit=True) for c in cases],
            lambda: [run_transport(*c, use_jit=False) for c in cases],
            args.repeat,
        )

    for name, c in [("bfs icosahedron", platonic("icosahedron")),
                    ("bfs hexagonal r=8", tiling_patch("hexagonal", 8).complex),
                    ("bfs triangular r=16", tiling_patch("triangular", 16).complex)]:
        indptr, indices = c._csr
        src = np.arange(c.n_vertices)
        assert (run_bfs(indptr, indices, src, use_jit=True) == run_bfs(indptr, indices, src, use_jit=False)).all()
        bench(
            f"{name} (V={c.n_vertices})",
            lambda: run_bfs(indptr, indices, src, use_jit=True),
            lambda: run_bfs(indptr, indices, src, use_jit=False),
            args.repeat,
        )


if __name__ == "__main__":
    main()
