"""Compare the compiled and pure-Python LFSR kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Times the direct divider by g and the per-message datapath work (all
stage-1/2/3 circuits) for the [2047,1926] and [8191,7684] codes.
"""

import argparse
import random
import timeit

from crtbch import _kernels_py, kernels
from crtbch.bch import bch_build
from crtbch.crt import crt_setup
from crtbch.gf2poly import Gf2Poly


def datapath_work(impl, plan, frame):
    for b in plan.branches:
        w = bytes(b.w.coeffs())
        prod, _ = impl.mul_lfsr(bytes(b.u.coeffs()), frame + bytes(int(b.u.degree)))
        _, rem = impl.div_lfsr(w, prod)
        impl.mul_lfsr(bytes(b.w_prime.coeffs()), rem[::-1] + bytes(int(b.w_prime.degree)))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    compiled = kernels.compiled()
    impls = [("python", _kernels_py)] + ([("cython", compiled)] if compiled else [])
    if compiled is None:
        print("compiled kernels not built; timing the fallback only")

    rng = random.Random(0)
    print(f"{'code':<14}{'workload':<12}" + "".join(f"{n:>12}" for n, _ in impls) + f"{'speedup':>10}")
    for t, delta in [(11, 23), (13, 79)]:
        code = bch_build(t, delta)
        plan = crt_setup(code)
        m = Gf2Poly(rng.getrandbits(code.K))
        frame = m.to_bits(code.K) + bytes(code.redundancy)
        g_taps = bytes(code.g.coeffs())
        workloads = {
            "direct": lambda impl: impl.div_lfsr(g_taps, frame),
            "crt": lambda impl: datapath_work(impl, plan, frame),
        }
        for wname, fn in workloads.items():
            times = []
            for _, impl in impls:
                best = min(timeit.repeat(lambda: fn(impl), number=1, repeat=args.repeat))
                times.append(best)
            speed = f"{times[0] / times[1]:>9.1f}x" if len(times) > 1 else ""
            label = f"[{code.N},{code.K}]"
            print(f"{label:<14}{wname:<12}" + "".join(f"{s * 1e3:>10.2f}ms" for s in times) + speed)


if __name__ == "__main__":
    main()
