"""Compare the compiled and numpy log-sine kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Uses ground-state index sets of a half-filled chain, the shape the
formfactor evaluates most often.
"""

import argparse
import timeit

from xxcorr import kernels
from xxcorr.xxchain import ChainSpec, ground_state_momenta


def ground_indices(L: int):
    spec = ChainSpec.half_filled(L)
    return ground_state_momenta(spec, "M").doubled, ground_state_momenta(spec, "M-1").doubled


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    backends = ["numpy"] + (["cython"] if kernels._compiled is not None else [])
    print(f"active backend: {kernels.BACKEND}")
    print(f"{'L':>6} {'kernel':>9} " + " ".join(f"{b + ' [ms]':>13}" for b in backends) + f" {'speedup':>8}")
    for L in (64, 256, 1024, 4096):
        a, b = ground_indices(L)
        number = max(1, 20000 // L)
        for name, call in (
            ("cross", lambda be: kernels.sine_cross_logsum(a, b, L, be)),
            ("triangle", lambda be: kernels.sine_triangle_logsum(a, L, be)),
        ):
            results = {be: call(be) for be in backends}
            ref = results["numpy"]
            for be, val in results.items():
                assert val[1] == ref[1] and abs(val[0] - ref[0]) < 1e-8 * max(1.0, abs(ref[0])), (L, name, be)
            times = {be: min(timeit.repeat(lambda: call(be), number=number, repeat=args.repeat)) / number * 1e3 for be in backends}
            speed = f"{times['numpy'] / times['cython']:8.1f}" if "cython" in times else f"{'n/a':>8}"
            print(f"{L:>6} {name:>9} " + " ".join(f"{times[be]:13.4f}" for be in backends) + f" {speed}")


if __name__ == "__main__":
    main()
