"""Time the pure-Python and compiled kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat 5]

Also times building the whole type C family at n = 4 with each backend,
which is the end-to-end cost the kernels are meant to cut.
"""
import argparse
import os
import subprocess
import sys
import timeit

from schubert_bcd import _pure
from schubert_bcd.kernels import full_kernel

try:
    from schubert_bcd import _ckernels
except ImportError:
    _ckernels = None


def cases():
    top = full_kernel("C", 4).terms
    small = full_kernel("C", 3).terms
    w = 8
    swap = [(1, 1), (0, 1), (2, 1), (3, 1)] + [None] * 4
    return {
        "mul (C3 kernel)^2": lambda K: K.mul(small, small),
        "lincomb (C4 kernel)": lambda K: K.lincomb(top, top, -2),
        "divdiff d1 (C4 kernel)": lambda K: K.divdiff(top, K_TRANS, 0),
        "divdiff d0 (C4 kernel)": lambda K: K.divdiff(top, K_ZERO, 0),
        "substitute s1 (C4 kernel)": lambda K: K.substitute(top, swap, w),
    }


K_TRANS = _pure.TRANSPOSITION
K_ZERO = _pure.ZERO_C

FAMILY = "from schubert_bcd.schubert import family_table; family_table('C', 4)"


def family_time(pure: bool) -> float:
    env = dict(os.environ)
    if pure:
        env["SCHUBERT_BCD_PURE"] = "1"
    else:
        env.pop("SCHUBERT_BCD_PURE", None)
    code = f"import time; t = time.perf_counter(); {FAMILY}; print(time.perf_counter() - t)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; only the pure backend is available")
    print(f"{'kernel':28s} {'pure ms':>10s} {'cython ms':>10s} {'speedup':>8s}")
    for name, fn in cases().items():
        tp = min(timeit.repeat(lambda: fn(_pure), number=1, repeat=args.repeat)) * 1e3
        if _ckernels is None:
            print(f"{name:28s} {tp:10.2f}")
            continue
        assert fn(_pure) == fn(_ckernels), name
        tc = min(timeit.repeat(lambda: fn(_ckernels), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:28s} {tp:10.2f} {tc:10.2f} {tp / tc:8.1f}x")
    tp = family_time(True)
    line = f"{'C family, n=4':28s} {tp * 1e3:10.1f}"
    if _ckernels is not None:
        tc = family_time(False)
        line += f" {tc * 1e3:10.1f} {tp / tc:8.1f}x"
    print(line)


if __name__ == "__main__":
    main()
