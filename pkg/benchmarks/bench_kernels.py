"""Time the compiled kernels against the pure-Python fallback.

Both backends get the same inputs; the script checks their outputs are
identical before reporting timings.

    python3 benchmarks/bench_kernels.py --q 2 --m 6 --d 21 --ell 3 --t 12 --trials 400
"""

import argparse
import time

import numpy as np

from ialt.codes import build_code
from ialt.kernels import load
from ialt.simkit import sample_trials


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--q", type=int, default=2)
    ap.add_argument("--m", type=int, default=6)
    ap.add_argument("--d", type=int, default=21)
    ap.add_argument("--ell", type=int, default=3)
    ap.add_argument("--t", type=int, default=None, help="errors per word (default: t_max)")
    ap.add_argument("--trials", type=int, default=400)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    code = build_code(args.q, args.m, args.d)
    F = code.field
    t = code.t_max(args.ell) if args.t is None else args.t
    rng = np.random.default_rng(args.seed)
    C, _, _, R = sample_trials(code, args.ell, t, args.trials, rng)
    msg = rng.integers(0, 2, size=(args.trials, args.ell, code.k))
    H = code.parity_q

    backends = {name: load(name) for name in ("python", "cython")}
    cases = {
        "decode_batch": lambda K: K.decode_batch(R, code.P, code.root_pos, F.exp, F.log, F.order,
                                                 code.t_max(args.ell)),
        "encode_batch": lambda K: K.encode_batch(msg, code.generator, F.exp, F.log, F.order),
        "rref(parity)": lambda K: K.rref(code.P, code.P.shape[1], F.exp, F.log, F.order),
    }
    print(f"code q={args.q} m={args.m} n={code.n} d={args.d} k={code.k}, ell={args.ell}, t={t}, "
          f"{args.trials} words; parity_q {H.shape}")
    print(f"{'kernel':<14} {'python [s]':>12} {'cython [s]':>12} {'speedup':>9}")
    for label, fn in cases.items():
        times, outs = {}, {}
        for name, K in backends.items():
            times[name], outs[name] = best_of(lambda: fn(K), args.repeat)
        a, b = outs["python"], outs["cython"]
        a = a if isinstance(a, tuple) else (a,)
        b = b if isinstance(b, tuple) else (b,)
        if not all(np.array_equal(x, y) for x, y in zip(a, b)):
            raise SystemExit(f"{label}: backends disagree")
        print(f"{label:<14} {times['python']:>12.4f} {times['cython']:>12.4f} "
              f"{times['python'] / times['cython']:>8.1f}x")


if __name__ == "__main__":
    main()
