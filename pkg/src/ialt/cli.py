"""Command-line interface: bound tables, simulation, single-word decoding, code info."""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .bounds import CodeParams, all_bounds, format_exact
from .codes import build_code, codeinfo
from .decoder import decode
from .gf2m import FieldError
from .simkit import TrialConfig, find_threshold, run_trials, wilson_ci95

DAT_COLUMNS = ["t", "RS", "Thm1", "WoKopt", "L01", "LargeEll", "LowerIE", "Miscorrection", "Sim"]


def _code_args(p: argparse.ArgumentParser, ell: bool = True):
    p.add_argument("--q", type=int, required=True, help="subfield size (a power of 2)")
    p.add_argument("--m", type=int, required=True, help="extension degree; the big field has q^m elements")
    p.add_argument("--d", type=int, required=True, help="designed distance of the GRS code")
    if ell:
        p.add_argument("--ell", type=int, required=True, help="interleaving order")
    p.add_argument("--n", type=int, default=None, help="code length (default q^m - 1)")


def _v_seed_arg(p: argparse.ArgumentParser):
    p.add_argument("--v-seed", type=int, default=None,
                   help="draw random column multipliers v from this seed (default: v = 1)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ialt", description=__doc__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    b = sub.add_parser("bounds", help="write the bound table (.dat) for a range of t")
    _code_args(b)
    b.add_argument("--t-min", type=int, default=None)
    b.add_argument("--t-max", type=int, default=None)
    b.add_argument("--sim-trials", type=int, default=None,
                   help="also locate the simulated threshold with this many trials per t")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--workers", type=int, default=1)
    b.add_argument("--literal-majorant", action="store_true",
                   help="use the looser '+1' form of the convex-sum majorant")
    b.add_argument("--qary-weights", action="store_true",
                   help="miscorrection column with the n(Q-1)/w weight estimate, valid for every Q")
    b.add_argument("--out", default=None, help="output path, '-' for stdout")

    s = sub.add_parser("simulate", help="Monte Carlo decoding statistics as JSON")
    _code_args(s)
    _v_seed_arg(s)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--trials", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--codeword", choices=["random", "zero"], default="random")
    s.add_argument("--strict", action="store_true", help="reject error values outside the subfield")
    s.add_argument("--workers", type=int, default=1)

    d = sub.add_parser("decode", help="decode one received matrix read from a file")
    _code_args(d)
    _v_seed_arg(d)
    d.add_argument("--in", dest="infile", required=True, help="whitespace-separated integers, ell rows of n")
    d.add_argument("--strict", action="store_true")
    d.add_argument("--out", default="-")

    i = sub.add_parser("info", help="print code parameters as JSON")
    _code_args(i)
    _v_seed_arg(i)
    return ap


def _bounds_row(args):
    q, m, d, ell, n, t, literal, qary = args
    vals = all_bounds(CodeParams(q, m, d, ell, t, n), literal=literal, qary=qary)
    return [format_exact(vals[c].p_exact) for c in DAT_COLUMNS[1:-1]]


def cmd_bounds(a) -> int:
    n = a.n if a.n is not None else a.q**a.m - 1
    base = CodeParams(a.q, a.m, a.d, a.ell, 0, n)
    t_lo = (a.d - 1) // 2 if a.t_min is None else a.t_min
    t_hi = min(base.t_max + 1, n) if a.t_max is None else a.t_max
    if not 0 <= t_lo <= t_hi <= n:
        raise ValueError(f"need 0 <= t-min <= t-max <= n, got [{t_lo}, {t_hi}] with n={n}")
    jobs = [(a.q, a.m, a.d, a.ell, n, t, a.literal_majorant, a.qary_weights) for t in range(t_lo, t_hi + 1)]
    if a.workers > 1:
        with ProcessPoolExecutor(a.workers) as pool:
            rows = list(pool.map(_bounds_row, jobs))
    else:
        rows = [_bounds_row(j) for j in jobs]

    threshold = None
    if a.sim_trials:
        code = build_code(a.q, a.m, a.d, n)
        threshold = find_threshold(code, a.ell, a.sim_trials, 0.9, a.seed, a.workers)

    lines = [" ".join(DAT_COLUMNS)]
    for t, row in zip(range(t_lo, t_hi + 1), rows):
        sim = "1" if threshold == t else "nan"
        lines.append(" ".join([str(t), *row, sim]))
    text = "\n".join(lines) + "\n"
    out = a.out or f"boundsData_q={a.q}_m={a.m}_r={a.d - 1}_l={a.ell}.dat"
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)
        print(out)
    return 0


def cmd_simulate(a) -> int:
    code = build_code(a.q, a.m, a.d, a.n, a.v_seed)
    cfg = TrialConfig(code, a.ell, a.t, a.trials, a.seed, a.codeword, a.strict)
    st = run_trials(cfg, workers=a.workers)
    lo, hi = wilson_ci95(st.successes, st.trials)
    report = {
        "params": {"q": a.q, "m": a.m, "n": code.n, "d": a.d, "ell": a.ell, "t": a.t,
                   "trials": a.trials, "seed": a.seed, "codeword": a.codeword,
                   "v_seed": a.v_seed, "strict": a.strict},
        "successes": st.successes,
        "miscorrections": st.miscorrections,
        "failures": st.failures,
        "reasons": st.reasons,
        "rate_ci95": [round(lo, 6), round(hi, 6)],
    }
    print(json.dumps(report))
    return 0


def read_matrix(path: str, ell: int, n: int) -> np.ndarray:
    with open(path) as fh:
        tokens = fh.read().split()
    try:
        vals = [int(x) for x in tokens]
    except ValueError as exc:
        raise ValueError(f"{path}: non-integer entry ({exc})") from None
    if len(vals) != ell * n:
        raise ValueError(f"{path}: expected {ell}x{n} = {ell * n} integers, found {len(vals)}")
    return np.array(vals, dtype=np.int64).reshape(ell, n)


def cmd_decode(a) -> int:
    code = build_code(a.q, a.m, a.d, a.n, a.v_seed)
    R = read_matrix(a.infile, a.ell, code.n)
    if ((R < 0) | (R >= code.field.size)).any() or not code.field.subfield_mask()[R].all():
        raise ValueError(f"{a.infile}: entries must be elements of GF({a.q})")
    out = decode(R, code, strict=a.strict)
    if out.decoded:
        text = "\n".join(" ".join(str(x) for x in row) for row in out.C_hat) + "\n"
    else:
        text = f"FAILURE:{out.reason}\n"
    if a.out == "-":
        sys.stdout.write(text)
    else:
        with open(a.out, "w") as fh:
            fh.write(text)
    return 0


def cmd_info(a) -> int:
    code = build_code(a.q, a.m, a.d, a.n, a.v_seed)
    print(json.dumps(codeinfo(code, a.ell)))
    return 0


COMMANDS = {"bounds": cmd_bounds, "simulate": cmd_simulate, "decode": cmd_decode, "info": cmd_info}


def main(argv=None) -> int:
    a = build_parser().parse_args(argv)
    try:
        return COMMANDS[a.cmd](a)
    except (ValueError, FieldError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
