"""Command-line interface.

Exit codes: 0 success, 1 I/O or verification failure, 2 usage error.
Errors are written to stderr as a one-line JSON object.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import kernels
from .bch import BchCode, bch_build, failing_roots
from .crt import BACKENDS, bytes_to_poly, crt_setup, encode_poly, poly_to_bytes
from .gf2field import MAX_T, MIN_T
from .gf2poly import Gf2Poly
from .lfsr import build_datapath, build_div_lfsr, simulate_datapath, simulate_serial
from .report import cost_report, format_table
from .selftest import run_selftest

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Failure(Exception):
    def __init__(self, code, kind, message, **extra):
        super().__init__(message)
        self.code, self.kind, self.extra = code, kind, extra


def _add_code_args(p):
    p.add_argument("--t", type=int, required=True, help=f"extension degree ({MIN_T}..{MAX_T})")
    p.add_argument("--delta", type=int, required=True, help="designed distance")
    p.add_argument("--prim-poly", help="primitive polynomial, e.g. 'x^4+x+1' or '0x13'")


def _add_input_args(p, what):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", "-i", help=f"{what} file (raw bytes, MSB-first)")
    src.add_argument("--hex", help=f"{what} as a hex string")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crtbch", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a BCH code and print its descriptor")
    _add_code_args(p)
    p.add_argument("--format", choices=("json", "table"), default="json")

    p = sub.add_parser("encode", help="systematically encode a message")
    _add_code_args(p)
    _add_input_args(p, "message")
    p.add_argument("--output", "-o", help="codeword file; hex goes to stdout if omitted")
    p.add_argument("--backend", choices=BACKENDS, default="crt")
    p.add_argument("--workers", type=int, default=None, help="threads for parallel CRT branches")
    p.add_argument("--trace", help="write a per-clock register trace to this file")

    p = sub.add_parser("verify", help="check a codeword against the code's roots")
    _add_code_args(p)
    _add_input_args(p, "codeword")

    p = sub.add_parser("cost", help="XOR-gate and fanout report")
    _add_code_args(p)
    p.add_argument("--format", choices=("json", "table"), default="table")

    p = sub.add_parser("selftest", help="reproduce the worked examples and oracle checks")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _code_from_args(args) -> BchCode:
    if not MIN_T <= args.t <= MAX_T:
        raise _Failure(EXIT_USAGE, "usage", f"--t must be in [{MIN_T}, {MAX_T}]")
    try:
        prim = Gf2Poly.parse(args.prim_poly) if args.prim_poly else None
        return bch_build(args.t, args.delta, prim)
    except ValueError as exc:
        raise _Failure(EXIT_USAGE, "usage", str(exc)) from exc


def _read_input(args, nbits: int) -> Gf2Poly:
    try:
        if args.hex is not None:
            s = args.hex.strip().lower().removeprefix("0x")
            data = bytes.fromhex(s.rjust((nbits + 7) // 8 * 2, "0"))
        else:
            with open(args.input, "rb") as fh:
                data = fh.read()
    except OSError as exc:
        raise _Failure(EXIT_FAIL, "io", str(exc)) from exc
    except ValueError as exc:
        raise _Failure(EXIT_USAGE, "usage", f"bad hex input: {exc}") from exc
    try:
        return bytes_to_poly(data, nbits)
    except ValueError as exc:
        raise _Failure(EXIT_FAIL, "input", str(exc)) from exc


def _cmd_build(args) -> int:
    code = _code_from_args(args)
    if args.format == "json":
        print(json.dumps(code.to_dict(), indent=2, sort_keys=True))
    else:
        print(f"[{code.N},{code.K}] BCH code  t={code.t}  delta={code.delta}  r={code.r}")
        print(f"primitive polynomial: {code.prim_poly}")
        print(f"g(x) = {code.g}")
        for c, f in zip(code.cosets, code.factors):
            print(f"  coset {list(c.members)}: {f}")
    return EXIT_OK


def _cmd_encode(args) -> int:
    code = _code_from_args(args)
    m = _read_input(args, code.K)
    trace: list[str] | None = [] if args.trace else None
    if trace is not None:
        # traced runs clock every circuit in Python so each cycle can be logged
        if args.backend == "lfsr_direct":
            _, state = simulate_serial(build_div_lfsr(code.g), m.to_bits(code.K) + bytes(code.redundancy),
                                       trace, "direct")
            c = (m << code.redundancy) + Gf2Poly(state)
        elif args.backend == "crt":
            par = simulate_datapath(build_datapath(crt_setup(code)), m, trace=trace)
            c = (m << code.redundancy) + par
        else:
            c = encode_poly(code, m, "naive")
    else:
        c = encode_poly(code, m, args.backend, args.workers)
    data = poly_to_bytes(c, code.N)
    try:
        if args.output:
            with open(args.output, "wb") as fh:
                fh.write(data)
        else:
            print(data.hex())
        if trace is not None:
            with open(args.trace, "w") as fh:
                fh.write("\n".join(trace) + ("\n" if trace else ""))
    except OSError as exc:
        raise _Failure(EXIT_FAIL, "io", str(exc)) from exc
    return EXIT_OK


def _cmd_verify(args) -> int:
    code = _code_from_args(args)
    c = _read_input(args, code.N)
    bad = failing_roots(code, c)
    if bad:
        raise _Failure(EXIT_FAIL, "verification", f"c(alpha^{bad[0]}) != 0", failing_root=bad[0],
                       failing_roots=bad)
    print("ok")
    return EXIT_OK


def _cmd_cost(args) -> int:
    code = _code_from_args(args)
    plan = crt_setup(code)
    rep = cost_report(code, plan, build_datapath(plan))
    if args.format == "json":
        print(json.dumps(rep.to_dict(), indent=2, sort_keys=True))
    else:
        print(format_table(rep))
    return EXIT_OK


def _cmd_selftest(args) -> int:
    results = run_selftest(args.samples, args.seed)
    for name, ok, detail, secs in results:
        print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail} ({secs:.2f}s)")
    print(f"kernels: {kernels.IMPLEMENTATION}")
    return EXIT_OK if all(r[1] for r in results) else EXIT_FAIL


COMMANDS = {
    "build": _cmd_build,
    "encode": _cmd_encode,
    "verify": _cmd_verify,
    "cost": _cmd_cost,
    "selftest": _cmd_selftest,
}


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except _Failure as exc:
        err = {"error": exc.kind, "message": str(exc), **exc.extra}
        print(json.dumps(err), file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
