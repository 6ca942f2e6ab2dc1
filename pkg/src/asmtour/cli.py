"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from math import comb

from .asm import Asm, Cmt, asm_to_cmt, build_ice_grid, cmt_to_asm, column_sums
from .bijection import phi, phi_any_order, phi_s_trace, psi, psi_s_trace
from .enumeration import (
    bottom_row,
    count_strict_formula,
    count_t_s,
    enumerate_cmt,
    enumerate_ocmt,
    enumerate_strict,
    enumerate_t_s,
    enumerate_tournaments,
    standard,
)
from .errors import AsmtourError, InputError
from .identities import brid_check, refid_check
from .triangle import Triangle, orientations_of
from .tournament import Tournament, tournament_to_triangle, triangle_to_tournament

# The oriented triangle used by ``trace-demo``.
DEMO_TRIANGLE = [
    ["y:4"],
    ["y:3", "x:4"],
    ["y:2", "x:3", "y:5"],
    ["x:1", "y:3", "y:4", "y:5"],
    ["n:1", "n:2", "n:3", "n:4", "n:5"],
]


def dumps(obj) -> str:
    return json.dumps(obj) + "\n"


def _read_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from exc


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parse_set(text: str | None):
    if text is None:
        return None
    try:
        return bottom_row(int(v) for v in text.split(","))
    except ValueError as exc:
        raise InputError(f"--set expects comma-separated integers, got {text!r}") from exc


def _need_n(args) -> int:
    if args.n is None:
        raise InputError(f"{args.command} needs --n")
    if args.n < 1:
        raise InputError("--n must be positive")
    return args.n


def _emit_trace(args, trace) -> None:
    if args.trace == "text":
        sys.stderr.write(trace.to_text())
    elif args.trace == "json":
        sys.stderr.write(dumps(trace.to_json()))


_LOADERS = {
    "asm": Asm.from_json,
    "cmt": Cmt.from_json,
    "tournament": Tournament.from_json,
    "triangle": Triangle.from_json,
}


def cmd_convert(args) -> int:
    obj = _LOADERS[args.from_](_read_json(args.input))
    pair = (args.from_, args.to)
    if pair == ("asm", "cmt"):
        out = asm_to_cmt(obj).to_json()
    elif pair == ("asm", "colsum"):
        out = {"n": obj.n, "rows": column_sums(obj).tolist()}
    elif pair == ("cmt", "asm"):
        out = cmt_to_asm(obj).to_json()
    elif pair == ("tournament", "triangle"):
        out = tournament_to_triangle(obj).to_json()
    elif pair == ("triangle", "tournament"):
        out = triangle_to_tournament(obj).to_json()
    else:
        raise InputError(f"no conversion from {args.from_} to {args.to}")
    _write(args.output, dumps(out))
    return 0


def cmd_ice(args) -> int:
    a = Asm.from_json(_read_json(args.input))
    _write(args.output, dumps(build_ice_grid(a).to_json()))
    return 0


def cmd_orient(args) -> int:
    c = Cmt.from_json(_read_json(args.input), complete=False)
    _write(args.output, dumps([t.to_json() for t in orientations_of(c)]))
    return 0


def cmd_phi(args) -> int:
    o = Triangle.from_json(_read_json(args.input))
    if o.is_standard:
        tour, trace = phi(o)
        out = tour.to_json()
    else:
        trace = phi_s_trace(o)
        out = trace.final.to_json()
    _write(args.output, dumps(out))
    _emit_trace(args, trace)
    return 0


def cmd_psi(args) -> int:
    obj = _read_json(args.input)
    if isinstance(obj, dict) and "edges" in obj:
        tri, trace = psi(Tournament.from_json(obj))
    else:
        trace = psi_s_trace(Triangle.from_json(obj))
        tri = trace.final
    _write(args.output, dumps(tri.to_json()))
    _emit_trace(args, trace)
    return 0


def _verify_roundtrip(args) -> tuple[bool, str]:
    s = _parse_set(args.set) or standard(_need_n(args))
    bad = 0
    objs = list(enumerate_ocmt(s))
    for o in objs:
        trace = phi_s_trace(o, check=True)
        if psi_s_trace(trace.final, check=True).final != o:
            bad += 1
    targets = list(enumerate_tournaments(len(s))) if s == standard(len(s)) else list(enumerate_t_s(s))
    for t in targets:
        if isinstance(t, Tournament):
            if phi(psi(t, check=True)[0], check=True)[0] != t:
                bad += 1
        elif phi_s_trace(psi_s_trace(t, check=True).final, check=True).final != t:
            bad += 1
    msg = f"{'ok' if not bad else 'FAILED'}: {len(objs)} oriented triangles, {len(targets)} targets, {bad} mismatches"
    return bad == 0, msg


def _verify_confluence(args) -> tuple[bool, str]:
    n = _need_n(args)
    samples = args.samples if args.samples is not None else 100
    rng = random.Random(args.seed)
    bad = checked = 0
    for o in enumerate_ocmt(standard(n)):
        want = phi(o)[0]
        for _ in range(samples):
            seed = rng.getrandbits(64)
            checked += 1
            if phi_any_order(o, seed)[0] != want:
                bad += 1
    msg = f"{'ok' if not bad else 'FAILED'}: {checked} random raising orders, {bad} disagreements"
    return bad == 0, msg


def cmd_verify(args) -> int:
    if args.identity in ("refid", "brid"):
        report = (refid_check if args.identity == "refid" else brid_check)(_need_n(args))
        ok, msg = report.equal, report.summary()
    elif args.identity == "roundtrip":
        ok, msg = _verify_roundtrip(args)
    else:
        ok, msg = _verify_confluence(args)
    _write(args.output, msg + "\n")
    return 0 if ok else 1


def cmd_count(args) -> int:
    fam = args.family
    s = _parse_set(args.set)
    if s is None:
        s = standard(_need_n(args))
    n = len(s)
    rows = []

    def add(count, method):
        rows.append({"family": fam, "s": list(s), "count": str(count), "method": method})

    if fam == "asm":
        if s != standard(n):
            raise InputError("count asm takes --n only")
        add(sum(1 for _ in enumerate_cmt(s)), "enumerate")
    elif fam == "ocmt":
        add(sum(1 for _ in enumerate_ocmt(s)), "enumerate")
        if s == standard(n):
            add(2 ** comb(n, 2), "formula")
        else:
            add(count_t_s(s), "formula")
    elif fam == "tournaments":
        if s != standard(n):
            raise InputError("count tournaments takes --n only")
        add(sum(1 for _ in enumerate_tournaments(n)), "enumerate")
        add(2 ** comb(n, 2), "formula")
    elif fam == "strict":
        add(sum(1 for _ in enumerate_strict(s)), "enumerate")
        add(count_strict_formula(s), "formula")
    elif fam == "ts":
        add(sum(1 for _ in enumerate_t_s(s)), "enumerate")
        add(count_t_s(s), "formula")
    _write(args.output, dumps(rows))
    return 0 if len({r["count"] for r in rows}) == 1 else 1


def cmd_trace_demo(args) -> int:
    o = Triangle.from_tokens(DEMO_TRIANGLE)
    tour, trace = phi(o, check=True)
    if args.trace == "json":
        _write(args.output, dumps(trace.to_json()))
    else:
        _write(args.output, trace.to_text())
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="asmtour", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, io=True):
        if io:
            sp.add_argument("--input", default="-", help="input JSON file, '-' for stdin")
        sp.add_argument("--output", default="-", help="output file, '-' for stdout")
        return sp

    sp = common(sub.add_parser("convert", help="convert between ASM, CMT, tournament and triangle JSON"))
    sp.add_argument("--from", dest="from_", required=True, choices=sorted(_LOADERS))
    sp.add_argument("--to", required=True, choices=["asm", "cmt", "colsum", "tournament", "triangle"])
    sp.set_defaults(func=cmd_convert)

    common(sub.add_parser("ice", help="square-ice vertex types of an ASM")).set_defaults(func=cmd_ice)
    common(sub.add_parser("orient", help="all orientations of a monotone triangle")).set_defaults(func=cmd_orient)

    for name, fn, what in (("phi", cmd_phi, "oriented triangle to tournament"), ("psi", cmd_psi, "tournament to oriented triangle")):
        sp = common(sub.add_parser(name, help=what))
        sp.add_argument("--trace", choices=["none", "json", "text"], default="none", help="trace to stderr")
        sp.set_defaults(func=fn)

    sp = common(sub.add_parser("verify", help="check an identity or property exhaustively"), io=False)
    sp.add_argument("identity", choices=["refid", "brid", "roundtrip", "confluence"])
    sp.add_argument("--n", type=int)
    sp.add_argument("--set")
    sp.add_argument("--seed", type=int, default=0, help="unsigned 64-bit seed for random raising orders")
    sp.add_argument("--samples", type=int, help="random orders tried per triangle (default 100)")
    sp.set_defaults(func=cmd_verify)

    sp = common(sub.add_parser("count", help="count a family by enumeration and by formula"), io=False)
    sp.add_argument("family", choices=["asm", "ocmt", "tournaments", "strict", "ts"])
    sp.add_argument("--n", type=int)
    sp.add_argument("--set")
    sp.set_defaults(func=cmd_count)

    sp = common(sub.add_parser("trace-demo", help="print the worked five-row example"), io=False)
    sp.add_argument("--trace", choices=["json", "text"], default="text")
    sp.set_defaults(func=cmd_trace_demo)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write(f"asmtour: error: {exc}\n")
        return 2
    except AsmtourError as exc:
        sys.stderr.write(f"asmtour: internal error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
