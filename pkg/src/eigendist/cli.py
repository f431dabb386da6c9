"""Command-line entry point: ``eigendist <subcommand> ...``.

Exit status is 0 on success, 1 when a library call rejects its input, and
2 on a usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from decimal import Decimal
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, TextIO

from . import arith, bounds, experiments, modforms, nhat, primroots

TABLE_COMMANDS = {"sequence", "nhat-range", "experiment"}


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (Fraction, Decimal)):
        return str(obj)
    return obj


def _emit(out: TextIO, fmt: str, payload: dict, plain: str, rows: Optional[List[list]] = None) -> None:
    if fmt == "json":
        out.write(json.dumps(_jsonable(payload), sort_keys=True) + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        for row in rows or []:
            w.writerow(row)
    else:
        out.write(plain + "\n")


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_gstar(a, out):
    g = primroots.gstar(a.p, a.level)
    _emit(out, a.format, {"p": a.p, "level": a.level, "gstar": g}, str(g))


def _cmd_sequence(a, out):
    seq = primroots.worst_case_sequence(a.p, a.t)
    rows = [["t", "x", "N"]] + [[t, x, N] for t, (x, N) in enumerate(zip(seq.xs, seq.Ns), 1)]
    plain = "\n".join(f"{t} {x} {N}" for t, x, N in rows[1:])
    _emit(out, a.format, {"p": seq.p, "xs": list(seq.xs), "Ns": list(seq.Ns)}, plain, rows)


def _cmd_index(a, out):
    v = bounds.gamma0_index(a.level)
    _emit(out, a.format, {"level": a.level, "index": v}, str(v))


def _cmd_sturm(a, out):
    b = bounds.sturm_bound(a.weight, a.level)
    _emit(out, a.format, {"weight": a.weight, "level": a.level, "bound": b,
                          "floor": bounds.sturm_floor(a.weight, a.level)}, str(b))


def _cmd_murty(a, out):
    v = bounds.murty_bound(a.level)
    _emit(out, a.format, {"level": a.level, "bound": v}, str(v))


def _cmd_bound(a, out):
    bd = bounds.main_bound(a.p, a.level, a.weight)
    plain = (f"case={bd.table_case.value} adjusted_level={bd.adjusted_level} "
             f"gstar={bd.gstar_value} gstar_term={bd.gstar_term} "
             f"sturm_term={bd.sturm_term} selected={bd.selected}")
    _emit(out, a.format, bd.to_dict(), plain)


def _cmd_comp(a, out):
    ok = nhat.comp_holds(a.p, a.level)
    _emit(out, a.format, {"p": a.p, "level": a.level, "holds": ok}, "true" if ok else "false")


def _cmd_nhat(a, out):
    if a.brute:
        rep = nhat.brute_nhat(a.p, a.ceiling, jobs=a.jobs)
    else:
        rep = nhat.compute_nhat(a.p)
    _emit(out, a.format, rep.to_dict(), str(rep.nhat))


def _cmd_nhat_range(a, out):
    best, arg, reports = nhat.nhat_range(a.start, a.below, jobs=a.jobs)
    rows = [["p", "nhat", "largest_failing_N", "candidates_tested"]]
    rows += [[r.p, r.nhat, r.largest_failing_N, r.candidates_tested] for r in reports]
    payload = {"from": a.start, "below": a.below, "max_nhat": best, "argmax_p": arg,
               "per_prime": {str(r.p): r.nhat for r in reports}}
    _emit(out, a.format, payload, str(best), rows)


def _default_cap(q: int) -> int:
    b = bounds.bs_refined_bound(q) if q > 2 else bounds.bs_bound(q)
    return bounds.ceil_decimal(b)


def _cmd_ap_least(a, out):
    cap = a.cap if a.cap is not None else _default_cap(a.q)
    ell = arith.least_prime_in_ap(a.a, a.q, cap)
    _emit(out, a.format, {"a": a.a, "q": a.q, "cap": cap, "prime": ell},
          "NOT_FOUND" if ell is None else str(ell))


def _cmd_ap_count(a, out):
    n = arith.count_primes_in_ap(a.a, a.q, a.x)
    _emit(out, a.format, {"a": a.a, "q": a.q, "x": a.x, "count": n}, str(n))


def _cmd_bs_bound(a, out):
    b = bounds.bs_refined_bound(a.q) if a.refined else bounds.bs_bound(a.q)
    _emit(out, a.format, {"q": a.q, "refined": a.refined, "bound": b,
                          "ceiling": bounds.ceil_decimal(b)}, str(b))


def _cmd_eisenstein(a, out):
    s = modforms.eisenstein_qexp(a.p, a.M)
    ok = modforms.eisenstein_congruence_check(a.p, a.M)
    _emit(out, a.format, {"p": a.p, "weight": s.weight, "coeffs": list(s.coeffs),
                          "congruent_to_1_mod_p": ok},
          " ".join(str(c) for c in s.coeffs))


def _load(path: str) -> modforms.QExpansion:
    with open(path, "rb") as fh:
        return modforms.load_qexpansion(fh)


def _cmd_hecke(a, out):
    res = modforms.hecke_identity_check(_load(a.f), a.ell)
    _emit(out, a.format, {"ell": a.ell, "lhs": res.lhs, "rhs": res.rhs, "ok": res.ok},
          f"{res.lhs} {res.rhs} {'ok' if res.ok else 'FAIL'}")


def _report_plain(rep: modforms.DistinguishReport) -> str:
    if rep.outcome is modforms.Outcome.WITNESS:
        return f"WITNESS n={rep.witness_n} residues={rep.residues[0]},{rep.residues[1]} bound={rep.bound}"
    return f"{rep.outcome.value} bound={rep.bound}"


def _cmd_distinguish(a, out):
    rep = modforms.distinguish_mod_p(_load(a.f), _load(a.g), a.p, fast_path=not a.no_fast_path)
    _emit(out, a.format, rep.to_dict(), _report_plain(rep))


def _cmd_distinguish_exact(a, out):
    rep = modforms.distinguish_exact(_load(a.f), _load(a.g))
    _emit(out, a.format, rep.to_dict(), _report_plain(rep))


def _cmd_experiment(a, out):
    name = a.name
    if name in ("asymp-xt", "asymp-gstar", "index-ratio"):
        if name == "asymp-xt":
            table = experiments.asymp_xt_table(a.p, a.tmax)
        elif name == "asymp-gstar":
            table = experiments.asymp_gstar_table(a.p, a.tmax)
        else:
            table = experiments.index_ratio_table(a.count)
        if a.format == "csv":
            out.write(table.to_csv())
        elif a.format == "json":
            out.write(json.dumps(table.to_dict(), sort_keys=True) + "\n")
        else:
            out.write(table.to_csv().replace(",", " "))
        return
    if name == "induction":
        ok = experiments.induction_check(a.rmin, a.rmax)
        payload = {"rmin": a.rmin, "rmax": a.rmax, "ok": ok}
    else:
        ok = experiments.n10_x44_check(a.p)
        payload = {"p": a.p, "ok": ok}
    _emit(out, "plain" if a.format == "csv" else a.format, payload, "true" if ok else "false")


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eigendist",
        description="Bounds for distinguishing eigenforms modulo a prime.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def cmd(name: str, handler: Callable, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
        sp.set_defaults(handler=handler)
        return sp

    sp = cmd("gstar", _cmd_gstar, "least prime primitive root mod p not dividing the level")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--level", type=int, required=True)

    sp = cmd("sequence", _cmd_sequence, "worst-case sequence x_t, N_t")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)

    sp = cmd("index", _cmd_index, "index of Gamma_0(N) in SL_2(Z)")
    sp.add_argument("--level", type=int, required=True)

    sp = cmd("sturm", _cmd_sturm, "Sturm bound k * index / 12")
    sp.add_argument("--weight", type=int, required=True)
    sp.add_argument("--level", type=int, required=True)

    sp = cmd("murty", _cmd_murty, "square of the least prime not dividing N")
    sp.add_argument("--level", type=int, required=True)

    sp = cmd("bound", _cmd_bound, "combined bound with level adjustment")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--level", type=int, required=True)
    sp.add_argument("--weight", type=int, required=True, help="the larger weight k2")

    sp = cmd("comp", _cmd_comp, "does 12 gstar^2 <= index hold")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--level", type=int, required=True)

    sp = cmd("nhat", _cmd_nhat, "exact threshold for one prime")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--brute", action="store_true", help="use the linear-scan oracle")
    sp.add_argument("--ceiling", type=int, default=None)
    sp.add_argument("--jobs", type=int, default=1)

    sp = cmd("nhat-range", _cmd_nhat_range, "max threshold over primes in [from, below)")
    sp.add_argument("--below", type=int, required=True)
    sp.add_argument("--from", dest="start", type=int, default=5)
    sp.add_argument("--jobs", type=int, default=1)

    sp = cmd("ap-least", _cmd_ap_least, "least prime == a mod q")
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--cap", type=int, default=None,
                    help="search limit (default: ceiling of the GRH bound)")

    sp = cmd("ap-count", _cmd_ap_count, "number of primes <= x that are == a mod q")
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--x", type=int, required=True)

    sp = cmd("bs-bound", _cmd_bs_bound, "GRH bound for the least prime in a progression")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--refined", action="store_true", help="use the constant 1.56 (q > 2)")

    sp = cmd("eisenstein", _cmd_eisenstein, "q-expansion of E_{p-1}")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--M", type=int, required=True)

    sp = cmd("hecke", _cmd_hecke, "check a_l^2 - a_{l^2} = l^(k-1)")
    sp.add_argument("--f", required=True)
    sp.add_argument("--ell", type=int, required=True)

    sp = cmd("distinguish", _cmd_distinguish, "distinguish two eigenforms mod p")
    sp.add_argument("--f", required=True)
    sp.add_argument("--g", required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--no-fast-path", action="store_true")

    sp = cmd("distinguish-exact", _cmd_distinguish_exact, "distinguish two eigenforms over Z")
    sp.add_argument("--f", required=True)
    sp.add_argument("--g", required=True)

    sp = cmd("experiment", _cmd_experiment, "numeric tables and proof-device checks")
    sp.add_argument("name", choices=("asymp-xt", "asymp-gstar", "index-ratio", "induction", "n10-x44"))
    sp.add_argument("--p", type=int, default=5)
    sp.add_argument("--tmax", type=int, default=100)
    sp.add_argument("--count", type=int, default=15)
    sp.add_argument("--rmin", type=int, default=45)
    sp.add_argument("--rmax", type=int, default=60)

    return parser


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None,
        err: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.format == "csv" and args.command not in TABLE_COMMANDS:
        err.write(f"eigendist {args.command}: --format csv is only available for "
                  f"{', '.join(sorted(TABLE_COMMANDS))}\n")
        return 2
    try:
        args.handler(args, out)
    except (ValueError, OSError) as exc:
        err.write(f"eigendist {args.command}: error: {exc}\n")
        return 1
    return 0


def main() -> None:
    sys.exit(run())
