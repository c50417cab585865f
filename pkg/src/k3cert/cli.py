"""Command-line front end.

Exit codes: 0 certified or decided, 1 refuted, 2 unknown, 3 input error.
Results go to stdout; diagnostics and usage go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from datetime import datetime, timezone
from typing import Optional, Sequence

from . import bn, dm, qforms, stacks
from .lattice import PicardLattice, load_lattice
from .mukai import MukaiVector, pairing
from .report import CERTIFIED, DECIDED, EXIT_INPUT_ERROR, REFUTED, UNKNOWN, Report, emit_report

CONFIG_ENV = "K3CERT_CONFIG"
CONFIG_KEYS = {"search_bound", "n_window", "modulus_list"}


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise InputError(f"{self.prog}: error: {message}")


# ------------------------------------------------------------------- config


def load_config(path: Optional[str]) -> dict:
    path = path or os.environ.get(CONFIG_ENV)
    if not path:
        return {}
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError("config must be a JSON object")
    unknown = set(data) - CONFIG_KEYS
    if unknown:
        raise InputError(f"unknown config keys: {sorted(unknown)}")
    for key in ("search_bound", "n_window"):
        if key in data and (not isinstance(data[key], int) or isinstance(data[key], bool) or data[key] < 1):
            raise InputError(f"config {key} must be a positive integer")
    if "modulus_list" in data:
        ml = data["modulus_list"]
        if not isinstance(ml, list) or not ml or not all(isinstance(M, int) and M >= 2 for M in ml):
            raise InputError("config modulus_list must be a nonempty list of integers >= 2")
    return data


# ------------------------------------------------------------------- parser


def _vector(text: str) -> MukaiVector:
    try:
        rank, m, n, s = (int(x) for x in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError("expected RANK,M,N,S") from exc
    return MukaiVector(rank, (m, n), s)


def _add_lattice_args(p):
    p.add_argument("--lattice", help="lattice JSON object or path to a JSON file")
    p.add_argument("--hsq", type=int)
    p.add_argument("--csq", type=int)
    p.add_argument("--hc", type=int)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "markdown", "plain"), default="plain")
    common.add_argument("--json", dest="format", action="store_const", const="json")
    common.add_argument("--config", help="JSON config (search_bound, n_window, modulus_list)")
    common.add_argument("--timestamps", action="store_true", help="add a UTC timestamp to the report")

    parser = _Parser(prog="k3cert", description="Exact certificates for Brill-Noether arithmetic on K3 surfaces.")
    sub = parser.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p = sub.add_parser("rho", parents=[common], help="Brill-Noether number")
    for a in ("--g", "--r", "--d"):
        p.add_argument(a, type=int, required=True)

    p = sub.add_parser("mukai", help="Mukai vector arithmetic")
    msub = p.add_subparsers(dest="sub", required=True, parser_class=_Parser)
    q = msub.add_parser("pair", parents=[common], help="Mukai pairing <v, w>")
    _add_lattice_args(q)
    q.add_argument("--v", type=_vector, required=True, help="RANK,M,N,S")
    q.add_argument("--w", type=_vector, required=True, help="RANK,M,N,S")

    p = sub.add_parser("qform", help="binary quadratic forms")
    qsub = p.add_subparsers(dest="sub", required=True, parser_class=_Parser)
    q = qsub.add_parser("represents", parents=[common], help="does a m^2 + b mn + c n^2 take the target value")
    for a in ("--a", "--b", "--c", "--target"):
        q.add_argument(a, type=int, required=True)
    q.add_argument("--bound", type=int)

    p = sub.add_parser("minus-two-free", parents=[common], help="lattice has no class of square -2")
    _add_lattice_args(p)
    p.add_argument("--bound", type=int)

    p = sub.add_parser("exceptional-pairs", parents=[common], help="(g, d) pairs left by the alpha test")
    p.add_argument("--gmax", type=int, default=30)

    p = sub.add_parser("certify", help="certified minimum of D.(C-D)")
    csub = p.add_subparsers(dest="sub", required=True, parser_class=_Parser)
    for name in ("gonality", "clifford-net"):
        q = csub.add_parser(name, parents=[common])
        for a in ("--g", "--r", "--d"):
            q.add_argument(a, type=int, required=True)
        q.add_argument("--window", type=int)

    sub.add_parser("genus11", parents=[common], help="genus-11 case analysis")

    p = sub.add_parser("lattice", help="lattice equations")
    lsub = p.add_subparsers(dest="sub", required=True, parser_class=_Parser)
    q = lsub.add_parser("solve", parents=[common], help="solve C.D = deg, D^2 = selfint")
    _add_lattice_args(q)
    q.add_argument("--deg", type=int, required=True)
    q.add_argument("--selfint", type=int, required=True)

    p = sub.add_parser("thresholds", parents=[common], help="named degree thresholds")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, default=2)
    return parser


def _lattice(args) -> PicardLattice:
    given = [x is not None for x in (args.hsq, args.csq, args.hc)]
    if args.lattice is not None:
        if any(given):
            raise InputError("give either --lattice or --hsq/--csq/--hc, not both")
        return load_lattice(args.lattice)
    if not all(given):
        raise InputError("lattice needs --lattice or all of --hsq, --csq, --hc")
    return PicardLattice(args.hsq, args.csq, args.hc)


# ----------------------------------------------------------------- commands


def _run(args, cfg: dict, report: Report) -> None:
    bound = getattr(args, "bound", None) or cfg.get("search_bound", qforms.DEFAULT_SEARCH_BOUND)
    moduli = cfg.get("modulus_list")
    cmd = args.cmd

    if cmd == "rho":
        report.add("rho", bn.rho(args.g, args.r, args.d))
        report.verdict = DECIDED

    elif cmd == "mukai":
        lat = _lattice(args)
        report.add("pairing", pairing(lat, args.v, args.w))
        report.verdict = DECIDED

    elif cmd == "qform":
        cert = qforms.represents(qforms.BinaryQForm(args.a, args.b, args.c), args.target, bound, moduli)
        report.add("represents", cert.to_json())
        report.verdict = UNKNOWN if cert.status == qforms.UNKNOWN else DECIDED

    elif cmd == "minus-two-free":
        cert = qforms.minus_two_free(_lattice(args), bound, moduli)
        report.add("minus_two_free", cert.to_json())
        report.verdict = {qforms.NO: CERTIFIED, qforms.YES: REFUTED}.get(cert.status, UNKNOWN)

    elif cmd == "exceptional-pairs":
        report.add("exceptional_pairs", stacks.exceptional_pairs(args.gmax))
        report.verdict = DECIDED

    elif cmd == "certify":
        variant = dm.GONALITY if args.sub == "gonality" else dm.CLIFFORD_NET
        window = args.window or cfg.get("n_window")
        cert = dm.certify_min(dm.DMProblem(args.g, args.r, args.d, variant), window, bound)
        report.add("certificate", cert.to_json())
        report.verdict = {dm.PROVED: CERTIFIED, dm.REFUTED: REFUTED}.get(cert.status, UNKNOWN)

    elif cmd == "genus11":
        items = dm.genus11_suite()
        report.add("genus11", [{**it, "pass": "PASS" if it["pass"] else "FAIL"} for it in items])
        report.verdict = CERTIFIED if all(it["pass"] for it in items) else REFUTED

    elif cmd == "lattice":
        lat = _lattice(args)
        sols, reason = dm.solve_deg_selfint_explained(lat, args.deg, args.selfint)
        report.add("solutions", {"solutions": sols, "reason": reason})
        report.verdict = DECIDED

    elif cmd == "thresholds":
        rows = []
        for t, ok in bn.thresholds(args.g, args.r, args.d, args.k):
            row = t.to_json()
            row["satisfied"] = ok
            rows.append(row)
        report.add("thresholds", rows)
        report.verdict = DECIDED


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = load_config(args.config)
        report = Report(command=argv)
        if args.timestamps:
            report.timestamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
        _run(args, cfg, report)
    except InputError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (ValueError, TypeError, OSError) as exc:
        print(f"k3cert: error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    sys.stdout.write(emit_report(report, args.format))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
