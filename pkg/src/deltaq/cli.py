"""Command-line interface.

Subcommands:

* ``deltaq verify``   -- run an identity suite (or one id) and optionally write JSONL
* ``deltaq expand``   -- print a named expansion in the Schur basis
* ``deltaq pf``       -- enumerate parking functions, optionally with statistics CSV
* ``deltaq deltaside``-- print the combinatorial operator side for given n, k
"""

from __future__ import annotations

import argparse
import csv
import sys

from . import delta_ops as do
from . import hall_littlewood as hl
from . import parking as pk
from . import qfield
from . import symfunc as sf
from . import verify as ver
from .partition import Partition, parse_partition


def _split_params(text: str) -> dict:
    """Parse 'k=1,m=3,nu=[2,1]' into a dict with int or int-list values."""
    out: dict = {}
    depth = 0
    piece = ""
    pieces = []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            pieces.append(piece)
            piece = ""
        else:
            piece += ch
    if piece:
        pieces.append(piece)
    for item in pieces:
        key, _, value = item.partition("=")
        key = key.strip()
        value = value.strip()
        if not key or not value:
            raise ValueError(f"malformed parameter {item!r}")
        if value.startswith("["):
            out[key] = list(parse_partition(value))
        else:
            out[key] = int(value)
    return out


def _parse_mu(text: str) -> Partition:
    text = text.strip()
    if not text.startswith("["):
        text = "[" + text + "]"
    return parse_partition(text)


def _cmd_verify(args) -> int:
    config = ver.SuiteConfig(
        suite=args.suite,
        identity_id=args.id,
        params=_split_params(args.params) if args.params else None,
        nmax=args.nmax,
        out_path=args.out,
    )
    reports = ver.run_suite(config)
    for report in reports:
        line = f"{report.identity_id} {report.params} {report.status} ({report.elapsed_ms:.1f} ms)"
        if report.witness:
            line += f" :: {report.witness}"
        print(line)
    counts = ver.summarize(reports)
    print(
        f"total {len(reports)}: {counts['equal']} equal, "
        f"{counts['mismatch']} mismatch, {counts['skipped']} skipped"
    )
    return 1 if counts["mismatch"] else 0


def _expand_target(args) -> sf.SymFunc:
    what = args.what
    params = _split_params(args.params) if args.params else {}
    if what in ("P", "Q", "Htilde0", "Htilde"):
        if not args.mu:
            raise SystemExit(f"--what {what} requires --mu")
        mu = _parse_mu(args.mu)
        if what == "P":
            return hl.hl_P(mu)
        if what == "Q":
            return hl.hl_Q(mu)
        if what == "Htilde0":
            return hl.modified_macdonald_t0(mu)
        return hl.modified_macdonald_full(mu)
    if what in ("lhs_nu", "rhs_nu"):
        nu = Partition(tuple(params["nu"]))
        n = int(params["n"])
        return do.lhs_nu(nu, n) if what == "lhs_nu" else do.rhs_nu(nu, n)
    if what in ("lhs_hook", "rhs_hook"):
        hp = do.HookParams(k=int(params["k"]), m=int(params["m"]), n=int(params["n"]))
        return do.lhs_hook_closed(hp) if what == "lhs_hook" else do.rhs_hook(hp)
    if what == "ghry":
        left, right = do.ghry_sides(int(params["n"]), int(params["k"]))
        if left != right:
            print("note: the two sides differ; printing the left side", file=sys.stderr)
        return left
    raise SystemExit(f"unknown expansion {what!r}")


def _cmd_expand(args) -> int:
    target = _expand_target(args)
    if args.csv:
        writer = csv.writer(sys.stdout)
        writer.writerow(["partition", "coefficient"])
        for lam in sorted(target.terms, reverse=True):
            writer.writerow([lam.render(), qfield.render(target.terms[lam])])
    else:
        print(sf.render(target))
    return 0


def _cmd_pf(args) -> int:
    pfs = pk.ParkingFunction.all_parking(args.n)
    if args.stats:
        writer = csv.writer(sys.stdout)
        writer.writerow(["cars", "areas", "area", "dinv", "word", "ides"])
        for pf in pfs:
            writer.writerow([
                " ".join(map(str, pf.cars)),
                " ".join(map(str, pf.path.areas)),
                pf.area,
                pf.dinv(),
                " ".join(map(str, pf.word())),
                " ".join(map(str, pf.ides())),
            ])
    else:
        print(f"{len(pfs)} parking functions of size {args.n}")
    return 0


def _cmd_deltaside(args) -> int:
    result = pk.delta_side_combinatorial(args.n, args.k, t_zero=args.t0)
    print(sf.render(result))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deltaq",
        description="Exact q,t-symmetric-function computations and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run identity checks")
    p_verify.add_argument("--suite", default=None, choices=sorted(ver.SUITES),
                          help="identity family to sweep (default: all)")
    p_verify.add_argument("--id", default=None, choices=sorted(ver.REGISTRY),
                          help="single identity id")
    p_verify.add_argument("--params", default=None,
                          help="explicit parameters, e.g. k=1,m=3,n=5 or nu=[2,1],n=5")
    p_verify.add_argument("--nmax", type=int, default=None,
                          help="cap the default sweep size")
    p_verify.add_argument("--out", default=None, help="write JSONL report here")
    p_verify.set_defaults(func=_cmd_verify)

    p_expand = sub.add_parser("expand", help="print an expansion in the Schur basis")
    p_expand.add_argument("--what", required=True,
                          choices=["P", "Q", "Htilde0", "Htilde", "lhs_nu", "rhs_nu",
                                   "lhs_hook", "rhs_hook", "ghry"])
    p_expand.add_argument("--mu", default=None, help="partition, e.g. [2,1]")
    p_expand.add_argument("--params", default=None,
                          help="parameters for the parametric expansions")
    p_expand.add_argument("--csv", action="store_true", help="emit partition,coefficient CSV")
    p_expand.set_defaults(func=_cmd_expand)

    p_pf = sub.add_parser("pf", help="enumerate parking functions")
    p_pf.add_argument("--n", type=int, required=True)
    p_pf.add_argument("--stats", action="store_true",
                      help="CSV with cars, areas, area, dinv, word, ides")
    p_pf.set_defaults(func=_cmd_pf)

    p_ds = sub.add_parser("deltaside", help="combinatorial operator side")
    p_ds.add_argument("--n", type=int, required=True)
    p_ds.add_argument("--k", type=int, required=True)
    p_ds.add_argument("--t0", action="store_true", help="keep only the t-degree-0 part")
    p_ds.set_defaults(func=_cmd_deltaside)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "verify" and args.suite is None and args.id is None:
        args.suite = "all"
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
