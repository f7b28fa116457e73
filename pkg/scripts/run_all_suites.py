#!/usr/bin/env python3
"""Run every identity suite and print a per-suite scoreboard.

Examples:
    python scripts/run_all_suites.py
    python scripts/run_all_suites.py --suites qbinom kernels --nmax 5
    python scripts/run_all_suites.py --out-dir reports/
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass
from pathlib import Path

from deltaq import verify as ver


@dataclass(frozen=True)
class RunConfig:
    suites: tuple[str, ...]
    nmax: int | None
    out_dir: Path | None

    @staticmethod
    def from_args(argv=None) -> "RunConfig":
        parser = argparse.ArgumentParser(description=__doc__)
        parser.add_argument(
            "--suites", nargs="*", default=None, choices=sorted(ver.SUITES),
            help="suites to run (default: every suite except the combined 'all')",
        )
        parser.add_argument("--nmax", type=int, default=None,
                            help="cap the default sweep size of every identity")
        parser.add_argument("--out-dir", type=Path, default=None,
                            help="write one JSONL report per suite into this directory")
        args = parser.parse_args(argv)
        suites = tuple(args.suites) if args.suites else tuple(
            name for name in ver.SUITES if name != "all"
        )
        return RunConfig(suites=suites, nmax=args.nmax, out_dir=args.out_dir)


def main(argv=None) -> int:
    config = RunConfig.from_args(argv)
    if config.out_dir:
        config.out_dir.mkdir(parents=True, exist_ok=True)
    grand = {"equal": 0, "mismatch": 0, "skipped": 0}
    failed = False
    for suite in config.suites:
        out_path = (
            str(config.out_dir / f"{suite}.jsonl") if config.out_dir else None
        )
        started = time.perf_counter()
        reports = ver.run_suite(
            ver.SuiteConfig(suite=suite, nmax=config.nmax, out_path=out_path)
        )
        elapsed = time.perf_counter() - started
        counts = ver.summarize(reports)
        for key in grand:
            grand[key] += counts[key]
        print(
            f"{suite:<12} {len(reports):>5} cases  "
            f"{counts['equal']:>5} equal  {counts['mismatch']:>3} mismatch  "
            f"{counts['skipped']:>3} skipped  ({elapsed:.1f}s)"
        )
        for report in reports:
            if report.status == "mismatch":
                failed = True
                print(f"  !! {report.identity_id} {report.params}: {report.witness}")
    total = sum(grand.values())
    print(
        f"{'total':<12} {total:>5} cases  "
        f"{grand['equal']:>5} equal  {grand['mismatch']:>3} mismatch  "
        f"{grand['skipped']:>3} skipped"
    )
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
