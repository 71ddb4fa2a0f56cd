#!/usr/bin/env python3
"""Run the full verification experiment and write report artifacts.

Sweeps the existence predicate against the numeric harness over
N in [-1, 6] with a-step 0.05, runs the deep-interval uniqueness counts
for M in 2..5, and writes verification.csv / verification.json next to
the working directory.  Exits nonzero on any disagreement.
"""

import argparse
import json
import sys
import time
from dataclasses import asdict
from pathlib import Path

from hurwitz_real_zeros import __version__
from hurwitz_real_zeros.cli import RunConfig, _verify_csv
from hurwitz_real_zeros.zero_analysis import uniqueness_check, verify_theorem


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--nmin", type=int, default=-1)
    parser.add_argument("--nmax", type=int, default=6)
    parser.add_argument("--astep", type=float, default=0.05)
    parser.add_argument("--outdir", type=Path, default=Path("."))
    args = parser.parse_args()

    config = RunConfig()
    grid = []
    k = 1
    while k * args.astep < 1.0 - 1e-12:
        grid.append(k * args.astep)
        k += 1

    t0 = time.monotonic()
    report = verify_theorem(grid, args.nmin, args.nmax,
                            exclusion_delta=config.exclusion_delta,
                            grid_points=config.grid_points,
                            refine_tol=config.refine_tol,
                            params=config.eval_params())
    sweep_time = time.monotonic() - t0
    print(f"sweep: {len(report.cases)} cases in {sweep_time:.1f}s -> "
          f"agree={report.n_agree} disagree={report.n_disagree} "
          f"skipped={report.n_skipped}")

    t0 = time.monotonic()
    uniq = []
    bad = 0
    for m in range(2, 6):
        for i in range(1, 11):
            a = i / 10
            count = uniqueness_check(m, a, config.grid_points,
                                     config.refine_tol, config.eval_params())
            uniq.append({"M": m, "a": a, "count": count})
            if count != 1:
                bad += 1
    print(f"uniqueness: {len(uniq)} intervals in "
          f"{time.monotonic() - t0:.1f}s -> {bad} deviations from count 1")

    csv_path = args.outdir / "verification.csv"
    csv_path.write_text(_verify_csv(report, config.digits))
    json_path = args.outdir / "verification.json"
    json_path.write_text(json.dumps({
        "version": __version__,
        "config": asdict(config),
        "sweep": {
            "agree": report.n_agree,
            "disagree": report.n_disagree,
            "skipped": report.n_skipped,
        },
        "uniqueness": uniq,
    }, indent=2, sort_keys=True))
    print(f"wrote {csv_path} and {json_path}")
    return 1 if (report.n_disagree or bad) else 0


if __name__ == "__main__":
    sys.exit(main())
