"""Run every registered check and print a per-group tally.

    python scripts/run_suite.py [--order N] [--jobs K] [--json report.json]
"""
import argparse
import collections
import os
import time

from septic_qseries import identities
from septic_qseries.report import Report


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--order", default=None, help="override every default order (N or N/D)")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--json", help="also write the full report here")
    args = p.parse_args()

    t0 = time.perf_counter()
    results = identities.run(order=args.order, jobs=args.jobs)
    report = Report(args.order, results, total_elapsed_ms=int((time.perf_counter() - t0) * 1000))

    tally = collections.defaultdict(collections.Counter)
    for r in results:
        group = next(g for g in identities.GROUPS if r.name.startswith(g + "."))
        tally[group][r.status] += 1
    for group in identities.GROUPS:
        c = tally[group]
        print(f"{group:<20} {c['pass']:>3} pass  {c['fail']:>3} fail  {c['precision-error']:>3} precision-error")
    print(f"total {report.total_elapsed_ms} ms, exit code {report.exit_code}")
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(report.to_json() + "\n")
    return report.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
