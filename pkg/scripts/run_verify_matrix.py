#!/usr/bin/env python3
"""Run every verification matrix at desk scale and print a summary table.

This is the long-form version of `crystalsums verify ...`: all five suites,
acceptance-sized bounds, one line per suite.
"""
import sys
import time

from crystalsums.cli import _instances, run_instance

SUITES = [
    ("rr", dict(n=1, max_L=20, level=1)),
    ("typeA", dict(n=1, max_L=6, level=1)),
    ("typeA", dict(n=2, max_L=5, level=1)),
    ("typeC", dict(n=2, max_L=4, level=1)),
    ("level", dict(n=1, max_L=6, level=1)),
    ("level", dict(n=1, max_L=5, level=2)),
    ("level", dict(n=2, max_L=4, level=1)),
    ("involution", dict(n=1, max_L=4, level=1)),
    ("involution", dict(n=2, max_L=3, level=1)),
]


def main() -> int:
    bad = 0
    print(f"{'suite':12s} {'bounds':24s} {'instances':>9s} "
          f"{'disagree':>8s} {'seconds':>8s}")
    for suite, kw in SUITES:
        t0 = time.perf_counter()
        reports = [run_instance(i)
                   for i in _instances(suite, kw["n"], kw["max_L"],
                                       kw["level"])]
        fails = sum(not r["agree"] for r in reports)
        bad += fails
        bounds = f"n={kw['n']} L<={kw['max_L']} ell={kw['level']}"
        print(f"{suite:12s} {bounds:24s} {len(reports):9d} {fails:8d} "
              f"{time.perf_counter() - t0:8.2f}")
    print("all suites clean" if bad == 0 else f"{bad} DISAGREEMENTS")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
