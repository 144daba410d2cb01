#!/usr/bin/env python3
"""Timing sweep: closed-form power sums vs the interval oracle.

Emits a CSV of min-over-repeats wall times (microseconds) for C(m, n)
across a geometric range of m. Caches are cleared between repeats on both
sides, so the numbers reflect cold single evaluations, not campaign-mode
amortized costs. The oracle column stops at --oracle-m-cap; beyond that
only the closed form is timed.
"""

import argparse
import sys

from trigsum.cli import run_bench


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=7)
    parser.add_argument("--m-min", type=int, default=25)
    parser.add_argument("--m-max", type=int, default=3200)
    parser.add_argument("--oracle-m-cap", type=int, default=400)
    parser.add_argument("--repeat", type=int, default=7)
    args = parser.parse_args(argv)

    print("m,n,micros_closed,micros_oracle,ratio")
    m = args.m_min
    while m <= args.m_max:
        with_oracle = m <= args.oracle_m_cap
        row = run_bench("C", m, args.n, None, with_oracle, args.repeat)
        closed = row["micros_closed"]
        if with_oracle:
            if not row["equal"]:
                print(f"value mismatch at m={m}", file=sys.stderr)
                return 1
            oracle = row["micros_oracle"]
            ratio = f"{oracle / closed:.1f}" if closed else ""
            print(f"{m},{args.n},{closed},{oracle},{ratio}")
        else:
            print(f"{m},{args.n},{closed},,")
        m *= 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
