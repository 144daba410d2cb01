#!/usr/bin/env python3
"""Differential verification campaign over every sum family.

Runs the closed forms against the interval oracle on parameter grids and
prints one summary row per family. Exit code 1 on any mismatch. The grids
here are the deep versions of what `trigsum verify` runs; expect a couple
of minutes at the defaults.
"""

import argparse
import sys
import time
from dataclasses import dataclass
from math import gcd

from trigsum import (
    ByrneSmithParams,
    CotSumParams,
    Family,
    SumSpec,
    byrne_smith_sum,
    cot_power_sum,
    evaluate,
    evaluate_exact,
)

EVEN_ONLY = {Family.ALTERNATING, Family.WEIGHT_PI3, Family.ELL5_ALT_PRODUCT}


@dataclass(frozen=True)
class CampaignConfig:
    m_max: int
    n_max: int
    k_max: int
    cot_n_max: int
    families: tuple[str, ...] | None

    def wants(self, token: str) -> bool:
        return self.families is None or token in self.families


def sum_spec_grid(family: Family, config: CampaignConfig):
    kinds = ("cos", "sin") if family is Family.ALTERNATING else ("cos",)
    for m in range(config.m_max + 1):
        for n in range(1, config.n_max + 1):
            if family in EVEN_ONLY and n % 2:
                continue
            if family is Family.QUONIAM and not 1 <= m <= n:
                continue
            if family in (Family.MERCA_HALF, Family.MERCA_SHIFTED) and m < 1:
                continue
            if family in (Family.COPRIME, Family.GCD_REDUCED):
                for q in range(1, 2 * n + 2):
                    if family is Family.COPRIME and gcd(q, n) != 1:
                        continue
                    for kind in ("cos", "sin"):
                        yield SumSpec(family, m, n, q, kind)
            elif family is Family.SCALED:
                for q in range(n, 3 * n + 1, n):
                    for kind in ("cos", "sin"):
                        yield SumSpec(family, m, n, q, kind)
            else:
                for kind in kinds:
                    yield SumSpec(family, m, n, kind=kind)


def run_family(label, pairs):
    """pairs: iterable of (closed_value_thunk, oracle_value_thunk)."""
    cases = 0
    mismatches = 0
    started = time.perf_counter()
    for closed, oracle in pairs:
        cases += 1
        if closed() != oracle():
            mismatches += 1
    elapsed = time.perf_counter() - started
    print(f"{label:18s} cases={cases:6d} mismatches={mismatches:3d} {elapsed:7.2f}s")
    return mismatches


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--m-max", type=int, default=24)
    parser.add_argument("--n-max", type=int, default=12)
    parser.add_argument("--k-max", type=int, default=16)
    parser.add_argument("--cot-n-max", type=int, default=4)
    parser.add_argument(
        "--families",
        help="comma-separated family tokens (default: all)",
    )
    args = parser.parse_args(argv)
    config = CampaignConfig(
        m_max=args.m_max,
        n_max=args.n_max,
        k_max=args.k_max,
        cot_n_max=args.cot_n_max,
        families=tuple(args.families.split(",")) if args.families else None,
    )

    failed = 0
    for family in Family:
        if not config.wants(family.value):
            continue
        specs = list(sum_spec_grid(family, config))
        failed += run_family(
            family.value,
            (
                ((lambda s=s: evaluate(s)), (lambda s=s: evaluate_exact(s)))
                for s in specs
            ),
        )
    if config.wants("cot"):
        params = [
            CotSumParams(n, k)
            for n in range(1, config.cot_n_max + 1)
            for k in range(2, config.k_max + 1)
        ]
        failed += run_family(
            "cot",
            (
                (
                    (lambda p=p: cot_power_sum(p.n, p.k)),
                    (lambda p=p: evaluate_exact(p)),
                )
                for p in params
            ),
        )
    if config.wants("byrne-smith"):
        params = [
            ByrneSmithParams(n, k)
            for n in range(1, config.cot_n_max + 1)
            for k in range(1, config.k_max + 1)
        ]
        failed += run_family(
            "byrne-smith",
            (
                (
                    (lambda p=p: byrne_smith_sum(p.n, p.k)),
                    (lambda p=p: evaluate_exact(p)),
                )
                for p in params
            ),
        )

    if failed:
        print(f"FAILED: {failed} mismatching cases")
        return 1
    print("all families agree with the oracle")
    return 0


if __name__ == "__main__":
    sys.exit(main())
