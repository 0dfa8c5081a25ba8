#!/usr/bin/env python3
"""Run the infinite-series ledger to a chosen depth and print a summary.

Example:
    python scripts/run_series.py 50
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from kstab.rationals import format_rational  # noqa: E402
from kstab.series import series_sum  # noqa: E402


def main() -> int:
    n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 10
    started = time.perf_counter()
    report = series_sum(n_max)
    elapsed = time.perf_counter() - started
    print(f"n_max = {n_max} ({elapsed:.1f}s)")
    print(f"  S partial = {report.s_decimal}")
    print(f"            = {format_rational(report.s_partial)}")
    print(f"  F partial = {report.f_decimal}  (source bound: at most 0.014)")
    print(f"  M partial = {format_rational(report.m_partial)}")
    print(f"  S tail estimate (HEURISTIC, not a bound): ~{report.tail_estimate():.3g}")
    per_n = [sum(entry.s_terms, 0) for entry in report.entries]
    print(f"  last per-level S term: {float(per_n[-1]):.3e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
