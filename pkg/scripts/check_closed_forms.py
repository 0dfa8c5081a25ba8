#!/usr/bin/env python3
"""Cross-check the engine's series ledger against the closed forms.

The closed forms are an independent check path: any mismatch points at a
transcription bug on one side or the other.

Example:
    python scripts/check_closed_forms.py 8
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from kstab.closed_forms import f_closed, m_closed, s_closed  # noqa: E402
from kstab.series import compute_band, series_term  # noqa: E402


def main() -> int:
    n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    bad = 0
    for n in range(n_max + 1):
        for i in (1, 2, 3, 4):
            band = compute_band(n, i)
            rows = [
                ("S", band.s_term, s_closed(n, i)),
                ("M'", band.m_prime, m_closed(n, i, "p")),
                ("M''", band.m_double_prime, m_closed(n, i, "pp")),
                ("F", series_term(n, i, "F"), f_closed(n, i)),
            ]
            for label, engine, closed in rows:
                if engine != closed:
                    bad += 1
                    print(f"MISMATCH {label}({n},{i}): engine {engine} closed {closed}")
        print(f"n = {n}: checked")
    print("all ledger entries match" if not bad else f"{bad} mismatches")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
