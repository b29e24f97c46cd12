#!/usr/bin/env python3
"""Desk-scale conjecture experiment: check eta(G) <= chi(G) over every
connected graph up to 7 vertices (and optionally 8), printing the per-order
tallies and the largest eta observed.

Corpus files are expected under data/ (see make_corpus.py). The heavy lifting
is the same code path as `acp sweep`; this script just adds per-order
eta statistics on top of the report.
"""

from __future__ import annotations

import argparse
import sys
import time
from collections import Counter
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from addcolor.cli import main as acp_main


def run_sweep(corpus: Path, report: Path, workers: int) -> None:
    t0 = time.perf_counter()
    code = acp_main(
        ["sweep", str(corpus), "--workers", str(workers), "-o", str(report)]
    )
    elapsed = time.perf_counter() - t0
    print(f"{corpus.name}: exit={code} [{elapsed:.1f}s]")
    if code != 0:
        raise SystemExit(code)

    eta_by_n: dict[int, Counter] = {}
    for line in report.read_text().splitlines():
        if line.startswith("#"):
            if line.startswith(("# holds", "# max_eta")):
                print(" ", line.lstrip("# "))
            continue
        fields = line.split("\t")
        n, eta = int(fields[1]), int(fields[3])
        eta_by_n.setdefault(n, Counter())[eta] += 1
    for n in sorted(eta_by_n):
        dist = " ".join(f"eta={e}:{c}" for e, c in sorted(eta_by_n[n].items()))
        print(f"  n={n}: {dist}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--with-n8", action="store_true",
                        help="also sweep the 11117 connected graphs on 8 vertices")
    parser.add_argument("--workers", type=int, default=4)
    parser.add_argument("--out-dir", default="/tmp")
    args = parser.parse_args()

    data = ROOT / "data"
    out = Path(args.out_dir)
    run_sweep(data / "graphs_conn_n1-7.g6", out / "sweep_n1-7.txt", args.workers)
    if args.with_n8:
        corpus8 = data / "graphs_conn_n8.g6"
        if not corpus8.exists():
            raise SystemExit(
                f"{corpus8} missing; generate it with scripts/make_corpus.py --max-n 8"
            )
        run_sweep(corpus8, out / "sweep_n8.txt", args.workers)


if __name__ == "__main__":
    main()
