"""Betti tables and N_{2,p} indices for the n-cycle ideals.

    python3 scripts/cycle_family.py --max-n 10 --field f2
"""

import argparse
import time

from quadsyz.betti import hochster_table, n2p_from_table
from quadsyz.cli import cycle_ideal
from quadsyz.engine import n2p_quadratic
from quadsyz.homology import FieldSpec


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-n", type=int, default=4)
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--field", default="q")
    ap.add_argument("--tables", action="store_true", help="print full Betti tables")
    args = ap.parse_args()
    f = FieldSpec.parse(args.field)

    print(f"{'n':>3} {'combinatorial':>14} {'oracle':>10} {'first bad':>10} {'sec':>7}")
    for n in range(args.min_n, args.max_n + 1):
        ideal = cycle_ideal(n)
        t0 = time.perf_counter()
        table = hochster_table(ideal, f)
        dt = time.perf_counter() - t0
        bad = min((i, j) for (i, j) in table.entries if j > i + 2)
        print(f"{n:>3} {str(n2p_quadratic(ideal)):>14} {str(n2p_from_table(table)):>10} {str(bad):>10} {dt:7.3f}")
        if args.tables:
            print(table.render(), end="\n\n")


if __name__ == "__main__":
    main()
