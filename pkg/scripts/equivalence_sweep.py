"""Random sweep comparing the combinatorial index with the Betti oracles.

Flag complexes of random graphs and random quadratic ideals with squares;
prints the verdict histogram and any disagreement.
"""

import argparse
import random
import sys
from collections import Counter
from itertools import combinations

from quadsyz.betti import betti_table_general, koszul_table, n2p_from_table
from quadsyz.engine import n2p_quadratic
from quadsyz.homology import FieldSpec
from quadsyz.ideal import minimalize


def random_graph_ideal(rng, n, squares):
    p = rng.random()
    gens = [[1 if k in e else 0 for k in range(n)] for e in combinations(range(n), 2) if rng.random() < p]
    if squares:
        q = rng.random()
        gens += [[2 if k == i else 0 for k in range(n)] for i in range(n) if rng.random() < q]
    return minimalize(gens, [f"x{i}" for i in range(n)])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--max-vars", type=int, default=8)
    ap.add_argument("--squares", action="store_true", help="allow square generators")
    ap.add_argument("--koszul", action="store_true", help="also run the Koszul oracle (slow past 6 vars)")
    ap.add_argument("--field", default="q")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    f = FieldSpec.parse(args.field)

    hist, bad = Counter(), []
    for _ in range(args.count):
        ideal = random_graph_ideal(rng, rng.randint(1, args.max_vars), args.squares)
        verdict = n2p_quadratic(ideal)
        oracles = [n2p_from_table(betti_table_general(ideal, f))]
        if args.koszul:
            oracles.append(n2p_from_table(koszul_table(ideal, f)))
        hist[str(verdict)] += 1
        if any(o != verdict for o in oracles):
            bad.append((ideal, verdict, oracles))

    for k, v in sorted(hist.items()):
        print(f"{k:>12}: {v}")
    print(f"disagreements: {len(bad)}/{args.count}")
    for ideal, v, o in bad[:10]:
        print(f"  {ideal}: {v} vs {[str(x) for x in o]}")
    sys.exit(1 if bad else 0)


if __name__ == "__main__":
    main()
