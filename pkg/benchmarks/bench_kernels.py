"""Compare the compiled and pure-Python kernels on element scans and refinement.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--json]
"""

from __future__ import annotations

import argparse
import json
import time

from vtorb.families import gp, named, spx
from vtorb.kernels import backends
from vtorb.search import _refiner_adjacency, automorphism_group

CASES = [
    ("pappus", lambda: named("pappus")),
    ("gp(12,5)", lambda: gp(12, 5)),
    ("spx(6,1)", lambda: spx(6, 1)),
    ("spx(8,1)", lambda: spx(8, 1)),
]


def _best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench(repeat: int) -> list[dict]:
    mods = backends()
    rows = []
    for name, build in CASES:
        g = build()
        G = automorphism_group(g)
        trans = G.transversals()
        stop = min(G.order, 200_000)
        adj = [list(a) for a in g.adj]
        refine_adj = _refiner_adjacency(g)
        for kernel, call in (
            ("scan", lambda m: m.scan(g.n, trans, 0, stop)),
            ("graph_scan", lambda m: m.graph_scan(g.n, adj, trans, 0, stop)),
            ("refine", lambda m: [m.Refiner(refine_adj).refine(list(range(g.n)), [0, v], [0, v])
                                  for v in range(1, g.n)]),
        ):
            # work: group elements scanned, or individualised refinements
            row = {"graph": name, "kernel": kernel, "work": g.n - 1 if kernel == "refine" else stop}
            for label, mod in mods.items():
                row[label] = _best(lambda: call(mod), repeat)
            if "cython" in row:
                row["speedup"] = row["python"] / row["cython"]
            rows.append(row)
    return rows


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--json", action="store_true", help="emit JSON instead of a table")
    args = p.parse_args(argv)
    rows = bench(args.repeat)
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"{'graph':<10} {'kernel':<11} {'work':>9} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for r in rows:
        cy = f"{r['cython']:10.4f}" if "cython" in r else f"{'n/a':>10}"
        sp = f"{r['speedup']:8.1f}" if "speedup" in r else f"{'':>8}"
        print(f"{r['graph']:<10} {r['kernel']:<11} {r['work']:>9} {r['python']:10.4f} {cy} {sp}")


if __name__ == "__main__":
    main()
