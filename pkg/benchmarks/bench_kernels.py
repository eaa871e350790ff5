"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5] [--json out.json]
"""

import argparse
import json
import random
import timeit

import numpy as np

from scgt import kernels


def cases(seed=0):
    rng = random.Random(seed)
    facets = np.array([rng.randrange(1, 1 << 16) for _ in range(12)], dtype=np.uint64)
    journeys = np.array([rng.randrange(1, 1 << 8) for _ in range(2000)], dtype=np.uint64)
    counts = np.array([rng.randint(1, 5) for _ in range(2000)], dtype=np.float64)
    faces = np.arange(1, 1 << 8, dtype=np.uint64)
    table10 = np.array([0.0] + [rng.uniform(-1, 1) for _ in range((1 << 10) - 1)])
    table7 = table10[: 1 << 7]
    return {
        "enumerate_submasks (12 facets, n=16)": lambda k: k.enumerate_submasks(facets),
        "subset_sums (255 faces x 2000 journeys)": lambda k: k.subset_sums(faces, journeys, counts),
        "superset_sums (255 queries x 2000 items)": lambda k: k.superset_sums(faces, journeys, counts),
        "shapley_table (k=10)": lambda k: k.shapley_table(table10, 10),
        "marginal_table (n=7, 5040 orders)": lambda k: k.marginal_table(table7, 7),
    }


def run(repeat=5):
    backends = kernels.backends()
    rows = []
    for name, fn in cases().items():
        row = {"kernel": name}
        for bname, mod in backends.items():
            timer = timeit.Timer(lambda: fn(mod))
            number, _ = timer.autorange()
            row[bname] = min(timer.repeat(repeat, number)) / number
        rows.append(row)
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--json")
    args = p.parse_args()
    rows = run(args.repeat)
    names = [b for b in ("cython", "python") if b in rows[0]]
    print(f"{'kernel':44}" + "".join(f"{b:>14}" for b in names) + ("   speedup" if len(names) == 2 else ""))
    for r in rows:
        line = f"{r['kernel']:44}" + "".join(f"{r[b] * 1e3:11.3f} ms" for b in names)
        if len(names) == 2:
            line += f"   {r['python'] / r['cython']:6.1f}x"
        print(line)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
