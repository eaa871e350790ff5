"""Pure-Python implementations of the bitmask kernels.

Same signatures and results as the compiled ``_ckernels`` module; used when the
extension is not built or when ``SCGT_PURE_PYTHON=1``.
"""

from math import factorial

import numpy as np


def enumerate_submasks(facets):
    seen = set()
    for f in facets:
        f = int(f)
        sub = f
        while True:
            seen.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & f
    return np.array(sorted(seen), dtype=np.uint64)


def subset_sums(queries, items, weights):
    items = [int(m) for m in items]
    weights = [float(w) for w in weights]
    out = np.zeros(len(queries), dtype=np.float64)
    for q, qm in enumerate(queries):
        qm = int(qm)
        acc = 0.0
        for m, w in zip(items, weights):
            if m & ~qm == 0:
                acc += w
        out[q] = acc
    return out


def superset_sums(queries, items, weights):
    items = [int(m) for m in items]
    weights = [float(w) for w in weights]
    out = np.zeros(len(queries), dtype=np.float64)
    for q, qm in enumerate(queries):
        qm = int(qm)
        acc = 0.0
        for m, w in zip(items, weights):
            if qm & ~m == 0:
                acc += w
        out[q] = acc
    return out


def shapley_table(values, k):
    kf = factorial(k)
    weight = [factorial(s) * factorial(k - s - 1) / kf for s in range(k)]
    vals = [float(x) for x in values]
    out = np.zeros(k, dtype=np.float64)
    for i in range(k):
        bit = 1 << i
        acc = 0.0
        for s in range(1 << k):
            if s & bit:
                continue
            acc += weight[bin(s).count("1")] * (vals[s | bit] - vals[s])
        out[i] = acc
    return out


def marginal_table(values, n):
    vals = [float(x) for x in values]
    perm = list(range(n))
    rows = []
    while True:
        row = [0.0] * n
        pred = 0
        for p in perm:
            row[p] = vals[pred | (1 << p)] - vals[pred]
            pred |= 1 << p
        rows.append(row)
        # next lexicographic permutation
        j = n - 2
        while j >= 0 and perm[j] >= perm[j + 1]:
            j -= 1
        if j < 0:
            break
        l = n - 1
        while perm[l] <= perm[j]:
            l -= 1
        perm[j], perm[l] = perm[l], perm[j]
        perm[j + 1:] = reversed(perm[j + 1:])
    return np.array(rows, dtype=np.float64).reshape(len(rows), n)
