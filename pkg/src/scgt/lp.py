"""Convex-combination feasibility.

Small instances run an exact phase-one simplex over ``Fraction`` (Bland's rule,
so no cycling); floats are converted exactly, so a float target that misses the
polytope by rounding noise shows up as a tiny positive residual instead of a
spurious infeasibility. Instances with many points go to scipy's HiGHS.
"""

from fractions import Fraction

import numpy as np

EXACT_MAX_POINTS = 64


def _phase_one(A, b):
    """Minimise the artificial mass for ``A x = b, x >= 0``.

    Returns ``(x, residual)``; ``residual`` is zero iff the system is feasible.
    """
    m = len(A)
    k = len(A[0]) if m else 0
    rhs = k + m
    tab = []
    for r in range(m):
        sign = -1 if b[r] < 0 else 1
        row = [sign * a for a in A[r]] + [Fraction(0)] * m + [sign * b[r]]
        row[k + r] = Fraction(1)
        tab.append(row)
    basis = [k + r for r in range(m)]
    cost = [Fraction(0)] * (rhs + 1)
    for row in tab:
        for j in range(k):
            cost[j] -= row[j]
        cost[rhs] -= row[rhs]
    while True:
        enter = next((j for j in range(k) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for r in range(m):
            a = tab[r][enter]
            if a > 0:
                ratio = tab[r][rhs] / a
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best, leave = ratio, r
        if leave is None:  # unbounded direction cannot occur with a nonnegative objective
            break
        prow = tab[leave]
        piv = prow[enter]
        prow = [a / piv for a in prow]
        tab[leave] = prow
        for r in range(m):
            if r != leave and tab[r][enter] != 0:
                f = tab[r][enter]
                tab[r] = [a - f * p for a, p in zip(tab[r], prow)]
        f = cost[enter]
        cost = [a - f * p for a, p in zip(cost, prow)]
        basis[leave] = enter
    x = [Fraction(0)] * k
    for r, j in enumerate(basis):
        if j < k:
            x[j] = tab[r][rhs]
    return x, -cost[rhs]


def convex_combination(points, target):
    """Weights ``alpha >= 0`` with ``sum alpha = 1`` and ``sum alpha_j points[j] ~ target``.

    Returns ``(alpha, residual)`` where ``residual`` is the larger of the
    infinity norm of ``sum alpha_j points[j] - target`` and ``|sum alpha - 1|``.
    Exact inputs give ``alpha = None`` when infeasible; for float inputs the
    caller compares ``residual`` against its tolerance.
    """
    points = [list(p) for p in points]
    target = list(target)
    if not points:
        return None, float("inf")
    exact = all(isinstance(x, (int, Fraction)) for p in points for x in p) and all(
        isinstance(x, (int, Fraction)) for x in target
    )
    if len(points) <= EXACT_MAX_POINTS:
        A = [[Fraction(p[i]) for p in points] for i in range(len(target))]
        A.append([Fraction(1)] * len(points))
        b = [Fraction(x) for x in target] + [Fraction(1)]
        alpha, art = _phase_one(A, b)
        if not exact:
            alpha = [float(a) for a in alpha]
        if exact and art != 0:
            return None, art
        return alpha, _residual(points, target, alpha)
    return _highs(points, target)


def _residual(points, target, alpha):
    out = abs(sum(alpha, 0) - 1)
    worst = 0
    for i, t in enumerate(target):
        worst = max(worst, abs(sum((a * p[i] for a, p in zip(alpha, points)), 0) - t))
    return max(out, worst)


def _highs(points, target):
    from scipy.optimize import linprog

    P = np.array(points, dtype=float).T
    A = np.vstack([P, np.ones((1, P.shape[1]))])
    b = np.append(np.array(target, dtype=float), 1.0)
    res = linprog(np.zeros(P.shape[1]), A_eq=A, b_eq=b, bounds=(0, None), method="highs")
    if res.status != 0:
        return None, float("inf")
    alpha = [float(a) for a in res.x]
    return alpha, float(_residual(points, target, alpha))


def solve_exact(M, rhs):
    """Solve a square system over the rationals; ``None`` when singular."""
    n = len(M)
    aug = [[Fraction(x) for x in row] + [Fraction(r)] for row, r in zip(M, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [a / p for a in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * c for a, c in zip(aug[r], aug[col])]
    return [row[n] for row in aug]
