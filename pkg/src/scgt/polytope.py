"""Facet polytope, participation influences, core, anticore and Weber set."""

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

import numpy as np

from scgt import kernels, lp
from scgt.complex import SimplicialComplex, popcount, to_face, to_mask
from scgt.errors import (
    ClassicalGameRequired,
    DimensionMismatch,
    NotAMatroidError,
    ScaleLimitError,
)
from scgt.games import WorthFunction
from scgt.numeric import close, get_tolerance, is_exact
from scgt.values import FacetDistribution, shapley_vector

MAX_WEBER_PLAYERS = 8
MAX_VERTEX_ENUM_PLAYERS = 5


def influence(complex, P, face):
    """w^P(T): total probability of the facets containing T (zero off the complex)."""
    t = to_mask(face, complex.n)
    return sum((w for f, w in P.weights.items() if t & ~f == 0), 0)


def influence_vector(complex, P):
    """Point of R^n whose i-th coordinate is w^P({i}), i.e. sum_F P(F) e_F."""
    facets = list(P.weights)
    weights = [P.weights[f] for f in facets]
    if all(is_exact(w) for w in weights):
        return tuple(
            sum((w for f, w in zip(facets, weights) if f >> i & 1), Fraction(0)) for i in range(complex.n)
        )
    singletons = np.array([1 << i for i in range(complex.n)], dtype=np.uint64)
    out = kernels.superset_sums(singletons, np.array(facets, dtype=np.uint64), np.array(weights, dtype=float))
    return tuple(float(x) for x in out)


def incidence_vector(mask, n):
    return tuple(mask >> i & 1 for i in range(n))


def polytope_points(complex):
    return [incidence_vector(f, complex.n) for f in complex.facet_masks]


def membership(complex, q, tol=None):
    """Solve ``q = sum_F alpha_F e_F`` over the simplex of facet weights.

    Returns ``(distribution_or_None, residual)``.
    """
    q = list(q)
    if len(q) != complex.n:
        raise DimensionMismatch(f"point has {len(q)} coordinates, complex has {complex.n} vertices")
    alpha, res = lp.convex_combination(polytope_points(complex), q)
    if alpha is None or res > get_tolerance(tol):
        return None, res
    weights = dict(zip(complex.facet_masks, alpha))
    if not all(is_exact(a) for a in alpha):
        weights = {f: max(a, 0.0) for f, a in weights.items()}
    return FacetDistribution(complex, weights, tol), res


def polytope_membership(complex, q, tol=None):
    return membership(complex, q, tol)[0]


# -- classical games ----------------------------------------------------------


@dataclass(frozen=True)
class MarginalWorthVector:
    permutation: tuple  # players in arrival order
    a: tuple


def _classical(v):
    if not v.complex.is_full_simplex:
        raise ClassicalGameRequired("this operation needs a game on the full simplex 2^[n]")
    return v.complex.n


def _check_point(x, n):
    x = list(x)
    if len(x) != n:
        raise DimensionMismatch(f"point has {len(x)} coordinates, game has {n} players")
    return x


def _coalition_sum(x, mask):
    return sum((x[i] for i in range(len(x)) if mask >> i & 1), 0)


def core_membership(v, x, tol=None):
    n = _classical(v)
    x = _check_point(x, n)
    full = (1 << n) - 1
    if not close(_coalition_sum(x, full), v.value_mask(full), tol):
        return False
    eps = 0 if all(is_exact(a) for a in x) and v.is_exact else get_tolerance(tol)
    return all(_coalition_sum(x, s) >= v.value_mask(s) - eps for s in range(1, full))


def anticore_membership(v, x, tol=None):
    n = _classical(v)
    x = _check_point(x, n)
    full = (1 << n) - 1
    if not close(_coalition_sum(x, full), v.value_mask(full), tol):
        return False
    eps = 0 if all(is_exact(a) for a in x) and v.is_exact else get_tolerance(tol)
    return all(_coalition_sum(x, s) <= v.value_mask(s) + eps for s in range(1, full))


def marginal_vectors(v):
    """All n! marginal worth vectors, permutations in lexicographic order."""
    n = _classical(v)
    if n > MAX_WEBER_PLAYERS:
        raise ScaleLimitError(f"marginal vectors enumerate n! orderings; n = {n} exceeds {MAX_WEBER_PLAYERS}")
    perms = list(permutations(range(1, n + 1)))
    if not v.is_exact:
        table = np.array([float(v.value_mask(m)) for m in range(1 << n)])
        rows = kernels.marginal_table(table, n)
        return [MarginalWorthVector(p, tuple(float(a) for a in row)) for p, row in zip(perms, rows)]
    out = []
    for p in perms:
        a = [0] * n
        pred = 0
        for x in p:
            a[x - 1] = v.value_mask(pred | 1 << (x - 1)) - v.value_mask(pred)
            pred |= 1 << (x - 1)
        out.append(MarginalWorthVector(p, tuple(a)))
    return out


def weber_membership(v, x, tol=None):
    n = _classical(v)
    x = _check_point(x, n)
    points = sorted({mv.a for mv in marginal_vectors(v)})
    alpha, res = lp.convex_combination(points, x)
    return alpha is not None and res <= get_tolerance(tol)


def shapley_value(v):
    """Classical Shapley vector of a game on 2^[n], indexed 0..n-1."""
    n = _classical(v)
    sv = shapley_vector((1 << n) - 1, v)
    return tuple(sv[i] for i in range(1, n + 1))


def _vertices(v, sense):
    n = _classical(v)
    if n > MAX_VERTEX_ENUM_PLAYERS:
        raise ScaleLimitError(f"vertex enumeration is limited to n <= {MAX_VERTEX_ENUM_PLAYERS}")
    full = (1 << n) - 1
    proper = list(range(1, full))

    def rows(s):
        return [s >> i & 1 for i in range(n)]

    found = set()
    for tight in combinations(proper, n - 1):
        M = [rows(full)] + [rows(s) for s in tight]
        rhs = [v.value_mask(full)] + [v.value_mask(s) for s in tight]
        x = lp.solve_exact(M, rhs)
        if x is None:
            continue
        if all(sense * (_coalition_sum(x, s) - v.value_mask(s)) >= 0 for s in proper):
            found.add(tuple(x))
    return sorted(found)


def core_vertices(v):
    """Extreme points of the core, by exact enumeration of tight constraint sets."""
    return _vertices(v, 1)


def anticore_vertices(v):
    return _vertices(v, -1)


def sample_core(v, count, rng=None, max_tries=100000):
    """Rational points of the core.

    For n <= 4 these are random convex combinations of the enumerated extreme
    points; beyond that, rejection sampling in the box cut out by the
    individual-rationality and efficiency constraints (approximate coverage).
    """
    rng = rng or random.Random(0)
    n = _classical(v)
    full = (1 << n) - 1
    if n <= 4:
        verts = core_vertices(v)
        if not verts:
            return []
        out = []
        for _ in range(count):
            w = [Fraction(rng.randint(0, 20)) for _ in verts]
            if sum(w) == 0:
                w[rng.randrange(len(w))] = Fraction(1)
            s = sum(w)
            out.append(tuple(sum(wj * vj[i] for wj, vj in zip(w, verts)) / s for i in range(n)))
        return out
    lo = [Fraction(v.value_mask(1 << i)) for i in range(n)]
    hi = [Fraction(v.value_mask(full)) - sum(lo) + lo[i] for i in range(n)]
    out = []
    for _ in range(max_tries):
        if len(out) == count:
            break
        x = [lo[i] + (hi[i] - lo[i]) * Fraction(rng.randint(0, 1000), 1000) for i in range(n - 1)]
        x.append(Fraction(v.value_mask(full)) - sum(x))
        if core_membership(v, x):
            out.append(tuple(x))
    return out


def rank_game(complex):
    """The classical game S -> max{|T| : T subset of S, T a face} on 2^[n]."""
    n = complex.n
    full = SimplicialComplex.full_simplex(n)
    return WorthFunction(full, {m: max(popcount(m & f) for f in complex.facet_masks) for m in range(1 << n)})


def edmonds_check(matroid, samples=50, rng=None, tol=None):
    """Check anticore([n], rk_M) = Q_M on a matroid.

    Every facet point e_F must lie in the anticore of the rank game, and every
    anticore extreme point plus ``samples`` random convex combinations of them
    must lie in the facet polytope.
    """
    if not matroid.is_matroid:
        raise NotAMatroidError("the anticore/facet-polytope equality is only claimed for matroids")
    rng = rng or random.Random(0)
    rk = rank_game(matroid)
    for p in polytope_points(matroid):
        if not anticore_membership(rk, p, tol):
            return False
    verts = anticore_vertices(rk)
    probes = list(verts)
    for _ in range(samples):
        w = [Fraction(rng.randint(1, 9)) for _ in verts]
        s = sum(w)
        probes.append(tuple(sum(wj * vj[i] for wj, vj in zip(w, verts)) / s for i in range(matroid.n)))
    return all(polytope_membership(matroid, p, tol) is not None for p in probes)
