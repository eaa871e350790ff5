"""Random complexes, games and values for property checks.

Every generator takes a ``random.Random`` so runs are reproducible from a seed.
Exact generators draw small-denominator fractions.
"""

from fractions import Fraction
from itertools import combinations

from scgt.complex import SimplicialComplex, submasks
from scgt.games import WorthFunction
from scgt.values import FacetDistribution, QuasiValue


def rational(rng, lo=-5, hi=5, den=6):
    return Fraction(rng.randint(lo * den, hi * den), rng.randint(1, den))


def random_complex(rng, n_max=6, n_min=1):
    n = rng.randint(n_min, n_max)
    k = rng.randint(1, max(1, n))
    cands = []
    for _ in range(k):
        size = rng.randint(1, n)
        cands.append(rng.sample(range(1, n + 1), size))
    return SimplicialComplex.from_facets(n, cands)


def random_game(rng, complex, exact=True):
    draw = (lambda: rational(rng)) if exact else (lambda: rng.uniform(-5, 5))
    return WorthFunction(complex, {m: draw() for m in complex.face_masks if m})


def random_monotone_game(rng, complex, exact=True):
    """Sum of nonnegative dividends over subsets: monotone by construction."""
    div = {m: (Fraction(rng.randint(0, 12), rng.randint(1, 4)) if exact else rng.uniform(0, 3))
           for m in complex.face_masks if m}
    return WorthFunction(complex, {m: sum((div[s] for s in submasks(m) if s), 0) for m in complex.face_masks if m})


def random_dummy_game(rng, complex, player, exact=True):
    """A game in which ``player`` is dummy: v(S) = u(S - i) + c for S containing i."""
    bit = 1 << (player - 1)
    draw = (lambda: rational(rng)) if exact else (lambda: rng.uniform(-5, 5))
    base = {m: draw() for m in complex.face_masks if m and not m & bit}
    base[0] = 0
    c = draw()
    vals = {m: (base[m & ~bit] + c if m & bit else base[m]) for m in complex.face_masks if m}
    return WorthFunction(complex, vals)


def random_convex_game(rng, n):
    """Classical game with nonnegative dividends on coalitions of size >= 2 (supermodular)."""
    full = SimplicialComplex.full_simplex(n)
    div = {}
    for m in range(1, 1 << n):
        if m & (m - 1):
            div[m] = Fraction(rng.randint(0, 6), rng.randint(1, 3))
        else:
            div[m] = Fraction(rng.randint(-3, 6), rng.randint(1, 3))
    return WorthFunction(full, {m: sum(div[s] for s in submasks(m) if s) for m in range(1, 1 << n)})


def random_weights(rng, k, exact=True, sparsity=0.3):
    if exact:
        w = [Fraction(0) if rng.random() < sparsity else Fraction(rng.randint(1, 20)) for _ in range(k)]
        if sum(w) == 0:
            w[rng.randrange(k)] = Fraction(1)
    else:
        w = [0.0 if rng.random() < sparsity else rng.random() for _ in range(k)]
        if sum(w) == 0:
            w[rng.randrange(k)] = 1.0
    s = sum(w)
    return [x / s for x in w]


def random_distribution(rng, complex, exact=True):
    w = random_weights(rng, len(complex.facet_masks), exact)
    return FacetDistribution(complex, dict(zip(complex.facet_masks, w)))


def random_quasi_value(rng, complex, player, exact=True, lam=None):
    """Nonnegative link coefficients summing to ``lam`` (random in [0, 1] by default)."""
    link = complex.vertex_link_masks(player)
    if lam is None:
        lam = Fraction(rng.randint(0, 8), 8) if exact else rng.random()
    w = random_weights(rng, len(link), exact)
    return QuasiValue(complex, player, {t: lam * x for t, x in zip(link, w)}, lam)


def all_subsets(n):
    for k in range(n + 1):
        yield from combinations(range(1, n + 1), k)
