import random
from fractions import Fraction as Fr
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from scgt import fixtures, sampling
from scgt.complex import SimplicialComplex, from_facets, uniform_matroid
from scgt.errors import ClassicalGameRequired, DimensionMismatch, NotAMatroidError, ScaleLimitError
from scgt.games import make_worth
from scgt.polytope import (
    anticore_membership,
    anticore_vertices,
    core_membership,
    core_vertices,
    edmonds_check,
    influence,
    influence_vector,
    marginal_vectors,
    membership,
    polytope_points,
    rank_game,
    sample_core,
    shapley_value,
    weber_membership,
)
from scgt.values import FacetDistribution

from conftest import complexes, permutation_average


def classical(n, fn):
    cx = SimplicialComplex.full_simplex(n)
    return make_worth(cx, {f: fn(frozenset(f)) for f in cx.faces() if f})


def test_influence_uniform_prototype(proto):
    P = FacetDistribution.uniform(proto)
    assert influence_vector(proto, P) == (Fr(1, 5), Fr(1, 5), Fr(4, 5), Fr(3, 5), Fr(3, 5), Fr(3, 5))
    assert influence(proto, P, (3, 4)) == Fr(2, 5)
    assert influence(proto, P, ()) == 1
    assert influence(proto, P, (1, 4)) == 0


def test_influence_vector_sums_to_expected_size(proto, rng):
    for _ in range(20):
        P = sampling.random_distribution(rng, proto)
        assert sum(influence_vector(proto, P)) == 3


def test_influence_float_matches_exact(proto, rng):
    P = sampling.random_distribution(rng, proto)
    Pf = FacetDistribution(proto, {f: float(w) for f, w in P.weights.items()})
    exact, approx = influence_vector(proto, P), influence_vector(proto, Pf)
    assert all(abs(a - float(b)) < 1e-12 for a, b in zip(approx, exact))


def test_membership_certificate(proto):
    P, res = membership(proto, [Fr(1, 5), Fr(1, 5), Fr(4, 5), Fr(3, 5), Fr(3, 5), Fr(3, 5)])
    assert P is not None and res == 0
    assert influence_vector(proto, P) == (Fr(1, 5), Fr(1, 5), Fr(4, 5), Fr(3, 5), Fr(3, 5), Fr(3, 5))


def test_membership_rejections(proto):
    assert membership(proto, [1] * 6)[0] is None
    assert membership(proto, [1, 1, 1, 0, 0, 0])[0] is not None
    assert membership(proto, [1, 0, 0, 1, 0, 0])[0] is None
    with pytest.raises(DimensionMismatch):
        membership(proto, [0, 1])


def test_membership_float_point(proto):
    q = [0.2, 0.2, 0.8, 0.6, 0.6, 0.6]
    P, res = membership(proto, q)
    assert P is not None and res <= 1e-9
    assert all(abs(a - b) <= 1e-9 for a, b in zip(influence_vector(proto, P), q))


def test_polytope_points(proto):
    assert polytope_points(proto)[0] == (1, 1, 1, 0, 0, 0)


@settings(max_examples=50, deadline=None)
@given(complexes(n_max=5), st.randoms(use_true_random=False))
def test_membership_roundtrip_property(cx, r):
    P = sampling.random_distribution(r, cx)
    q = influence_vector(cx, P)
    found, res = membership(cx, q)
    assert found is not None
    assert influence_vector(cx, found) == q


# -- classical games -----------------------------------------------------------


def test_marginal_vectors_two_players():
    v = classical(2, lambda s: 1 if len(s) == 2 else 0)
    mv = marginal_vectors(v)
    assert [m.permutation for m in mv] == [(1, 2), (2, 1)]
    assert [m.a for m in mv] == [(0, 1), (1, 0)]


def test_marginal_vectors_match_direct_computation(rng):
    v = sampling.random_game(rng, SimplicialComplex.full_simplex(4))
    mv = marginal_vectors(v)
    assert len(mv) == 24
    for m, p in zip(mv, permutations(range(1, 5))):
        seen = ()
        for x in p:
            nxt = tuple(sorted(seen + (x,)))
            assert m.a[x - 1] == v(nxt) - v(seen)
            seen = nxt


def test_marginal_vectors_float_kernel(rng):
    v = sampling.random_game(rng, SimplicialComplex.full_simplex(4))
    vf = make_worth(v.complex, {f: float(x) for f, x in v.items() if f})
    for a, b in zip(marginal_vectors(v), marginal_vectors(vf)):
        assert a.permutation == b.permutation
        assert all(abs(float(x) - y) < 1e-12 for x, y in zip(a.a, b.a))


def test_classical_game_required(proto):
    with pytest.raises(ClassicalGameRequired):
        marginal_vectors(make_worth(proto, {}))


def test_weber_scale_limit():
    v = make_worth(SimplicialComplex.full_simplex(9), {})
    with pytest.raises(ScaleLimitError):
        marginal_vectors(v)


def test_shapley_value_classical(rng):
    v = sampling.random_game(rng, SimplicialComplex.full_simplex(4))
    oracle = permutation_average(lambda s: v(tuple(sorted(s))), (1, 2, 3, 4))
    assert shapley_value(v) == tuple(oracle[i] for i in range(1, 5))


def test_core_majority_game_is_empty():
    v = classical(3, lambda s: 1 if len(s) >= 2 else 0)
    assert core_vertices(v) == []
    assert not core_membership(v, [Fr(1, 3)] * 3)


def test_core_and_anticore_examples():
    v = classical(2, lambda s: 1 if len(s) == 2 else 0)
    assert core_vertices(v) == [(0, 1), (1, 0)]
    assert core_membership(v, [Fr(1, 2), Fr(1, 2)])
    assert not core_membership(v, [Fr(3, 2), Fr(-1, 2)])
    assert not core_membership(v, [0, 0])
    w = classical(2, lambda s: 1)
    assert anticore_vertices(w) == [(0, 1), (1, 0)]
    assert anticore_membership(w, [Fr(1, 4), Fr(3, 4)])
    assert not anticore_membership(w, [Fr(3, 2), Fr(-1, 2)])


def test_convex_game_core_is_weber_set(rng):
    # for convex games the core equals the Weber set: vertices are the marginal vectors
    for _ in range(5):
        v = sampling.random_convex_game(rng, 3)
        assert core_vertices(v) == sorted({m.a for m in marginal_vectors(v)})


def test_weber_membership():
    v = classical(2, lambda s: 1 if len(s) == 2 else 0)
    assert weber_membership(v, [Fr(1, 2), Fr(1, 2)])
    assert not weber_membership(v, [2, -1])
    assert weber_membership(v, shapley_value(v))


def test_sample_core_points_are_core_members(rng):
    v = sampling.random_convex_game(rng, 4)
    pts = sample_core(v, 30, rng)
    assert len(pts) == 30 and all(core_membership(v, p) for p in pts)


def test_sample_core_rejection_path():
    v = sampling.random_convex_game(random.Random(3), 5)
    pts = sample_core(v, 5, random.Random(4))
    assert all(core_membership(v, p) for p in pts)


# -- rank games and matroids -------------------------------------------------


def test_rank_game(proto):
    rk = rank_game(uniform_matroid(2, 3))
    assert rk(()) == 0 and rk((1,)) == 1 and rk((1, 2, 3)) == 2
    prk = rank_game(proto)
    assert prk((1, 4, 5)) == 2 and prk((1, 2, 3, 4, 5, 6)) == 3


@pytest.mark.parametrize("name", ["u12", "u23", "u24", "triangle-graphic"])
def test_anticore_vertices_are_facet_points(name):
    m = fixtures.get_fixture(name)
    assert set(anticore_vertices(rank_game(m))) == set(polytope_points(m))
    assert edmonds_check(m, samples=20, rng=random.Random(1))


def test_edmonds_needs_matroid():
    with pytest.raises(NotAMatroidError):
        edmonds_check(fixtures.figure_3b())


def test_nonmatroid_anticore_differs():
    # found by search over pure rank-3 complexes on 5 vertices
    cx = from_facets(5, [(1, 2, 4), (1, 3, 4), (1, 4, 5), (2, 3, 5)])
    assert not cx.is_matroid
    verts = anticore_vertices(rank_game(cx))
    assert set(polytope_points(cx)) < set(verts)
    extra = [p for p in verts if p not in polytope_points(cx)]
    assert all(membership(cx, p)[0] is None for p in extra)


def test_disjoint_edges_still_agree():
    # equality can hold without the exchange property
    cx = from_facets(4, [(1, 2), (3, 4)])
    assert not cx.is_matroid
    assert set(anticore_vertices(rank_game(cx))) == set(polytope_points(cx))
