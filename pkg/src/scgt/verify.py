"""Property suites run by ``scgt verify`` against a named fixture."""

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from scgt import sampling
from scgt.complex import to_face
from scgt.errors import NotReducibleError
from scgt.games import restrict
from scgt.polytope import edmonds_check, influence_vector, membership
from scgt.values import (
    check_dummy_axiom,
    check_probabilistic_efficiency,
    check_substitution_carrier,
    coefficients_from_linear_value,
    eval_quasi,
    facet_decompose,
    group_value_from_distribution,
    indicator_values,
    reconstruct_shapley_reduction,
    shapley_simplex,
)


@dataclass
class CheckResult:
    name: str
    status: str  # "pass", "fail" or "skip"
    detail: str
    seconds: float = 0.0

    @property
    def ok(self):
        return self.status != "fail"

    def line(self):
        return f"[{self.status.upper():4}] {self.name}: {self.detail} ({self.seconds:.2f}s)"


def _players(cx):
    return cx.vertices


def check_complex(cx, rng, rounds):
    faces = cx.face_masks
    for f in cx.facet_masks:
        for g in cx.facet_masks:
            if f != g and f & ~g == 0:
                return False, "facets are not an antichain"
    for x in _players(cx):
        bit = 1 << (x - 1)
        direct = sorted(m for m in faces if not m & bit and cx.contains_mask(m | bit))
        if sorted(cx.vertex_link_masks(x)) != direct:
            return False, f"link of {x} disagrees with the direct predicate"
    for m in faces:
        if cx.m_count_mask(m) != sum(1 for f in cx.facet_masks if m | f == f) or cx.m_count_mask(m) == 0:
            return False, f"facet count wrong for {list(to_face(m))}"
    return True, f"{len(faces)} faces, {len(cx.facet_masks)} facets"


def check_roundtrip(cx, rng, rounds):
    n = 0
    for _ in range(rounds):
        for x in _players(cx):
            q = sampling.random_quasi_value(rng, cx, x)
            back = coefficients_from_linear_value(cx, x, indicator_values(q))
            if back.coefficients != q.coefficients or back.lam != q.lam:
                return False, f"player {x}: coefficients not recovered"
            n += 1
    return True, f"{n} values recovered exactly"


def check_axioms(cx, rng, rounds):
    n = 0
    for _ in range(rounds):
        for x in _players(cx):
            q = sampling.random_quasi_value(rng, cx, x)
            d = sampling.random_dummy_game(rng, cx, x)
            if not check_dummy_axiom(q, d):
                return False, f"player {x}: dummy axiom fails"
            m = sampling.random_monotone_game(rng, cx)
            if eval_quasi(q, m) < 0:
                return False, f"player {x}: negative value on a monotone game"
            n += 1
    return True, f"{n} dummy and {n} monotone games"


def check_decomposition(cx, rng, rounds):
    n = 0
    for x in _players(cx):
        q = sampling.random_quasi_value(rng, cx, x, lam=Fraction(rng.randint(1, 8), 8))
        dec = facet_decompose(q)
        if sum(dec.weights.values()) != q.lam:
            return False, f"player {x}: facet weights do not sum to lambda"
        rebuilt = {}
        for lv in dec.local:
            for t, p in lv.coefficients.items():
                rebuilt[t] = rebuilt.get(t, 0) + dec.weights[lv.facet] * p
        if {t: p for t, p in rebuilt.items() if p} != q.coefficients:
            return False, f"player {x}: reconstruction identity fails"
        for _ in range(rounds):
            v = sampling.random_game(rng, cx)
            direct = eval_quasi(q, v)
            via = sum(dec.weights[lv.facet] * lv.evaluate(restrict(v, to_face(lv.facet))) for lv in dec.local)
            if direct != via:
                return False, f"player {x}: evaluation differs"
            n += 1
    return True, f"{n} evaluations agree exactly"


def _permutation_average(v, members):
    total = {x: Fraction(0) for x in members}
    count = 0
    for order in permutations(members):
        pred = 0
        for x in order:
            total[x] += v.value_mask(pred | 1 << (x - 1)) - v.value_mask(pred)
            pred |= 1 << (x - 1)
        count += 1
    return {x: t / count for x, t in total.items()}


def check_shapley(cx, rng, rounds):
    n = 0
    for f in cx.facet_masks:
        if bin(f).count("1") > 7:
            continue
        members = to_face(f)
        for _ in range(max(1, rounds // 10)):
            v = restrict(sampling.random_game(rng, cx), members)
            oracle = _permutation_average(v, members)
            for x in members:
                if shapley_simplex(members, v, x) != oracle[x]:
                    return False, f"facet {list(members)}: player {x} differs from the permutation average"
            n += 1
    return True, f"{n} facet games match the permutation average"


def check_reducible(cx, rng, rounds):
    if not cx.is_pure:
        return None, "complex is not pure"
    for _ in range(max(1, rounds // 10)):
        P = sampling.random_distribution(rng, cx)
        g = group_value_from_distribution(cx, P)
        for x, q in g.per_player.items():
            d = sampling.random_dummy_game(rng, cx, x)
            if not check_dummy_axiom(q, d):
                return False, f"player {x}: w^P-dummy axiom fails"
        if not check_substitution_carrier(g):
            return False, "substitution for carrier games fails"
        for _ in range(rounds):
            if not check_probabilistic_efficiency(g, P, sampling.random_game(rng, cx)):
                return False, "probabilistic efficiency fails"
        try:
            back = reconstruct_shapley_reduction(g)
        except NotReducibleError as exc:
            return False, f"reconstruction rejected a reducible value: {exc}"
        if back.weights != P.weights:
            return False, "reconstructed distribution differs"
    return True, "dummy, substitution and efficiency hold; distribution recovered"


def check_polytope(cx, rng, rounds):
    for _ in range(rounds):
        P = sampling.random_distribution(rng, cx, exact=rng.random() < 0.5)
        q = influence_vector(cx, P)
        found, res = membership(cx, q)
        if found is None:
            return False, f"influence vector {q} rejected (residual {res})"
        back = influence_vector(cx, found)
        if max(abs(a - b) for a, b in zip(back, q)) > 1e-9:
            return False, "recovered distribution does not reproduce the point"
    ones = [1] * cx.n
    if sum(len(to_face(f)) == cx.n for f in cx.facet_masks) == 0 and membership(cx, ones)[0] is not None:
        return False, "the all-ones probe was accepted"
    return True, f"{rounds} influence vectors recovered"


def check_edmonds(cx, rng, rounds):
    if not cx.is_matroid:
        return None, "complex is not a matroid"
    if cx.n > 5:
        return None, "too many vertices for vertex enumeration"
    return edmonds_check(cx, rng=rng), "anticore of the rank game vs facet polytope"


SUITES = [
    ("complex structure", check_complex),
    ("link coefficient roundtrip", check_roundtrip),
    ("dummy and monotonicity axioms", check_axioms),
    ("facet decomposition", check_decomposition),
    ("shapley vs permutation average", check_shapley),
    ("reducible shapley value", check_reducible),
    ("facet polytope roundtrip", check_polytope),
    ("edmonds equality", check_edmonds),
]


def run(cx, seed=0, rounds=50):
    rng = random.Random(seed)
    results = []
    for name, fn in SUITES:
        start = time.perf_counter()
        ok, detail = fn(cx, rng, rounds)
        status = "skip" if ok is None else ("pass" if ok else "fail")
        results.append(CheckResult(name, status, detail, time.perf_counter() - start))
    return results
