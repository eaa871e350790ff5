"""Quasi-probabilistic values on simplicial complexes.

A quasi-probabilistic value for player ``i`` is a nonnegative weight ``p_T``
on every coalition ``T`` of the player's link; it pays
``sum_T p_T * (v(T | i) - v(T))``. The weights sum to the participation rate
``lambda_i``. This module also holds the facet decomposition of such values,
the classical Shapley value on a simplex, group values reducible to facets, and
the axiom checkers.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import NamedTuple

import numpy as np

from scgt import kernels
from scgt.complex import SimplicialComplex, face_key, popcount, submasks, to_face
from scgt.errors import (
    ComplexMismatchError,
    DummyPreconditionError,
    EmptyDecompositionError,
    InputError,
    NecessaryConditionViolation,
    NotMonotoneRepresentable,
    NotReducibleError,
    NotRepresentableError,
    PurityRequiredError,
)
from scgt.games import carrier, is_dummy
from scgt.numeric import close, div, is_exact, nonnegative


def _sorted_items(d):
    return sorted(d.items(), key=lambda kv: face_key(kv[0]))


class QuasiValue:
    """Link coefficients ``{T: p_T}`` of one player, with rate ``lam``."""

    def __init__(self, complex, player, coefficients, lam=None, tol=None):
        self.complex = complex
        self.player = player
        bit = 1 << (player - 1)
        complex.require(bit, "player")
        link = set(complex.link_masks(bit))
        coeffs = {}
        for m, p in coefficients.items():
            if m not in link:
                raise InputError(
                    f"coefficient on {list(to_face(m))} is outside the link of player {player}"
                )
            if not nonnegative(p, tol):
                raise InputError(f"coefficient on {list(to_face(m))} is negative: {p!r}")
            if p != 0:
                coeffs[m] = p
        total = sum(coeffs.values(), 0)
        if lam is None:
            lam = total
        elif not close(total, lam, tol):
            raise InputError(f"coefficients sum to {total}, not to lambda = {lam}")
        self.coefficients = coeffs
        self.lam = lam

    @classmethod
    def from_faces(cls, complex, player, coefficients, lam=None, tol=None):
        masks = {}
        for face, p in coefficients.items():
            m = complex.mask(face)
            masks[m] = masks.get(m, 0) + p
        return cls(complex, player, masks, lam, tol)

    def as_faces(self):
        return {to_face(m): p for m, p in _sorted_items(self.coefficients)}

    def __call__(self, v):
        return eval_quasi(self, v)

    def equals(self, other, tol=None):
        if self.complex != other.complex or self.player != other.player:
            return False
        keys = set(self.coefficients) | set(other.coefficients)
        return close(self.lam, other.lam, tol) and all(
            close(self.coefficients.get(k, 0), other.coefficients.get(k, 0), tol) for k in keys
        )

    def __repr__(self):
        return f"QuasiValue(player={self.player}, lam={self.lam}, coefficients={self.as_faces()})"


def eval_quasi(q, v):
    if v.complex != q.complex:
        raise ComplexMismatchError("value and game are defined on different complexes")
    bit = 1 << (q.player - 1)
    vals = v._values
    return sum((p * (vals[t | bit] - vals[t]) for t, p in q.coefficients.items()), 0)


def indicator_values(q):
    """``{S: phi_i(1_S)}`` over nonempty faces, i.e. the value as a linear functional."""
    bit = 1 << (q.player - 1)
    out = {m: 0 for m in q.complex.face_masks if m}
    for t, p in q.coefficients.items():
        out[t | bit] += p
        if t:
            out[t] -= p
    return out


def coefficients_from_linear_value(complex, player, indicator_values, tol=None):
    """Recover link coefficients from the values ``phi_i(1_T)`` of a linear value.

    ``indicator_values`` is keyed by faces (iterables) or, when every key is an
    int, by face masks. Missing faces count as zero.
    """
    bit = 1 << (player - 1)
    complex.require(bit, "player")
    c = {}
    for key, x in indicator_values.items():
        m = key if isinstance(key, int) else complex.mask(key)
        complex.require(m)
        if m == 0:
            raise InputError("the empty coalition carries no indicator game")
        c[m] = x
    link = complex.link_masks(bit)
    link_set = set(link)
    for m, x in c.items():
        if not m & bit and m not in link_set and not close(x, 0, tol):
            raise NecessaryConditionViolation(
                f"phi_{player}(1_T) = {x} for T = {list(to_face(m))}, but T + {player} is infeasible"
            )
    coeffs = {}
    for t in link:
        p = c.get(t | bit, 0)
        if t and not close(c.get(t, 0), -p, tol):
            raise NotRepresentableError(
                f"phi_{player}(1_T) = {c.get(t, 0)} for T = {list(to_face(t))} "
                f"does not cancel phi_{player}(1_(T+{player})) = {p}"
            )
        if not nonnegative(p, tol):
            raise NotMonotoneRepresentable(
                f"induced coefficient on {list(to_face(t))} is negative: {p}"
            )
        if p != 0:
            coeffs[t] = p
    return QuasiValue(complex, player, coeffs, tol=tol)


# -- facet distributions -----------------------------------------------------


class FacetDistribution:
    """Probability distribution over the facets of a complex."""

    def __init__(self, complex, weights, tol=None):
        self.complex = complex
        facets = set(complex.facet_masks)
        data = {f: 0 for f in complex.facet_masks}
        for m, w in weights.items():
            if m not in facets:
                raise InputError(f"{list(to_face(m))} is not a facet")
            if not nonnegative(w, tol):
                raise InputError(f"negative probability {w!r} on facet {list(to_face(m))}")
            data[m] = w
        total = sum(data.values(), 0)
        if not close(total, 1, tol):
            raise InputError(f"facet probabilities sum to {total}, not 1")
        self.weights = data

    @classmethod
    def from_faces(cls, complex, weights, tol=None):
        return cls(complex, {complex.mask(f): w for f, w in weights.items()}, tol)

    @classmethod
    def uniform(cls, complex, exact=True):
        k = len(complex.facet_masks)
        w = Fraction(1, k) if exact else 1.0 / k
        return cls(complex, {f: w for f in complex.facet_masks})

    @classmethod
    def proportional(cls, complex, v):
        """Weights proportional to ``v(F)``; uniform when every facet is worth zero."""
        raw = {f: v.value_mask(f) for f in complex.facet_masks}
        if any(not nonnegative(x) for x in raw.values()):
            raise InputError("proportional weights need v(F) >= 0 on every facet")
        total = sum(raw.values(), 0)
        if total == 0:
            return cls.uniform(complex, exact=v.is_exact)
        return cls(complex, {f: div(x, total) for f, x in raw.items()})

    def __getitem__(self, face):
        return self.weights[self.complex.mask(face)]

    def as_faces(self):
        return {to_face(m): w for m, w in _sorted_items(self.weights)}

    def __repr__(self):
        return f"FacetDistribution({self.as_faces()})"


# -- facet-local values and decomposition ------------------------------------


@dataclass
class FacetLocalValue:
    """Classical probabilistic value of ``player`` on the simplex of ``facet``.

    ``coefficients`` is keyed by masks of subsets of ``facet - {player}`` and sums to 1.
    """

    facet: int
    player: int
    coefficients: dict = field(default_factory=dict)

    def __post_init__(self):
        bit = 1 << (self.player - 1)
        if not self.facet & bit:
            raise InputError(f"player {self.player} is not in facet {list(to_face(self.facet))}")
        rest = self.facet & ~bit
        for m, p in self.coefficients.items():
            if m & ~rest:
                raise InputError(f"{list(to_face(m))} is not a subset of the facet minus the player")
            if not nonnegative(p):
                raise InputError(f"negative local coefficient {p!r}")
        if not close(sum(self.coefficients.values(), 0), 1):
            raise InputError("local coefficients must sum to 1")

    def evaluate(self, v):
        """phi_i^F(v|_F); ``v`` may live on the whole complex or on the simplex of F."""
        bit = 1 << (self.player - 1)
        return sum((p * (v.value_mask(t | bit) - v.value_mask(t)) for t, p in self.coefficients.items()), 0)

    def as_faces(self):
        return {to_face(m): p for m, p in _sorted_items(self.coefficients)}


class FacetDecomposition(NamedTuple):
    weights: dict  # facet mask -> P^i(F), facets with zero weight omitted
    local: list  # FacetLocalValue per weighted facet

    def as_faces(self):
        return {to_face(m): w for m, w in _sorted_items(self.weights)}


def facet_decompose(q, strict=False):
    """Split a quasi-value into facet weights ``P^i(F)`` and local probabilistic values.

    ``P^i(F) = sum over T in link, T in F of p_T / m(T + i)`` and
    ``p_{F,T} = p_T / (m(T + i) P^i(F))``, where ``m(S)`` counts facets containing S.
    A zero value decomposes to nothing; with ``strict`` that raises instead.
    """
    if q.lam == 0 or not q.coefficients:
        if strict:
            raise EmptyDecompositionError(f"player {q.player} has participation rate 0")
        return FacetDecomposition({}, [])
    cx = q.complex
    bit = 1 << (q.player - 1)
    share = {t: div(p, cx.m_count_mask(t | bit)) for t, p in q.coefficients.items()}
    weights = {}
    local = []
    for f in cx.facets_containing_mask(bit):
        inside = {t: s for t, s in share.items() if t & ~f == 0}
        w = sum(inside.values(), 0)
        if w == 0:
            continue
        weights[f] = w
        local.append(FacetLocalValue(f, q.player, {t: div(s, w) for t, s in inside.items()}))
    return FacetDecomposition(weights, local)


def recompose(q_player, complex, decomposition):
    """Rebuild link coefficients ``p_T = sum_F P(F) p_{F,T}`` from a decomposition."""
    coeffs = {}
    for lv in decomposition.local:
        w = decomposition.weights[lv.facet]
        for t, p in lv.coefficients.items():
            coeffs[t] = coeffs.get(t, 0) + w * p
    return QuasiValue(complex, q_player, coeffs)


# -- Shapley values on a simplex ---------------------------------------------


def shapley_coefficient(k, s):
    """Weight of a size-``s`` coalition joined by a player in a ``k``-player game."""
    return Fraction(1, k) * Fraction(factorial(s) * factorial(k - s - 1), factorial(k - 1))


def _local_table(v, fmask):
    bits = [1 << (x - 1) for x in to_face(fmask)]
    k = len(bits)
    glob = [0] * (1 << k)
    for lm in range(1, 1 << k):
        low = (lm & -lm).bit_length() - 1
        glob[lm] = glob[lm & (lm - 1)] | bits[low]
    return bits, np.array([float(v.value_mask(g)) for g in glob])


def shapley_vector(face, v):
    """Shapley values of every player of the simplex ``2^face`` for the game ``v`` (restricted)."""
    fmask = to_face_mask(v.complex, face)
    members = to_face(fmask)
    k = len(members)
    if k == 0:
        return {}
    if not all(is_exact(v.value_mask(s)) for s in submasks(fmask)):
        _, table = _local_table(v, fmask)
        phi = kernels.shapley_table(table, k)
        return {x: float(phi[j]) for j, x in enumerate(members)}
    return {x: _shapley_exact(v, fmask, x) for x in members}


def _shapley_exact(v, fmask, i):
    k = popcount(fmask)
    bit = 1 << (i - 1)
    weight = [shapley_coefficient(k, s) for s in range(k)]
    return sum(
        (weight[popcount(t)] * (v.value_mask(t | bit) - v.value_mask(t)) for t in submasks(fmask & ~bit)),
        Fraction(0),
    )


def to_face_mask(complex, face):
    m = face if isinstance(face, int) else complex.mask(face)
    complex.require(m, "anchor")
    return m


def shapley_simplex(face, v, i):
    """Classical Shapley value of player ``i`` in the game ``v`` on the simplex of ``face``."""
    fmask = to_face_mask(v.complex, face)
    if not fmask & (1 << (i - 1)):
        raise InputError(f"player {i} is not in {list(to_face(fmask))}")
    if all(is_exact(v.value_mask(s)) for s in submasks(fmask)):
        return _shapley_exact(v, fmask, i)
    return shapley_vector(fmask, v)[i]


def shapley_local(facet_mask, player):
    """Shapley weights as a :class:`FacetLocalValue`."""
    bit = 1 << (player - 1)
    k = popcount(facet_mask)
    return FacetLocalValue(
        facet_mask, player, {t: shapley_coefficient(k, popcount(t)) for t in submasks(facet_mask & ~bit)}
    )


# -- group values ------------------------------------------------------------


@dataclass
class GroupValue:
    complex: SimplicialComplex
    per_player: dict  # vertex -> QuasiValue

    def __post_init__(self):
        missing = [x for x in self.complex.vertices if x not in self.per_player]
        if missing:
            raise InputError(f"group value lacks players {missing}")
        for x, q in self.per_player.items():
            if q.complex != self.complex or q.player != x:
                raise ComplexMismatchError(f"per-player value for {x} does not match the complex")

    def evaluate(self, v):
        return {x: eval_quasi(q, v) for x, q in sorted(self.per_player.items())}

    @property
    def rates(self):
        return {x: q.lam for x, q in sorted(self.per_player.items())}


def _local_lookup(local):
    if local is None:
        return None
    items = local.values() if hasattr(local, "values") else local
    return {(lv.facet, lv.player): lv for lv in items}


def reducible_group_value(complex, P, v, local=None):
    """phi_i(v) = sum over facets F containing i of P(F) * phi_i^F(v|_F).

    Without ``local`` the facet values are Shapley values and the complex must
    be pure. ``local`` is an iterable of :class:`FacetLocalValue`.
    """
    if P.complex != complex or v.complex != complex:
        raise ComplexMismatchError("distribution, game and complex must agree")
    lookup = _local_lookup(local)
    if lookup is None and not complex.is_pure:
        raise PurityRequiredError(
            "the Shapley reduction needs a pure complex (all facets of one size); "
            "use explicit local values or the quasi method"
        )
    out = {x: 0 for x in range(1, complex.n + 1)}
    for f, w in P.weights.items():
        if w == 0:
            continue
        if lookup is None:
            for x, s in shapley_vector(f, v).items():
                out[x] += w * s
            continue
        for x in to_face(f):
            lv = lookup.get((f, x))
            if lv is None:
                raise InputError(f"no local value for player {x} on facet {list(to_face(f))}")
            out[x] += w * lv.evaluate(v)
    return out


def group_value_from_distribution(complex, P, local=None):
    """The quasi-value coefficients of a reducible group value.

    Player ``i`` gets ``p_T = sum over facets F containing T + i of P(F) p_{F,T}``,
    with Shapley weights when ``local`` is omitted (pure complexes only).
    """
    lookup = _local_lookup(local)
    if lookup is None and not complex.is_pure:
        raise PurityRequiredError("the Shapley reduction needs a pure complex")
    per_player = {}
    for x in complex.vertices:
        bit = 1 << (x - 1)
        coeffs = {}
        for f in complex.facets_containing_mask(bit):
            w = P.weights[f]
            if w == 0:
                continue
            lv = shapley_local(f, x) if lookup is None else lookup.get((f, x))
            if lv is None:
                raise InputError(f"no local value for player {x} on facet {list(to_face(f))}")
            for t, p in lv.coefficients.items():
                coeffs[t] = coeffs.get(t, 0) + w * p
        per_player[x] = QuasiValue(complex, x, coeffs)
    return GroupValue(complex, per_player)


def reconstruct_shapley_reduction(g, tol=None):
    """Find the facet distribution behind a Shapley-reducible group value.

    On a pure complex of rank r the only coalition of player i's link that
    reaches facet F alone is ``F - {i}``, with Shapley weight ``1/r``; so
    ``P(F) = r * p^i_{F - i}`` for every i in F. Raises
    :class:`NotReducibleError` when the candidates disagree, do not form a
    distribution, or fail to reproduce ``g``.
    """
    cx = g.complex
    if not cx.is_pure:
        raise PurityRequiredError("Shapley reducibility is characterised on pure complexes only")
    r = cx.rank
    weights = {}
    for f in cx.facet_masks:
        cands = [r * g.per_player[x].coefficients.get(f & ~(1 << (x - 1)), 0) for x in to_face(f)]
        if not all(close(c, cands[0], tol) for c in cands):
            raise NotReducibleError(f"players of facet {list(to_face(f))} disagree on its probability")
        weights[f] = cands[0]
    try:
        P = FacetDistribution(cx, weights, tol)
    except InputError as exc:
        raise NotReducibleError(f"implied facet weights are not a distribution: {exc}") from None
    expected = group_value_from_distribution(cx, P)
    for x, q in g.per_player.items():
        if not q.equals(expected.per_player[x], tol):
            raise NotReducibleError(f"player {x} is not the P-weighted Shapley value")
    return P


# -- axiom checkers ----------------------------------------------------------


def check_dummy_axiom(q, v, tol=None):
    if not is_dummy(v, q.player, tol):
        raise DummyPreconditionError(f"player {q.player} is not dummy in the supplied game")
    return close(eval_quasi(q, v), q.lam * v.value_mask(1 << (q.player - 1)), tol)


def check_substitution_carrier(g, tol=None):
    """phi_i(v_T) = phi_j(v_T) for every feasible nonempty T and substitutes i, j.

    In the carrier game v_T the members of T are mutual substitutes, and so are
    the non-members; both classes are checked.
    """
    cx = g.complex
    players = sorted(g.per_player)
    for t in cx.face_masks:
        if not t:
            continue
        game = carrier(cx, to_face(t))
        inside = [eval_quasi(g.per_player[x], game) for x in players if t >> (x - 1) & 1]
        outside = [eval_quasi(g.per_player[x], game) for x in players if not t >> (x - 1) & 1]
        for cls in (inside, outside):
            if any(not close(a, cls[0], tol) for a in cls[1:]):
                return False
    return True


def check_probabilistic_efficiency(g, P, v, tol=None):
    total = sum(g.evaluate(v).values(), 0)
    target = sum((w * v.value_mask(f) for f, w in P.weights.items()), 0)
    return close(total, target, tol)
