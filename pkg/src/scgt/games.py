"""Worth functions on a simplicial complex.

A :class:`WorthFunction` is total on the faces of its complex and vanishes on
the empty coalition. Values may be exact (``int``/``Fraction``) or ``float``;
arithmetic preserves whichever kind the operands carry.
"""

from dataclasses import dataclass

import numpy as np

from scgt.complex import SimplicialComplex, face_key, submasks, to_face
from scgt.errors import ComplexMismatchError, ConstraintViolation, InputError
from scgt.numeric import close, is_exact, nonnegative


class WorthFunction:
    def __init__(self, complex, values):
        """``values`` maps face masks to numbers; missing faces are zero."""
        self._complex = complex
        data = {m: 0 for m in complex.face_masks}
        for m, x in values.items():
            if m not in data:
                complex.require(m)
            data[m] = x
        if data[0] != 0:
            raise ConstraintViolation("a worth function must vanish on the empty coalition")
        data[0] = 0
        self._values = data

    @property
    def complex(self):
        return self._complex

    def value_mask(self, mask):
        try:
            return self._values[mask]
        except KeyError:
            self._complex.require(mask)
            raise

    def value(self, face):
        return self.value_mask(self._complex.mask(face))

    __call__ = value

    def __getitem__(self, face):
        return self.value(face)

    def items(self):
        for m in self._complex.face_masks:
            yield to_face(m), self._values[m]

    def mask_items(self):
        return self._values.items()

    @property
    def is_exact(self):
        return all(is_exact(x) for x in self._values.values())

    def as_array(self):
        return np.array([float(self._values[m]) for m in self._complex.face_masks])

    def _check_same(self, other):
        if not isinstance(other, WorthFunction):
            return NotImplemented
        if other._complex != self._complex:
            raise ComplexMismatchError("games live on different complexes")
        return None

    def __add__(self, other):
        if self._check_same(other) is NotImplemented:
            return NotImplemented
        return WorthFunction(self._complex, {m: x + other._values[m] for m, x in self._values.items()})

    def __sub__(self, other):
        if self._check_same(other) is NotImplemented:
            return NotImplemented
        return WorthFunction(self._complex, {m: x - other._values[m] for m, x in self._values.items()})

    def __mul__(self, c):
        if isinstance(c, WorthFunction):
            return NotImplemented
        return WorthFunction(self._complex, {m: c * x for m, x in self._values.items()})

    __rmul__ = __mul__

    def __neg__(self):
        return -1 * self

    def equals(self, other, tol=None):
        self._check_same(other)
        return all(close(x, other._values[m], tol) for m, x in self._values.items())

    def __eq__(self, other):
        if not isinstance(other, WorthFunction):
            return NotImplemented
        return self._complex == other._complex and self._values == other._values

    __hash__ = None

    def __repr__(self):
        nz = {to_face(m): x for m, x in self._values.items() if x != 0}
        return f"WorthFunction(nonzero={nz})"


def make_worth(complex, assignments=None):
    """Build a game from ``{face: value}`` (or an iterable of pairs); unassigned faces are zero."""
    if assignments is None:
        assignments = {}
    pairs = assignments.items() if hasattr(assignments, "items") else assignments
    values = {}
    for face, x in pairs:
        m = complex.mask(face)
        complex.require(m)
        if m == 0:
            if x != 0:
                raise ConstraintViolation(f"v(empty set) must be 0, got {x!r}")
            continue
        values[m] = x
    return WorthFunction(complex, values)


def zero_game(complex):
    return WorthFunction(complex, {})


def _anchor(complex, face, allow_empty):
    m = complex.mask(face)
    complex.require(m, "anchor")
    if m == 0 and not allow_empty:
        raise InputError("this game family is defined only for nonempty anchors")
    return m


def carrier(complex, face):
    """v_T: 1 on every face containing T."""
    t = _anchor(complex, face, allow_empty=False)
    return WorthFunction(complex, {m: 1 for m in complex.face_masks if t & ~m == 0})


def carrier_strict(complex, face):
    """v̂_T: 1 on every face strictly containing T (T may be empty)."""
    t = _anchor(complex, face, allow_empty=True)
    return WorthFunction(complex, {m: 1 for m in complex.face_masks if t & ~m == 0 and m != t})


def indicator(complex, face):
    t = _anchor(complex, face, allow_empty=False)
    return WorthFunction(complex, {t: 1})


def covering_pairs(complex):
    """Yield ``(S, T)`` face masks with ``S`` a facet of ``T`` (``|T| = |S| + 1``)."""
    for m in complex.face_masks:
        sub = m
        while sub:
            bit = sub & -sub
            yield m & ~bit, m
            sub &= sub - 1


def is_monotone(v, tol=None):
    vals = v._values
    return all(nonnegative(vals[t] - vals[s], tol) for s, t in covering_pairs(v.complex))


def is_dummy(v, i, tol=None):
    cx = v.complex
    bit = 1 << (i - 1)
    cx.require(bit, "player")
    vals = v._values
    vi = vals[bit]
    return all(close(vals[s | bit], vals[s] + vi, tol) for s in cx.link_masks(bit))


def restrict(v, face):
    """The restriction ``v|_F`` as a game on the simplex ``2^F``."""
    cx = v.complex
    f = cx.mask(face)
    cx.require(f, "anchor")
    simplex = SimplicialComplex(cx.n, [f])
    return WorthFunction(simplex, {s: v._values[s] for s in submasks(f)})


@dataclass(frozen=True)
class GameBasisCoefficients:
    complex: SimplicialComplex
    coefficients: dict  # face mask -> value, nonempty faces only

    def reconstruct(self):
        return WorthFunction(self.complex, dict(self.coefficients))

    def as_faces(self):
        return {to_face(m): x for m, x in sorted(self.coefficients.items(), key=lambda kv: face_key(kv[0]))}


def basis_decompose(v):
    return GameBasisCoefficients(v.complex, {m: x for m, x in v._values.items() if m})


def reconstruct(coeffs):
    """Σ_T c_T·𝟙_T computed by summing indicator games, independent of ``reconstruct()``."""
    total = zero_game(coeffs.complex)
    for m, x in coeffs.coefficients.items():
        total = total + x * indicator(coeffs.complex, to_face(m))
    return total
