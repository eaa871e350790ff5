"""Finite simplicial complexes stored by their facets.

A face is a set of vertices in ``1..n``. Internally faces are bitmasks (bit
``i - 1`` stands for vertex ``i``); the public API takes any iterable of
vertex ids and returns sorted tuples.
"""

from functools import cached_property
from itertools import combinations

import numpy as np

from scgt import kernels
from scgt.errors import InfeasibleCoalitionError, InputError, VertexOutOfRangeError

MAX_VERTICES = 64


def to_mask(face, n=None):
    mask = 0
    for v in face:
        v = int(v)
        if v < 1 or (n is not None and v > n):
            raise VertexOutOfRangeError(face, n if n is not None else MAX_VERTICES)
        mask |= 1 << (v - 1)
    return mask


def to_face(mask):
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(mask):
    return bin(mask).count("1")


def face_key(mask):
    """Sort key: cardinality first, then lexicographic on sorted members."""
    return (popcount(mask), to_face(mask))


def submasks(mask):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


class SimplicialComplex:
    """Downward-closed family of subsets of ``[n]`` given by its facets.

    Instances are immutable. Build them with :meth:`from_facets`, which drops
    dominated and duplicate candidates.
    """

    def __init__(self, n, facet_masks, labels=None):
        if n < 1 or n > MAX_VERTICES:
            raise InputError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        self._n = n
        self._facets = tuple(sorted(facet_masks, key=face_key))
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise InputError(f"expected {n} labels, got {len(labels)}")
            if len(set(labels)) != n:
                raise InputError("vertex labels must be distinct")
        self._labels = labels

    @classmethod
    def from_facets(cls, n, candidate_sets, labels=None):
        masks = set()
        for face in candidate_sets:
            masks.add(to_mask(face, n))
        kept = [m for m in masks if not any(m != o and m & ~o == 0 for o in masks)]
        if not kept:
            kept = [0]
        return cls(n, kept, labels)

    @classmethod
    def simplex(cls, face, n=None):
        """The full simplex ``2^face``; vertex ids keep their meaning in ``[n]``."""
        face = tuple(face)
        if n is None:
            n = max(face, default=1)
        return cls.from_facets(n, [face])

    @classmethod
    def full_simplex(cls, n, labels=None):
        return cls.from_facets(n, [range(1, n + 1)], labels)

    # -- basic attributes ---------------------------------------------------

    @property
    def n(self):
        return self._n

    @property
    def labels(self):
        return self._labels

    @property
    def facet_masks(self):
        return self._facets

    @property
    def facets(self):
        return [to_face(m) for m in self._facets]

    def label(self, v):
        return self._labels[v - 1] if self._labels else str(v)

    def vertex_of(self, token):
        """Resolve a label or a 1-based index string to a vertex id."""
        if self._labels and token in self._labels:
            return self._labels.index(token) + 1
        try:
            v = int(token)
        except (TypeError, ValueError):
            raise InputError(f"unknown vertex label {token!r}") from None
        if not 1 <= v <= self._n:
            raise InputError(f"vertex {v} outside [1, {self._n}]")
        return v

    @cached_property
    def vertex_mask(self):
        out = 0
        for f in self._facets:
            out |= f
        return out

    @property
    def vertices(self):
        return list(to_face(self.vertex_mask))

    def mask(self, face):
        if isinstance(face, (int, np.integer)):
            raise TypeError("faces are iterables of vertex ids; use to_mask for raw masks")
        return to_mask(face, self._n)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._n == other._n and self._facets == other._facets

    def __hash__(self):
        return hash((self._n, self._facets))

    def __repr__(self):
        return f"SimplicialComplex(n={self._n}, facets={self.facets})"

    # -- membership and enumeration ----------------------------------------

    def contains_mask(self, mask):
        for f in self._facets:
            if mask & ~f == 0:
                return True
        return False

    def contains(self, face):
        return self.contains_mask(self.mask(face))

    def __contains__(self, face):
        return self.contains(face)

    @cached_property
    def face_masks(self):
        raw = kernels.enumerate_submasks(np.array(self._facets, dtype=np.uint64))
        return tuple(sorted((int(m) for m in raw), key=face_key))

    @cached_property
    def face_index(self):
        return {m: k for k, m in enumerate(self.face_masks)}

    def faces(self):
        return [to_face(m) for m in self.face_masks]

    def require(self, mask, what="coalition"):
        if not self.contains_mask(mask):
            raise InfeasibleCoalitionError(to_face(mask), what)

    # -- links and incidence -----------------------------------------------

    def link_masks(self, smask):
        self.require(smask, "anchor")
        out = set()
        for f in self._facets:
            if smask & ~f == 0:
                out.update(submasks(f & ~smask))
        return sorted(out, key=face_key)

    def link(self, face):
        """Faces A disjoint from ``face`` with ``A | face`` in the complex."""
        return [to_face(m) for m in self.link_masks(self.mask(face))]

    def vertex_link_masks(self, i):
        return self.link_masks(1 << (i - 1))

    def facets_containing_mask(self, mask):
        return [f for f in self._facets if mask & ~f == 0]

    def facets_containing(self, face):
        return [to_face(f) for f in self.facets_containing_mask(self.mask(face))]

    def m_count_mask(self, mask):
        return sum(1 for f in self._facets if mask & ~f == 0)

    def m_count(self, face):
        return self.m_count_mask(self.mask(face))

    # -- rank, purity, matroids --------------------------------------------

    @property
    def rank(self):
        return max(popcount(f) for f in self._facets)

    @property
    def is_pure(self):
        return len({popcount(f) for f in self._facets}) == 1

    @cached_property
    def is_matroid(self):
        if not self.is_pure:
            return False
        bases = set(self._facets)
        for a in self._facets:
            for b in self._facets:
                for x in to_face(a & ~b):
                    reduced = a & ~(1 << (x - 1))
                    if not any(reduced | (1 << (y - 1)) in bases for y in to_face(b & ~a)):
                        return False
        return True

    def generalized_rank(self, face):
        mask = to_mask(face, self._n)
        return max(popcount(mask & f) for f in self._facets)

    @property
    def is_full_simplex(self):
        return self._facets == ((1 << self._n) - 1,)

    def to_dict(self):
        out = {"n": self._n}
        if self._labels:
            out["labels"] = list(self._labels)
        out["facets"] = [list(f) for f in self.facets]
        return out


def from_facets(n, candidate_sets, labels=None):
    return SimplicialComplex.from_facets(n, candidate_sets, labels)


def uniform_matroid(r, n):
    return SimplicialComplex.from_facets(n, combinations(range(1, n + 1), r))


def path_complex(n):
    """The path graph 1-2-...-n as a pure one-dimensional complex."""
    return SimplicialComplex.from_facets(n, [(i, i + 1) for i in range(1, n)])
