"""Multi-touch attribution on a complex of trackable channel sets.

Journeys are read from CSV, the feasible coalitions come from a trackability
declaration, and the worth of a coalition T is the number of conversions whose
touched channels are all in T.
"""

import csv
import json
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from scgt import fixtures, kernels
from scgt.complex import SimplicialComplex, to_face, to_mask
from scgt.errors import InputError, PurityRequiredError
from scgt.games import WorthFunction
from scgt.numeric import to_json_number
from scgt.polytope import influence
from scgt.values import FacetDistribution, GroupValue, reducible_group_value

REPORT_DIGITS = 9
METHODS = ("shapley-reduce", "quasi")


@dataclass(frozen=True)
class JourneyRecord:
    user_id: str
    channels: tuple
    converted: bool

    @property
    def mask(self):
        return to_mask(self.channels)


@dataclass(frozen=True)
class TrackabilityDeclaration:
    maximal_trackable: list

    def __post_init__(self):
        if not self.maximal_trackable:
            raise InputError("a trackability declaration needs at least one channel set")


def _resolve(token, n, labels):
    token = token.strip()
    if labels and token in labels:
        return list(labels).index(token) + 1
    if token.isdigit() and 1 <= int(token) <= n:
        return int(token)
    raise InputError(f"unknown channel {token!r}")


def ingest(csv_path, n, labels=None):
    """Read ``user_id,channels,converted`` rows; channels are ``;``-separated labels or indices."""
    records = []
    with open(csv_path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None:
            return records
        if [h.strip() for h in header] != ["user_id", "channels", "converted"]:
            raise InputError(f"line 1: expected header user_id,channels,converted, got {','.join(header)}")
        for row in reader:
            line = reader.line_num
            if not row or all(not c.strip() for c in row):
                continue
            if len(row) != 3:
                raise InputError(f"line {line}: expected 3 fields, got {len(row)}")
            user, chans, conv = (c.strip() for c in row)
            tokens = [t for t in chans.split(";") if t.strip()]
            if not tokens:
                raise InputError(f"line {line}: a journey must touch at least one channel")
            try:
                channels = tuple(sorted({_resolve(t, n, labels) for t in tokens}))
            except InputError as exc:
                raise InputError(f"line {line}: {exc}") from None
            if conv not in ("0", "1"):
                raise InputError(f"line {line}: converted must be 0 or 1, got {conv!r}")
            records.append(JourneyRecord(user, channels, conv == "1"))
    return records


def build_complex(decl, n, labels=None):
    """Complex of trackable sets; members may be channel labels or 1-based indices."""
    sets = [[_resolve(str(x), n, labels) if isinstance(x, str) else x for x in s] for s in decl.maximal_trackable]
    return SimplicialComplex.from_facets(n, sets, labels)


class WorthBuild(NamedTuple):
    worth: WorthFunction
    dropped: int  # converted journeys whose channel set is not trackable
    counted: int  # converted journeys that enter the worth function


def build_worth(records, complex):
    conversions = Counter(r.mask for r in records if r.converted)
    kept = {m: c for m, c in conversions.items() if complex.contains_mask(m)}
    dropped = sum(conversions.values()) - sum(kept.values())
    faces = [m for m in complex.face_masks if m]
    if kept:
        masks = np.array(list(kept), dtype=np.uint64)
        counts = np.array(list(kept.values()), dtype=np.float64)
        sums = kernels.subset_sums(np.array(faces, dtype=np.uint64), masks, counts)
    else:
        sums = np.zeros(len(faces))
    v = WorthFunction(complex, {m: float(x) for m, x in zip(faces, sums)})
    return WorthBuild(v, dropped, sum(kept.values()))


@dataclass
class AttributionReport:
    method: str
    complex: SimplicialComplex
    per_channel: dict  # vertex -> value
    distribution_used: FacetDistribution = None
    rates: dict = field(default_factory=dict)  # vertex -> lambda_i
    pure: bool = True
    dropped: int = 0
    counted: int = 0
    total: float = 0.0
    target: float = None

    @property
    def residual(self):
        return None if self.target is None else abs(self.total - self.target)

    def to_dict(self, digits=REPORT_DIGITS):
        cx = self.complex
        r = lambda x: None if x is None else to_json_number(x, digits)
        out = {
            "method": self.method,
            "channels": [
                {"vertex": x, "label": cx.label(x), "value": r(self.per_channel[x]), "lambda": r(self.rates.get(x, 0))}
                for x in sorted(self.per_channel)
            ],
            "distribution": None,
            "diagnostics": {
                "pure": self.pure,
                "dropped_journeys": self.dropped,
                "counted_conversions": self.counted,
                "total": r(self.total),
                "target": r(self.target),
                "residual": r(self.residual),
            },
        }
        if self.distribution_used is not None:
            out["distribution"] = [
                {"facet": list(to_face(f)), "labels": [cx.label(x) for x in to_face(f)], "P": r(w)}
                for f, w in self.distribution_used.weights.items()
            ]
        return out

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2) + "\n"


def resolve_distribution(complex, v, spec):
    if isinstance(spec, FacetDistribution):
        return spec
    if spec in (None, "uniform"):
        return FacetDistribution.uniform(complex, exact=v.is_exact)
    if spec == "proportional":
        return FacetDistribution.proportional(complex, v)
    raise InputError(f"unknown distribution spec {spec!r}; use uniform, proportional or a distribution")


def attribute(complex, v, method="shapley-reduce", dist="uniform", coefficients=None, dropped=0, counted=0):
    """Attribute the worth ``v`` to channels.

    ``shapley-reduce`` weights per-facet Shapley values by ``dist``;
    ``quasi`` evaluates user-supplied link coefficients (a :class:`GroupValue`
    or a ``{vertex: QuasiValue}`` mapping covering every channel).
    """
    if method == "shapley-reduce":
        if not complex.is_pure:
            sizes = sorted({len(f) for f in complex.facets})
            raise PurityRequiredError(
                f"shapley-reduce needs a pure complex but facet sizes are {sizes}; "
                "switch to --method quasi with explicit coefficients or amend the trackable sets"
            )
        P = resolve_distribution(complex, v, dist)
        values = reducible_group_value(complex, P, v)
        rates = {x: influence(complex, P, (x,)) for x in values}
        target = sum((w * v.value_mask(f) for f, w in P.weights.items()), 0)
        return AttributionReport(
            method, complex, values, P, rates, True, dropped, counted, sum(values.values(), 0), target
        )
    if method == "quasi":
        if coefficients is None:
            raise InputError("the quasi method needs explicit link coefficients")
        per_player = coefficients.per_player if isinstance(coefficients, GroupValue) else dict(coefficients)
        g = GroupValue(complex, per_player)
        values = {x: 0 for x in range(1, complex.n + 1)}
        values.update(g.evaluate(v))
        return AttributionReport(
            method, complex, values, None, g.rates, complex.is_pure, dropped, counted, sum(values.values(), 0)
        )
    raise InputError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")


def prototype_fixture(variant=False):
    cx = fixtures.prototype(variant)
    return cx, cx.labels


def synthetic_journeys(path, complex, rows, seed=0, infeasible_rate=0.1, conversion_rate=0.4):
    """Write a reproducible journey CSV; a share of journeys touch non-trackable channel sets."""
    rng = random.Random(seed)
    labels = complex.labels or [str(x) for x in range(1, complex.n + 1)]
    faces = [m for m in complex.face_masks if m]
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["user_id", "channels", "converted"])
        for k in range(rows):
            if rng.random() < infeasible_rate:
                m = rng.randrange(1, 1 << complex.n)
            else:
                m = rng.choice(faces)
            chans = ";".join(labels[x - 1] for x in to_face(m))
            w.writerow([f"u{k + 1}", chans, int(rng.random() < conversion_rate)])
    return path
