"""JSON file formats for complexes, games, coefficients and distributions.

Faces are lists of 1-based vertex ids; when the complex carries labels, the
labels are accepted too. Numbers may be JSON numbers or strings like ``"1/3"``
(read as exact fractions).
"""

import json
import os

from scgt.attribution import TrackabilityDeclaration
from scgt.complex import SimplicialComplex
from scgt.errors import InputError
from scgt.games import make_worth
from scgt.numeric import parse_number, to_json_exact, to_json_number
from scgt.values import FacetDistribution, QuasiValue


def _read(source):
    if isinstance(source, dict) or isinstance(source, list):
        return source
    try:
        with open(source) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: invalid JSON ({exc})") from None


def _field(doc, key, where):
    try:
        return doc[key]
    except (KeyError, TypeError):
        raise InputError(f"{where}: missing field {key!r}") from None


def _face(complex_or_labels, raw, n=None):
    labels = complex_or_labels.labels if isinstance(complex_or_labels, SimplicialComplex) else complex_or_labels
    if isinstance(complex_or_labels, SimplicialComplex):
        n = complex_or_labels.n
    out = []
    for x in raw:
        if isinstance(x, str):
            if labels and x in labels:
                out.append(list(labels).index(x) + 1)
                continue
            if x.isdigit():
                out.append(int(x))
                continue
            raise InputError(f"unknown vertex label {x!r}")
        if isinstance(x, bool) or not isinstance(x, int):
            raise InputError(f"vertex ids must be integers, got {x!r}")
        out.append(x)
    return out


def load_complex(source):
    """Read ``{"n": ..., "labels": [...], "facets": [[...], ...]}``; canonicalizes and reduces."""
    doc = _read(source)
    where = source if isinstance(source, (str, os.PathLike)) else "complex"
    n = _field(doc, "n", where)
    if isinstance(n, bool) or not isinstance(n, int):
        raise InputError(f"{where}: n must be an integer")
    labels = doc.get("labels")
    facets = [_face(labels, f, n) for f in _field(doc, "facets", where)]
    return SimplicialComplex.from_facets(n, facets, labels)


def complex_to_json(complex):
    return json.dumps(complex.to_dict(), indent=2) + "\n"


def _numbers(x, where):
    try:
        return parse_number(x)
    except (TypeError, ValueError, ZeroDivisionError):
        raise InputError(f"{where}: not a number: {x!r}") from None


def load_game(source, complex=None):
    """Read ``{"complex": <path or inline>, "worth": [{"face": [...], "value": x}, ...]}``."""
    doc = _read(source)
    where = source if isinstance(source, (str, os.PathLike)) else "game"
    if complex is None:
        ref = _field(doc, "complex", where)
        if isinstance(ref, str) and isinstance(source, (str, os.PathLike)) and not os.path.isabs(ref):
            ref = os.path.join(os.path.dirname(os.fspath(source)), ref)
        complex = load_complex(ref)
    pairs = [(_face(complex, _field(e, "face", where)), _numbers(_field(e, "value", where), where)) for e in _field(doc, "worth", where)]
    return make_worth(complex, pairs)


def game_to_dict(v, exact=False):
    num = to_json_exact if exact else to_json_number
    return {"complex": v.complex.to_dict(), "worth": [{"face": list(f), "value": num(x)} for f, x in v.items() if f]}


def _quasi(complex, doc, where):
    player = _field(doc, "player", where)
    if isinstance(player, str):
        player = _face(complex, [player])[0]
    coeffs = {}
    for e in _field(doc, "coefficients", where):
        face = tuple(_face(complex, _field(e, "face", where)))
        coeffs[face] = coeffs.get(face, 0) + _numbers(_field(e, "p", where), where)
    lam = doc.get("lambda")
    return QuasiValue.from_faces(complex, player, coeffs, None if lam is None else _numbers(lam, where))


def load_coefficients(source, complex):
    """Read one coefficient object, a list of them, or ``{"values": [...]}``; returns ``{player: QuasiValue}``."""
    doc = _read(source)
    where = source if isinstance(source, (str, os.PathLike)) else "coefficients"
    if isinstance(doc, dict) and "values" in doc:
        doc = doc["values"]
    docs = doc if isinstance(doc, list) else [doc]
    out = {}
    for d in docs:
        q = _quasi(complex, d, where)
        out[q.player] = q
    return out


def quasi_to_dict(q, exact=False):
    num = to_json_exact if exact else to_json_number
    return {
        "player": q.player,
        "lambda": num(q.lam),
        "coefficients": [{"face": list(f), "p": num(p)} for f, p in q.as_faces().items()],
    }


def load_distribution(source, complex):
    """Read ``{"weights": [{"facet": [...], "P": x}, ...]}``; unlisted facets get zero."""
    doc = _read(source)
    where = source if isinstance(source, (str, os.PathLike)) else "distribution"
    weights = {}
    for e in _field(doc, "weights", where):
        weights[tuple(_face(complex, _field(e, "facet", where)))] = _numbers(_field(e, "P", where), where)
    return FacetDistribution.from_faces(complex, weights)


def distribution_to_dict(P, exact=False):
    num = to_json_exact if exact else to_json_number
    return {"weights": [{"facet": list(f), "P": num(w)} for f, w in P.as_faces().items()]}


def load_trackable(source):
    """Trackability files share the complex layout; ``facets`` lists the maximal trackable sets.

    Returns ``(declaration, n, labels)``.
    """
    doc = _read(source)
    where = source if isinstance(source, (str, os.PathLike)) else "trackable"
    n = _field(doc, "n", where)
    labels = doc.get("labels")
    sets = [_face(labels, f, n) for f in _field(doc, "facets", where)]
    return TrackabilityDeclaration(sets), n, labels
