"""Command line interface: ``scgt <group> <command>``.

Exit codes: 0 success, 2 input error, 3 infeasibility or precondition error,
4 verification failure.
"""

import argparse
import json
import sys

from scgt import fixtures, io, verify
from scgt.attribution import METHODS, attribute, build_complex, build_worth, ingest
from scgt.complex import to_face
from scgt.errors import InputError, ScgtError
from scgt.games import zero_game
from scgt.numeric import get_tolerance, parse_number, to_json_number
from scgt.polytope import membership
from scgt.values import (
    FacetDistribution,
    GroupValue,
    check_probabilistic_efficiency,
    eval_quasi,
    facet_decompose,
    group_value_from_distribution,
    reducible_group_value,
)


def _emit(doc, out=None):
    text = json.dumps(doc, indent=2) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_complex_info(args):
    cx = io.load_complex(args.complex)
    doc = cx.to_dict()
    doc.update(
        rank=cx.rank,
        pure=cx.is_pure,
        matroid=cx.is_matroid,
        face_count=len(cx.face_masks),
        link_sizes={str(x): len(cx.vertex_link_masks(x)) for x in cx.vertices},
    )
    _emit(doc)


def _game(args, cx):
    return io.load_game(args.game, cx) if args.game else zero_game(cx)


def cmd_values_quasi(args):
    cx = io.load_complex(args.complex)
    v = _game(args, cx)
    qs = io.load_coefficients(args.coeffs, cx)
    _emit({"values": [
        {"player": x, "label": cx.label(x), "lambda": to_json_number(q.lam), "value": to_json_number(eval_quasi(q, v))}
        for x, q in sorted(qs.items())
    ]})


def _distribution(spec, cx, v):
    if spec in (None, "uniform"):
        return FacetDistribution.uniform(cx, exact=v.is_exact)
    if spec == "proportional":
        return FacetDistribution.proportional(cx, v)
    return io.load_distribution(spec, cx)


def cmd_values_reduce(args):
    cx = io.load_complex(args.complex)
    v = _game(args, cx)
    P = _distribution(args.dist, cx, v)
    values = reducible_group_value(cx, P, v)
    g = group_value_from_distribution(cx, P)
    total = sum(values.values(), 0)
    target = sum((w * v.value_mask(f) for f, w in P.weights.items()), 0)
    _emit({
        "values": [{"player": x, "label": cx.label(x), "value": to_json_number(values[x])} for x in sorted(values)],
        "distribution": io.distribution_to_dict(P)["weights"],
        "efficiency": {
            "total": to_json_number(total),
            "target": to_json_number(target),
            "residual": to_json_number(abs(total - target)),
            "holds": check_probabilistic_efficiency(g, P, v),
        },
    })


def cmd_values_decompose(args):
    cx = io.load_complex(args.complex)
    out = []
    for x, q in sorted(io.load_coefficients(args.coeffs, cx).items()):
        dec = facet_decompose(q)
        out.append({
            "player": x,
            "lambda": to_json_number(q.lam),
            "weights": [{"facet": list(f), "P": to_json_number(w)} for f, w in dec.as_faces().items()],
            "local": [
                {
                    "facet": list(to_face(lv.facet)),
                    "coefficients": [{"face": list(t), "p": to_json_number(p)} for t, p in lv.as_faces().items()],
                }
                for lv in dec.local
            ],
        })
    _emit({"decompositions": out})


def _parse_point(text):
    try:
        return [parse_number(x) if "/" in x else float(x) for x in text.split(",")]
    except ValueError:
        raise InputError(f"cannot parse point {text!r}; use comma-separated decimals") from None


def cmd_polytope_member(args):
    cx = io.load_complex(args.complex)
    P, res = membership(cx, _parse_point(args.point))
    _emit({
        "member": P is not None,
        "distribution": None if P is None else io.distribution_to_dict(P)["weights"],
        "residual": to_json_number(res) if res != float("inf") else None,
    })


def cmd_attribution_run(args):
    decl, n, labels = io.load_trackable(args.trackable)
    cx = build_complex(decl, n, labels)
    records = ingest(args.journeys, n, labels)
    built = build_worth(records, cx)
    coefficients = None
    if args.method == "quasi":
        if not args.coeffs:
            raise InputError("--method quasi needs --coeffs")
        coefficients = GroupValue(cx, io.load_coefficients(args.coeffs, cx))
    dist = args.dist
    if dist not in ("uniform", "proportional"):
        dist = io.load_distribution(dist, cx)
    report = attribute(cx, built.worth, args.method, dist, coefficients, built.dropped, built.counted)
    text = report.to_json()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_verify(args):
    cx = fixtures.get_fixture(args.fixture) if args.complex is None else io.load_complex(args.complex)
    results = verify.run(cx, seed=args.seed, rounds=args.rounds)
    for r in results:
        print(r.line())
    failed = [r for r in results if not r.ok]
    print(f"{len(results) - len(failed)}/{len(results)} suites passed or skipped")
    return 4 if failed else 0


def build_parser():
    p = argparse.ArgumentParser(prog="scgt", description="Cooperative games on simplicial complexes.")
    sub = p.add_subparsers(dest="group", required=True)

    g = sub.add_parser("complex", help="inspect complexes").add_subparsers(dest="command", required=True)
    c = g.add_parser("info", help="facets, rank, purity, matroid verdict, face count")
    c.add_argument("complex")
    c.set_defaults(func=cmd_complex_info)

    g = sub.add_parser("values", help="individual and group values").add_subparsers(dest="command", required=True)
    c = g.add_parser("quasi", help="evaluate link coefficients on a game")
    c.add_argument("--complex", required=True)
    c.add_argument("--game")
    c.add_argument("--coeffs", required=True)
    c.set_defaults(func=cmd_values_quasi)
    c = g.add_parser("reduce", help="facet-weighted Shapley group value")
    c.add_argument("--complex", required=True)
    c.add_argument("--game")
    c.add_argument("--dist", default="uniform", help="uniform, proportional or a distribution JSON file")
    c.set_defaults(func=cmd_values_reduce)
    c = g.add_parser("decompose", help="facet weights and local values of link coefficients")
    c.add_argument("--complex", required=True)
    c.add_argument("--coeffs", required=True)
    c.set_defaults(func=cmd_values_decompose)

    g = sub.add_parser("polytope", help="facet polytope queries").add_subparsers(dest="command", required=True)
    c = g.add_parser("member", help="convex-combination certificate for a point")
    c.add_argument("--complex", required=True)
    c.add_argument("--point", required=True)
    c.set_defaults(func=cmd_polytope_member)

    g = sub.add_parser("attribution", help="multi-touch attribution").add_subparsers(dest="command", required=True)
    c = g.add_parser("run", help="attribute conversions in a journey log")
    c.add_argument("--journeys", required=True)
    c.add_argument("--trackable", required=True)
    c.add_argument("--method", choices=METHODS, default="shapley-reduce")
    c.add_argument("--dist", default="uniform", help="uniform, proportional or a distribution JSON file")
    c.add_argument("--coeffs", help="coefficient JSON for --method quasi")
    c.add_argument("--out")
    c.set_defaults(func=cmd_attribution_run)

    c = sub.add_parser("verify", help="run the property suites on a fixture")
    c.add_argument("--fixture", default="prototype", choices=sorted(fixtures.FIXTURES))
    c.add_argument("--complex", help="complex JSON to verify instead of a fixture")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--rounds", type=int, default=50)
    c.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        get_tolerance()
    except ValueError:
        print("scgt: SCGT_TOLERANCE is not a number", file=sys.stderr)
        return 2
    try:
        return args.func(args) or 0
    except ScgtError as exc:
        print(f"scgt: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
