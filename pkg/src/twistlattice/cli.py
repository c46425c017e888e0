"""Command-line front end.

    python3 -m twistlattice <subcommand> [--input FILE] [flags]

Exit codes: 0 success, 2 invalid input (diagnostic names the invariant),
3 computation stopped at a budget, 64 unknown subcommand, 65 malformed input.
"""

import argparse
import json
import sys

from . import bounds
from .cohomology import (almost_abelian_action, finite_action, free_abelian_action,
                         h1_almost_abelian, h1_cardinality_bound, h1_finite, h1_free_abelian,
                         make_almost_abelian)
from .cones import cone_from_generators, cone_from_halfspaces, positive_cone
from .coxeter import analyze_orbit, invariant_generators, root_orbits, roots_from_vectors
from .enumeration import (DEFAULT_MAX_POINTS, DEFAULT_WORD_RADIUS, dirichlet_domain,
                          generated_group, orbit_representatives, vectors_of_square_in_cone,
                          walls_meeting_cone)
from .errors import InvalidParameter, MalformedInput, TwistLatticeError, ValidationError
from .groups import action_from_generators, action_from_table, make_group
from .lattice import inner, make_lattice
from .problem import load_problem
from .reflections import DEFAULT_ITERATION_CAP, chamber_walk, is_in_chamber, wall_system

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_BUDGET = 3
EXIT_UNKNOWN = 64
EXIT_MALFORMED = 65

COMMANDS = ("info", "walk", "enumerate", "domain", "orbits", "walls", "coxeter", "h1", "bounds")


def _require(value, what):
    if value is None:
        raise MalformedInput(f"problem needs {what}")
    return value


def _lattice(p):
    return make_lattice(_require(p.gram, "lattice.gram"))


def _cone(p, L):
    c = _require(p.cone, "cone")
    if "generators" in c:
        return cone_from_generators(L, c["generators"])
    return cone_from_halfspaces(L, c.get("halfspaces", []), c.get("equations", []))


def _positive(p, L):
    return positive_cone(L, _require(p.reference, "reference"))


def _pick(flag, param, default=None):
    if flag is not None:
        return flag
    if param is not None:
        return param
    return default


def _cone_json(c):
    return {"generators": [list(g) for g in c.generators],
            "halfspaces": [list(f) for f in c.halfspaces],
            "equations": [list(f) for f in c.equations]}


def cmd_info(p, args):
    L = _lattice(p)
    out = {"rank": L.rank, "signature": list(L.signature), "det": L.det,
           "gram": [list(r) for r in L.gram]}
    if p.reference is not None:
        out["reference_square"] = inner(L, p.reference, p.reference)
    if p.cone is not None:
        out["cone"] = _cone_json(_cone(p, L))
    return out


def cmd_walk(p, args):
    L = _lattice(p)
    walls = wall_system(L, _require(p.roots, "roots"))
    x = _require(p.point, "point")
    cap = _pick(args.iteration_cap, p.parameters.iteration_cap, DEFAULT_ITERATION_CAP)
    image, word = chamber_walk(x, walls, _positive(p, L), cap)
    return {"start": list(x), "image": list(image), "word": word, "length": len(word),
            "roots": [list(v) for v in walls.vectors], "square": inner(L, image, image),
            "in_chamber": is_in_chamber(image, walls)}


def _square(p, args):
    d = _require(_pick(args.square, p.parameters.square), "a square (--square)")
    if d < 1:
        raise InvalidParameter("square must be a positive integer")
    return d


def cmd_enumerate(p, args):
    L = _lattice(p)
    d = _square(p, args)
    cap = _pick(None, p.parameters.max_points, DEFAULT_MAX_POINTS)
    found = vectors_of_square_in_cone(_cone(p, L), d, L, workers=args.jobs, max_points=cap)
    return {"representatives": [list(v) for v in found]}


def _generated(p, L, args):
    g = _require(p.group, "group")
    radius = _pick(args.word_radius, p.parameters.word_radius, DEFAULT_WORD_RADIUS)
    return generated_group(L, _require(g.get("generators"), "group.generators"), radius), radius


def cmd_domain(p, args):
    L = _lattice(p)
    g, radius = _generated(p, L, args)
    dom = dirichlet_domain(g, _require(p.base_point, "base_point"), _positive(p, L), radius)
    return {"base_point": list(dom.base), "cone": _cone_json(dom.cone),
            "certificate": dom.certificate()}


def cmd_orbits(p, args):
    L = _lattice(p)
    g, radius = _generated(p, L, args)
    d = _square(p, args)
    reps, dom = orbit_representatives(d, g, _require(p.base_point, "base_point"),
                                      _positive(p, L), L, radius, workers=args.jobs)
    return {"square": d, "representatives": [list(v) for v in reps],
            "domain": _cone_json(dom.cone), "certificate": dom.certificate()}


def cmd_walls(p, args):
    L = _lattice(p)
    n = _require(_pick(args.wall_bound, p.parameters.wall_bound), "a wall bound (--wall-bound)")
    if n < 1:
        raise InvalidParameter("wall bound must be a positive integer")
    cap = _pick(None, p.parameters.max_points, DEFAULT_MAX_POINTS)
    walls = walls_meeting_cone(_cone(p, L), n, L, cap)
    return {"wall_bound": n, "walls": [list(v) for v in walls]}


def _finite_action(p, L):
    g = _require(p.group, "group")
    if "table" in g:
        return action_from_table(L, g["table"], g["matrices"])
    return action_from_generators(L, _require(g.get("generators"), "group.generators"))


def cmd_coxeter(p, args):
    L = _lattice(p)
    action = _finite_action(p, L)
    orbits = root_orbits(roots_from_vectors(L, _require(p.roots, "roots")), action)
    reports = [analyze_orbit(o) for o in orbits]
    gens, skipped = invariant_generators(reports)
    return {"group_order": action.group.order, "orbits": [r.to_json() for r in reports],
            "invariant_generators": [[list(r) for r in m] for m in gens],
            "infinite_orbits": len(skipped)}


def _jsonable(x):
    if isinstance(x, (tuple, list)):
        return [_jsonable(y) for y in x]
    return x


def cmd_h1(p, args):
    c = _require(p.cohomology, "cohomology")
    gamma = make_group(c["gamma"])
    kind = c["type"]
    if kind == "finite":
        group = make_group(c["group"])
        G = finite_action(gamma, group, c["action"])
        reps = h1_finite(G)
        extra = {"bound": h1_cardinality_bound(gamma.order, 1, group.order, 0)}
    elif kind == "free_abelian":
        G = free_abelian_action(gamma, c["action"], c["rank"])
        res = h1_free_abelian(G)
        reps = res.representatives
        extra = {"divisors": res.divisors}
    else:
        D = make_almost_abelian(make_group(c["kernel"]), c["rank"], c["shift"],
                                make_group(c["quotient"]), c["q_on_kernel"], c["q_on_lattice"],
                                c["q_kappa"], c["factor"])
        act = c["action"]
        G = almost_abelian_action(gamma, D, act["kernel"], act["lattice"], act["section"])
        res = h1_almost_abelian(G, lift_radius=c["lift_radius"])
        reps = res.representatives
        extra = {"certificate": res.certificate()}
    out = {"type": kind, "gamma_order": gamma.order, "classes": len(reps),
           "representatives": _jsonable(reps)}
    out.update(extra)
    return out


def cmd_bounds(p, args):
    report = bounds.bound_report(args.dimension, args.self_intersection, args.rank)
    return report.to_json()


HANDLERS = {
    "info": cmd_info, "walk": cmd_walk, "enumerate": cmd_enumerate, "domain": cmd_domain,
    "orbits": cmd_orbits, "walls": cmd_walls, "coxeter": cmd_coxeter, "h1": cmd_h1,
    "bounds": cmd_bounds,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise MalformedInput(message)


def _integer(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    return value


def build_parser():
    parser = _Parser(prog="twistlattice", description=__doc__.strip().splitlines()[0])
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", help="JSON problem file")
    parser.add_argument("--square", type=_integer)
    parser.add_argument("--wall-bound", type=_integer)
    parser.add_argument("--word-radius", type=_integer)
    parser.add_argument("--iteration-cap", type=_integer)
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--jobs", type=_integer, default=1,
                        help="worker processes for box scans")
    parser.add_argument("--dimension", type=_integer)
    parser.add_argument("--self-intersection", type=_integer)
    parser.add_argument("--rank", type=_integer)
    return parser


def render(obj, fmt):
    if fmt == "text":
        return "\n".join(f"{k}: {json.dumps(obj[k], sort_keys=True)}" for k in sorted(obj))
    return json.dumps(obj, sort_keys=True)


def _diagnostic(exc, kind):
    return {"error": type(exc).__name__, "kind": kind, "invariant": exc.invariant,
            "message": str(exc)}


def run(argv, out=sys.stdout):
    """Run one subcommand; returns the exit code."""
    argv = list(argv)
    if argv and not argv[0].startswith("-") and argv[0] not in COMMANDS:
        print(json.dumps({"error": "UnknownSubcommand", "kind": "usage",
                          "invariant": f"subcommand is one of {', '.join(COMMANDS)}",
                          "message": f"unknown subcommand {argv[0]!r}"}, sort_keys=True), file=out)
        return EXIT_UNKNOWN
    fmt = "json"
    try:
        args = build_parser().parse_args(argv)
        fmt = args.format
        if args.command == "bounds" and args.input is None:
            problem = None
        else:
            problem = load_problem(_require(args.input, "an input file (--input)"))
        if args.command == "bounds" and args.dimension is None and args.rank is None \
                and args.self_intersection is not None:
            raise MalformedInput("--self-intersection needs --dimension")
        result = HANDLERS[args.command](problem, args)
    except MalformedInput as exc:
        print(render(_diagnostic(exc, "malformed"), fmt), file=out)
        return EXIT_MALFORMED
    except ValidationError as exc:
        print(render(_diagnostic(exc, "validation"), fmt), file=out)
        return EXIT_INVALID
    except TwistLatticeError as exc:
        print(render(_diagnostic(exc, "budget"), fmt), file=out)
        return EXIT_BUDGET
    print(render(result, fmt), file=out)
    return EXIT_OK


def main():
    sys.exit(run(sys.argv[1:]))
