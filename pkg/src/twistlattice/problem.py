"""JSON problem files.

One self-describing object per file. Unknown keys are rejected at every
level so that a typo never silently changes a computation.

Top-level keys:
    description   free text
    lattice       {"gram": matrix}
    reference     vector picking the positive cone component
    roots         list of vectors
    point         vector (start of a chamber walk)
    base_point    vector y of a Dirichlet domain
    cone          {"generators": [...]} or {"halfspaces": [...], "equations": [...]}
    group         {"generators": [...]} or {"table": ..., "matrices": [...]}
    cohomology    H^1 problem, see ``parse_cohomology``
    parameters    {"square", "wall_bound", "word_radius", "iteration_cap", "max_points"}
"""

import json
from dataclasses import dataclass, field

from .errors import MalformedInput

TOP_KEYS = {"description", "lattice", "reference", "roots", "point", "base_point", "cone",
            "group", "cohomology", "parameters"}
PARAMETER_KEYS = {"square", "wall_bound", "word_radius", "iteration_cap", "max_points"}


@dataclass
class Parameters:
    square: int = None
    wall_bound: int = None
    word_radius: int = None
    iteration_cap: int = None
    max_points: int = None


@dataclass
class ProblemFile:
    description: str = ""
    gram: list = None
    reference: list = None
    roots: list = None
    point: list = None
    base_point: list = None
    cone: dict = None
    group: dict = None
    cohomology: dict = None
    parameters: Parameters = field(default_factory=Parameters)


def _keys(obj, allowed, where):
    if not isinstance(obj, dict):
        raise MalformedInput(f"{where} must be an object")
    extra = sorted(set(obj) - set(allowed))
    if extra:
        raise MalformedInput(f"unknown field(s) in {where}: {', '.join(extra)}")


def _int(x, where):
    if isinstance(x, bool) or not isinstance(x, int):
        raise MalformedInput(f"{where} must be an integer")
    return x


def _vector(x, where):
    if not isinstance(x, list):
        raise MalformedInput(f"{where} must be a list of integers")
    return [_int(v, where) for v in x]


def _matrix(x, where):
    if not isinstance(x, list) or not x:
        raise MalformedInput(f"{where} must be a nonempty list of rows")
    return [_vector(row, where) for row in x]


def _vectors(x, where):
    if not isinstance(x, list):
        raise MalformedInput(f"{where} must be a list of vectors")
    return [_vector(v, where) for v in x]


def _element(x, where):
    """Almost abelian element [q, k, [v...]]."""
    if not isinstance(x, list) or len(x) != 3:
        raise MalformedInput(f"{where} entries must be [q, k, [v...]]")
    return (_int(x[0], where), _int(x[1], where), tuple(_vector(x[2], where)))


def parse_cohomology(obj):
    """Validate the shape of an H^1 problem.

    Common keys: ``gamma`` (multiplication table) and ``type``. Then
      finite:          group (table), action (one permutation per Gamma element)
      free_abelian:    rank, action (one matrix per Gamma element)
      almost_abelian:  kernel, rank, shift, quotient, q_on_kernel, q_on_lattice,
                       q_kappa, factor, action {kernel, lattice, section},
                       optional lift_radius
    """
    if not isinstance(obj, dict) or "type" not in obj:
        raise MalformedInput("cohomology needs a type")
    kind = obj["type"]
    common = {"gamma", "type"}
    if kind == "finite":
        _keys(obj, common | {"group", "action"}, "cohomology")
        out = {"group": _matrix(obj.get("group"), "group"),
               "action": _matrix(obj.get("action"), "action")}
    elif kind == "free_abelian":
        _keys(obj, common | {"rank", "action"}, "cohomology")
        acts = obj.get("action")
        if not isinstance(acts, list):
            raise MalformedInput("action must be a list of matrices")
        rank = _int(obj.get("rank"), "rank")
        out = {"rank": rank,
               "action": [_matrix(m, "action") if rank else [] for m in acts]}
    elif kind == "almost_abelian":
        _keys(obj, common | {"kernel", "rank", "shift", "quotient", "q_on_kernel", "q_on_lattice",
                             "q_kappa", "factor", "action", "lift_radius"}, "cohomology")
        act = obj.get("action")
        _keys(act, {"kernel", "lattice", "section"}, "cohomology.action")
        rank = _int(obj.get("rank"), "rank")
        factor = obj.get("factor")
        if not isinstance(factor, list) or not all(isinstance(r, list) for r in factor):
            raise MalformedInput("factor must be a table of [k, [v...]] entries")
        out = {
            "kernel": _matrix(obj.get("kernel"), "kernel"),
            "rank": rank,
            "shift": _vectors(obj.get("shift", []), "shift"),
            "quotient": _matrix(obj.get("quotient", [[0]]), "quotient"),
            "q_on_kernel": _vectors(obj.get("q_on_kernel"), "q_on_kernel"),
            "q_on_lattice": [_matrix(m, "q_on_lattice") if rank else []
                             for m in obj.get("q_on_lattice", [])],
            "q_kappa": _vectors(obj.get("q_kappa"), "q_kappa"),
            "factor": [[(_int(e[0], "factor"), tuple(_vector(e[1], "factor"))) for e in row]
                       for row in factor],
            "action": {k: [[_element(x, f"action.{k}") for x in row] for row in act.get(k, [])]
                       for k in ("kernel", "lattice", "section")},
            "lift_radius": _int(obj.get("lift_radius", 2), "lift_radius"),
        }
    else:
        raise MalformedInput(f"unknown cohomology type {kind!r}")
    out["type"] = kind
    out["gamma"] = _matrix(obj.get("gamma"), "gamma")
    return out


def parse_problem(obj):
    _keys(obj, TOP_KEYS, "problem")
    p = ProblemFile(description=obj.get("description", ""))
    if "lattice" in obj:
        _keys(obj["lattice"], {"gram"}, "lattice")
        p.gram = _matrix(obj["lattice"].get("gram"), "lattice.gram")
    for key in ("reference", "point", "base_point"):
        if key in obj:
            setattr(p, key, _vector(obj[key], key))
    if "roots" in obj:
        p.roots = _vectors(obj["roots"], "roots")
    if "cone" in obj:
        _keys(obj["cone"], {"generators", "halfspaces", "equations"}, "cone")
        p.cone = {k: _vectors(v, f"cone.{k}") for k, v in obj["cone"].items()}
    if "group" in obj:
        _keys(obj["group"], {"generators", "table", "matrices"}, "group")
        g = obj["group"]
        p.group = {}
        if "generators" in g:
            p.group["generators"] = [_matrix(m, "group.generators") for m in g["generators"]]
        if "table" in g:
            p.group["table"] = _matrix(g["table"], "group.table")
            p.group["matrices"] = [_matrix(m, "group.matrices") for m in g.get("matrices", [])]
    if "cohomology" in obj:
        p.cohomology = parse_cohomology(obj["cohomology"])
    if "parameters" in obj:
        _keys(obj["parameters"], PARAMETER_KEYS, "parameters")
        p.parameters = Parameters(**{k: _int(v, f"parameters.{k}")
                                     for k, v in obj["parameters"].items()})
    return p


def load_problem(path):
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{path} is not valid JSON: {exc.msg} at line {exc.lineno}") from None
    return parse_problem(obj)
