"""Explicit effective constants as exact integers.

Every value can be recomputed along a second arithmetic path (naive
repeated multiplication instead of square-and-multiply) for cross-checking.
"""

from dataclasses import dataclass, field
from math import factorial

from .errors import InvalidParameter

QUOTED = "formula quoted"
ASSEMBLED = "artifact-assembled"


def power_by_squaring(base, exp):
    out = 1
    while exp:
        if exp & 1:
            out *= base
        base *= base
        exp >>= 1
    return out


def power_naive(base, exp):
    out = 1
    for _ in range(exp):
        out *= base
    return out


def _check(n, name):
    if not isinstance(n, int) or n < 1:
        raise InvalidParameter(f"{name} must be a positive integer")


def bpf_multiple(n):
    """m = 2 (n+2)! n, the multiple of an ample class assumed base point free."""
    _check(n, "dimension")
    return 2 * factorial(n + 2) * n


def cyclic_subgroup_bound(n, ln, power=power_by_squaring):
    _check(n, "dimension")
    _check(ln, "self-intersection")
    m = bpf_multiple(n)
    return power(power(m, n) * ln, n + 1)


def aut_group_bound(n, ln, power=power_by_squaring):
    _check(n, "dimension")
    _check(ln, "self-intersection")
    m = bpf_multiple(n)
    return power(power(m, n) * ln, 16 * n * power(3, n))


def k3_aut_torsion_bound(power=power_by_squaring):
    return power(4, power(22, 2))


def gl_f3_order(rho, power=power_by_squaring):
    """|GL_rho(F_3)|; bounds the order of finite subgroups of GL_rho(Z)."""
    _check(rho, "rank")
    q = power(3, rho)
    out = 1
    for i in range(rho):
        out *= q - power(3, i)
    return out


@dataclass(frozen=True)
class Bound:
    name: str
    value: int
    provenance: str
    formula: str

    def to_json(self):
        return {"name": self.name, "value": self.value, "digits": len(str(self.value)),
                "provenance": self.provenance, "formula": self.formula}


@dataclass
class BoundReport:
    dimension: int = None
    self_intersection: int = None
    rank: int = None
    entries: list = field(default_factory=list)

    def value(self, name):
        return next(b.value for b in self.entries if b.name == name)

    def to_json(self):
        return {
            "dimension": self.dimension,
            "self_intersection": self.self_intersection,
            "rank": self.rank,
            "bounds": [b.to_json() for b in self.entries],
            "dual_path_agrees": dual_path_agrees(self),
        }


def _entries(dimension, self_intersection, rank, power):
    out = []
    if dimension is not None:
        n = dimension
        out.append(Bound("bpf_multiple", bpf_multiple(n), QUOTED, "m = 2 (n+2)! n"))
        if self_intersection is not None:
            ln = self_intersection
            out.append(Bound("cyclic_subgroup_bound", cyclic_subgroup_bound(n, ln, power), QUOTED,
                             "(m^n L^n)^(n+1)"))
            out.append(Bound("aut_group_bound", aut_group_bound(n, ln, power), QUOTED,
                             "(m^n L^n)^(16 n 3^n)"))
    out.append(Bound("k3_aut_torsion_bound", k3_aut_torsion_bound(power), QUOTED, "4^(22^2)"))
    if rank is not None:
        out.append(Bound("gl_f3_order", gl_f3_order(rank, power), ASSEMBLED,
                         "prod_{i<rho} (3^rho - 3^i)"))
    return out


def bound_report(dimension=None, self_intersection=None, rank=None):
    return BoundReport(dimension, self_intersection, rank,
                       _entries(dimension, self_intersection, rank, power_by_squaring))


def dual_path_agrees(report):
    """Recompute every entry with naive powers and compare exactly."""
    again = _entries(report.dimension, report.self_intersection, report.rank, power_naive)
    return [b.value for b in again] == [b.value for b in report.entries]
