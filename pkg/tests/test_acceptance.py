"""Acceptance gate: one test per criterion, each reporting a PASS/FAIL line.

Lines are printed as they happen (visible with -s) and collected for the
terminal summary of every run.
"""

import random
import subprocess
import sys
import time
from pathlib import Path

from conftest import ACCEPTANCE_LINES
from twistlattice import bounds
from twistlattice import intlinalg as la
from twistlattice.cohomology import (cohomology_classes, finite_action, free_abelian_action,
                                     h1_almost_abelian, h1_finite, h1_free_abelian, is_cocycle,
                                     twist_action, untwist)
from twistlattice.cones import cone_from_generators, positive_cone
from twistlattice.coxeter import (INFINITE, analyze_orbit, order_from_pairings, root_orbits,
                                  roots_from_vectors)
from twistlattice.enumeration import (coefficient_bound_holds, dirichlet_domain, generated_group,
                                      orbit_representatives, reduce_to_domain,
                                      vectors_of_square_in_cone, word_equivalent)
from twistlattice.errors import ValidationError
from twistlattice.groups import action_from_generators
from twistlattice.lattice import inner, is_isometry, make_lattice
from twistlattice.reflections import (apply_word, chamber_walk, is_in_chamber, make_root,
                                      reflect, reflection, wall_system)

from corpus import CYCLIC_LATTICE_ACTIONS, cyclic_lattice_action, finite_cases
from oracles import count_classes, cyclic_h1_divisors, pair_order_oracle, pell_box, quadrant_box
from test_cohomology import TWIST_CASES, table, z_times_c2

DATA = Path(__file__).resolve().parent.parent / "data"


class Criterion:
    def __init__(self, number, title, limit):
        self.number, self.title, self.limit = number, title, limit
        self.failures = []

    def check(self, ok, what):
        if not ok:
            self.failures.append(what)

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        if exc is not None:
            self.failures.append(f"raised {type(exc).__name__}: {exc}")
        if self.limit is not None and elapsed >= self.limit:
            self.failures.append(f"took {elapsed:.2f}s, limit {self.limit}s")
        status = "PASS" if not self.failures else "FAIL"
        limit = f" (limit {self.limit}s)" if self.limit is not None else ""
        line = f"[{status}] criterion {self.number}: {self.title}: {elapsed:.2f}s{limit}"
        if self.failures:
            line += " -- " + "; ".join(self.failures[:3])
        ACCEPTANCE_LINES[self.number] = line
        print("\n" + line)
        assert not self.failures, line
        return False


def random_root_samples(rng, count):
    samples = []
    while len(samples) < count:
        n = rng.randint(2, 4)
        gram = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                gram[i][j] = gram[j][i] = rng.randint(-3, 3) if i != j else rng.choice([-4, -2, 2, 4])
        try:
            L = make_lattice(gram)
        except ValidationError:
            continue
        for _ in range(20):
            v = tuple(rng.randint(-2, 2) for _ in range(n))
            try:
                samples.append((L, make_root(L, v)))
                break
            except ValidationError:
                continue
    return samples


def test_criterion_1_reflection_algebra():
    rng = random.Random(1)
    with Criterion(1, "reflection algebra on 150 random roots, rank <= 4", 1.0) as c:
        for L, r in random_root_samples(rng, 150):
            m = reflection(r)
            n = L.rank
            c.check(la.mat_mul(m, m) == la.identity(n), f"r^2 != id for {r.vector}")
            c.check(is_isometry(L, m), f"Gram identity fails for {r.vector}")
            c.check(tuple(la.mat_vec(m, r.vector)) == tuple(-x for x in r.vector),
                    f"r(v) != -v for {r.vector}")


LORENTZ4 = make_lattice([[2, 0, 0, 0], [0, -2, 0, 0], [0, 0, -2, 0], [0, 0, 0, -2]])
H4 = (5, 1, 1, 1)


def test_criterion_2_chamber_walking():
    rng = random.Random(2)
    p = positive_cone(LORENTZ4, H4)
    candidates = [v for v in ((x, a, b, d) for x in range(-3, 4) for a in range(-3, 4)
                              for b in range(-3, 4) for d in range(-3, 4))
                  if inner(LORENTZ4, v, v) == -2 and inner(LORENTZ4, v, H4) > 0]
    with Criterion(2, "500 random chamber walks with <= 12 walls", 10.0) as c:
        walks = moved = 0
        while walks < 500:
            x = tuple(rng.randint(-6, 12) for _ in range(4))
            if inner(LORENTZ4, x, x) <= 0 or inner(LORENTZ4, x, H4) <= 0:
                continue
            walls = wall_system(LORENTZ4, rng.sample(candidates, rng.randint(1, 12)))
            # scramble by a few reflections so most walks have work to do
            for _ in range(rng.randint(0, 8)):
                x = reflect(rng.choice(walls.roots), x)
            image, word = chamber_walk(x, walls, p)
            walks += 1
            moved += bool(word)
            c.check(is_in_chamber(image, walls), f"{x} ended outside the chamber")
            c.check(inner(LORENTZ4, image, image) == inner(LORENTZ4, x, x), f"norm changed for {x}")
            c.check(apply_word(walls, word, x) == image, f"word does not reproduce {image}")
        c.check(moved >= 250, f"only {moved} walks left their start point")


def test_criterion_3_enumeration():
    U = make_lattice([[0, 1], [1, 0]])
    pell = make_lattice([[2, 0], [0, -6]])
    quadrant = cone_from_generators(U, [(1, 0), (0, 1)])
    pell_cone = cone_from_generators(pell, [(3, 1), (3, -1)])
    with Criterion(3, "enumeration matches box oracles for d <= 20", 30.0) as c:
        for d in range(1, 21):
            for cone, oracle in ((quadrant, quadrant_box), (pell_cone, pell_box)):
                found = vectors_of_square_in_cone(cone, d)
                c.check(found == oracle(d), f"d={d}: {found} != {oracle(d)}")
                c.check(all(coefficient_bound_holds(cone, v, d) for v in found),
                        f"coefficient bound fails at d={d}")


def test_criterion_4_dirichlet_domain():
    pell = make_lattice([[2, 0], [0, -6]])
    a = [[2, 3], [1, 2]]
    with Criterion(4, "Pell Dirichlet domain, orbit representatives, Pell solutions", 5.0) as c:
        p = positive_cone(pell, (1, 0))
        g = generated_group(pell, [a])
        dom = dirichlet_domain(g, (1, 0), p)
        c.check(dom.cone.halfspaces == ((1, -3), (1, 3)), f"domain {dom.cone.halfspaces}")
        cert = dom.certificate()
        c.check(cert["stabilized"] and dom.radius <= 3, f"certificate {cert}")
        reps, _ = orbit_representatives(2, g, (1, 0), p)
        c.check(reps == [(1, 0)], f"representatives {reps}")
        v = (1, 0)
        for _ in range(5):
            image, word = reduce_to_domain(v, g, (1, 0), p)
            c.check(image == (1, 0) and word_equivalent(v, (1, 0), g, len(word)),
                    f"{v} not equivalent to (1, 0)")
            v = tuple(la.mat_vec(a, v))


def test_criterion_5_coxeter():
    with Criterion(5, "pair orders, A2 identity, invariance of r_I and C_I", 5.0) as c:
        for beta in (-2, -4, -6):
            for alpha in range(-3, 4):
                got = order_from_pairings(beta, alpha)
                want = pair_order_oracle(beta, alpha)
                c.check(got == (INFINITE if want is None else want),
                        f"order({beta}, {alpha}) = {got}, oracle {want}")
                if alpha >= 0:
                    c.check((got == 2) == (alpha == 0), f"order 2 rule at ({beta}, {alpha})")
                    c.check((got == 3) == (beta == -2 * alpha), f"order 3 rule at ({beta}, {alpha})")
                else:
                    c.check(got == order_from_pairings(beta, -alpha), f"sign symmetry at {alpha}")
                if beta != -2 * alpha and alpha != 0:
                    continue
                # U + <E1, E2>, the swap of E1 and E2 generates the action
                L = make_lattice([[0, 1, 0, 0], [1, 0, 0, 0],
                                  [0, 0, beta, alpha], [0, 0, alpha, beta]])
                swap = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
                act = action_from_generators(L, [swap])
                e1, e2 = (0, 0, 1, 0), (0, 0, 0, 1)
                (orbit,) = root_orbits(roots_from_vectors(L, [e1, e2]), act)
                rep = analyze_orbit(orbit)
                if alpha:
                    r1, r2 = reflection(make_root(L, e1)), reflection(make_root(L, e2))
                    lhs = la.mat_mul(la.mat_mul(r1, r2), r1)
                    rhs = reflection(make_root(L, (0, 0, 1, 1)))
                    c.check(la.mat_key(lhs) == la.mat_key(rhs), f"A2 identity fails at {beta}")
                for m in act.matrices:
                    c.check(tuple(la.mat_vec(m, rep.composite_root)) == rep.composite_root,
                            "C_I not invariant")
                    conj = la.mat_mul(la.mat_mul(m, rep.longest_element), la.inverse(m))
                    c.check(la.mat_key(conj) == la.mat_key(rep.longest_element), "r_I not invariant")


def test_criterion_6_cohomology():
    with Criterion(6, "cohomology against oracles, twisting, Z x C2", 60.0) as c:
        cases = finite_cases()
        c.check(len(cases) >= 30, f"only {len(cases)} finite cases")
        for label, gamma, group, perms in cases:
            c.check(gamma.order <= 6 and group.order <= 24, f"{label} out of range")
            got = len(h1_finite(finite_action(gamma, group, perms)))
            want = count_classes(table(gamma), table(group), perms)
            c.check(got == want, f"{label}: {got} classes, oracle {want}")
        c.check(len(CYCLIC_LATTICE_ACTIONS) >= 10, "fewer than 10 lattice actions")
        for label, order, a in CYCLIC_LATTICE_ACTIONS:
            res = h1_free_abelian(free_abelian_action(*cyclic_lattice_action(order, a)))
            c.check(sorted(res.divisors) == sorted(cyclic_h1_divisors(a)), f"{label}: divisors")
            c.check(all(order % d == 0 for d in res.divisors), f"{label}: not torsion")
        c.check(len(TWIST_CASES) >= 5, "fewer than 5 nonabelian twist cases")
        for label, gamma, group, perms in TWIST_CASES:
            G = finite_action(gamma, group, perms)
            reps = h1_finite(G)
            for rep in reps:
                T = twist_action(G, rep)
                classes = cohomology_classes(T)
                f = untwist(G, rep)
                hit = {next(i for i, k in enumerate(classes) if f(d) in k) for d in reps}
                c.check(len(classes) == len(reps) == len(hit) and all(is_cocycle(T, f(d)) for d in reps),
                        f"{label}: twisting is not a bijection")
        res = h1_almost_abelian(z_times_c2())
        c.check(res.exact and len(res.representatives) == 4, f"Z x C2 gave {len(res.representatives)}")


def test_criterion_7_bounds():
    with Criterion(7, "bounds calculator exact values and dual path", 1.0) as c:
        c.check(bounds.bpf_multiple(2) == 96, "bpf_multiple(2)")
        c.check(bounds.k3_aut_torsion_bound() == 2 ** 968, "k3 bound")
        c.check(bounds.gl_f3_order(2) == 48, "gl_f3_order(2)")
        for args in ((1, 1, 1), (2, 1, 3), (3, 4, 5)):
            c.check(bounds.dual_path_agrees(bounds.bound_report(*args)), f"dual path at {args}")


SUBCOMMANDS = [
    ["info", "--input", DATA / "u_lattice.json"],
    ["walk", "--input", DATA / "u_lattice.json"],
    ["enumerate", "--input", DATA / "pell.json", "--square", "18"],
    ["domain", "--input", DATA / "pell.json"],
    ["orbits", "--input", DATA / "pell.json", "--square", "18"],
    ["walls", "--input", DATA / "u_walls.json"],
    ["coxeter", "--input", DATA / "a2_coxeter.json"],
    ["h1", "--input", DATA / "h1_z_times_c2.json"],
    ["bounds", "--dimension", "2", "--self-intersection", "1", "--rank", "3"],
]


def _cli(args):
    cmd = [sys.executable, "-m", "twistlattice"] + [str(a) for a in args]
    return subprocess.run(cmd, capture_output=True).stdout


def test_criterion_8_determinism():
    with Criterion(8, "CLI output byte-identical across runs and --jobs", None) as c:
        for args in SUBCOMMANDS:
            runs = [_cli(args) for _ in range(3)] + [_cli(args + ["--jobs", "2"])]
            c.check(runs[0] and all(r == runs[0] for r in runs), f"{args[0]} output varies")
