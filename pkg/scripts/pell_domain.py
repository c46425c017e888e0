"""Dirichlet domain and orbit representatives for 2a^2 - 6b^2 under its automorph.

    python3 scripts/pell_domain.py [max_square]
"""

import sys

from twistlattice.cones import positive_cone
from twistlattice.enumeration import dirichlet_domain, generated_group, orbit_representatives
from twistlattice.lattice import make_lattice


def main(max_square=30):
    L = make_lattice([[2, 0], [0, -6]])
    p = positive_cone(L, (1, 0))
    g = generated_group(L, [[[2, 3], [1, 2]]])
    dom = dirichlet_domain(g, (1, 0), p)
    print("domain halfspaces:", dom.cone.halfspaces, "radius", dom.radius)
    for d in range(2, max_square + 1, 2):
        reps, _ = orbit_representatives(d, g, (1, 0), p)
        if reps:
            print(f"d={d:3d}  {reps}")


if __name__ == "__main__":
    main(*map(int, sys.argv[1:]))
