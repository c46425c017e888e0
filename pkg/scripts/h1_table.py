"""Class counts of H^1 for small finite groups under every action up to a cap."""

import sys

from twistlattice.cohomology import finite_action, h1_finite
from twistlattice.groups import (cyclic, dihedral, homomorphisms_to_automorphisms, quaternion,
                                 symmetric)

GAMMAS = {"C2": cyclic(2), "C3": cyclic(3), "V4": dihedral(2)}
COEFFS = {"C3": cyclic(3), "V4": dihedral(2), "S3": symmetric(3), "D4": dihedral(4),
          "Q8": quaternion()}


def main(per_pair=6):
    for gname, gamma in GAMMAS.items():
        for cname, group in COEFFS.items():
            homs = homomorphisms_to_automorphisms(gamma, group)[:per_pair]
            counts = [len(h1_finite(finite_action(gamma, group, h))) for h in homs]
            print(f"{gname:>3} on {cname:<3} actions={len(homs):2d} classes={counts}")


if __name__ == "__main__":
    main(*map(int, sys.argv[1:]))
