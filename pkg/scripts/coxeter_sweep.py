"""Order of r1 r2 over a grid of (square, pairing) values."""

import sys

from twistlattice.coxeter import order_from_pairings


def main(max_beta=8, max_alpha=4):
    alphas = range(-max_alpha, max_alpha + 1)
    print("beta \\ alpha " + " ".join(f"{a:>4}" for a in alphas))
    for beta in range(-2, -max_beta - 1, -2):
        row = [order_from_pairings(beta, a) for a in alphas]
        print(f"{beta:>12} " + " ".join(f"{'inf' if o == float('inf') else o:>4}" for o in row))


if __name__ == "__main__":
    main(*map(int, sys.argv[1:]))
