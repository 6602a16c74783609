#!/usr/bin/env python3
"""Tabulate the leading weight space of rectangular one-column blocks.

For each charge kappa_c and zero-node count a0, prints the graded
dimension of the row-initial residue weight space of the rectangle
(a0 ** (kappa_c + a0)) together with its extreme degrees.  The dimension
is (q + 1/q) ** (a0 // 2) with a unique tableau at each extreme.
"""

import argparse

from klrblocks.cartan import CartanType
from klrblocks.graded import gdim_specht_weight
from klrblocks.tableaux import initial_tableau, residue_sequence


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-kappa", type=int, default=2)
    parser.add_argument("--max-a0", type=int, default=6)
    args = parser.parse_args()

    C = CartanType.C
    for kappa_c in range(args.max_kappa + 1):
        for a0 in range(1, args.max_a0 + 1):
            rho = ((a0,) * (kappa_c + a0),)
            iword = residue_sequence(initial_tableau(rho), C, (kappa_c,))
            poly = gdim_specht_weight(rho, C, (kappa_c,), iword)
            print(f"kappa_c={kappa_c} a0={a0} "
                  f"dim={poly.eval_at_1():4d}  gdim={poly}")


if __name__ == "__main__":
    main()
