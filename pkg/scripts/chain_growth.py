#!/usr/bin/env python3
"""Strict ideal-chain growth as the number of null generators grows.

With infinitely many null generators the algebra satisfies neither chain
condition; at every finite truncation that shows up as strict chains of
full length z.  This script prints the dimension profiles of both chain
families for a fixed non-degenerate part and z = 1..max_z, so the
unbounded growth is visible across truncations.
"""

import argparse

from cliffideals import Signature, ascending_chain, descending_chain


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=1, help="+1-squaring generators")
    ap.add_argument("--q", type=int, default=0, help="-1-squaring generators")
    ap.add_argument("--max-z", type=int, default=6, help="largest truncation")
    args = ap.parse_args()

    print(f"non-degenerate part: ({args.p},{args.q}), truncations z = 1..{args.max_z}")
    print(f"{'z':>3} {'dim':>6}  descending dims            ascending dims")
    for z in range(1, args.max_z + 1):
        sig = Signature(args.p, args.q, z)
        down = [ideal.dim for ideal in descending_chain(sig, z)]
        up = [ideal.dim for ideal in ascending_chain(sig, z)]
        print(f"{z:>3} {sig.dim:>6}  {str(down):<26} {up}")
    print(
        "\nEvery chain is strictly monotone and one step longer than at the"
        "\nprevious truncation: no finite bound works for all z."
    )


if __name__ == "__main__":
    main()
