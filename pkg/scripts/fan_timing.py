"""Runtime growth of the permutation-only orbit-size algorithm on fan permutations.

The identity permutation of length n is the fan at vertex n+2.  Prints the best
of several timings per n and the ratio between successive doublings.

    python3 scripts/fan_timing.py --sizes 500 1000 2000 4000 8000
"""

import argparse
import timeit

from atype_fillings.combinatorics import Permutation312
from atype_fillings.orbits import orbit_size


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[500, 1000, 2000, 4000, 8000])
    parser.add_argument("--repeat", type=int, default=7)
    args = parser.parse_args()
    prev = None
    for n in args.sizes:
        p = Permutation312(tuple(range(1, n + 1)))
        best = min(timeit.repeat(lambda: orbit_size(p), number=3, repeat=args.repeat)) / 3
        ratio = f"{best / prev:.2f}" if prev else "-"
        print(f"n={n:>6}  {best * 1000:8.2f} ms  ratio {ratio}")
        prev = best


if __name__ == "__main__":
    main()
