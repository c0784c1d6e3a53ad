"""Orbit census against the counting formula, one row per n.

    python3 scripts/orbit_census.py --max-n 12
"""

import argparse
import time

from atype_fillings.combinatorics import catalan
from atype_fillings.orbits import orbit_census, orbit_count


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=10)
    args = parser.parse_args()
    print(f"{'n':>3} {'C_n':>8} {'census':>7} {'formula':>7}  sizes            seconds")
    for n in range(1, args.max_n + 1):
        start = time.perf_counter()
        report = orbit_census(n, bound=args.max_n)
        sizes = ", ".join(f"{k}:{v}" for k, v in report.counts_by_size.items())
        print(f"{n:>3} {catalan(n):>8} {report.total_orbits:>7} {orbit_count(n):>7}  {sizes:<16} "
              f"{time.perf_counter() - start:.2f}")


if __name__ == "__main__":
    main()
