"""Point-level orbits of the Kalman map against the combinatorial orbit size.

For each filling, samples variety points from its augmentation, iterates
``kalman_point_step`` up to n+2 times and reports the first return time next to
``orbit_size``.  This is a report: a sample need not be generic, and for odd n
the map does not preserve X_n at all (the return time is then reported as none).

    python3 scripts/point_orbits.py --max-n 6 --samples 20
"""

import argparse
import random
from collections import Counter

from atype_fillings.algebra import aug_value, kalman_point_step
from atype_fillings.augmentation import augmentation, sample_variety_point
from atype_fillings.combinatorics import enumerate_312
from atype_fillings.orbits import orbit_size


def return_time(z, limit: int):
    cur = z
    for k in range(1, limit + 1):
        cur = kalman_point_step(cur)
        if aug_value(cur) != 0:
            return None
        if cur == z:
            return k
    return None


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=6)
    parser.add_argument("--samples", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    rng = random.Random(args.seed)
    for n in range(1, args.max_n + 1):
        tally = Counter()
        for p in enumerate_312(n):
            a = augmentation(p)
            expected = orbit_size(p)
            for _ in range(args.samples):
                k = return_time(sample_variety_point(p, rng=rng, aug=a), n + 2)
                tally["left variety" if k is None else ("equals orbit size" if k == expected else f"returns at {k}")] += 1
        print(f"n={n}: " + ", ".join(f"{key}: {v}" for key, v in sorted(tally.items())))


if __name__ == "__main__":
    main()
