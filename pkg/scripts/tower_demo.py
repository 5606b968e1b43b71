"""Tower levels: structured order, splitting prime, and the matching d_I bounds.

    python3 scripts/tower_demo.py --d 2 --p 3 --l 2
"""

import argparse

from invgen.constructions import gaschutz_d, tower_group
from invgen.lifting import structured_dI_lower_bound, structured_dI_upper_bound


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--d", type=int, default=2)
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--l", type=int, default=2)
    args = ap.parse_args()
    s = tower_group(args.d, args.p, args.l)
    target = args.l * (args.d - 1) + 1
    lower = structured_dI_lower_bound(s, target - 1)
    upper = structured_dI_upper_bound(s)
    print(f"{s.name}: order {s.order}")
    print(f"  splitting primes {s.splitting_primes}, min prime {s.min_prime}, derived length {s.derived_length}")
    print(f"  d = {gaschutz_d(s)}")
    print(f"  d_I > {target - 1}: {'certified' if lower.holds else 'NOT certified'} "
          f"({len(lower.table)} invariably generating tuples of the top, all obstructed)")
    print(f"  d_I <= {upper.bound} (explicit sequence: {len(upper.top_sequence)} top elements "
          f"+ {upper.module_generation_count} socle generators)")


if __name__ == "__main__":
    main()
