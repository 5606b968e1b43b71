"""Two-generator dichotomy on a few groups, with the counting diagnostic per multiset.

    python3 scripts/dichotomy_demo.py sdc(7,3,2) S3 x(C3,C3)
"""

import sys

from invgen.expr import build, concrete
from invgen.lifting import two_gen_dichotomy_check


def main(argv):
    for expr in argv or ["S3", "sdc(7,3,2)", "x(C3,C3)", "sdc(5,4,2)"]:
        g = concrete(build(expr))
        rep = two_gen_dichotomy_check(g)
        print(f"{expr}: |G| = {rep.order}, min prime {rep.min_prime}, d = {rep.d}, d_I = {rep.d_I}")
        if rep.horn == 1:
            print("  first horn: d_I >= min prime")
            continue
        print(f"  second horn: H = C_{rep.q} wr G, d(H) = {rep.h_gaschutz_d}, "
              f"d_I(H) > {rep.d_I} {'certified' if rep.certificate.holds else 'NOT certified'}")
        for row in rep.counting:
            print(f"    classes {row.classes} orders {row.orders}: sum 1/|g_i| = {row.reciprocal_sum}, "
                  f"sum dim C_FG(g_i) = {row.regular_fixed_sum} < |G| = {rep.order}")
        print(f"  report {'passes' if rep.passed else 'FAILS'}")


if __name__ == "__main__":
    main(sys.argv[1:])
