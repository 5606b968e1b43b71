"""Print d, d_I, Frattini order and derived length for every catalog group."""

from invgen import catalog as cat
from invgen.gen import d_I, d_min_generators


def main():
    print(f"{'group':28s} {'order':>5s} {'d':>2s} {'d_I':>3s} {'|Frat|':>6s} {'dl':>2s}")
    for g in cat.catalog():
        print(f"{g.name:28s} {g.order:5d} {d_min_generators(g):2d} {d_I(g, with_refutations=False)[0]:3d} "
              f"{g.frattini.order:6d} {g.derived_length:2d}")


if __name__ == "__main__":
    main()
