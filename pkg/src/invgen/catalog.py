"""The fixed set of small soluble groups used by the verification suites."""

from __future__ import annotations

from functools import lru_cache

from .expr import build, concrete

Q8 = "perm[(1,2,4,7)(3,6,8,5);(1,3,4,8)(2,5,7,6)]"

CATALOG = (
    [f"C{n}" for n in range(1, 13)]
    + ["x(C2,C2)", "x(C3,C3)", "x(C2,C2,C2)", "S3", "D4", "D5", "D6", Q8, "A4",
       "sdc(7,3,2)", "sdc(5,4,2)", "geq(2)"]
)

LABELS = {Q8: "Q8"}


def label(expr):
    return LABELS.get(expr, expr)


@lru_cache(maxsize=None)
def group(expr):
    """Concrete group for a catalog expression (cached; groups are immutable)."""
    g = concrete(build(expr))
    g.name = label(expr)
    return g


def catalog(max_order=None, nontrivial=False):
    out = []
    for expr in CATALOG:
        g = group(expr)
        if max_order is not None and g.order > max_order:
            continue
        if nontrivial and g.order == 1:
            continue
        out.append(g)
    return out
