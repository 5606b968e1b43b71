"""Verification suites: each runs one family of exact checks and returns per-check rows."""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import catalog as cat
from .constructions import (
    gaschutz_d,
    materialize,
    prop_geq_group,
    tower_group,
    wreath_regular,
)
from .errors import UnknownSuite
from .expr import build, concrete
from .gen import (
    d_I,
    d_min_generators,
    invariably_generates,
    invariably_generates_bruteforce,
)
from .group import DEFAULT_ORDER_CAP, DEFAULT_SUBGROUP_CAP, quotient
from .lifting import (
    WITNESS_BUDGET,
    extension,
    find_lifting_witness,
    lifting_bound,
    prop_le_construct,
    structured_dI_lower_bound,
    structured_dI_upper_bound,
    two_gen_dichotomy_check,
)
from .modrep import (
    COHOMOLOGY_CAP,
    endo_dim,
    fixed_space,
    h1_dim,
    irreducible_modules,
    meataxe_decompose,
    regular_module,
    smallest_splitting_prime,
)


@dataclass
class RunConfig:
    order_cap: int = DEFAULT_ORDER_CAP
    subgroup_cap: int = DEFAULT_SUBGROUP_CAP
    cohomology_cap: int = COHOMOLOGY_CAP
    brute_budget: int = WITNESS_BUDGET
    seed: int = 0
    output_format: str = "json"
    output_path: str = None
    threads: int = 1
    recheck: bool = False

    def __post_init__(self):
        for name in ("order_cap", "subgroup_cap", "cohomology_cap", "brute_budget", "threads"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")


@dataclass
class Row:
    check: str
    expected: object
    actual: object

    @property
    def passed(self):
        return self.expected == self.actual

    def as_dict(self):
        return {"check": self.check, "expected": self.expected, "actual": self.actual,
                "passed": self.passed}


@dataclass
class SuiteResult:
    suite: str
    rows: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self):
        return all(r.passed for r in self.rows)

    def add(self, check, expected, actual):
        self.rows.append(Row(check, expected, actual))

    def failures(self):
        return [r for r in self.rows if not r.passed]


# -- suites --------------------------------------------------------------------------------


def suite_centraliser(cfg, res):
    """Fixed space of every element on ``F_q G`` has dimension ``|G : <g>|``."""
    for g in cat.catalog():
        q = smallest_splitting_prime(g)
        reg = regular_module(g, q)
        bad = [x for x in range(g.order)
               if fixed_space(reg, x)[0] != g.order // int(g.element_orders[x])]
        res.add(f"{g.name} q={q}: elements with dim C(g) != |G:<g>|", 0, len(bad))


def suite_wedderburn(cfg, res, seeds=5):
    """Splitting-prime decomposition of the regular module, stable across seeds."""
    for g in cat.catalog():
        q = smallest_splitting_prime(g)
        reg = regular_module(g, q)
        sigs = []
        for k in range(seeds):
            dec = meataxe_decompose(reg, seed=cfg.seed + k)
            sigs.append(tuple(dec.signature()))
            if k == 0:
                res.add(f"{g.name} q={q}: sum n_j^2", g.order, sum(n * n for n in dec.multiplicities))
                res.add(f"{g.name}: n_j = dim V_j", True,
                        all(c.multiplicity == c.module.dim for c in dec.components))
                res.add(f"{g.name}: endo_dim(V_j) = 1", True,
                        all(endo_dim(c.module, check=False) == 1 for c in dec.components))
        res.add(f"{g.name}: signature stable over {seeds} seeds", 1, len(set(sigs)))


def suite_h1(cfg, res):
    """``H^1(G, V) = 0`` for irreducible ``V``: every ``V`` at the splitting prime, and every
    faithful ``V`` in characteristic dividing ``|G|``."""
    for g in cat.catalog(max_order=cfg.cohomology_cap, nontrivial=True):
        if not g.is_soluble:
            continue
        q = smallest_splitting_prime(g)
        for v in irreducible_modules(g, q, seed=cfg.seed):
            res.add(f"{g.name} F_{q} dim {v.dim}: h1", 0, h1_dim(g, v, cfg.cohomology_cap))
        for p in g.primes:
            for v in irreducible_modules(g, p, seed=cfg.seed):
                h = h1_dim(g, v, cfg.cohomology_cap)
                if v.is_faithful():
                    res.add(f"{g.name} F_{p} dim {v.dim} faithful: h1", 0, h)
                elif h:
                    res.notes.append(f"{g.name} F_{p} dim {v.dim} (kernel order {v.kernel.order}): h1 = {h}")


LIFTING_GROUPS = ("C2", "C3", "S3", "x(C2,C2)")
LIFTING_PRIMES = (2, 3, 5, 7)


def suite_lifting_iff(cfg, res):
    """Witness exists on the materialized ``V^u ⋊ G`` iff ``u <= Σ dim_End C_V(g_i)``."""
    for expr in LIFTING_GROUPS:
        g = cat.group(expr)
        n_classes = len(g.conjugacy_classes)
        tuples = [c for size in (1, 2, 3)
                  for c in itertools.combinations_with_replacement(range(n_classes), size)
                  if invariably_generates(g, c)[0]]
        found_module = False
        for q in LIFTING_PRIMES:
            for v in irreducible_modules(g, q, seed=cfg.seed):
                if v.dim > 2 or not v.is_faithful():
                    continue
                found_module = True
                res.add(f"{g.name} F_{q} dim {v.dim}: h1", 0, h1_dim(g, v, cfg.cohomology_cap))
                for u in (1, 2, 3):
                    order = q ** (v.dim * u) * g.order
                    if order > cfg.brute_budget:
                        res.notes.append(f"skipped {g.name} F_{q} dim {v.dim} u={u}: order {order}")
                        continue
                    m = materialize(extension(v, u), order_cap=cfg.brute_budget)
                    mismatches = 0
                    for combo in tuples:
                        reps = [g.conjugacy_classes[c].rep_id for c in combo]
                        bound = lifting_bound(v, reps)
                        w = find_lifting_witness(v, u, reps, cfg.brute_budget, materialized=m)
                        mismatches += (w is not None) != (u <= bound)
                    res.add(f"{g.name} F_{q} dim {v.dim} u={u}: iff mismatches over {len(tuples)} tuples",
                            0, mismatches)
        if not found_module:
            res.notes.append(f"{g.name}: no faithful irreducible module of dim <= 2 over {LIFTING_PRIMES}")


def suite_prop_geq(cfg, res):
    """The supersoluble family at ``d = 2``: ``d = 2`` and ``d_I = 2d - 1 = 3``."""
    d = 2
    s = prop_geq_group(d)
    g = materialize(s, cfg.order_cap).group
    res.add("geq(2) order", 108, g.order)
    res.add("geq(2) gaschutz d", d, gaschutz_d(s))
    res.add("geq(2) brute d", d, d_min_generators(g))
    di = d_I(g)[0]
    res.add("geq(2) brute d_I = 2d-1", 2 * d - 1, di)
    res.add("geq(2) d_I = dl(d-1)+1", g.derived_length * (d - 1) + 1, di)
    res.add("geq(2) supersoluble (annotation)", True, bool(s.supersoluble))
    res.add("geq(2) supersoluble (chief series)", True, g.is_supersoluble())
    res.add("geq(2) Frattini order", 1, g.frattini.order)
    ab = quotient(g, g.derived_data.series[1]).image
    res.add("geq(2)/G' order, exponent", (4, 2), (ab.order, ab.exponent))
    res.add("geq(2) constructed invariable generators", 3, len(prop_le_construct(g)))
    g3 = prop_geq_group(3)
    res.add("geq(3) structured order", 3 ** 14 * 8, g3.order)
    res.add("geq(3) gaschutz d", 3, gaschutz_d(g3))


def suite_tower(cfg, res, d=2, p=3, l=2):
    """``d_I(G_l) = l(d-1)+1`` with the lower bound from the socle and the upper bound explicit."""
    s = tower_group(d, p, l, order_cap=cfg.order_cap)
    q = s.splitting_primes[0]
    res.add(f"tower({d},{p},{l}) order", q ** (p ** d) * p ** d, s.order)
    res.add("splitting prime", 7, q)
    res.add("min prime of order", p, s.min_prime)
    res.add("derived length", l, s.derived_length)
    res.add("gaschutz d", d, gaschutz_d(s))
    target = l * (d - 1) + 1
    cert = structured_dI_lower_bound(s, target - 1)
    res.add(f"lower bound d_I > {target - 1} certified", True, cert.holds)
    ub = structured_dI_upper_bound(s, seed=cfg.seed)
    res.add("explicit upper bound", target, ub.bound)
    res.add("top invariable generators verified", True,
            invariably_generates(s.top, [int(s.top.class_of[x]) for x in ub.top_sequence])[0])
    base = tower_group(d, p, 1)
    res.add(f"tower({d},{p},1) d_I", d, d_I(base.top)[0])


def suite_dichotomy(cfg, res):
    for expr, horn in (("S3", 1), ("sdc(7,3,2)", 2), ("x(C3,C3)", 2)):
        g = cat.group(expr)
        rep = two_gen_dichotomy_check(g, seed=cfg.seed)
        res.add(f"{g.name}: horn", horn, rep.horn)
        res.add(f"{g.name}: report passes", True, rep.passed)
        if expr == "sdc(7,3,2)":
            res.add("d_I(G), min pi(G)", (2, 3), (rep.d_I, rep.min_prime))
            res.add("H = C_q wr G: q, d(H)", (43, 2), (rep.q, rep.h_gaschutz_d))
            res.add("d_I(H) >= 3 certified", True, rep.certificate.holds)


def suite_prop_le(cfg, res):
    for g in cat.catalog(nontrivial=True):
        seq = prop_le_construct(g)
        bound = g.derived_length * (d_min_generators(g) - 1) + 1
        res.add(f"{g.name}: |sequence| <= dl(d-1)+1 = {bound}", True, len(seq) <= bound)
        res.add(f"{g.name}: sequence invariably generates", True,
                invariably_generates(g, [int(g.class_of[x]) for x in seq])[0])


def suite_oracle(cfg, res, max_order=120, max_size=3):
    """Class-incidence decision against conjugate-by-conjugate brute force."""
    for g in cat.catalog(max_order=max_order):
        cl = g.conjugacy_classes
        mismatches = 0
        total = 0
        for size in range(1, max_size + 1):
            for combo in itertools.combinations_with_replacement(range(len(cl)), size):
                fast = invariably_generates(g, combo)[0]
                slow = invariably_generates_bruteforce(g, [cl[i].rep_id for i in combo],
                                                       order_budget=max(max_order, 200))
                mismatches += fast != slow
                total += 1
        res.add(f"{g.name}: mismatches over {total} multisets", 0, mismatches)


CROSSCHECK = ("wr(3,1,C2)", "wr(5,1,x(C2,C2))", "wr(5,2,C2)", "geq(2)", "tower(2,3,1)")


def suite_crosscheck(cfg, res):
    """Gaschütz formula and structured lower bounds against brute force on materialized groups."""
    for expr in CROSSCHECK:
        s = build(expr, cfg.order_cap)
        from .constructions import StructuredGroup, leaf
        if not isinstance(s, StructuredGroup):
            s = leaf(s)
        g = materialize(s, cfg.order_cap).group
        bd = d_min_generators(g)
        res.add(f"{expr}: gaschutz d = brute d", bd, gaschutz_d(s))
        if s.recorded_d is not None:
            res.add(f"{expr}: recorded d = brute d", bd, s.recorded_d)
        res.add(f"{expr}: structured dl = dl", g.derived_length, s.derived_length)
        if s.is_leaf:
            continue
        di = d_I(g, with_refutations=False)[0]
        for r in range(1, di + 1):
            cert = structured_dI_lower_bound(s, r)
            if cert.holds:
                res.add(f"{expr}: certified d_I > {r} => brute d_I = {di} > {r}", True, di > r)
        res.add(f"{expr}: structured upper bound >= brute d_I", True,
                structured_dI_upper_bound(s, seed=cfg.seed).bound >= di)


def suite_bounds(cfg, res):
    for g in cat.catalog(nontrivial=True):
        d = d_min_generators(g)
        di = d_I(g, with_refutations=False)[0]
        res.add(f"{g.name}: d <= d_I <= log2|G|", True, d <= di <= math.log2(g.order))
        phi = g.frattini
        q = quotient(g, phi).image if phi.order > 1 else g
        res.add(f"{g.name}: d_I(G) = d_I(G/Frat)", di, d_I(q, with_refutations=False)[0])


SUITES = {
    "centraliser": suite_centraliser,
    "wedderburn": suite_wedderburn,
    "h1": suite_h1,
    "lifting-iff": suite_lifting_iff,
    "prop-geq": suite_prop_geq,
    "tower": suite_tower,
    "dichotomy": suite_dichotomy,
    "prop-le": suite_prop_le,
    "oracle": suite_oracle,
    "crosscheck": suite_crosscheck,
    "bounds": suite_bounds,
}


def run_suite(name, cfg=None):
    cfg = RunConfig() if cfg is None else cfg
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    res = SuiteResult(name)
    start = time.perf_counter()
    SUITES[name](cfg, res)
    res.seconds = time.perf_counter() - start
    return res
