import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from invgen import catalog as cat
from invgen.constructions import (
    gaschutz_d,
    materialize,
    prop_geq_group,
    semidirect_module_group,
    tower_group,
    wreath_regular,
)
from invgen.errors import BudgetExceeded, NotInvariableGenerators, NotIrreducible
from invgen.gen import d_I, d_min_generators, invariably_generates_elements
from invgen.lifting import (
    check_lower_bound,
    end_fixed_dim,
    extension,
    find_lifting_witness,
    lifting_bound,
    lifting_report,
    prop_le_construct,
    structured_dI_lower_bound,
    structured_dI_upper_bound,
    two_gen_dichotomy_check,
)
from invgen.modrep import GModule, irreducible_modules, regular_module, trivial_module


def sign_line(q=3):
    return GModule.from_matrices(cat.group("C2"), q, [np.array([[q - 1]])], dim=1)


FLIP = 1


# -- the bound and its witnesses -----------------------------------------------------------------


def test_lifting_bound_examples():
    v = sign_line()
    assert lifting_bound(v, [0, FLIP]) == 1
    assert lifting_bound(v, [FLIP, FLIP]) == 0
    with pytest.raises(NotInvariableGenerators):
        lifting_bound(v, [0, 0])
    with pytest.raises(NotIrreducible):
        lifting_bound(regular_module(cat.group("C2"), 3), [FLIP])


def test_witness_examples():
    v = sign_line()
    w = find_lifting_witness(v, 1, [0, FLIP])
    assert w is not None and len(w) == 2
    assert find_lifting_witness(v, 1, [FLIP, FLIP]) is None
    assert [x.size for x in find_lifting_witness(v, 0, [FLIP])] == [0]
    with pytest.raises(BudgetExceeded):
        find_lifting_witness(v, 9, [0, FLIP], budget=100)


def test_witness_elements_invariably_generate():
    v = sign_line(5)
    m = materialize(extension(v, 2))
    w = find_lifting_witness(v, 2, [0, 0, FLIP], materialized=m)
    assert w is not None
    ids = [m.element_id(g, x) for g, x in zip([0, 0, FLIP], w)]
    assert invariably_generates_elements(m.group, ids)[0]


def test_lifting_report_verdict():
    v = sign_line()
    assert lifting_report([(v, 1)], [0, FLIP]).verdict == "liftable"
    rep = lifting_report([(v, 1), (v, 2)], [0, FLIP])
    assert rep.verdict == "obstructed" and rep.obstructed == 1


@pytest.mark.parametrize("expr, q", [("C3", 7), ("S3", 5), ("C3", 2)])
def test_iff_on_small_faithful_modules(expr, q):
    g = cat.group(expr)
    for v in irreducible_modules(g, q):
        if not v.is_faithful() or v.dim > 2:
            continue
        for size in (1, 2):
            for gens in itertools.combinations_with_replacement(range(g.order), size):
                if not invariably_generates_elements(g, list(gens))[0]:
                    continue
                bound = lifting_bound(v, list(gens))
                for u in (1, 2):
                    if q ** (u * v.dim) * g.order > 2000:
                        continue
                    found = find_lifting_witness(v, u, list(gens)) is not None
                    assert found == (u <= bound), (gens, u, bound)


# -- necessity without faithfulness: sample tuples of the materialized extension ------------------

EXTENSIONS = [
    ("C3", 7, 1), ("C3", 7, 2), ("S3", 5, 1), ("S3", 7, 1), ("x(C2,C2)", 3, 2), ("C4", 5, 2),
]


@settings(max_examples=60)
@given(st.sampled_from(EXTENSIONS), st.integers(0, 10**9), st.integers(1, 3), st.data())
def test_necessity_on_sampled_tuples(case, seed, size, data):
    expr, q, u = case
    g = cat.group(expr)
    irreps = irreducible_modules(g, q)
    v = irreps[data.draw(st.integers(0, len(irreps) - 1))]
    if q ** (u * v.dim) * g.order > 3000:
        u = 1
    m = materialize(extension(v, u), order_cap=3000)
    rng = np.random.default_rng(seed)
    elems = [int(x) for x in rng.integers(0, m.group.order, size=size)]
    if not invariably_generates_elements(m.group, elems)[0]:
        return
    tops = [int(t) for t in m.project(np.array(elems))]
    assert invariably_generates_elements(g, tops)[0]
    assert u <= sum(end_fixed_dim(v, t) for t in tops)


# -- structured lower bounds ------------------------------------------------------------------------


def test_lower_bound_examples():
    big = wreath_regular(43, 1, cat.group("sdc(7,3,2)"))
    cert = structured_dI_lower_bound(big, 2)
    assert cert.holds and cert.table and check_lower_bound(big, cert)
    assert structured_dI_lower_bound(tower_group(2, 3, 2), 2).holds
    triv = semidirect_module_group(trivial_module(cat.group("C2"), 3), 1)
    assert not structured_dI_lower_bound(triv, 2).holds


@pytest.mark.parametrize("build", [
    lambda: wreath_regular(3, 1, cat.group("C2")),
    lambda: wreath_regular(5, 1, cat.group("x(C2,C2)")),
    lambda: wreath_regular(7, 1, cat.group("C3")),
    lambda: prop_geq_group(2),
], ids=["wr3C2", "wr5C2^2", "wr7C3", "geq2"])
def test_lower_bound_agrees_with_brute(build):
    s = build()
    g = s.materialize()
    brute = d_I(g, with_refutations=False)[0]
    for r in range(1, brute + 1):
        if structured_dI_lower_bound(s, r).holds:
            assert brute > r
    assert structured_dI_upper_bound(s).bound >= brute


def test_tampered_lower_bound_detected():
    s = prop_geq_group(2)
    cert = structured_dI_lower_bound(s, 2)
    assert cert.holds
    cert.table = cert.table[1:]
    assert not check_lower_bound(s, cert)


def test_tower_bounds_meet():
    s = tower_group(2, 3, 2)
    assert structured_dI_lower_bound(s, 2).holds
    assert structured_dI_upper_bound(s).bound == 3


# -- the constructive upper bound ------------------------------------------------------------------


@pytest.mark.parametrize("expr", [e for e in cat.CATALOG if e != "C1"])
def test_prop_le_construct(expr):
    g = cat.group(expr)
    seq = prop_le_construct(g)
    assert invariably_generates_elements(g, seq)[0]
    assert len(seq) <= g.derived_length * (d_min_generators(g) - 1) + 1
    assert len(seq) >= d_I(g, with_refutations=False)[0]


def test_prop_le_examples():
    assert len(prop_le_construct(cat.group("x(C2,C2,C2)"))) == 3
    assert len(prop_le_construct(cat.group("S3"))) <= 3
    assert len(prop_le_construct(cat.group("geq(2)"))) == 3


# -- the dichotomy -------------------------------------------------------------------------------------


def test_dichotomy_first_horn():
    rep = two_gen_dichotomy_check(cat.group("S3"))
    assert rep.horn == 1 and rep.d_I == 2 == rep.min_prime and rep.passed


@pytest.mark.parametrize("expr, q", [("sdc(7,3,2)", 43), ("x(C3,C3)", 7)])
def test_dichotomy_second_horn(expr, q):
    rep = two_gen_dichotomy_check(cat.group(expr))
    assert rep.horn == 2 and rep.passed
    assert rep.q == q and rep.h_d == 2 and rep.h_min_prime == 3
    assert rep.certificate.holds and rep.wedderburn_sum == rep.order
    for row in rep.counting:
        # |G| = Σ n_j² would need Σ 1/|g_i| >= 1, which fails for these multisets
        assert row.regular_fixed_sum == row.component_sum
        assert row.reciprocal_sum < 1
        assert row.regular_fixed_sum == sum(rep.order // o for o in row.orders)


def test_scaling_identity_on_decompositions():
    from invgen.modrep import fixed_space, meataxe_decompose, smallest_splitting_prime
    for expr in ("S3", "sdc(7,3,2)", "D4", "A4"):
        g = cat.group(expr)
        q = smallest_splitting_prime(g)
        dec = meataxe_decompose(regular_module(g, q))
        assert sum(c.multiplicity ** 2 for c in dec.components) == g.order
        for x in range(g.order):
            lhs = sum(c.multiplicity * fixed_space(c.module, x)[0] for c in dec.components)
            assert lhs == g.order // int(g.element_orders[x])


def test_gaschutz_of_wreath_in_dichotomy():
    h = wreath_regular(43, 1, cat.group("sdc(7,3,2)"))
    assert gaschutz_d(h) == 2
