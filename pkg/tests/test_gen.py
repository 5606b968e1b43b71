import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from invgen import catalog as cat
from invgen.errors import BudgetExceeded, ElementNotInGroup
from invgen.gen import (
    check_certificate,
    d_I,
    d_min_generators,
    generates,
    invariably_generates,
    invariably_generates_bruteforce,
    invariably_generates_elements,
    minimal_invgen_multisets,
)
from invgen.group import quotient
from invgen.perm import Permutation

CATALOG = cat.catalog()
NONTRIVIAL = cat.catalog(nontrivial=True)

# (d, d_I) for the catalog, frozen from the definitional brute-force search below
# (test_frozen_values_match_bruteforce recomputes the small ones independently).
FROZEN = {
    "C1": (0, 0), "C2": (1, 1), "C3": (1, 1), "C4": (1, 1), "C5": (1, 1), "C6": (1, 1),
    "C7": (1, 1), "C8": (1, 1), "C9": (1, 1), "C10": (1, 1), "C11": (1, 1), "C12": (1, 1),
    "x(C2,C2)": (2, 2), "x(C3,C3)": (2, 2), "x(C2,C2,C2)": (3, 3), "S3": (2, 2),
    "D4": (2, 2), "D5": (2, 2), "D6": (2, 2), "Q8": (2, 2), "A4": (2, 2),
    "sdc(7,3,2)": (2, 2), "sdc(5,4,2)": (2, 2), "geq(2)": (2, 3),
}


def P(text, degree):
    return Permutation.parse(text, degree)


def names(groups):
    return [g.name for g in groups]


def class_with(g, text):
    return int(g.class_of[g.id_of(P(text, g.degree))])


def test_generates_examples():
    s3 = cat.group("S3")
    assert generates(s3, [P("(1,2)", 3), P("(1,2,3)", 3)])
    assert not generates(s3, [P("(1,2,3)", 3)])
    sdc = cat.group("sdc(7,3,2)")
    three = next(x for x in range(sdc.order) if sdc.element_orders[x] == 3)
    assert not generates(sdc, [three])
    with pytest.raises(ElementNotInGroup):
        generates(s3, [P("(1,4)", 4)])


def test_d_examples():
    assert d_min_generators(cat.group("x(C2,C2,C2)")) == 3
    assert d_min_generators(cat.group("sdc(7,3,2)")) == 2
    assert d_min_generators(cat.group("geq(2)")) == 2


def test_invariable_generation_examples():
    c2 = cat.group("C2")
    assert invariably_generates(c2, [1])[0]
    s3 = cat.group("S3")
    t, r = class_with(s3, "(1,2)"), class_with(s3, "(1,2,3)")
    ok, cert = invariably_generates(s3, [r, t])
    assert ok and cert.kind == "invgen-witness" and check_certificate(s3, cert)
    ok, cert = invariably_generates(s3, [t, t])
    assert not ok and cert.kind == "invgen-refutation" and check_certificate(s3, cert)


def test_bruteforce_examples():
    s3 = cat.group("S3")
    assert not invariably_generates_bruteforce(s3, [0, 0])
    assert invariably_generates_bruteforce(s3, [P("(1,2,3)", 3), P("(1,2)", 3)])
    c4 = cat.group("C4")
    assert invariably_generates_bruteforce(c4, [c4.gen_ids[0]])
    with pytest.raises(BudgetExceeded):
        invariably_generates_bruteforce(s3, [1, 1, 1, 1])
    with pytest.raises(BudgetExceeded):
        invariably_generates_bruteforce(s3, [1], order_budget=5)


def test_d_I_examples():
    assert d_I(cat.group("S3"))[0] == 2
    assert d_I(cat.group("x(C3,C3)"))[0] == 2
    assert d_I(cat.group("x(C2,C2,C2)"))[0] == 3
    assert d_I(cat.group("geq(2)"))[0] == 3


@pytest.mark.parametrize("g", CATALOG, ids=names(CATALOG))
def test_frozen_values(g):
    di, cert = d_I(g)
    assert (d_min_generators(g), di) == FROZEN[g.name]
    assert check_certificate(g, cert)
    assert 0 not in cert.class_ids


def _brute_d_I(g):
    """Smallest r with an r-multiset of nontrivial class reps passing the definitional check."""
    reps = [c.rep_id for c in g.conjugacy_classes if c.rep_id != 0]
    if g.order == 1:
        return 0
    for r in range(1, 4):
        for combo in itertools.combinations_with_replacement(reps, r):
            if invariably_generates_bruteforce(g, list(combo)):
                return r
    return None


@pytest.mark.parametrize("g", cat.catalog(max_order=24), ids=names(cat.catalog(max_order=24)))
def test_frozen_values_match_bruteforce(g):
    assert _brute_d_I(g) == FROZEN[g.name][1]


@pytest.mark.parametrize("g", NONTRIVIAL, ids=names(NONTRIVIAL))
def test_bounds(g):
    d, di = d_min_generators(g), d_I(g)[0]
    assert 1 <= d <= di <= math.log2(g.order)


@pytest.mark.parametrize("g", NONTRIVIAL, ids=names(NONTRIVIAL))
def test_refutations_cover_all_smaller_sets(g):
    di, cert = d_I(g)
    assert cert.refutations is not None
    nontrivial = sum(1 for c in g.conjugacy_classes if c.rep_id != 0)
    assert len(cert.refutations) == math.comb(nontrivial, di - 1)


@pytest.mark.parametrize("g", NONTRIVIAL, ids=names(NONTRIVIAL))
def test_frattini_invariance(g):
    phi = g.frattini
    if phi.order == 1:
        return
    assert d_I(quotient(g, phi).image)[0] == d_I(g)[0]


@pytest.mark.parametrize("g", cat.catalog(max_order=24, nontrivial=True),
                         ids=names(cat.catalog(max_order=24, nontrivial=True)))
def test_quotient_monotonicity(g):
    normals = {n.key: n for n in g.chief_series}
    normals.update({n.key: n for n in g.derived_data.series})
    for n in normals.values():
        q = quotient(g, n)
        for combo in minimal_invgen_multisets(g):
            reps = [g.conjugacy_classes[c].rep_id for c in combo]
            assert invariably_generates_elements(q.image, [int(q(x)) for x in reps])[0]


@pytest.mark.parametrize("g", NONTRIVIAL, ids=names(NONTRIVIAL))
def test_nilpotent_generating_sets_invariably_generate(g):
    if not g.is_nilpotent():
        return
    d = d_min_generators(g)
    elems = range(1, g.order)
    for combo in itertools.combinations(elems, d):
        if generates(g, list(combo)):
            assert invariably_generates_elements(g, list(combo))[0]


def test_non_nilpotent_has_non_invariable_generating_pair():
    s3 = cat.group("S3")
    a, b = s3.id_of(P("(1,2)", 3)), s3.id_of(P("(1,3)", 3))
    assert generates(s3, [a, b])
    assert not invariably_generates_elements(s3, [a, b])[0]


@given(st.sampled_from(cat.catalog(max_order=110, nontrivial=True)), st.data())
def test_class_invariance(g, data):
    k = data.draw(st.integers(1, 3))
    elems = [data.draw(st.integers(0, g.order - 1)) for _ in range(k)]
    conjugators = [data.draw(st.integers(0, g.order - 1)) for _ in range(k)]
    moved = [int(g.conj(x, c)) for x, c in zip(elems, conjugators)]
    assert invariably_generates_elements(g, elems)[0] == invariably_generates_elements(g, moved)[0]


@given(st.sampled_from(cat.catalog(max_order=24, nontrivial=True)), st.data())
def test_oracle_agreement_random(g, data):
    k = data.draw(st.integers(1, 3))
    elems = [data.draw(st.integers(0, g.order - 1)) for _ in range(k)]
    assert invariably_generates_elements(g, elems)[0] == invariably_generates_bruteforce(g, elems)


def test_certificate_tampering_is_detected():
    g = cat.group("A4")
    _, cert = d_I(g)
    cert.evidence = [(e + 1) % len(cert.class_ids) for e in cert.evidence]
    assert not check_certificate(g, cert)
