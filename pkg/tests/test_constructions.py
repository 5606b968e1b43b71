import numpy as np
import pytest

from invgen import catalog as cat
from invgen.constructions import (
    gaschutz_d,
    leaf,
    materialize,
    prop_geq_group,
    semidirect_module_group,
    tower_group,
    tower_hypothesis,
    wreath_regular,
)
from invgen.errors import HypothesisViolated, MissingAnnotation, NonCoprimePrime, OrderCapExceeded
from invgen.gen import d_I, d_min_generators
from invgen.modrep import GModule, irreducible_modules, regular_module, trivial_module


def sign_line(q=3):
    c2 = cat.group("C2")
    return GModule.from_matrices(c2, q, [np.array([[q - 1]])], dim=1)


# -- V^u ⋊ G --------------------------------------------------------------------------------


def test_sign_line_extension_is_s3():
    s = semidirect_module_group(sign_line(), 1)
    g = s.materialize()
    assert g.order == 6 and not g.is_abelian()
    assert d_min_generators(g) == 2 and g.derived_length == 2


def test_regular_module_extension_order():
    c3 = cat.group("C3")
    s = semidirect_module_group(regular_module(c3, 7), 1, c3)
    assert s.order == 7**3 * 3
    assert s.materialize().order == 1029


def test_zero_copies_gives_the_group():
    c3 = cat.group("C3")
    s = semidirect_module_group(trivial_module(c3, 5), 0, c3)
    assert s.is_leaf and s.order == 3


def test_extension_rejects_foreign_module():
    with pytest.raises(ValueError):
        semidirect_module_group(sign_line(), 1, cat.group("C3"))


def test_materialized_projection_and_translation():
    s = semidirect_module_group(sign_line(5), 2)
    m = materialize(s)
    top = s.top
    for k in range(top.order):
        for w in ([0, 0], [1, 4], [3, 2]):
            i = m.element_id(int(k), np.array(w))
            assert int(m.project(i)[0]) == int(k)
            assert m.translation(i)[0].tolist() == w


# -- regular wreath products ---------------------------------------------------------------------


def test_wreath_examples():
    s = wreath_regular(3, 1, cat.group("C2"))
    assert s.order == 18 and s.recorded_d == 2 == gaschutz_d(s)
    big = wreath_regular(43, 1, cat.group("sdc(7,3,2)"))
    assert big.order == 43**21 * 21 and big.recorded_d == 2 == gaschutz_d(big)
    two = wreath_regular(5, 2, cat.group("C2"))
    g = two.materialize()
    assert g.order == 5**4 * 2 == two.order
    assert d_min_generators(g) == 3 == two.recorded_d == gaschutz_d(two)
    assert wreath_regular(7, 2, cat.group("C3")).recorded_d == 3


def test_wreath_requires_coprime_prime():
    with pytest.raises(NonCoprimePrime):
        wreath_regular(3, 1, cat.group("S3"))
    with pytest.raises(ValueError):
        wreath_regular(4, 1, cat.group("C3"))


# -- the supersoluble family --------------------------------------------------------------------------


def test_prop_geq_examples():
    s = prop_geq_group(2)
    assert s.order == 108 and gaschutz_d(s) == 2 and s.supersoluble
    assert all(cf.order in (2, 3) for cf in s.chief_annotation)
    assert prop_geq_group(3).order == 3**14 * 8
    assert gaschutz_d(prop_geq_group(3)) == 3
    with pytest.raises(HypothesisViolated):
        prop_geq_group(1)


def test_prop_geq_materialized():
    s = prop_geq_group(2)
    g = s.materialize()
    assert g.order == 108 and g.is_supersoluble()
    assert d_min_generators(g) == 2
    assert d_I(g)[0] == 3


# -- the tower --------------------------------------------------------------------------------------


def test_tower_examples():
    t1 = tower_group(2, 3, 1)
    assert t1.order == 9 and d_I(t1.top)[0] == 2
    t2 = tower_group(2, 3, 2)
    assert t2.order == 7**9 * 9 and t2.splitting_primes == [7]
    assert gaschutz_d(t2) == 2 and t2.min_prime == 3 and t2.derived_length == 2
    t5 = tower_group(2, 5, 2)
    assert t5.order == 11**25 * 25 and t5.splitting_primes == [11]


@pytest.mark.parametrize("args", [(1, 3, 1), (2, 4, 1), (2, 3, 3), (3, 3, 2), (2, 3, 0)])
def test_tower_hypothesis_enforced(args):
    assert not tower_hypothesis(*args)
    with pytest.raises(HypothesisViolated):
        tower_group(*args)


def test_tower_third_level_needs_materialization():
    assert tower_hypothesis(2, 5, 3)
    with pytest.raises(OrderCapExceeded):
        tower_group(2, 5, 3)


# -- Gaschütz formula ------------------------------------------------------------------------------


@pytest.mark.parametrize("expr", [e for e in cat.CATALOG if e != "geq(2)"])
def test_gaschutz_matches_brute_on_leaves(expr):
    g = cat.group(expr)
    assert gaschutz_d(leaf(g)) == d_min_generators(g)


@pytest.mark.parametrize("build", [
    lambda: wreath_regular(3, 1, cat.group("C2")),
    lambda: wreath_regular(5, 1, cat.group("x(C2,C2)")),
    lambda: wreath_regular(7, 1, cat.group("C3")),
    lambda: semidirect_module_group(sign_line(), 3),
    lambda: tower_group(2, 3, 1),
], ids=["wr3C2", "wr5C2^2", "wr7C3", "sign^3", "tower1"])
def test_gaschutz_matches_brute_on_extensions(build):
    s = build()
    g = s.materialize()
    assert g.order == s.order
    assert gaschutz_d(s) == d_min_generators(g)
    assert s.derived_length == g.derived_length
    assert s.min_prime == g.min_prime


def test_irreducible_extensions_match_brute():
    s3 = cat.group("S3")
    for v in irreducible_modules(s3, 5):
        for u in (1, 2):
            s = semidirect_module_group(v, u, s3)
            if s.order > 1000:
                continue
            assert gaschutz_d(s) == d_min_generators(s.materialize())


def test_missing_annotation():
    s = leaf(cat.group("C2"))
    s.chief_annotation = None
    with pytest.raises(MissingAnnotation):
        gaschutz_d(s)


def test_trivial_factors_count_rank():
    s = leaf(cat.group("x(C2,C2,C2)"))
    assert [(cf.theta, cf.complemented, cf.r) for cf in s.chief_annotation] == [(0, 3, 1)]
    assert gaschutz_d(s) == 3
