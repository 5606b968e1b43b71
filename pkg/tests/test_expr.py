import pytest
from hypothesis import given
from hypothesis import strategies as st

from invgen import catalog as cat
from invgen.constructions import StructuredGroup
from invgen.errors import NonCoprimePrime, OrderCapExceeded, ParseError
from invgen.expr import build, concrete, parse


@pytest.mark.parametrize("text, order", [
    ("C1", 1), ("C12", 12), ("S3", 6), ("S4", 24), ("A4", 12), ("D5", 10), ("D4", 8),
    ("sdc(7,3,2)", 21), ("sdc(5,4,2)", 20), ("x(C2,C2,C2)", 8), ("x(S3, C2)", 12),
    (cat.Q8, 8), ("perm[(1,2,3);(1,2)]", 6), ("perm[]", 1),
])
def test_concrete_orders(text, order):
    assert build(text).order == order


@pytest.mark.parametrize("text, order", [
    ("wr(43,1,sdc(7,3,2))", 43**21 * 21), ("geq(3)", 3**14 * 8), ("tower(2,3,2)", 7**9 * 9),
    ("wr(3,1,C2)", 18),
])
def test_structured_orders(text, order):
    g = build(text)
    assert isinstance(g, StructuredGroup) and g.order == order and g.name == text


def test_names_and_whitespace():
    assert parse(" x( C2 , C3 ) ").text == "x( C2 , C3 )"
    assert build("x(C2,C3)").name == "x(C2,C3)"
    assert build("x(C2, C3)").order == 6


@pytest.mark.parametrize("text, offset", [
    ("C(bad", 1), ("wr(4,1,C2)", 3), ("x(C2,", 5), ("C2 junk", 3), ("Z3", 0), ("", 0),
    ("C0", 1), ("sdc(7,3)", 7), ("tower(2,4,1)", 8),
])
def test_parse_errors_report_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.offset == offset
    assert f"offset {offset}" in str(info.value)


def test_evaluation_errors():
    with pytest.raises(NonCoprimePrime):
        build("wr(3,1,S3)")
    with pytest.raises(OrderCapExceeded):
        build("S8")
    with pytest.raises(ValueError):
        build("sdc(7,3,3)")
    with pytest.raises(OrderCapExceeded):
        concrete(build("wr(43,1,sdc(7,3,2))"))


def test_concrete_materializes_small_structured_groups():
    g = concrete(build("wr(3,1,C2)"))
    assert g.order == 18 and g.name == "wr(3,1,C2)"


@given(st.lists(st.sampled_from(["C2", "C3", "S3", "D4", "C5"]), min_size=1, max_size=3))
def test_direct_product_order_multiplies(parts):
    text = "x(" + ",".join(parts) + ")"
    expected = 1
    for p in parts:
        expected *= build(p).order
    if expected <= 20000:
        assert build(text).order == expected
