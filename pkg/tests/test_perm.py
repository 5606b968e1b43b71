import pytest
from hypothesis import given
from hypothesis import strategies as st

from invgen.errors import InvalidPermutation
from invgen.perm import Permutation


def perms(degree):
    return st.permutations(list(range(degree))).map(Permutation)


def test_parse_and_print_are_one_based():
    p = Permutation.parse("(1,2,3)(4,5)")
    assert p.images == (1, 2, 0, 4, 3)
    assert str(p) == "(1,2,3)(4,5)"
    assert str(Permutation.identity(4)) == "()"
    assert Permutation.parse("()", 3).is_identity()


def test_product_acts_on_the_right():
    a = Permutation.parse("(1,2)", 3)
    b = Permutation.parse("(1,2,3)")
    # 1 -a-> 2 -b-> 3
    assert (a * b).images[0] == 2
    assert str(a * b) == "(1,3)"


@pytest.mark.parametrize("text", ["(1,1)", "(0,1)", "(1,2", "1,2", "(a,b)"])
def test_bad_notation(text):
    with pytest.raises(InvalidPermutation):
        Permutation.parse(text)


def test_images_must_be_bijective():
    with pytest.raises(InvalidPermutation):
        Permutation([0, 0, 1])


@given(perms(6), perms(6), perms(6))
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(perms(7))
def test_inverse_and_order(a):
    assert (a * ~a).is_identity()
    assert (a ** a.order()).is_identity()
    assert all(not (a ** k).is_identity() for k in range(1, a.order()))
    assert a ** -1 == ~a


@given(perms(6))
def test_cycle_notation_round_trip(a):
    assert Permutation.parse(str(a), a.degree) == a
