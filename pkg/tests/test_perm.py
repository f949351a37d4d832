import pytest
from hypothesis import given
from hypothesis import strategies as st

from regmaps.errors import ContractViolation
from regmaps.perm import Perm, cycle_string

from oracles import compose, tuple_order

perms = st.integers(3, 8).flatmap(
    lambda n: st.permutations(list(range(n))).map(Perm))


def test_composition_reads_left_to_right():
    p = Perm.from_cycles([(0, 1)], 3)
    q = Perm.from_cycles([(1, 2)], 3)
    # apply p first: 0 -> 1, then q: 1 -> 2
    assert (p * q).images[0] == 2
    assert (q * p).images[0] == 1


def test_from_cycles_and_back():
    p = Perm.from_cycles([(0, 2, 4), (1, 3)], 6)
    assert p.cycles() == [(0, 2, 4), (1, 3)]
    assert p.images == (2, 3, 4, 1, 0, 5)
    assert cycle_string(p) == "(1 3 5)(2 4)"
    assert cycle_string(Perm.identity(4)) == "()"


def test_from_cycles_rejects_repeats_and_range():
    with pytest.raises(ContractViolation):
        Perm.from_cycles([(0, 1), (1, 2)], 4)
    with pytest.raises(ContractViolation):
        Perm.from_cycles([(0, 9)], 4)


def test_not_a_bijection():
    with pytest.raises(ContractViolation):
        Perm((0, 0, 1))


def test_pow_negative_is_inverse_power():
    p = Perm.from_cycles([(0, 1, 2, 3)], 4)
    assert p ** -1 == p.inverse()
    assert p ** -3 == (p ** 3).inverse()
    assert (p ** 4).is_identity()


@given(perms)
def test_inverse_law(p):
    assert (p * p.inverse()).is_identity()
    assert p.inverse().inverse() == p


@given(perms, perms)
def test_product_matches_oracle(p, q):
    if p.degree != q.degree:
        return
    assert (p * q).images == compose(p.images, q.images)
    assert ((p * q).inverse()) == q.inverse() * p.inverse()


@given(perms)
def test_order_matches_oracle(p):
    assert p.order() == tuple_order(p.images)
    assert (p ** p.order()).is_identity()
