import itertools

import pytest

from uvcodes import DomainError, RingElement, RingParams, StructuralError, units


def el(P, *coeffs):
    return RingElement.from_coeffs(P, coeffs)


SMALL = [RingParams(p, k) for p in (2, 3) for k in (1, 2, 3)]


def test_params_validation():
    with pytest.raises(DomainError):
        RingParams(4, 2)
    with pytest.raises(DomainError):
        RingParams(2, 0)
    assert RingParams(3, 2).size == 81


def test_add_examples():
    P = RingParams(2, 1)
    assert (P.v + P.v).is_zero()
    Q = RingParams(3, 2)
    assert (el(Q, 1, 1, 0, 0) + el(Q, 2, 2, 0, 0)).is_zero()
    R = RingParams(2, 3)
    s = el(R, 1, 0, 1, 0, 0, 0) + R.v
    assert s.coeffs == (1, 0, 1, 1, 0, 0)
    assert s.to_str() == "1+u^2+v"


def test_mul_examples():
    R = RingParams(2, 3)
    assert (R.u * R.u * R.u).is_zero()
    for P in SMALL:
        assert (P.v * P.v).is_zero()
    Q = RingParams(3, 2)
    assert (el(Q, 1, 0, 1, 0) * el(Q, 1, 0, 2, 0)) == Q.one()


def test_mismatch_is_structural():
    with pytest.raises(StructuralError):
        RingParams(2, 1).one() + RingParams(2, 2).one()


def test_units_examples():
    R = RingParams(2, 3)
    assert (R.one() + R.u + R.v).is_unit()
    assert not (R.u + R.v).is_unit()
    assert RingParams(3, 1).scalar(2).is_unit()


def test_inverse_examples():
    P = RingParams(2, 2)
    assert (P.one() + P.u).inverse() == P.one() + P.u
    Q = RingParams(3, 1)
    # oracle: exhaustive search over the nine elements
    target = Q.one() + Q.v
    found = [b for b in Q.elements() if target * b == Q.one()]
    assert found == [target.inverse()]
    assert target.inverse().coeffs == (1, 2)
    with pytest.raises(DomainError):
        P.u.inverse()


@pytest.mark.parametrize("P", SMALL, ids=str)
def test_ring_axioms_exhaustive(P):
    elems = list(P.elements())
    assert len(elems) == P.p ** (2 * P.k)
    for a in elems:
        assert a * P.one() == a
        assert (a + (-a)).is_zero()
    sample = elems[:: max(1, len(elems) // 20)]
    for a, b, c in itertools.product(sample, repeat=3):
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("P", SMALL, ids=str)
def test_unit_count_and_inverses(P):
    us = list(units(P))
    assert len(us) == (P.p - 1) * P.p ** (2 * P.k - 1)
    for a in us:
        assert a * a.inverse() == P.one()


@pytest.mark.parametrize("P", SMALL, ids=str)
def test_non_units_are_nilpotent(P):
    for a in P.elements():
        if not a.is_unit():
            assert (a ** (2 * P.k)).is_zero()


def test_slot_order_and_parts():
    P = RingParams(3, 3)
    assert [P.monomial_of(s) for s in range(6)] == [(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1)]
    r = el(P, 1, 2, 0, 0, 1, 1)
    assert r.a_part == (1, 2, 0) and r.b_part == (0, 1, 1)
    assert P.monomial(3, 0).is_zero()
