import itertools

import pytest

from uvcodes import BudgetError, RingParams
from uvcodes.code import mul_u, mul_v, shift_x
from uvcodes.ideals import enumerate_ideals, summarize


def brute_force_ideals(P, n):
    """All subsets containing 0 closed under +, x, u and v."""
    w = P.nslots * n
    p = P.p
    vecs = [tuple(v) for v in itertools.product(range(p), repeat=w)]
    zero = tuple([0] * w)
    found = set()
    for mask in range(1 << len(vecs)):
        S = {vecs[i] for i in range(len(vecs)) if mask >> i & 1}
        if zero not in S:
            continue
        if not all(tuple((a + b) % p for a, b in zip(x, y)) in S for x in S for y in S):
            continue
        if all(tuple(shift_x(x, n)) in S and tuple(mul_u(x, P, n)) in S
               and tuple(mul_v(x, P, n)) in S for x in S):
            found.add(frozenset(S))
    return found


def as_sets(codes):
    out = set()
    for C in codes:
        words = set()
        for c in itertools.product(range(C.p), repeat=C.dimension):
            vec = [0] * C.width
            for a, r in zip(c, C.rows):
                vec = [(x + a * y) % C.p for x, y in zip(vec, r)]
            words.add(tuple(vec))
        out.add(frozenset(words))
    return out


@pytest.mark.parametrize("p,k,n", [(2, 1, 1), (2, 1, 2), (3, 1, 1), (2, 2, 1)])
def test_completeness(p, k, n):
    P = RingParams(p, k)
    codes = enumerate_ideals(P, n)
    assert as_sets(codes) == brute_force_ideals(P, n)


def test_small_ring_ideals():
    codes = enumerate_ideals(RingParams(2, 1), 1)
    assert [c.codeword_polys()[0].to_str() if c.dimension else "0" for c in codes][:2] == ["0", "v"]
    assert [c.dimension for c in codes] == [0, 1, 2]


@pytest.mark.parametrize("p,k,n", [(2, 1, 2), (2, 1, 4), (2, 2, 2), (3, 1, 2)])
def test_every_ideal_verifies(p, k, n):
    for C in enumerate_ideals(RingParams(p, k), n):
        s = summarize(C)
        assert s.structure_ok and s.roundtrip_ok


def test_cap_and_refusal():
    assert enumerate_ideals(RingParams(2, 1), 1, cap=0) == []
    with pytest.raises(BudgetError):
        enumerate_ideals(RingParams(2, 3), 4)
