import random
from dataclasses import replace

import pytest

from uvcodes import (DomainError, FpPoly, RingParams, RingPoly, canonical_generators, coprime_form,
                     express_in_generators, is_free, span_closure, verify_structure)
from uvcodes.code import block, from_vector, to_vector

from conftest import all_codewords, poly, random_code

P23 = RingParams(2, 3)
P33 = RingParams(3, 3)


def g2(text):
    return poly(P23, text, 4)


def oracle_layer(code, layer, words):
    """Slot (layer-1) parts of codewords vanishing on earlier slots."""
    n = code.n
    out = set()
    for vec in words:
        if not any(vec[: (layer - 1) * n]):
            out.add(tuple(block(vec, layer - 1, n)))
    return out


def multiples(g, n):
    p = g.p
    import itertools
    out = set()
    for c in itertools.product(range(p), repeat=n):
        out.add(tuple((g * FpPoly(p, c)).reduce_cyclic(n).padded(n)))
    return out


def test_span_closure_examples():
    C = span_closure(P23, 4, [g2("v*u^2*(x+1)^3")])
    assert C.dimension == 1
    assert span_closure(P23, 4, []).dimension == 0
    P = RingParams(2, 1)
    assert span_closure(P, 2, [poly(P, "1", 2)]).dimension == 4


def test_closure_invariant_random(rng):
    for _ in range(40):
        C = random_code(rng)
        assert C.is_closed()
        assert C.size == C.p ** C.dimension


def test_tower_examples():
    C = span_closure(P23, 4, [g2("v*u^2*(x+1)^3")])
    x41 = FpPoly.xn_minus_1(4, 2)
    assert C.tower.g[:5] == (x41,) * 5
    assert C.tower.g[5] == FpPoly(2, [1, 1]) ** 3
    full = span_closure(P23, 4, [g2("1")])
    assert full.tower.t == (0,) * 6
    assert all(g == FpPoly.one(2) for g in full.tower.g)
    C6 = span_closure(P23, 4, [g2("(x+1)^3"), g2("u*(x+1)^2"), g2("u^2*(x+1)")])
    assert C6.tower.t == (3, 2, 1, 3, 2, 1)


def test_tower_against_enumeration(rng):
    checked = 0
    while checked < 25:
        C = random_code(rng, ks=(1, 2), ns=range(1, 5))
        if C.size > 4096:
            continue
        words = list(all_codewords(C))
        for layer in range(1, 2 * C.k + 1):
            assert oracle_layer(C, layer, words) == multiples(C.tower.gi(layer), C.n)
        checked += 1


def test_tower_monotone_and_cardinality(rng):
    for _ in range(60):
        C = random_code(rng)
        t, k, n = C.tower.t, C.k, C.n
        assert all(t[i] >= t[i + 1] for i in range(k - 1))
        assert all(t[k + i] >= t[k + i + 1] for i in range(k - 1))
        assert all(t[i] >= t[k + i] for i in range(k))
        assert C.dimension == sum(n - ti for ti in t)


def test_canonical_examples():
    C = span_closure(P23, 4, [g2("x+1")])
    G = C.generators
    monos = ["1", "u", "u^2", "v", "u*v", "u^2*v"]
    for a, m in zip(G.A, monos):
        assert a == g2(f"{m}*(x+1)")
    assert not G.tails or all(f.is_zero() for (i, j), f in G.tails.items() if i != j)
    Z = span_closure(P23, 4, [])
    assert all(a.is_zero() for a in Z.generators.A)
    C2 = span_closure(P23, 4, [g2("v*(u*(x+1)^3+u^2*(x+1))"), g2("v*u^2*(x+1)^2")])
    G2 = C2.generators
    assert all(a.is_zero() for a in G2.A[:4])
    assert G2.A[4] == g2("v*(u*(x+1)^3+u^2*(x+1))")
    assert G2.A[5] == g2("v*u^2*(x+1)^2")
    assert span_closure(P23, 4, G2.A) == C2
    assert not G2.degree_violations()


def test_canonical_fixpoint_random(rng):
    for _ in range(60):
        C = random_code(rng)
        G = C.generators
        again = canonical_generators(span_closure(C.params, C.n, G.A))
        assert again.A == G.A
        assert again.tower == G.tower
        assert not G.degree_violations()


def test_generator_shapes(rng):
    for _ in range(40):
        C = random_code(rng)
        G, n, k = C.generators, C.n, C.k
        for i in range(1, 2 * k + 1):
            vec = to_vector(G.gen(i), n)
            if G.tower.ti(i) == n:
                assert not any(vec)
                continue
            assert not any(vec[: (i - 1) * n])
            assert FpPoly(C.p, block(vec, i - 1, n)) == G.tower.gi(i)
            assert G.gen(i) in C


def test_verify_structure_random(rng):
    for _ in range(80):
        C = random_code(rng)
        rep = verify_structure(C.generators)
        assert rep.passed, rep.failures()


def test_verify_structure_zero_code():
    rep = verify_structure(span_closure(P23, 4, []).generators)
    assert rep.passed


def test_verify_structure_flags_corruption():
    C = span_closure(P23, 4, [g2("(x+1)^3+u*(x+1)"), g2("u*(x+1)^2"), g2("u^2*(x+1)")])
    G = C.generators
    tails = dict(G.tails)
    # a tail of degree t_2 = 2 breaks uniqueness
    tails[1, 1] = FpPoly(2, [1, 1, 1])
    bad = replace(G, tails=tails)
    rep = verify_structure(bad)
    assert not rep.passed
    assert "degree" in {c.condition for c in rep.failures()}
    # breaking a divisibility chain is reported under condition 2
    tw = replace(G.tower, g=(FpPoly(2, [1, 1]),) + G.tower.g[1:])
    rep2 = verify_structure(replace(G, tower=tw))
    assert any(c.condition == "2" for c in rep2.failures())


def test_is_free_examples():
    flag, w = is_free(span_closure(P23, 4, [g2("x+1")]))
    assert flag and w == g2("x+1")
    flag, w = is_free(span_closure(P23, 4, [g2("v*u^2*(x+1)^3")]))
    assert not flag and w is None
    flag, w = is_free(span_closure(P23, 4, [g2("1")]))
    assert flag and w == g2("1")


def test_free_codes_have_free_size(rng):
    seen = 0
    for _ in range(300):
        C = random_code(rng, max_gens=1)
        flag, _ = is_free(C)
        if flag and not C.is_zero():
            seen += 1
            assert C.dimension == 2 * C.k * (C.n - C.tower.t[0])
    assert seen > 0


def test_coprime_form_examples():
    C = span_closure(P33, 4, [poly(P33, "(x+1)*(x+2)+u*(x+1)*(x+2)+u^2*(x+1)", 4),
                              poly(P33, "v*((x+1)*(x+2)+u*(x+2)+u^2)", 4)])
    form = coprime_form(C)
    assert form.spans_code
    assert form.F.slots[0] == C.tower.g[0]
    assert C.tower.g[3] == FpPoly(3, [1, 1]) * FpPoly(3, [2, 1])
    P = RingParams(3, 1)
    full = span_closure(P, 2, [poly(P, "1", 2)])
    form = coprime_form(full)
    assert form.F == poly(P, "1", 2) and form.G == poly(P, "v", 2)
    C6 = span_closure(P33, 4, [poly(P33, "(x+2)*(x^2+1)+u*(x+2)+u^2", 4)])
    f6 = coprime_form(C6)
    assert f6.spans_code
    assert [f6.F.slots[i] for i in range(3)] == list(C6.tower.g[:3])
    with pytest.raises(DomainError):
        coprime_form(span_closure(P23, 4, [g2("1")]))


def test_coprime_form_can_miss():
    P = RingParams(2, 2)
    C = span_closure(P, 1, [poly(P, "u+v", 1)])
    assert not coprime_form(C).spans_code


def test_express_examples():
    P = RingParams(2, 2)
    C = span_closure(P, 4, [poly(P, "v*u*(x+1)^2", 4)])
    G = C.generators
    c = poly(P, "v*u*(x+1)^3", 4)
    q = express_in_generators(c, G)
    assert q == {4: FpPoly(2, [1, 1])}
    assert express_in_generators(G.gen(4), G) == {4: FpPoly.one(2)}
    xc = (G.gen(4) * RingPoly.x_power(P, 1)).reduce_cyclic(4)
    assert express_in_generators(xc, G)[4] == FpPoly(2, [0, 1])
    with pytest.raises(DomainError):
        express_in_generators(poly(P, "v*u", 4), G)


def test_express_roundtrip_random(rng):
    for _ in range(40):
        C = random_code(rng)
        if C.is_zero():
            continue
        G = C.generators
        coeffs = [rng.randrange(C.p) for _ in C.rows]
        vec = [0] * C.width
        for a, r in zip(coeffs, C.rows):
            vec = [(x + a * y) % C.p for x, y in zip(vec, r)]
        c = from_vector(C.params, C.n, vec)
        q = express_in_generators(c, G)
        total = RingPoly.zero(C.params)
        for j, qj in q.items():
            total = total + G.gen(j) * qj
        assert total.reduce_cyclic(C.n) == c
