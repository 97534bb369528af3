import itertools
import random
import sys

import pytest

from uvcodes import RingParams, span_closure
from uvcodes.code import from_vector
from uvcodes.poly import FpPoly, RingPoly


def random_poly(params, n, rng, density=0.5):
    slots = []
    for _ in range(params.nslots):
        slots.append(FpPoly(params.p, [rng.randrange(params.p) if rng.random() < density else 0
                                       for _ in range(n)]))
    return RingPoly(params, slots)


def random_code(rng, ps=(2, 3), ks=(1, 2, 3), ns=range(1, 7), max_gens=3):
    """Random ideal: each generator is a random polynomial times 1, u, v or uv."""
    p = rng.choice(ps)
    k = rng.choice(ks)
    n = rng.choice(list(ns))
    P = RingParams(p, k)
    mults = [P.one(), P.u, P.v, P.u * P.v]
    gens = [random_poly(P, n, rng) * RingPoly.constant(rng.choice(mults))
            for _ in range(rng.randint(1, max_gens))]
    return span_closure(P, n, gens)


def all_codewords(code):
    """Every codeword vector, by plain iteration over coefficient tuples."""
    rows = code.rows
    p = code.p
    for coeffs in itertools.product(range(p), repeat=len(rows)):
        vec = [0] * code.width
        for c, r in zip(coeffs, rows):
            if c:
                vec = [(a + c * b) % p for a, b in zip(vec, r)]
        yield vec


def hamming(vec, n):
    m = len(vec) // n
    return sum(1 for e in range(n) if any(vec[s * n + e] for s in range(m)))


def naive_min_weight(code):
    return min(hamming(v, code.n) for v in all_codewords(code) if any(v))


@pytest.fixture
def rng():
    return random.Random(20240601)


def poly(params, text, n):
    from uvcodes.parser import parse_poly_expr
    return parse_poly_expr(text, params, n)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])
