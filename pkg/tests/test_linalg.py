import itertools

from uvcodes.linalg import RowSpace, matrix_rank, rref


def test_rref_and_membership():
    rows, piv = rref([[1, 1, 0], [0, 1, 1], [1, 0, 1]], 2, 3)
    assert piv == [0, 1]
    assert rows == [(1, 0, 1), (0, 1, 1)]
    S = RowSpace(2, 3, rows)
    assert [1, 1, 0] in S and [1, 0, 0] not in S


def test_rank_over_f3():
    assert matrix_rank([[1, 2, 0], [2, 1, 0], [0, 0, 1]], 3) == 2
    assert matrix_rank([], 3) == 0


def test_coordinates():
    S = RowSpace(3, 3, [[1, 0, 2], [0, 1, 1]])
    assert S.coordinates([2, 1, 2]) == {0: 2, 1: 1}
    assert S.coordinates([0, 0, 1]) is None


def test_span_size_matches_enumeration():
    rows = [[1, 2, 0, 1], [2, 1, 1, 0], [0, 0, 1, 1]]
    S = RowSpace(3, 4, rows)
    span = set()
    for c in itertools.product(range(3), repeat=3):
        span.add(tuple(sum(ci * r[j] for ci, r in zip(c, rows)) % 3 for j in range(4)))
    assert len(span) == 3 ** S.dimension
    assert all(list(v) in S for v in span)


def test_key_is_canonical():
    a = RowSpace(2, 3, [[1, 1, 0], [0, 1, 1]])
    b = RowSpace(2, 3, [[1, 0, 1], [1, 1, 0]])
    assert a == b and hash(a) == hash(b)
