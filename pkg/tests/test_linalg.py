from fractions import Fraction

import pytest

from hochlie.errors import NotPrime, NotSubspace
from hochlie.linalg import ExactMatrix, Field, QuotientSpace, Subspace, image, kernel, rref

Q = Field.rational()
F2 = Field.prime(2)


def test_field_basics():
    assert Q(Fraction(2, 4)) == Fraction(1, 2)
    f5 = Field.prime(5)
    assert f5(-1) == 4
    assert f5(Fraction(1, 2)) == 3
    assert f5.inv(2) == 3
    assert f5.name == "GF(5)" and Q.name == "QQ"
    with pytest.raises(NotPrime):
        Field.prime(4)


def test_zero_matrix():
    m = ExactMatrix.zeros(Q, 2, 3)
    assert kernel(m).dim == 3
    assert image(m).dim == 0


def test_identity():
    assert kernel(ExactMatrix.identity(Q, 3)).dim == 0
    assert image(ExactMatrix.identity(Q, 3)).dim == 3


def test_all_ones_mod_2():
    m = ExactMatrix.from_dense(F2, [[1, 1], [1, 1]])
    row, rank = rref(m)
    assert rank == 1
    k = kernel(m)
    assert k.dim == 1 and k.basis[0] == {0: 1, 1: 1}


def test_rank_nullity_and_kernel_vectors():
    m = ExactMatrix.from_dense(Q, [[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 0, 1]])
    k = kernel(m)
    assert k.dim + m.rank() == 4
    for v in k.basis:
        assert m.apply(v) == {}


def test_rref_idempotent():
    m = ExactMatrix.from_dense(Q, [[2, 4, 1], [1, 0, 1], [3, 4, 2]])
    s, _ = rref(m)
    again, _ = rref(ExactMatrix(Q, s.dim, 3, [dict(v) for v in s.basis]))
    assert again == s


def test_subspace_is_canonical():
    a = Subspace(Q, 3, [{0: 1, 1: 1}, {1: 1, 2: 1}])
    b = Subspace(Q, 3, [{0: 1, 2: -1}, {0: 2, 1: 2}])
    assert a == b
    assert a.pivots == b.pivots


def test_quotient_examples():
    v = Subspace(Q, 2, [{0: 1}, {1: 1}])
    w = Subspace(Q, 2, [{0: 1, 1: 1}])
    qs = QuotientSpace(v, w)
    assert qs.dim == 1
    r0, r1 = qs.reduce({0: 1}), qs.reduce({1: 1})
    assert r0 == {k: -c for k, c in r1.items()}
    assert QuotientSpace(v, v).dim == 0
    assert QuotientSpace(v, v).reduce({0: 3}) == {}
    ident = QuotientSpace(v, Subspace(Q, 2))
    assert ident.reduce({0: 2, 1: 5}) == {0: 2, 1: 5}


def test_quotient_requires_subspace():
    v = Subspace(Q, 2, [{0: 1}])
    w = Subspace(Q, 2, [{1: 1}])
    with pytest.raises(NotSubspace):
        QuotientSpace(v, w)


def test_representatives_reduce_to_themselves():
    v = Subspace(Q, 4, [{0: 1, 1: 2}, {2: 1}, {3: 1, 0: 1}])
    w = Subspace(Q, 4, [{0: 1, 1: 2, 2: 1}])
    qs = QuotientSpace(v, w)
    for k, r in enumerate(qs.representatives):
        assert qs.reduce(r) == {k: 1}
    assert qs.dim == v.dim - w.dim


def test_prime_field_entries_reduced():
    m = ExactMatrix.from_dense(Field.prime(3), [[4, -1], [7, 5]])
    for row in m.rows:
        assert all(0 <= c < 3 for c in row.values())
