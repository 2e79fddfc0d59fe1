import pytest

from hochlie.errors import LieAxiomViolation, WrongCharacteristic
from hochlie.lie import (LieAlgebra, compare, direct_sum, killing_radical_char0,
                         killing_semisimple_char0, pgl, pgl_to_sl_images, series_and_center, sl,
                         witt)
from hochlie.linalg import Field

Q = Field.rational()
F3 = Field.prime(3)


def test_witt_p3():
    W = witt(3)
    assert W.dim == 3
    # basis k is e_{k-1}: [e_-1, e_1] = 2 e_0
    assert W.basis_bracket(0, 2) == {1: 2}


def test_witt_is_simple_for_p5():
    W = witt(5)
    s = series_and_center(W)
    assert s.center.dim == 0
    assert s.derived_dims() == [5]


def test_pgl2_matches_sl2():
    assert compare(pgl(2, Q), sl(2, Q), pgl_to_sl_images(2, Q))


def test_pgl3_matches_sl3_over_q():
    assert compare(pgl(3, Q), sl(3, Q), pgl_to_sl_images(3, Q))


def test_compare_dim_mismatch():
    assert not compare(sl(2, Q), pgl(3, Q), [{0: 1}] * 3)


def test_sl2_series():
    s = series_and_center(sl(2, Q))
    assert s.derived_dims() == [3]
    assert s.center.dim == 0
    assert not s.is_solvable


def test_abelian_series():
    A = LieAlgebra(Q, 4, {})
    s = series_and_center(A)
    assert s.derived_dims() == [4, 0]
    assert s.center.dim == 4
    assert s.is_abelian and s.is_nilpotent


def test_killing():
    assert killing_semisimple_char0(sl(2, Q))
    assert not killing_semisimple_char0(LieAlgebra(Q, 1, {}))
    with pytest.raises(WrongCharacteristic):
        killing_semisimple_char0(sl(2, F3))


def test_killing_radical_of_product():
    ab = LieAlgebra(Q, 1, {})
    L = direct_sum([sl(2, Q), ab])
    assert killing_radical_char0(L).dim == 1


def test_pgl3_char3_not_perfect():
    s = series_and_center(pgl(3, F3))
    assert s.center.dim == 0
    assert s.derived_dims() == [8, 7]


def test_jacobi_is_checked():
    with pytest.raises(LieAxiomViolation):
        # the Jacobi sum on (e0, e1, e2) is -e0
        LieAlgebra(Q, 3, {(0, 1): {1: 1}, (0, 2): {1: 1}, (1, 2): {0: 1}})


def test_quotient_and_restrict():
    L = direct_sum([sl(2, Q), LieAlgebra(Q, 1, {})])
    ideal = L.span([{3: 1}])
    assert L.is_ideal(ideal)
    quot, _ = L.quotient(ideal)
    assert compare(sl(2, Q), quot, [{0: 1}, {1: 1}, {2: 1}])
    sub = L.restrict(L.span([{0: 1}, {1: 1}, {2: 1}]))
    assert sub.dim == 3
