import pytest
from conftest import BC, KRONECKER, KRONECKER3, build, loop

from hochlie.classify import (combinatorial_radical, criteria, l0_basis, pgl_blocks,
                              saturation_order, semisimple_quotient_model)
from hochlie.errors import Inapplicable
from hochlie.lie import series_and_center
from hochlie.linalg import Field

F2, F3 = Field.prime(2), Field.prime(3)


def setup(shape, rels=(), field=Field.rational()):
    q, z, basis, h1 = build(shape, rels, field)
    L = h1.structure_constants()
    return basis, h1, L, saturation_order(basis)


def test_saturation_free_algebra_completely_saturated():
    basis, _, _, sat = setup(KRONECKER3)
    assert sat.completely_saturated
    assert sat.equivalence == [[(0, 1, 2)]]


def test_saturation_bc_example():
    basis, _, _, sat = setup(BC, [["b", "c"]])
    a, b = 0, 1
    assert sat.le(b, a) and not sat.le(a, b)
    assert sat.equivalence[0] == [(0,), (1,)]
    assert sat.components[0] == [(0, 1)]
    assert not sat.symmetric


def test_saturation_singleton():
    _, _, _, sat = setup((["v1", "v2"], [("a", "v1", "v2")]))
    assert sat.equivalence == [[(0,)]] and sat.components == [[(0,)]]


def test_l0_basis_kronecker():
    _, h1, _, sat = setup(KRONECKER)
    b = l0_basis(h1, sat)
    assert b.off_diagonal == [(0, 1), (1, 0)]
    assert b.class_diagonals == [(0, 0)]
    assert b.extra_diagonals == []


def test_l0_basis_bc():
    _, h1, _, sat = setup(BC, [["b", "c"]])
    b = l0_basis(h1, sat)
    assert b.elements() == [(0, 1), (0, 0)]


def test_l0_basis_tree():
    _, h1, _, sat = setup((["v1", "v2", "v3"], [("a", "v1", "v2"), ("b", "v3", "v2")]))
    assert l0_basis(h1, sat).elements() == []


def test_radical_examples():
    _, h1, L, sat = setup(KRONECKER)
    assert combinatorial_radical(h1, sat, L).dim == 0
    _, h1, L, sat = setup(BC, [["b", "c"]])
    assert combinatorial_radical(h1, sat, L).dim == 2
    _, h1, L, sat = setup(KRONECKER, (), F2)
    assert combinatorial_radical(h1, sat, L).dim == 3 == h1.dim


def test_radical_needs_l_minus1_zero():
    q, z, basis, h1 = loop(3, F3)
    with pytest.raises(Inapplicable):
        combinatorial_radical(h1, saturation_order(basis))


def test_quotient_models():
    _, h1, L, sat = setup(KRONECKER)
    qm = semisimple_quotient_model(h1, sat, L, combinatorial_radical(h1, sat, L))
    assert qm.sizes == [2] and qm.matches
    _, h1, L, sat = setup(KRONECKER3, (), F3)
    qm = semisimple_quotient_model(h1, sat, L, combinatorial_radical(h1, sat, L))
    assert qm.sizes == [3] and qm.matches
    _, h1, L, sat = setup(BC, [["b", "c"]])
    qm = semisimple_quotient_model(h1, sat, L, combinatorial_radical(h1, sat, L))
    assert qm.sizes == [] and qm.quotient.dim == 0


def test_char2_drops_two_element_blocks():
    _, _, _, sat = setup(KRONECKER, (), F2)
    assert pgl_blocks(sat, F2) == []
    assert pgl_blocks(sat, Field.rational()) == [(0, 1)]


def verdicts(shape, rels=(), field=Field.rational()):
    basis, h1, L, sat = setup(shape, rels, field)
    return criteria(basis, h1, L, sat)


def test_criteria_witt_loop():
    r = verdicts((["v"], [("a", "v", "v")]), [["a"] * 3], F3)
    assert r.value("simple") and r.verdicts["model"]["value"] == "W(1,1)"
    assert r.verdicts["loop_case"]["evidence"]["witt_match"]
    assert r.summary() == "simple ≅ W(1,1)"


def test_criteria_kronecker():
    r = verdicts(KRONECKER)
    assert r.value("semisimple") and r.value("simple")
    assert r.verdicts["model"]["value"] == "sl(2)"
    assert all(v is not False for v in r.brute_force_agreement.values())


def test_criteria_bc_example():
    r = verdicts(BC, [["b", "c"]])
    assert r.value("solvable") and not r.value("nilpotent") and not r.value("semisimple")
    assert r.evidence["derived_series_dims"] == [2, 1, 0]
    assert r.evidence["lower_central_series_dims"] == [2, 1]
    # component sums (a,a)+(b,b) and (c,c) are both coboundaries, so the center is 0
    assert r.evidence["center_dim"] == 0


def test_criteria_pgl3_char3():
    r = verdicts(KRONECKER3, (), F3)
    assert r.value("semisimple") and not r.value("simple")
    assert r.verdicts["simple"]["brute_force"] is False
    assert r.evidence["derived_algebra_dim"] == 7


def test_zero_algebra():
    r = verdicts((["v1", "v2"], [("a", "v1", "v2")]))
    assert r.dim == 0 and r.verdicts["zero"]["value"]
    assert not r.value("semisimple") and not r.value("simple")
    assert r.summary() == "zero algebra"


def test_inapplicable_guard_with_cycle_in_char_p():
    shape = (["u", "v"], [("a", "u", "v"), ("b", "v", "u")])
    r = verdicts(shape, [["a", "b", "a"], ["b", "a", "b"]], F3)
    assert r.verdicts["nilpotent"]["status"] == "inapplicable"
    assert r.verdicts["nilpotent"]["brute_force"] is not None


def test_loop_not_semisimple_cases():
    for m, p in ((4, 2), (2, 2), (6, 3)):
        r = verdicts((["v"], [("a", "v", "v")]), [["a"] * m], Field.prime(p))
        assert r.value("semisimple") is False
        assert r.verdicts["semisimple"]["brute_force"] is False


def test_center_lemma_recorded():
    r = verdicts(BC, [["b", "c"]])
    assert r.evidence["center_lemma"] == {"center_of_L0_is_component_sums": True,
                                          "center_inside_L0": True}


def test_kronecker_f2_solvable():
    r = verdicts(KRONECKER, (), F2)
    assert r.value("solvable") and series_and_center(setup(KRONECKER, (), F2)[2]).is_solvable
