import pytest

from hochlie.crowns import CrownSpec, crown_quiver, crown_relations, group_algebra, theorem_verdicts
from hochlie.errors import BadSpec


def test_crown_relations_one_per_vertex():
    q = crown_quiver(3)
    z = crown_relations(q, 4)
    assert len(z) == 3 and all(len(p) == 4 for p in z)


def test_bad_specs():
    for args in ((4, 1, (1,)), (3, 0, (1,)), (3, 1, ()), (3, 1, (0,))):
        with pytest.raises(BadSpec):
            CrownSpec(*args)


def test_cyclic_group_of_order_p():
    r = group_algebra(CrownSpec(3, 1, (1,)))
    assert r["h1"]["dim"] == 3
    assert r["verdict"] == "simple ≅ W(1,1)"
    assert r["group_algebra"]["agree"]


def test_order_two_not_semisimple():
    r = group_algebra(CrownSpec(2, 1, (1,)))
    assert r["classification"]["semisimple"]["brute_force"] is False
    assert r["group_algebra"]["agree"]


def test_s3_not_semisimple():
    r = group_algebra(CrownSpec(3, 1, (2,)))
    ga = r["group_algebra"]
    assert ga["computed"]["semisimple"] is False
    part = ga["crown_reports"][0]
    assert part["dim"] == part["oracle"]["dim_direct"] == 1


def test_product_law():
    r = group_algebra(CrownSpec(3, 1, (1, 2)))
    ga = r["group_algebra"]
    assert ga["sum_of_crown_dims"] == r["h1"]["dim"] == 4
    assert ga["block_diagonal"]


def test_a_greater_than_one():
    r = group_algebra(CrownSpec(3, 2, (1,)))
    assert r["group_algebra"]["theorem"]["semisimple"] is False
    assert r["group_algebra"]["agree"]


def test_theorem_verdicts():
    assert theorem_verdicts(CrownSpec(5, 1, (1,))) == {"semisimple": True, "simple": True}
    assert theorem_verdicts(CrownSpec(5, 1, (1, 1))) == {"semisimple": True, "simple": False}
