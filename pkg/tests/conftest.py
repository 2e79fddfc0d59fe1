import pytest

from hochlie.cohomology import GradedH1
from hochlie.linalg import Field
from hochlie.quiver import Quiver, enumerate_basis, relations_from_names

QQ = Field.rational()

LOOP = (["v"], [("a", "v", "v")])
KRONECKER = (["v1", "v2"], [("a", "v1", "v2"), ("b", "v1", "v2")])
KRONECKER3 = (["v1", "v2"], [("a", "v1", "v2"), ("b", "v1", "v2"), ("c", "v1", "v2")])
A2 = (["v1", "v2"], [("a", "v1", "v2")])
BC = (["v1", "v2", "v3"], [("a", "v1", "v2"), ("b", "v1", "v2"), ("c", "v2", "v3")])


def build(shape, rels=(), field=QQ):
    q = Quiver(*shape)
    z = relations_from_names(q, rels)
    basis = enumerate_basis(q, z)
    return q, z, basis, GradedH1(basis, field)


def loop(m, field=QQ):
    return build(LOOP, [["a"] * m], field)


@pytest.fixture
def kronecker():
    return build(KRONECKER)
