from itertools import combinations

from conftest import A2, BC, KRONECKER, build, loop

from hochlie.linalg import Field

F3 = Field.prime(3)


def col(h1, arrow, word):
    q = h1.quiver
    path = q.path(word) if word else q.trivial(q.arrows[q.arrow_id(arrow)].source)
    return h1.vector({(arrow, path): 1})


def test_psi0_a2():
    q, _, basis, h1 = build(A2)
    aa = col(h1, "a", ["a"])
    assert h1.psi0.column(0) == aa
    assert h1.psi0.column(1) == {k: -c for k, c in aa.items()}


def test_psi0_loop_is_zero_on_vertex():
    _, _, _, h1 = loop(3)
    assert h1.psi0.column(0) == {}


def test_psi0_kronecker():
    _, _, _, h1 = build(KRONECKER)
    want = dict(col(h1, "a", ["a"]))
    want.update(col(h1, "b", ["b"]))
    assert h1.psi0.column(0) == want


def test_psi1_loop_over_q_and_f3():
    _, _, _, h1 = loop(3)
    j = h1.bases.c1.index[(h1.quiver.arrow_path(0), h1.quiver.trivial(0))]
    assert h1.psi1.column(j) == {h1.bases.c2.index[(h1.basis.relations[0], h1.quiver.path(["a", "a"]))]: 3}
    _, _, _, h1 = loop(3, F3)
    assert h1.psi1.column(j) == {}


def test_hereditary_psi1_empty():
    _, _, _, h1 = build(KRONECKER)
    assert h1.psi1.nrows == 0
    assert h1.kernel.dim == len(h1.bases.c1)


def test_dimensions():
    assert build(A2)[3].dim == 0
    k = build(KRONECKER)[3]
    assert k.dim == 3 and k.dims_by_degree() == {-1: 0, 0: 3}
    w = loop(3, F3)[3]
    assert w.dims_by_degree() == {-1: 1, 0: 1, 1: 1}
    assert w.kernel.dim == len(w.bases.c1) and w.image.dim == 0


def test_bracket_examples():
    _, _, _, h1 = build(KRONECKER)
    aa, ab, ba, bb = (col(h1, "a", ["a"]), col(h1, "a", ["b"]), col(h1, "b", ["a"]), col(h1, "b", ["b"]))
    assert h1.bracket(aa, ab) == {k: -c for k, c in ab.items()}
    want = dict(bb)
    want.update({k: -c for k, c in aa.items()})
    assert h1.bracket(ab, ba) == want
    _, _, _, w = loop(3, F3)
    a2, a1 = col(w, "a", ["a", "a"]), col(w, "a", ["a"])
    assert w.bracket(a2, a1) == {k: F3(-c) for k, c in a2.items()}


def test_witt_constants():
    _, _, _, h1 = loop(3, F3)
    L = h1.structure_constants()
    # x_k is the class of (a, a^k), i.e. e_{k-1}
    assert L.basis_bracket(0, 1) == {0: 1}
    assert L.basis_bracket(0, 2) == {1: 2}
    assert L.basis_bracket(1, 2) == {2: 1}


def test_kronecker_is_sl2():
    from hochlie.lie import compare, sl
    _, _, _, h1 = build(KRONECKER)
    L = h1.structure_constants()
    ab, ba, bb = (h1.coordinates(col(h1, "a", ["b"])), h1.coordinates(col(h1, "b", ["a"])),
                  h1.coordinates(col(h1, "b", ["b"])))
    # e -> -(a,b), f -> -(b,a), h -> 2(b,b) (since (a,a) = -(b,b) in H1)
    images = [{k: -c for k, c in ab.items()}, {k: -c for k, c in ba.items()},
              {k: 2 * c for k, c in bb.items()}]
    assert compare(sl(2, h1.field), L, images)


def test_complex_laws_on_examples():
    for h1 in (build(BC, [["b", "c"]])[3], loop(4, Field.prime(2))[3], build(KRONECKER)[3]):
        assert (h1.psi1 @ h1.psi0).is_zero()
        for x in h1.kernel.basis:
            for y in h1.kernel.basis:
                assert h1.kernel.contains(h1.bracket(x, y))
            for i in h1.image.basis:
                assert h1.image.contains(h1.bracket(x, i))


def test_representatives_are_homogeneous_and_graded():
    h1 = loop(5, Field.prime(5))[3]
    L = h1.structure_constants()
    for r in h1.representatives:
        assert h1.degree_of(r) is not None
    for i, j in combinations(range(L.dim), 2):
        for k in L.basis_bracket(i, j):
            assert L.degrees[k] == L.degrees[i] + L.degrees[j]


def test_bracket_independent_of_representative():
    h1 = build(BC, [["b", "c"]])[3]
    shift = h1.image.basis[0]
    x, y = h1.representatives
    moved = dict(x)
    for k, c in shift.items():
        moved[k] = moved.get(k, 0) + c
    moved = {k: c for k, c in moved.items() if c}
    assert h1.coordinates(h1.bracket(x, y)) == h1.coordinates(h1.bracket(moved, y))


def test_labels():
    h1 = build(KRONECKER)[3]
    assert h1.labels() == ["-(b, b)", "(a, b)", "(b, a)"]
