"""Acceptance criteria 1-9, each at exact equality, one printed line per criterion."""

import contextlib
import os
import subprocess
import sys
from itertools import combinations

import pytest

from hochlie.analysis import analyze, analyze_component
from hochlie.classify import combinatorial_radical, saturation_order, semisimple_quotient_model
from hochlie.cohomology import GradedH1
from hochlie.corpus import named_corpus, random_corpus
from hochlie.crowns import CrownSpec, group_algebra
from hochlie.lie import (compare, killing_radical_char0, killing_semisimple_char0, pgl,
                         series_and_center, witt)
from hochlie.linalg import Field
from hochlie.oracle import build_algebra, cross_check
from hochlie.parser import parse_input
from hochlie.quiver import Path, enumerate_basis, split_components

QQ = Field.rational()


@pytest.fixture
def verdict(capsys):
    @contextlib.contextmanager
    def run(n, title):
        ok = False
        try:
            yield
            ok = True
        finally:
            with capsys.disabled():
                print(f"\n[acceptance] criterion {n}: {'PASS' if ok else 'FAIL'} - {title}")
    return run


def loop_doc(m, field):
    head = "field rational\n" if field.is_rational else f"field prime {field.characteristic}\n"
    return parse_input(head + "vertex v\narrow a : v -> v\nrelation " + " ".join(["a"] * m) + "\n")


def kronecker_doc(n, field):
    head = "field rational\n" if field.is_rational else f"field prime {field.characteristic}\n"
    names = "abcdefgh"[:n]
    return parse_input(head + "vertex v1 v2\n" + "".join(f"arrow {x} : v1 -> v2\n" for x in names))


def component(doc):
    ((sub, rels, _, _),) = split_components(doc.quiver, doc.relations)
    return analyze_component(sub, rels, doc.field)


@pytest.fixture(scope="module")
def corpus():
    items = named_corpus() + random_corpus(60, seed=2024)
    out = []
    for name, doc in items:
        basis = enumerate_basis(doc.quiver, doc.relations)
        h1 = GradedH1(basis, doc.field)
        out.append((name, doc, basis, h1, h1.structure_constants()))
    return out


def test_criterion_1_witt(verdict):
    with verdict(1, "truncated loop gives W(1,1) for (3,3),(5,5); (4,2),(2,2) not semisimple"):
        for p in (3, 5):
            res = component(loop_doc(p, Field.prime(p)))
            assert res.h1.dim == p
            assert res.h1.dims_by_degree() == {d: 1 for d in range(-1, p - 1)}
            images = [res.h1.coordinates(res.h1.vector({(0, Path(0, 0, (0,) * i)): 1})) for i in range(p)]
            assert compare(witt(p), res.lie, images)
            assert res.classification.value("simple") is True
        for m in (4, 2):
            res = component(loop_doc(m, Field.prime(2)))
            v = res.classification.verdicts["semisimple"]
            assert v["value"] is False and v["brute_force"] is False


def test_criterion_2_sl(verdict):
    with verdict(2, "n-Kronecker over QQ is sl(n) for n = 2, 3; Killing nonsingular; oracle passes"):
        for n in (2, 3):
            doc = kronecker_doc(n, QQ)
            res = component(doc)
            assert res.h1.dim == n * n - 1
            assert res.classification.value("simple") is True
            assert res.classification.verdicts["model"]["value"] == f"sl({n})"
            assert killing_semisimple_char0(res.lie)
            assert cross_check(res.h1, res.lie, build_algebra(res.basis, QQ)).passed


def test_criterion_3_pgl_char3(verdict):
    with verdict(3, "3-Kronecker over GF(3): semisimple not simple, pgl(3) model, center 0, [L,L] = L"):
        F3 = Field.prime(3)
        res = component(kronecker_doc(3, F3))
        c = res.classification
        assert c.value("semisimple") is True and c.value("simple") is False
        sat = saturation_order(res.basis)
        rad = combinatorial_radical(res.h1, sat, res.lie)
        qm = semisimple_quotient_model(res.h1, sat, res.lie, rad)
        assert qm.sizes == [3] and qm.matches
        assert compare(pgl(3, F3), qm.quotient, qm.images)
        s = series_and_center(res.lie)
        assert s.center.dim == 0
        derived = res.lie.bracket_span(res.lie.full(), res.lie.full())
        assert derived == res.lie.full(), f"dim [L,L] = {derived.dim}, dim L = {res.lie.dim}"


def test_criterion_4_oracle(verdict, corpus):
    with verdict(4, "oracle dims and bracket transport agree on the corpus"):
        randoms = [c for c in corpus if c[0].startswith("random")]
        assert len(randoms) >= 50
        assert {c[1].field for c in randoms} == {QQ, Field.prime(2), Field.prime(3)}
        for _, doc, basis, _, _ in randoms:
            q = doc.quiver
            assert q.n_vertices <= 4 and q.n_arrows <= 6 and len(basis) <= 40
            assert all(2 <= len(p) <= 3 for p in doc.relations)
        names = {c[0] for c in corpus}
        assert {"A2", "A3", "kronecker2", "kronecker3", "loop3_F3", "loop4_F2", "loop3_QQ",
                "bc_example", "crown2_F3"} <= names
        for name, doc, basis, h1, L in corpus:
            r = cross_check(h1, L, build_algebra(basis, doc.field))
            assert r.dim_minimal == r.dim_direct, name
            assert r.pairs_checked == L.dim * (L.dim - 1) // 2


def test_criterion_5_laws(verdict, corpus):
    with verdict(5, "complex and Lie algebra laws on every corpus instance"):
        for name, doc, basis, h1, L in corpus:
            assert (h1.psi1 @ h1.psi0).is_zero(), name
            L.check_jacobi()
            for i, j in combinations(range(L.dim), 2):
                assert L.basis_bracket(j, i) == {k: L.field(-c) for k, c in L.basis_bracket(i, j).items()}
                for k in L.basis_bracket(i, j):
                    assert L.degrees[k] == L.degrees[i] + L.degrees[j]
            for x, y in combinations(h1.kernel.basis, 2):
                assert h1.kernel.contains(h1.bracket(x, y))
            for x in h1.kernel.basis:
                for y in h1.image.basis:
                    assert h1.image.contains(h1.bracket(x, y))


def test_criterion_6_criteria_vs_brute_force(verdict, corpus):
    with verdict(6, "combinatorial criteria match brute force wherever the guards hold"):
        for name, doc, _, _, _ in corpus:
            for sub, rels, _, _ in split_components(doc.quiver, doc.relations):
                res = analyze_component(sub, rels, doc.field)
                v = res.classification.verdicts
                s = series_and_center(res.lie)
                if v["solvable"]["status"] == "applicable":
                    assert v["solvable"]["value"] == s.is_solvable, name
                if v["nilpotent"]["status"] == "applicable":
                    assert v["nilpotent"]["value"] == s.is_nilpotent, name
                if v["abelian"]["status"] == "applicable":
                    euler = sub.n_arrows - sub.n_vertices + 1
                    assert v["abelian"]["value"] == res.lie.is_abelian() == (res.h1.dim == euler), name
                if v["reductive"]["status"] == "applicable":
                    if doc.field.is_rational:
                        rad = killing_radical_char0(res.lie)
                    else:
                        rad = combinatorial_radical(res.h1, saturation_order(res.basis), res.lie)
                    assert v["reductive"]["value"] == (rad == s.center), name
                if doc.field.is_rational and res.h1.dim and v["semisimple"]["status"] == "applicable":
                    rad = combinatorial_radical(res.h1, saturation_order(res.basis), res.lie)
                    assert v["semisimple"]["value"] == killing_semisimple_char0(res.lie) == (rad.dim == 0), name


def test_criterion_7_radical(verdict, corpus):
    with verdict(7, "combinatorial radical is a solvable ideal with centerless quotient"):
        for name, doc, _, _, _ in corpus:
            for sub, rels, _, _ in split_components(doc.quiver, doc.relations):
                res = analyze_component(sub, rels, doc.field)
                if res.h1.piece_dim(-1):
                    continue
                rad = combinatorial_radical(res.h1, saturation_order(res.basis), res.lie)
                assert res.lie.is_ideal(rad), name
                assert series_and_center(res.lie.restrict(rad)).is_solvable, name
                quot, _ = res.lie.quotient(rad)
                assert series_and_center(quot).center.dim == 0, name
                if doc.field.is_rational:
                    assert rad == killing_radical_char0(res.lie), name


def test_criterion_8_group_algebras(verdict):
    with verdict(8, "crown algebras: W(1,1) for C_3, C_5; C_2 and S_3 not semisimple; product law"):
        for p in (3, 5):
            r = group_algebra(CrownSpec(p, 1, (1,)))
            assert r["verdict"] == "simple ≅ W(1,1)" and r["h1"]["dim"] == p
        r = group_algebra(CrownSpec(2, 1, (1,)))
        assert r["classification"]["semisimple"]["brute_force"] is False
        assert r["group_algebra"]["theorem"]["semisimple"] is False
        r = group_algebra(CrownSpec(3, 1, (2,)))
        part = r["group_algebra"]["crown_reports"][0]
        assert r["classification"]["semisimple"]["brute_force"] is False
        assert part["dim"] == part["oracle"]["dim_direct"] == r["h1"]["dim"]
        r = group_algebra(CrownSpec(3, 1, (1, 2)))
        ga = r["group_algebra"]
        assert ga["block_diagonal"]
        assert r["h1"]["dim"] == sum(c["dim"] for c in ga["crown_reports"])


def test_criterion_9_determinism(verdict, tmp_path):
    with verdict(9, "identical inputs give byte-identical text and JSON reports"):
        f = tmp_path / "k.txt"
        f.write_text("field prime 3\nvertex v1 v2\narrow a : v1 -> v2\narrow b : v1 -> v2\n"
                     "arrow c : v1 -> v2\n")
        outs = []
        for seed in ("0", "1", "2"):
            env = dict(os.environ, PYTHONHASHSEED=seed)
            for extra in ([], ["--json"]):
                cmd = [sys.executable, "-m", "hochlie", "analyze", str(f), "--oracle", *extra]
                outs.append(subprocess.run(cmd, env=env, capture_output=True, check=True).stdout)
            g = [sys.executable, "-m", "hochlie", "group-algebra", "--p", "3", "--crowns", "1,2", "--json"]
            outs.append(subprocess.run(g, env=env, capture_output=True, check=True).stdout)
        assert outs[0:3] == outs[3:6] == outs[6:9]
        doc = kronecker_doc(3, QQ)
        assert analyze(doc).render("json") == analyze(doc).render("json")
