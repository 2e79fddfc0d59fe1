"""Finite-dimensional Lie algebras given by structure constants.

Generic brute-force analysis lives here: derived and lower central series,
center, ideals, quotients, the Killing form, and the model algebras W(1,1),
sl(n) and pgl(n) together with a structure-constant isomorphism test.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import BadSpec, LieAxiomViolation, WrongCharacteristic
from .linalg import (ExactMatrix, Field, QuotientSpace, Subspace, Vector, axpy,
                     combine, kernel, scale)


class LieAlgebra:
    """Lie algebra on basis ``e_0..e_{n-1}`` with ``[e_i, e_j] = table[i, j]``.

    ``table`` holds sparse vectors for ``i < j``; antisymmetry supplies the
    rest.  Antisymmetry and the Jacobi identity are verified on construction
    unless ``check=False``.
    """

    def __init__(self, field: Field, dim: int, table: dict, labels: Sequence[str] | None = None,
                 degrees: Sequence[int] | None = None, check: bool = True):
        self.field = field
        self.dim = dim
        self.labels = tuple(labels) if labels is not None else tuple(f"e{i}" for i in range(dim))
        self.degrees = tuple(degrees) if degrees is not None else None
        self._table: dict = {}
        for (i, j), v in table.items():
            v = {k: field(c) for k, c in v.items() if field(c)}
            if i == j:
                if v:
                    raise LieAxiomViolation(f"[e{i}, e{i}] != 0")
                continue
            if i > j:
                i, j, v = j, i, scale(field, -1, v)
                prev = self._table.get((i, j))
                if prev is not None and prev != v:
                    raise LieAxiomViolation(f"antisymmetry fails for ({i}, {j})")
            if v:
                self._table[(i, j)] = v
        if check:
            self.check_jacobi()

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, field={self.field.name})"

    def basis_bracket(self, i: int, j: int) -> Vector:
        if i == j:
            return {}
        if i < j:
            return dict(self._table.get((i, j), {}))
        return scale(self.field, -1, self._table.get((j, i), {}))

    def bracket(self, x: Vector, y: Vector) -> Vector:
        f = self.field
        out: Vector = {}
        for i, a in x.items():
            for j, b in y.items():
                if i == j:
                    continue
                v = self._table.get((i, j) if i < j else (j, i))
                if v:
                    axpy(f, out, a * b if i < j else -a * b, v)
        return out

    def structure_constants(self) -> dict:
        """Nonzero ``[e_i, e_j]`` for ``i < j``."""
        return {k: dict(v) for k, v in sorted(self._table.items())}

    def is_abelian(self) -> bool:
        return not self._table

    def check_jacobi(self) -> None:
        n = self.dim
        e = [{i: self.field(1)} for i in range(n)]
        for i, j, k in combinations(range(n), 3):
            s = self.bracket(e[i], self.basis_bracket(j, k))
            axpy(self.field, s, 1, self.bracket(e[j], self.basis_bracket(k, i)))
            axpy(self.field, s, 1, self.bracket(e[k], self.basis_bracket(i, j)))
            if s:
                raise LieAxiomViolation(f"Jacobi identity fails on ({i}, {j}, {k})")

    def ad(self, x: Vector) -> ExactMatrix:
        """Matrix of ``y -> [x, y]`` acting on column vectors."""
        cols = [self.bracket(x, {j: self.field(1)}) for j in range(self.dim)]
        return ExactMatrix.from_columns(self.field, self.dim, cols)

    def full(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def zero(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def span(self, vectors) -> Subspace:
        return Subspace(self.field, self.dim, vectors)

    def bracket_span(self, u: Subspace, v: Subspace) -> Subspace:
        return self.span(self.bracket(a, b) for a in u.basis for b in v.basis)

    def is_subalgebra(self, s: Subspace) -> bool:
        return self.bracket_span(s, s).is_subspace_of(s)

    def is_ideal(self, s: Subspace) -> bool:
        return self.bracket_span(self.full(), s).is_subspace_of(s)

    def restrict(self, s: Subspace, labels: Sequence[str] | None = None) -> "LieAlgebra":
        """Structure constants of a subalgebra in the RREF basis of ``s``."""
        table = {}
        for i, j in combinations(range(s.dim), 2):
            table[(i, j)] = s.coordinates(self.bracket(s.basis[i], s.basis[j]))
        return LieAlgebra(self.field, s.dim, table, labels=labels)

    def quotient(self, ideal: Subspace) -> tuple["LieAlgebra", QuotientSpace]:
        q = QuotientSpace(self.full(), ideal)
        reps = q.representatives
        table = {}
        for i, j in combinations(range(len(reps)), 2):
            table[(i, j)] = q.reduce(self.bracket(reps[i], reps[j]))
        return LieAlgebra(self.field, q.dim, table), q


# -- series, center --------------------------------------------------------------


def derived_series(L: LieAlgebra, start: Subspace | None = None) -> list:
    """``S, [S,S], [[S,S],[S,S]], ...`` until it stabilises."""
    cur = start if start is not None else L.full()
    out = [cur]
    while True:
        nxt = L.bracket_span(cur, cur)
        if nxt == cur:
            return out
        out.append(nxt)
        cur = nxt


def lower_central_series(L: LieAlgebra) -> list:
    cur = L.full()
    out = [cur]
    while True:
        nxt = L.bracket_span(L.full(), cur)
        if nxt == cur:
            return out
        out.append(nxt)
        cur = nxt


def center(L: LieAlgebra) -> Subspace:
    """Solutions of ``[x, e_j] = 0`` for every basis vector ``e_j``."""
    n = L.dim
    rows = []
    for j in range(n):
        # coefficient of e_k in [x, e_j] is sum_i x_i c(i, j)_k
        block: dict = {}
        for i in range(n):
            for k, c in L.basis_bracket(i, j).items():
                block.setdefault(k, {})[i] = c
        rows.extend(block.values())
    m = ExactMatrix(L.field, len(rows), n, rows)
    return kernel(m)


@dataclass
class SeriesReport:
    derived: list
    lower_central: list
    center: Subspace
    is_solvable: bool
    is_nilpotent: bool
    is_abelian: bool

    def derived_dims(self) -> list:
        return [s.dim for s in self.derived]

    def lower_central_dims(self) -> list:
        return [s.dim for s in self.lower_central]


def series_and_center(L: LieAlgebra) -> SeriesReport:
    der = derived_series(L)
    lcs = lower_central_series(L)
    return SeriesReport(der, lcs, center(L), der[-1].dim == 0, lcs[-1].dim == 0, L.is_abelian())


def is_solvable_subspace(L: LieAlgebra, s: Subspace) -> bool:
    return derived_series(L, s)[-1].dim == 0


# -- Killing form (characteristic zero) ------------------------------------------------------


def killing_matrix(L: LieAlgebra) -> ExactMatrix:
    f = L.field
    ads = [L.ad({i: f(1)}).rows for i in range(L.dim)]
    n = L.dim
    out = ExactMatrix.zeros(f, n, n)
    for i in range(n):
        for j in range(i, n):
            # trace(ad_i ad_j) = sum_{r,s} ad_i[r][s] * ad_j[s][r]
            t = 0
            for r, row in enumerate(ads[i]):
                for s, v in row.items():
                    w = ads[j][s].get(r)
                    if w:
                        t += v * w
            out[i, j] = t
            out[j, i] = t
    return out


def killing_semisimple_char0(L: LieAlgebra) -> bool:
    """Cartan's criterion: nondegenerate Killing form.  Vacuously true in dim 0."""
    if not L.field.is_rational:
        raise WrongCharacteristic("Killing criterion is only used over QQ")
    return killing_matrix(L).rank() == L.dim


def killing_radical_char0(L: LieAlgebra) -> Subspace:
    """Solvable radical over QQ: the Killing-orthogonal complement of [L, L]."""
    if not L.field.is_rational:
        raise WrongCharacteristic("Killing radical is only used over QQ")
    k = killing_matrix(L)
    derived = L.bracket_span(L.full(), L.full())
    rows = [k.transpose().apply(d) for d in derived.basis]
    return kernel(ExactMatrix(L.field, len(rows), L.dim, rows))


# -- model algebras ---------------------------------------------------------------------------


def witt(p: int) -> LieAlgebra:
    """W(1,1) = Der(k[X]/(X^p)) over GF(p), basis e_{-1}, ..., e_{p-2}.

    ``[e_i, e_j] = (j - i) e_{i+j}``, zero when ``i + j`` is out of range.
    Basis vector ``k`` of the result is ``e_{k-1}``.
    """
    f = Field.prime(p)
    table = {}
    for i, j in combinations(range(-1, p - 1), 2):
        if -1 <= i + j <= p - 2 and (j - i) % p:
            table[(i + 1, j + 1)] = {i + j + 1: f(j - i)}
    return LieAlgebra(f, p, table, labels=[f"e{i}" for i in range(-1, p - 1)])


def _gl_bracket(n: int, p: int, q: int, r: int, s: int) -> dict:
    """[e_pq, e_rs] = delta_qr e_ps - delta_sp e_rq, as {(row, col): coeff}."""
    out: dict = {}
    if q == r:
        out[(p, s)] = out.get((p, s), 0) + 1
    if s == p:
        out[(r, q)] = out.get((r, q), 0) - 1
    return {k: v for k, v in out.items() if v}


def pgl(n: int, field: Field) -> LieAlgebra:
    """gl(n)/k1 with basis e_pq (p != q) then e_pp (p < n-1); e_{n-1,n-1} = -sum e_pp."""
    if n < 1:
        raise BadSpec("pgl needs n >= 1")
    keys = [(p, q) for p in range(n) for q in range(n) if p != q] + [(p, p) for p in range(n - 1)]
    idx = {k: i for i, k in enumerate(keys)}

    def express(m: dict) -> Vector:
        out: Vector = {}
        for (p, q), c in m.items():
            if (p, q) in idx:
                axpy(field, out, field(c), {idx[(p, q)]: field(1)})
            else:
                for r in range(n - 1):
                    axpy(field, out, field(-c), {idx[(r, r)]: field(1)})
        return out

    table = {}
    for i, j in combinations(range(len(keys)), 2):
        table[(i, j)] = express(_gl_bracket(n, *keys[i], *keys[j]))
    return LieAlgebra(field, len(keys), table, labels=[f"e{p}{q}" for p, q in keys])


def sl(n: int, field: Field) -> LieAlgebra:
    """Trace-zero matrices: basis e_pq (p != q) then h_p = e_pp - e_{p+1,p+1}."""
    if n < 2:
        raise BadSpec("sl needs n >= 2")
    off = [(p, q) for p in range(n) for q in range(n) if p != q]
    idx = {k: i for i, k in enumerate(off)}
    nh = n - 1

    def as_matrix(i) -> dict:
        if i < len(off):
            return {off[i]: 1}
        p = i - len(off)
        return {(p, p): 1, (p + 1, p + 1): -1}

    def express(m: dict) -> Vector:
        out: Vector = {}
        diag = [0] * n
        for (p, q), c in m.items():
            if p == q:
                diag[p] += c
            else:
                axpy(field, out, field(c), {idx[(p, q)]: field(1)})
        # diag has trace zero: d = sum_p t_p h_p with t_p = d_0 + ... + d_p
        t = 0
        for p in range(nh):
            t += diag[p]
            if field(t):
                axpy(field, out, field(t), {len(off) + p: field(1)})
        return out

    def mat_bracket(x: dict, y: dict) -> dict:
        out: dict = {}
        for (p, q), a in x.items():
            for (r, s), b in y.items():
                for k, c in _gl_bracket(n, p, q, r, s).items():
                    out[k] = out.get(k, 0) + a * b * c
        return out

    dim = len(off) + nh
    table = {}
    for i, j in combinations(range(dim), 2):
        table[(i, j)] = express(mat_bracket(as_matrix(i), as_matrix(j)))
    labels = [f"e{p}{q}" for p, q in off] + [f"h{p}" for p in range(nh)]
    return LieAlgebra(field, dim, table, labels=labels)


def direct_sum(algebras: Sequence[LieAlgebra], field: Field | None = None) -> LieAlgebra:
    if field is None:
        if not algebras:
            raise BadSpec("direct sum of nothing needs an explicit field")
        field = algebras[0].field
    table = {}
    labels = []
    offset = 0
    for k, L in enumerate(algebras):
        if L.field != field:
            raise BadSpec("summands over different fields")
        for (i, j), v in L.structure_constants().items():
            table[(i + offset, j + offset)] = {a + offset: c for a, c in v.items()}
        labels.extend(f"{k}.{lab}" for lab in L.labels)
        offset += L.dim
    return LieAlgebra(field, offset, table, labels=labels, check=False)


def compare(source: LieAlgebra, target: LieAlgebra, images: Sequence[Vector]) -> bool:
    """True iff ``e_i -> images[i]`` is a Lie algebra isomorphism ``source -> target``."""
    if source.field != target.field or source.dim != target.dim or len(images) != source.dim:
        return False
    f = source.field
    if Subspace(f, target.dim, images).dim != target.dim:
        return False
    for i, j in combinations(range(source.dim), 2):
        lhs = combine(f, ((c, images[k]) for k, c in source.basis_bracket(i, j).items()))
        rhs = target.bracket(images[i], images[j])
        if lhs != rhs:
            return False
    return True


def pgl_to_sl_images(n: int, field: Field) -> list:
    """Images of the pgl(n) basis in sl(n): e_pq -> e_pq, e_pp -> e_pp - (1/n) 1.

    Requires the characteristic not to divide ``n``.
    """
    if field(n) == 0:
        raise BadSpec(f"characteristic divides {n}")
    off = [(p, q) for p in range(n) for q in range(n) if p != q]
    inv_n = field.inv(field(n))
    images = [{i: field(1)} for i in range(len(off))]
    for p in range(n - 1):
        # e_pp - (1/n) sum_r e_rr has diagonal d_r = delta_pr - 1/n; convert to h-basis
        v: Vector = {}
        t = 0
        for r in range(n - 1):
            t += (1 if r == p else 0) - inv_n
            if field(t):
                v[len(off) + r] = field(t)
        images.append(v)
    return images
