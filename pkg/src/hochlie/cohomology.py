"""First Hochschild cohomology of a monomial algebra from parallel paths.

The cochain complex ``k(Q0//B) -> k(Q1//B) -> k(Z//B)`` is built explicitly;
H^1 is ``Ker psi1 / Im psi0``, graded by ``len(gamma) - 1`` on a pair
``(a, gamma)``, and carries the bracket

    [(a, g), (b, e)] = (b, e^(a, g)) - (a, g^(b, e)).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import ComplexBroken, DimensionMismatch
from .lie import LieAlgebra
from .linalg import (ExactMatrix, Field, QuotientSpace, Subspace, Vector, axpy,
                     image, kernel)
from .quiver import ParallelPairs, PathBasis, parallel_pairs, substitute


@dataclass(frozen=True)
class CochainBases:
    c0: ParallelPairs  # Q0//B
    c1: ParallelPairs  # Q1//B
    c2: ParallelPairs  # Z//B


def cochain_bases(basis: PathBasis) -> CochainBases:
    return CochainBases(parallel_pairs("Q0", "B", basis),
                        parallel_pairs("Q1", "B", basis),
                        parallel_pairs("Z", "B", basis))


def build_psi0(basis: PathBasis, field: Field, bases: CochainBases | None = None) -> ExactMatrix:
    """Matrix of ``(e, g) -> sum_{a out of e} (a, g a) - sum_{a into e} (a, a g)``.

    Products are written in traversal order here: for ``a`` leaving ``e`` the
    path walks the cycle ``g`` first and then ``a``.
    """
    q = basis.quiver
    bases = bases or cochain_bases(basis)
    m = ExactMatrix.zeros(field, len(bases.c1), len(bases.c0))
    for j, (e, g) in enumerate(bases.c0):
        v = e.source
        for a in q.out_arrows[v]:
            p = q.concat(g, q.arrow_path(a))
            if p in basis.index:
                i = bases.c1.index[(q.arrow_path(a), p)]
                m[i, j] = m[i, j] + 1
        for a in q.in_arrows[v]:
            p = q.concat(q.arrow_path(a), g)
            if p in basis.index:
                i = bases.c1.index[(q.arrow_path(a), p)]
                m[i, j] = m[i, j] - 1
    return m


def build_psi1(basis: PathBasis, field: Field, bases: CochainBases | None = None) -> ExactMatrix:
    """Matrix of ``(a, g) -> sum_{p in Z} (p, p^(a, g))``."""
    bases = bases or cochain_bases(basis)
    m = ExactMatrix.zeros(field, len(bases.c2), len(bases.c1))
    for j, (a, g) in enumerate(bases.c1):
        for p in basis.relations:
            for path, n in substitute(p, a.word[0], g, basis).items():
                i = bases.c2.index[(p, path)]
                m[i, j] = m[i, j] + n
    return m


def _restrict_columns(m: ExactMatrix, cols: list, rows: list | None = None) -> ExactMatrix:
    cpos = {c: k for k, c in enumerate(cols)}
    row_ids = rows if rows is not None else range(m.nrows)
    new_rows = []
    for i in row_ids:
        new_rows.append({cpos[j]: v for j, v in m.rows[i].items() if j in cpos})
    return ExactMatrix(m.field, len(new_rows), len(cols), new_rows)


def _embed(v: Vector, positions: list) -> Vector:
    return {positions[k]: c for k, c in v.items()}


class GradedH1:
    """``Ker psi1 / Im psi0`` with canonical representatives, degree by degree.

    The H^1 basis is ordered by degree, then by representative order inside
    each degree.  Representatives are sparse vectors over ``c1`` indices.
    """

    def __init__(self, basis: PathBasis, field: Field):
        self.basis = basis
        self.quiver = basis.quiver
        self.field = field
        self.bases = cochain_bases(basis)
        self.psi0 = build_psi0(basis, field, self.bases)
        self.psi1 = build_psi1(basis, field, self.bases)
        if not (self.psi1 @ self.psi0).is_zero():
            raise ComplexBroken("psi1 o psi0 != 0")
        c0, c1, c2 = self.bases.c0, self.bases.c1, self.bases.c2
        n1 = len(c1)
        self.degrees = c1.degree_set()
        self.pieces: dict = {}
        self.quotients: dict = {}
        kernel_vecs, image_vecs = [], []
        reps, rep_degree = [], []
        for d in self.degrees:
            cols1 = c1.indices_of_degree(d)
            rows2 = [i for i, g in enumerate(c2.degrees) if g == d]
            ker_d = kernel(_restrict_columns(self.psi1, cols1, rows2))
            cols0 = c0.indices_of_degree(d)
            img_d = image(_restrict_columns(self.psi0.transpose(), cols1, cols0).transpose())
            k_vecs = [_embed(v, cols1) for v in ker_d.basis]
            i_vecs = [_embed(v, cols1) for v in img_d.basis]
            kernel_vecs += k_vecs
            image_vecs += i_vecs
            quot = QuotientSpace(Subspace(field, n1, k_vecs), Subspace(field, n1, i_vecs))
            self.quotients[d] = quot
            self.pieces[d] = list(quot.representatives)
            reps += quot.representatives
            rep_degree += [d] * quot.dim
        self.kernel = Subspace(field, n1, kernel_vecs)
        self.image = Subspace(field, n1, image_vecs)
        if not self.image.is_subspace_of(self.kernel):
            raise ComplexBroken("Im psi0 is not inside Ker psi1")
        self.representatives = tuple(reps)
        self.rep_degrees = tuple(rep_degree)
        self._offset = {}
        off = 0
        for d in self.degrees:
            self._offset[d] = off
            off += len(self.pieces[d])
        if self.dim != self.kernel.dim - self.image.dim:
            raise DimensionMismatch("graded dimensions do not add up")
        self._pair_cache: dict = {}

    @property
    def dim(self) -> int:
        return len(self.representatives)

    def dims_by_degree(self) -> dict:
        """``{degree: dim L_degree}`` for every degree from -1 up to the top one."""
        top = max([d for d in self.degrees if self.pieces[d]], default=0)
        return {d: len(self.pieces.get(d, ())) for d in range(-1, max(top, 0) + 1)}

    def piece_dim(self, d: int) -> int:
        return len(self.pieces.get(d, ()))

    def degree_of(self, x: Vector) -> int | None:
        degs = {self.bases.c1.degrees[i] for i in x}
        if len(degs) > 1:
            raise ComplexBroken("inhomogeneous element")
        return degs.pop() if degs else None

    def coordinates(self, x: Vector) -> Vector:
        """H^1 coordinates of the class of ``x`` (which must lie in Ker psi1)."""
        by_deg: dict = {}
        for i, c in x.items():
            by_deg.setdefault(self.bases.c1.degrees[i], {})[i] = c
        out: Vector = {}
        for d, part in by_deg.items():
            for k, c in self.quotients[d].reduce(part).items():
                out[self._offset[d] + k] = c
        return out

    def in_image(self, x: Vector) -> bool:
        return self.image.contains(x)

    def pair_bracket(self, i: int, j: int) -> Vector:
        """Bracket of two basis pairs of ``c1``, over c1 indices."""
        key = (i, j)
        if key in self._pair_cache:
            return self._pair_cache[key]
        c1 = self.bases.c1
        (a, g), (b, e) = c1[i], c1[j]
        out: Vector = {}
        f = self.field
        for path, n in substitute(e, a.word[0], g, self.basis).items():
            axpy(f, out, f(n), {c1.index[(b, path)]: f(1)})
        for path, n in substitute(g, b.word[0], e, self.basis).items():
            axpy(f, out, f(-n), {c1.index[(a, path)]: f(1)})
        self._pair_cache[key] = out
        return out

    def bracket(self, x: Vector, y: Vector) -> Vector:
        f = self.field
        out: Vector = {}
        for i, a in x.items():
            for j, b in y.items():
                axpy(f, out, a * b, self.pair_bracket(i, j))
        return out

    def vector(self, pairs: dict) -> Vector:
        """c1 vector from ``{(arrow_name_or_id, path): coeff}``."""
        q = self.quiver
        out: Vector = {}
        for (a, path), c in pairs.items():
            ap = q.arrow_path(a)
            axpy(self.field, out, self.field(c), {self.bases.c1.index[(ap, path)]: self.field(1)})
        return out

    def format_vector(self, x: Vector) -> str:
        if not x:
            return "0"
        out = ""
        for i in sorted(x):
            term = self.bases.c1.format(self.quiver, i)
            c = self.field.format(x[i])
            neg = c.startswith("-")
            c = c.lstrip("-")
            body = term if c == "1" else f"{c}*{term}"
            if not out:
                out = ("-" if neg else "") + body
            else:
                out += (" - " if neg else " + ") + body
        return out

    def labels(self) -> list:
        return [self.format_vector(r) for r in self.representatives]

    def structure_constants(self) -> LieAlgebra:
        table = {}
        reps = self.representatives
        for i, j in combinations(range(self.dim), 2):
            table[(i, j)] = self.coordinates(self.bracket(reps[i], reps[j]))
        return LieAlgebra(self.field, self.dim, table, labels=self.labels(),
                          degrees=self.rep_degrees)


def compute_h1(basis: PathBasis, field: Field) -> GradedH1:
    return GradedH1(basis, field)


def bracket(h1: GradedH1, x: Vector, y: Vector) -> Vector:
    return h1.bracket(x, y)


def structure_constants(h1: GradedH1) -> LieAlgebra:
    return h1.structure_constants()
