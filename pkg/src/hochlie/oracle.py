"""Brute-force H^1 from the standard Hochschild complex.

Lambda is a multiplication table on B; derivations and inner derivations are
subspaces of End(Lambda), stored as vectors over the index ``x * |B| + y``
(the coefficient of ``y`` in ``f(x)``).  The comparison maps

    omega1(a, g) : eps -> eps^(a, g)
    varsigma1(f) = sum over arrows a of the coefficients of f(a)

link this computation to the one on parallel paths.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations

from .cohomology import GradedH1
from .errors import CapExceeded, InternalError, MismatchReport, NotEBimodule
from .lie import LieAlgebra, compare
from .linalg import ExactMatrix, Field, QuotientSpace, Subspace, Vector, axpy, kernel
from .quiver import PathBasis, substitute

ORACLE_CAP = 60


class AlgebraTable:
    """Structure constants of kQ/<Z> on the path basis (products are 0 or a basis path)."""

    def __init__(self, basis: PathBasis, field: Field, check: bool = True):
        self.basis = basis
        self.field = field
        self.n = n = len(basis)
        self.paths = list(basis)
        self.vertices = [i for i, p in enumerate(self.paths) if p.is_trivial]
        self.table = [[None] * n for _ in range(n)]
        for i, x in enumerate(self.paths):
            for j, y in enumerate(self.paths):
                z = basis.mul(x, y)
                if z is not None:
                    self.table[i][j] = basis.index[z]
        # multidegree over arrows, used to split the Leibniz system
        na = basis.quiver.n_arrows
        self.mdeg = []
        for p in self.paths:
            d = [0] * na
            for a in p.word:
                d[a] += 1
            self.mdeg.append(tuple(d))
        if check:
            self.check()

    def mul(self, i: int, j: int):
        return self.table[i][j]

    def check(self) -> None:
        t, n = self.table, self.n
        for i in range(n):
            for j in range(n):
                ij = t[i][j]
                for k in range(n):
                    left = None if ij is None else t[ij][k]
                    jk = t[j][k]
                    right = None if jk is None else t[i][jk]
                    if left != right:
                        raise InternalError("multiplication table is not associative")
        for i in range(n):
            if sum(t[v][i] == i for v in self.vertices) != 1 or sum(t[i][v] == i for v in self.vertices) != 1:
                raise InternalError("vertices do not sum to the unit")
        for v in self.vertices:
            for w in self.vertices:
                if (t[v][w] is not None) != (v == w):
                    raise InternalError("vertex idempotents are not orthogonal")

    def apply(self, f: Vector, x: int) -> Vector:
        n = self.n
        return {k % n: c for k, c in f.items() if k // n == x}

    def compose(self, f: Vector, g: Vector) -> Vector:
        """Endomorphism ``f o g``."""
        n, fld = self.n, self.field
        rows: dict = defaultdict(dict)
        for k, c in f.items():
            rows[k // n][k % n] = c
        out: Vector = {}
        for k, c in g.items():
            x, y = divmod(k, n)
            for z, d in rows.get(y, {}).items():
                axpy(fld, out, c * d, {x * n + z: fld(1)})
        return out

    def commutator(self, f: Vector, g: Vector) -> Vector:
        out = self.compose(f, g)
        axpy(self.field, out, self.field(-1), self.compose(g, f))
        return out


def build_algebra(basis: PathBasis, field: Field, cap: int = ORACLE_CAP) -> AlgebraTable:
    if len(basis) > cap:
        raise CapExceeded(f"|B| = {len(basis)} exceeds the oracle cap {cap}")
    return AlgebraTable(basis, field)


def derivations(alg: AlgebraTable, kill_vertices: bool = False) -> Subspace:
    """All ``f`` with ``f(xy) = f(x)y + xf(y)`` on every pair of basis elements.

    The relations are monomial, so the system splits by the arrow multidegree
    ``mdeg(y) - mdeg(x)`` of an unknown ``(x, y)``; each block is solved on its own.
    With ``kill_vertices`` the unknowns ``f(e)`` for vertices ``e`` are dropped,
    giving the E-bimodule derivations.
    """
    n, fld, t, mdeg = alg.n, alg.field, alg.table, alg.mdeg

    def delta(x, y):
        return tuple(b - a for a, b in zip(mdeg[x], mdeg[y]))

    skip = set(alg.vertices) if kill_vertices else set()
    unknowns: dict = defaultdict(list)
    for x in range(n):
        if x in skip:
            continue
        for y in range(n):
            unknowns[delta(x, y)].append(x * n + y)
    targets: dict = defaultdict(list)   # x -> [(y, unknown)]
    for ulist in unknowns.values():
        for u in ulist:
            targets[u // n].append((u % n, u))
    # equations keyed by (block, pair, output path)
    eqs: dict = defaultdict(lambda: defaultdict(dict))
    for x in range(n):
        for y in range(n):
            for w, u in targets[x]:
                z = t[w][y]
                if z is not None:
                    row = eqs[delta(x, w)][(x, y, z)]
                    row[u] = row.get(u, 0) + 1
            for w, u in targets[y]:
                z = t[x][w]
                if z is not None:
                    row = eqs[delta(y, w)][(x, y, z)]
                    row[u] = row.get(u, 0) + 1
            xy = t[x][y]
            if xy is not None:
                for z, u in targets[xy]:
                    row = eqs[delta(xy, z)][(x, y, z)]
                    row[u] = row.get(u, 0) - 1
    vectors = []
    for d, ulist in unknowns.items():
        pos = {u: k for k, u in enumerate(ulist)}
        rows = [{pos[u]: fld(c) for u, c in r.items() if fld(c)} for r in eqs[d].values()]
        m = ExactMatrix(fld, len(rows), len(ulist), rows)
        for v in kernel(m).basis:
            vectors.append({ulist[k]: c for k, c in v.items()})
    return Subspace(fld, n * n, vectors)


def inner_derivations(alg: AlgebraTable) -> Subspace:
    """Span of ``ad(c) : x -> cx - xc`` over basis elements ``c``."""
    n, fld, t = alg.n, alg.field, alg.table
    vecs = []
    for c in range(n):
        v: Vector = {}
        for x in range(n):
            if t[c][x] is not None:
                axpy(fld, v, fld(1), {x * n + t[c][x]: fld(1)})
            if t[x][c] is not None:
                axpy(fld, v, fld(-1), {x * n + t[x][c]: fld(1)})
        vecs.append(v)
    return Subspace(fld, n * n, vecs)


def center_dim(alg: AlgebraTable) -> int:
    """dim Z(Lambda), solved directly from ``cx = xc`` for all basis ``x``."""
    n, fld, t = alg.n, alg.field, alg.table
    rows = []
    for x in range(n):
        per: dict = defaultdict(dict)
        for c in range(n):
            if t[c][x] is not None:
                per[t[c][x]][c] = per[t[c][x]].get(c, 0) + 1
            if t[x][c] is not None:
                per[t[x][c]][c] = per[t[x][c]].get(c, 0) - 1
        rows += [{k: fld(v) for k, v in r.items() if fld(v)} for r in per.values()]
    return kernel(ExactMatrix(fld, len(rows), n, rows)).dim


def is_derivation(alg: AlgebraTable, f: Vector) -> bool:
    n, fld, t = alg.n, alg.field, alg.table
    images = [alg.apply(f, x) for x in range(n)]
    for x in range(n):
        for y in range(n):
            out: Vector = {}
            for w, c in images[x].items():
                if t[w][y] is not None:
                    axpy(fld, out, c, {t[w][y]: fld(1)})
            for w, c in images[y].items():
                if t[x][w] is not None:
                    axpy(fld, out, c, {t[x][w]: fld(1)})
            if t[x][y] is not None:
                axpy(fld, out, fld(-1), images[t[x][y]])
            if out:
                return False
    return True


def h1_direct(alg: AlgebraTable, der: Subspace | None = None, ad: Subspace | None = None):
    """``Der / Ad`` with the commutator bracket; returns ``(LieAlgebra, QuotientSpace)``."""
    der = der if der is not None else derivations(alg)
    ad = ad if ad is not None else inner_derivations(alg)
    if not ad.is_subspace_of(der):
        raise InternalError("inner derivations are not derivations")
    quot = QuotientSpace(der, ad)
    reps = quot.representatives
    table = {}
    for i, j in combinations(range(len(reps)), 2):
        c = alg.commutator(reps[i], reps[j])
        if not der.contains(c):
            raise InternalError("Der is not closed under the commutator")
        table[(i, j)] = quot.reduce(c)
    return LieAlgebra(alg.field, len(reps), table), quot


def omega1(h1: GradedH1, alg: AlgebraTable, x: Vector) -> Vector:
    """The endomorphism ``eps -> sum c * eps^(a, g)`` for ``x = sum c (a, g)``."""
    c1, fld, n = h1.bases.c1, alg.field, alg.n
    out: Vector = {}
    for i, c in x.items():
        a, g = c1[i]
        for k, eps in enumerate(alg.paths):
            for path, m in substitute(eps, a.word[0], g, alg.basis).items():
                axpy(fld, out, c * fld(m), {k * n + alg.basis.index[path]: fld(1)})
    return out


def varsigma1(h1: GradedH1, alg: AlgebraTable, f: Vector) -> Vector:
    """Read the coefficients of ``f`` on arrows as an element of k(Q1//B)."""
    q, c1, n = h1.quiver, h1.bases.c1, alg.n
    out: Vector = {}
    for k, c in f.items():
        x, y = divmod(k, n)
        src = alg.paths[x]
        if len(src) != 1:
            continue
        key = (q.arrow_path(src.word[0]), alg.paths[y])
        if key not in c1.index:
            raise NotEBimodule(f"f({q.format_path(src)}) has a non-parallel term {q.format_path(alg.paths[y])}")
        out[c1.index[key]] = c
    return out


@dataclass
class CrossCheck:
    dim_minimal: int
    dim_direct: int
    der_dim: int
    ad_dim: int
    center_dim: int
    der_e_dim: int
    ker_psi1_dim: int
    pairs_checked: int
    exact_bracket_match: bool
    lie_isomorphism: bool
    passed: bool

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def cross_check(h1: GradedH1, L: LieAlgebra, alg: AlgebraTable) -> CrossCheck:
    """Compare the parallel-path computation with the brute-force one.

    Raises ``MismatchReport`` with the first failing witness.
    """
    fld = alg.field
    der = derivations(alg)
    ad = inner_derivations(alg)
    der_e = derivations(alg, kill_vertices=True)
    zdim = center_dim(alg)
    if ad.dim != alg.n - zdim:
        raise MismatchReport("dim Ad != dim Lambda - dim Z(Lambda)", (ad.dim, alg.n, zdim))
    direct, quot = h1_direct(alg, der, ad)
    if direct.dim != h1.dim:
        raise MismatchReport("dim H1 differs between the two computations", (h1.dim, direct.dim))
    if der_e.dim != h1.kernel.dim:
        raise MismatchReport("dim Der_E != dim Ker psi1", (der_e.dim, h1.kernel.dim))
    for x in h1.kernel.basis:
        f = omega1(h1, alg, x)
        if not der_e.contains(f):
            raise MismatchReport("omega1 of a cocycle is not an E-derivation", h1.format_vector(x))
        if varsigma1(h1, alg, f) != x:
            raise MismatchReport("varsigma1(omega1(x)) != x", h1.format_vector(x))
    for x in h1.image.basis:
        if not ad.contains(omega1(h1, alg, x)):
            raise MismatchReport("omega1 of a coboundary is not inner", h1.format_vector(x))
    reps = h1.representatives
    omegas = [omega1(h1, alg, r) for r in reps]
    exact = True
    pairs = 0
    for i, j in combinations(range(len(reps)), 2):
        pairs += 1
        back = varsigma1(h1, alg, alg.commutator(omegas[i], omegas[j]))
        want = h1.bracket(reps[i], reps[j])
        diff = dict(back)
        axpy(fld, diff, fld(-1), want)
        if diff:
            exact = False
            if not h1.in_image(diff):
                raise MismatchReport("bracket transport fails", (L.labels[i], L.labels[j]))
    iso = compare(L, direct, [quot.reduce(f) for f in omegas])
    if not iso:
        raise MismatchReport("omega1 does not induce a Lie isomorphism", None)
    return CrossCheck(h1.dim, direct.dim, der.dim, ad.dim, zdim, der_e.dim, h1.kernel.dim,
                      pairs, exact, iso, True)
