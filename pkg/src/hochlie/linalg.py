"""Exact linear algebra over Q and F_p.

Vectors are sparse ``dict[int, scalar]`` with no explicit zeros.  Rational
scalars are :class:`fractions.Fraction`; scalars of F_p are ints in
``range(p)``.  Subspaces are stored through their reduced row echelon basis,
which is a canonical form, so two subspaces are equal iff their bases are.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotPrime, NotSubspace

Vector = dict


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class Field:
    """Q when ``characteristic == 0``, otherwise the prime field F_p."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and not _is_prime(p):
            raise NotPrime(f"{p} is not a prime")

    @classmethod
    def rational(cls) -> "Field":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(int(p))

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    @property
    def name(self) -> str:
        return "QQ" if self.is_rational else f"GF({self.characteristic})"

    def __call__(self, x):
        p = self.characteristic
        if p == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, p) % p
        return int(x) % p

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        if self.characteristic == 0:
            return 1 / Fraction(x)
        return pow(x, -1, self.characteristic)

    def format(self, x) -> str:
        return str(x)

    def parse(self, text: str):
        return self(Fraction(text))

    def to_json(self) -> dict:
        if self.is_rational:
            return {"kind": "rational"}
        return {"kind": "prime", "p": self.characteristic}


# -- sparse vector helpers ---------------------------------------------------


def vec(field: Field, entries) -> Vector:
    """Build a clean sparse vector from a mapping or a dense sequence."""
    if isinstance(entries, dict):
        items = entries.items()
    else:
        items = enumerate(entries)
    out = {}
    for k, v in items:
        v = field(v)
        if v:
            out[k] = v
    return out


def axpy(field: Field, y: Vector, a, x: Vector) -> Vector:
    """In place ``y += a*x``; returns ``y``."""
    if not a:
        return y
    p = field.characteristic
    for k, xv in x.items():
        if p:
            v = (y.get(k, 0) + a * xv) % p
        else:
            v = y.get(k, 0) + a * xv
        if v:
            y[k] = v
        else:
            y.pop(k, None)
    return y


def add(field: Field, x: Vector, y: Vector, a=1) -> Vector:
    return axpy(field, dict(x), field(a), y)


def scale(field: Field, a, x: Vector) -> Vector:
    a = field(a)
    if not a:
        return {}
    p = field.characteristic
    if p:
        return {k: v * a % p for k, v in x.items()}
    return {k: v * a for k, v in x.items()}


def combine(field: Field, terms: Iterable[tuple]) -> Vector:
    """Linear combination ``sum(c * v for c, v in terms)``."""
    out: Vector = {}
    for c, v in terms:
        axpy(field, out, field(c), v)
    return out


# -- incremental reduced row echelon form -------------------------------------


class Echelon:
    """Incrementally maintained RREF with optional provenance tracking.

    Each stored row has a leading 1 at its pivot column and zeros in every
    other pivot column.  With ``track=True`` each row also remembers which
    combination of inserted vectors produced it.
    """

    def __init__(self, field: Field, track: bool = False):
        self.field = field
        self.track = track
        self.rows: dict[int, Vector] = {}
        self.tags: dict[int, Vector] = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: Vector, tag: Vector | None = None):
        """Normal form of ``v`` modulo the stored span (and its tag)."""
        f = self.field
        v = dict(v)
        tag = dict(tag) if tag is not None else ({} if self.track else None)
        for c in [c for c in v if c in self.rows]:
            coef = v.get(c)
            if not coef:
                continue
            axpy(f, v, -coef, self.rows[c])
            if self.track:
                axpy(f, tag, -coef, self.tags[c])
        return v, tag

    def insert(self, v: Vector, tag: Vector | None = None) -> bool:
        """Add ``v`` to the span; returns False when it was already inside."""
        f = self.field
        r, t = self.reduce(v, tag)
        if not r:
            return False
        piv = min(r)
        inv = f.inv(r[piv])
        r = scale(f, inv, r)
        if self.track:
            t = scale(f, inv, t)
        for c, row in self.rows.items():
            coef = row.get(piv)
            if coef:
                axpy(f, row, -coef, r)
                if self.track:
                    axpy(f, self.tags[c], -coef, t)
        self.rows[piv] = r
        if self.track:
            self.tags[piv] = t
        return True

    def sorted_rows(self) -> tuple:
        return tuple(self.rows[c] for c in sorted(self.rows))


# -- subspaces -----------------------------------------------------------------


class Subspace:
    """A subspace of F^ambient given by its canonical RREF basis."""

    def __init__(self, field: Field, ambient: int, vectors: Iterable[Vector] = ()):
        self.field = field
        self.ambient = ambient
        ech = Echelon(field)
        for v in vectors:
            if v and max(v) >= ambient:
                raise DimensionMismatch(f"vector index {max(v)} outside ambient {ambient}")
            ech.insert(v)
        self._ech = ech
        self.pivots = tuple(sorted(ech.rows))
        self.basis = tuple(ech.rows[c] for c in self.pivots)

    @classmethod
    def zero(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient)

    @classmethod
    def full(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, ({i: field(1)} for i in range(ambient)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.dim

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, field={self.field.name})"

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field == other.field and self.ambient == other.ambient
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient, self.pivots))

    def reduce(self, v: Vector) -> Vector:
        return self._ech.reduce(v)[0]

    def contains(self, v: Vector) -> bool:
        return not self.reduce(v)

    def __contains__(self, v):
        return self.contains(v)

    def coordinates(self, v: Vector) -> Vector:
        """Coordinates of ``v`` with respect to ``self.basis``."""
        if not self.contains(v):
            raise NotSubspace("vector is not in the subspace")
        return {i: v[c] for i, c in enumerate(self.pivots) if v.get(c)}

    def is_subspace_of(self, other: "Subspace") -> bool:
        return all(other.contains(b) for b in self.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.field, self.ambient, self.basis + other.basis)

    def intersection(self, other: "Subspace") -> "Subspace":
        # solve sum x_i u_i = sum y_j w_j; the u-parts of the kernel span the meet
        f = self.field
        m = self.dim
        cols = [dict(u) for u in self.basis] + [scale(f, -1, w) for w in other.basis]
        mat = ExactMatrix.from_columns(f, self.ambient, cols)
        ker = kernel(mat)
        out = []
        for k in ker.basis:
            out.append(combine(f, ((c, self.basis[i]) for i, c in k.items() if i < m)))
        return Subspace(f, self.ambient, out)


class QuotientSpace:
    """V/W with canonical representatives.

    Representatives are the normal forms modulo W of the RREF basis of V, kept
    greedily in order whenever independent of the ones already chosen.
    """

    def __init__(self, v: Subspace, w: Subspace):
        if v.field != w.field or v.ambient != w.ambient:
            raise NotSubspace("ambient spaces differ")
        if not w.is_subspace_of(v):
            raise NotSubspace("W is not contained in V")
        self.field = v.field
        self.v = v
        self.w = w
        ech = Echelon(self.field, track=True)
        reps = []
        for b in v.basis:
            r = w.reduce(b)
            if ech.insert(r, {len(reps): self.field(1)}):
                reps.append(r)
        self._ech = ech
        self.representatives = tuple(reps)

    @property
    def dim(self) -> int:
        return len(self.representatives)

    def reduce(self, x: Vector) -> Vector:
        """Coordinates of the class of ``x`` in the representative basis."""
        f = self.field
        r = self.w.reduce(x)
        rem, _ = self._ech.reduce(r)
        if rem:
            raise NotSubspace("vector is not in V")
        out: Vector = {}
        for c, row in self._ech.rows.items():
            coef = r.get(c)
            if coef:
                axpy(f, out, coef, self._ech.tags[c])
        return out

    def lift(self, coords: Vector) -> Vector:
        return combine(self.field, ((c, self.representatives[i]) for i, c in coords.items()))


# -- matrices --------------------------------------------------------------------


@dataclass
class ExactMatrix:
    """``nrows x ncols`` matrix stored as sparse rows; acts on column vectors."""

    field: Field
    nrows: int
    ncols: int
    rows: list = dc_field(default_factory=list)

    def __post_init__(self):
        if not self.rows:
            self.rows = [{} for _ in range(self.nrows)]
        if len(self.rows) != self.nrows:
            raise DimensionMismatch("row count does not match nrows")

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "ExactMatrix":
        return cls(field, nrows, ncols, [{} for _ in range(nrows)])

    @classmethod
    def from_dense(cls, field: Field, data: Sequence[Sequence]) -> "ExactMatrix":
        nrows = len(data)
        ncols = len(data[0]) if nrows else 0
        return cls(field, nrows, ncols, [vec(field, list(r)) for r in data])

    @classmethod
    def identity(cls, field: Field, n: int) -> "ExactMatrix":
        return cls(field, n, n, [{i: field(1)} for i in range(n)])

    @classmethod
    def from_columns(cls, field: Field, nrows: int, columns: Sequence[Vector]) -> "ExactMatrix":
        m = cls.zeros(field, nrows, len(columns))
        for j, col in enumerate(columns):
            for i, v in col.items():
                m.rows[i][j] = v
        return m

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i].get(j, self.field(0))

    def __setitem__(self, ij, value):
        i, j = ij
        value = self.field(value)
        if value:
            self.rows[i][j] = value
        else:
            self.rows[i].pop(j, None)

    def dense(self) -> list:
        z = self.field(0)
        return [[r.get(j, z) for j in range(self.ncols)] for r in self.rows]

    def column(self, j: int) -> Vector:
        return {i: r[j] for i, r in enumerate(self.rows) if j in r}

    def columns(self) -> list:
        cols = [{} for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                cols[j][i] = v
        return cols

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.field, self.ncols, self.nrows, self.columns())

    def apply(self, x: Vector) -> Vector:
        f = self.field
        p = f.characteristic
        out = {}
        for i, r in enumerate(self.rows):
            s = 0
            if len(r) < len(x):
                for j, v in r.items():
                    xv = x.get(j)
                    if xv:
                        s += v * xv
            else:
                for j, xv in x.items():
                    v = r.get(j)
                    if v:
                        s += v * xv
            if p:
                s %= p
            if s:
                out[i] = s
        return out

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        f = self.field
        rows = []
        for r in self.rows:
            acc: Vector = {}
            for k, v in r.items():
                axpy(f, acc, v, other.rows[k])
            rows.append(acc)
        return ExactMatrix(f, self.nrows, other.ncols, rows)

    def is_zero(self) -> bool:
        return not any(self.rows)

    def rank(self) -> int:
        return rref(self)[1]


def rref(m: ExactMatrix) -> tuple[Subspace, int]:
    """Row space of ``m`` in canonical form, together with the rank."""
    s = Subspace(m.field, m.ncols, m.rows)
    return s, s.dim


def kernel(m: ExactMatrix) -> Subspace:
    """``{x : m x = 0}`` as a subspace of F^ncols."""
    f = m.field
    rows, _ = rref(m)
    pivots = set(rows.pivots)
    basis = []
    for free in range(m.ncols):
        if free in pivots:
            continue
        v = {free: f(1)}
        for c, r in zip(rows.pivots, rows.basis):
            coef = r.get(free)
            if coef:
                v[c] = -coef % f.characteristic if f.characteristic else -coef
        basis.append(v)
    ker = Subspace(f, m.ncols, basis)
    for b in ker.basis:
        if m.apply(b):
            raise DimensionMismatch("kernel vector not annihilated")
    if ker.dim + rows.dim != m.ncols:
        raise DimensionMismatch("rank-nullity violated")
    return ker


def image(m: ExactMatrix) -> Subspace:
    """Column space of ``m`` as a subspace of F^nrows."""
    img = Subspace(m.field, m.nrows, m.columns())
    return img
