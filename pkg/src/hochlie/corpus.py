"""Named test instances and a seeded generator of small random ones."""

from __future__ import annotations

import random

from .errors import CapExceeded, InfiniteDimensional
from .linalg import Field
from .parser import InputDocument, parse_input
from .quiver import Path, Quiver, enumerate_basis

NAMED = {
    "A2": "vertex v1 v2\narrow a : v1 -> v2\n",
    "A3": "vertex v1 v2 v3\narrow a : v1 -> v2\narrow b : v2 -> v3\n",
    "kronecker2": "vertex v1 v2\narrow a : v1 -> v2\narrow b : v1 -> v2\n",
    "kronecker3": "vertex v1 v2\narrow a : v1 -> v2\narrow b : v1 -> v2\narrow c : v1 -> v2\n",
    "loop3_F3": "field prime 3\nvertex v\narrow a : v -> v\nrelation a a a\n",
    "loop4_F2": "field prime 2\nvertex v\narrow a : v -> v\nrelation a a a a\n",
    "loop3_QQ": "vertex v\narrow a : v -> v\nrelation a a a\n",
    "bc_example": ("vertex v1 v2 v3\narrow a : v1 -> v2\narrow b : v1 -> v2\narrow c : v2 -> v3\n"
                   "relation b c\n"),
    "crown2_F3": ("field prime 3\nvertex v0 v1\narrow x0 : v0 -> v1\narrow x1 : v1 -> v0\n"
                  "relation x0 x1 x0\nrelation x1 x0 x1\n"),
}


def named(name: str, field: Field | None = None) -> InputDocument:
    doc = parse_input(NAMED[name])
    if field is not None:
        doc = InputDocument(field, doc.quiver, doc.relations)
    return doc


def named_corpus() -> list:
    return [(name, named(name)) for name in NAMED]


def _minimal(words: list) -> list:
    out = []
    for w in sorted(set(words), key=lambda w: (len(w), w)):
        if not any(any(w[i:i + len(u)] == u for i in range(len(w) - len(u) + 1)) for u in out):
            out.append(w)
    return out


def random_instance(rng: random.Random, field: Field, max_vertices: int = 4, max_arrows: int = 6,
                    max_relation_length: int = 3, max_basis: int = 40) -> InputDocument:
    """A random finite dimensional monomial algebra within the given bounds."""
    while True:
        nv = rng.randint(1, max_vertices)
        na = rng.randint(0, max_arrows)
        verts = [f"v{i}" for i in range(nv)]
        arrows = [(f"a{i}", rng.choice(verts), rng.choice(verts)) for i in range(na)]
        q = Quiver(verts, arrows)
        words = []
        frontier = [(a,) for a in range(na)]
        for length in range(2, max_relation_length + 1):
            frontier = [w + (b,) for w in frontier for b in q.out_arrows[q.arrows[w[-1]].target]]
            words += [w for w in frontier if rng.random() < 0.5]
        z = tuple(Path(q.arrows[w[0]].source, q.arrows[w[-1]].target, w) for w in _minimal(words))
        try:
            basis = enumerate_basis(q, z, cap=max_basis)
        except (InfiniteDimensional, CapExceeded):
            continue
        if len(basis) <= max_basis:
            return InputDocument(field, q, z)


def random_corpus(n: int, seed: int = 0, fields=None) -> list:
    fields = fields or [Field.rational(), Field.prime(2), Field.prime(3)]
    rng = random.Random(seed)
    return [(f"random{k}", random_instance(rng, fields[k % len(fields)])) for k in range(n)]
