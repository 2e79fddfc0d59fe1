"""Quivers, paths, monomial relations and the path basis of kQ/<Z>.

Paths are stored in traversal order: ``word[0]`` is the first arrow walked.
Written as products the convention is reversed, so the traversal word
``(a1, a2, ..., an)`` is the product ``an ... a2 a1``.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (CapExceeded, DuplicateName, InfiniteDimensional,
                     NonComposable, NonMinimal, NotParallel, RelationTooShort,
                     UnknownArrow, UnknownVertex)

NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
DEFAULT_CAP = 100_000


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True, order=True)
class Path:
    """A path of a quiver.  Vertices and arrows are referred to by index."""

    source: int
    target: int
    word: tuple = ()

    def __len__(self):
        return len(self.word)

    @property
    def is_trivial(self) -> bool:
        return not self.word

    def sort_key(self):
        # (length, lex on arrow indices); trivial paths by vertex order
        return (len(self.word), self.word if self.word else (self.source,))


class Quiver:
    """A finite quiver with vertices and arrows in declaration order."""

    def __init__(self, vertices: Sequence[str], arrows: Sequence[tuple]):
        self.vertices = tuple(vertices)
        self.vertex_index = {}
        for v in self.vertices:
            if v in self.vertex_index:
                raise DuplicateName(f"duplicate vertex {v!r}")
            self.vertex_index[v] = len(self.vertex_index)
        arrs = []
        self.arrow_index = {}
        for name, src, dst in arrows:
            if name in self.arrow_index or name in self.vertex_index:
                raise DuplicateName(f"duplicate name {name!r}")
            for v in (src, dst):
                if v not in self.vertex_index:
                    raise UnknownVertex(f"arrow {name!r} uses undeclared vertex {v!r}")
            self.arrow_index[name] = len(arrs)
            arrs.append(Arrow(name, self.vertex_index[src], self.vertex_index[dst]))
        self.arrows = tuple(arrs)
        self.out_arrows = [[] for _ in self.vertices]
        self.in_arrows = [[] for _ in self.vertices]
        for i, a in enumerate(self.arrows):
            self.out_arrows[a.source].append(i)
            self.in_arrows[a.target].append(i)

    def __repr__(self):
        arrows = ", ".join(f"{a.name}:{self.vertices[a.source]}->{self.vertices[a.target]}"
                           for a in self.arrows)
        return f"Quiver(vertices={list(self.vertices)}, arrows=[{arrows}])"

    def __eq__(self, other):
        return (isinstance(other, Quiver) and self.vertices == other.vertices
                and self.arrows == other.arrows)

    def __hash__(self):
        return hash((self.vertices, self.arrows))

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_arrows(self) -> int:
        return len(self.arrows)

    def trivial(self, v) -> Path:
        if isinstance(v, str):
            if v not in self.vertex_index:
                raise UnknownVertex(v)
            v = self.vertex_index[v]
        return Path(v, v, ())

    def arrow_path(self, a) -> Path:
        if isinstance(a, str):
            a = self.arrow_id(a)
        arr = self.arrows[a]
        return Path(arr.source, arr.target, (a,))

    def arrow_id(self, name: str) -> int:
        try:
            return self.arrow_index[name]
        except KeyError:
            raise UnknownArrow(f"unknown arrow {name!r}") from None

    def path(self, word: Iterable) -> Path:
        """Path from a traversal-order word of arrow names or indices."""
        ids = [self.arrow_id(w) if isinstance(w, str) else int(w) for w in word]
        if not ids:
            raise NonComposable("empty word; use trivial() for vertices")
        for x, y in zip(ids, ids[1:]):
            if self.arrows[x].target != self.arrows[y].source:
                raise NonComposable(
                    f"{self.arrows[x].name} ends at {self.vertices[self.arrows[x].target]} "
                    f"but {self.arrows[y].name} starts at {self.vertices[self.arrows[y].source]}")
        return Path(self.arrows[ids[0]].source, self.arrows[ids[-1]].target, tuple(ids))

    def concat(self, first: Path, second: Path) -> Path | None:
        """``first`` followed by ``second``; None when they do not meet."""
        if first.target != second.source:
            return None
        if first.is_trivial:
            return second
        if second.is_trivial:
            return first
        return Path(first.source, second.target, first.word + second.word)

    def format_path(self, p: Path) -> str:
        if p.is_trivial:
            return self.vertices[p.source]
        return " ".join(self.arrows[a].name for a in p.word)

    def is_connected(self) -> bool:
        return len(connected_components(self)) <= 1

    def has_oriented_cycle(self) -> bool:
        color = [0] * self.n_vertices
        for root in range(self.n_vertices):
            if color[root]:
                continue
            stack = [(root, iter(self.out_arrows[root]))]
            color[root] = 1
            while stack:
                v, it = stack[-1]
                nxt = next(it, None)
                if nxt is None:
                    color[v] = 2
                    stack.pop()
                    continue
                w = self.arrows[nxt].target
                if color[w] == 1:
                    return True
                if color[w] == 0:
                    color[w] = 1
                    stack.append((w, iter(self.out_arrows[w])))
        return False


# -- relations -------------------------------------------------------------------


def _is_factor(small: tuple, big: tuple) -> bool:
    n, m = len(small), len(big)
    return any(big[i:i + n] == small for i in range(m - n + 1))


def relations_from_names(q: Quiver, words: Iterable[Iterable[str]]) -> tuple:
    return tuple(q.path(w) for w in words)


def validate_relations(q: Quiver, z: Sequence[Path]) -> None:
    """Raise unless every relation has length >= 2 and Z is minimal."""
    for p in z:
        for a in p.word:
            if not 0 <= a < q.n_arrows:
                raise UnknownArrow(f"arrow index {a} out of range")
        if len(p) < 2:
            raise RelationTooShort(f"relation {q.format_path(p)!r} has length {len(p)} < 2")
    for i, p in enumerate(z):
        for j, r in enumerate(z):
            if i == j:
                continue
            if p.word == r.word:
                raise NonMinimal(f"relation {q.format_path(p)!r} is listed twice", p, r)
            if _is_factor(p.word, r.word):
                raise NonMinimal(
                    f"relation {q.format_path(p)!r} is a proper factor of {q.format_path(r)!r}", p, r)


class _FactorTest:
    """Membership test for words containing a relation as a contiguous factor."""

    def __init__(self, z: Sequence[Path]):
        self.words = {p.word for p in z}
        self.lengths = sorted({len(p) for p in z})
        self.max_len = max(self.lengths, default=1)

    def ends_with_relation(self, word: tuple) -> bool:
        n = len(word)
        return any(ln <= n and word[n - ln:] in self.words for ln in self.lengths)

    def avoids(self, word: tuple) -> bool:
        for end in range(1, len(word) + 1):
            if self.ends_with_relation(word[:end]):
                return False
        return True


def _automaton_has_cycle(q: Quiver, test: _FactorTest) -> bool:
    """Decide whether infinitely many paths avoid every relation.

    States are the Z-avoiding paths of length <= m-1 (m the longest relation);
    reading an arrow appends it and keeps the longest suffix of length <= m-1.
    Long avoiding paths are exactly long walks, so B is infinite iff some cycle
    of the automaton is reachable.
    """
    keep = test.max_len - 1

    def step(state: Path, a: int):
        arr = q.arrows[a]
        word = state.word + (a,)
        if test.ends_with_relation(word):
            return None
        word = word[max(0, len(word) - keep):] if keep > 0 else ()
        if not word:
            return Path(arr.target, arr.target, ())
        return Path(q.arrows[word[0]].source, arr.target, word)

    color: dict = {}
    for v in range(q.n_vertices):
        root = Path(v, v, ())
        if root in color:
            continue
        color[root] = 1
        stack = [(root, iter(q.out_arrows[v]))]
        while stack:
            s, it = stack[-1]
            a = next(it, None)
            if a is None:
                color[s] = 2
                stack.pop()
                continue
            t = step(s, a)
            if t is None:
                continue
            c = color.get(t, 0)
            if c == 1:
                return True
            if c == 0:
                color[t] = 1
                stack.append((t, iter(q.out_arrows[t.target])))
    return False


class PathBasis:
    """The basis B of kQ/<Z>: all paths with no relation as a factor."""

    def __init__(self, quiver: Quiver, relations: Sequence[Path], paths: Sequence[Path]):
        self.quiver = quiver
        self.relations = tuple(relations)
        self.paths = tuple(paths)
        self.index = {p: i for i, p in enumerate(self.paths)}
        self._test = _FactorTest(self.relations)
        by_len = defaultdict(list)
        for p in self.paths:
            by_len[len(p)].append(p)
        self.max_length = max(by_len) if by_len else 0
        self.layers = tuple(tuple(by_len[n]) for n in range(self.max_length + 1))

    def __len__(self):
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)

    def __contains__(self, p) -> bool:
        return p in self.index

    def index_of(self, p: Path):
        return self.index.get(p)

    def sizes(self) -> tuple:
        return tuple(len(layer) for layer in self.layers)

    def of_length(self, n: int) -> tuple:
        return self.layers[n] if 0 <= n < len(self.layers) else ()

    def mul(self, left: Path, right: Path):
        """Product ``left * right`` in the algebra: walk ``right`` then ``left``."""
        p = self.quiver.concat(right, left)
        return p if p is not None and p in self.index else None


def enumerate_basis(q: Quiver, z: Sequence[Path], cap: int = DEFAULT_CAP) -> PathBasis:
    validate_relations(q, z)
    test = _FactorTest(z)
    if _automaton_has_cycle(q, test):
        raise InfiniteDimensional("kQ/<Z> is infinite dimensional: some oriented cycle avoids every relation")
    paths = [Path(v, v, ()) for v in range(q.n_vertices)]
    layer = [Path(a.source, a.target, (i,)) for i, a in enumerate(q.arrows)]
    while layer:
        if len(paths) + len(layer) > cap:
            raise CapExceeded(f"basis has more than {cap} elements")
        layer.sort(key=Path.sort_key)
        paths.extend(layer)
        nxt = []
        for p in layer:
            for a in q.out_arrows[p.target]:
                w = p.word + (a,)
                if not test.ends_with_relation(w):
                    nxt.append(Path(p.source, q.arrows[a].target, w))
        layer = nxt
    return PathBasis(q, z, paths)


# -- substitution -------------------------------------------------------------------


def substitute(eps: Path, a: int, gamma: Path, basis: PathBasis) -> dict:
    """Sum of the paths obtained by replacing one occurrence of arrow ``a``.

    Only replacements that land in B are kept.  Coinciding results add up,
    so the coefficients are nonnegative integers.
    """
    q = basis.quiver
    arr = q.arrows[a]
    if gamma.source != arr.source or gamma.target != arr.target:
        raise NotParallel(f"{q.format_path(gamma)!r} is not parallel to arrow {arr.name!r}")
    out: dict = {}
    w = eps.word
    for i, x in enumerate(w):
        if x != a:
            continue
        new = w[:i] + gamma.word + w[i + 1:]
        p = Path(eps.source, eps.target, new)
        if p in basis.index:
            out[p] = out.get(p, 0) + 1
    return out


# -- parallel pairs --------------------------------------------------------------------


class ParallelPairs:
    """Ordered parallel couples ``(x, y)`` with ``x`` from X and ``y`` from Y."""

    def __init__(self, name: str, pairs: Sequence[tuple]):
        self.name = name
        self.pairs = tuple(pairs)
        self.index = {p: i for i, p in enumerate(self.pairs)}
        self.degrees = tuple(len(y) - len(x) for x, y in self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __getitem__(self, i):
        return self.pairs[i]

    def indices_of_degree(self, d: int) -> list:
        return [i for i, g in enumerate(self.degrees) if g == d]

    def degree_set(self) -> list:
        return sorted(set(self.degrees))

    def format(self, q: Quiver, i: int) -> str:
        x, y = self.pairs[i]
        return f"({q.format_path(x)}, {q.format_path(y)})"


def _path_set(tag, basis: PathBasis) -> list:
    q = basis.quiver
    if tag == "Q0":
        return [Path(v, v, ()) for v in range(q.n_vertices)]
    if tag == "Q1":
        return [Path(a.source, a.target, (i,)) for i, a in enumerate(q.arrows)]
    if tag == "Z":
        return list(basis.relations)
    if tag == "B":
        return list(basis.paths)
    if isinstance(tag, tuple) and tag[0] == "B":
        return list(basis.of_length(tag[1]))
    raise ValueError(f"unknown path set tag {tag!r}")


def parallel_pairs(xs, ys, basis: PathBasis) -> ParallelPairs:
    """All parallel couples from X x Y, ordered by X order then Y order.

    Tags: ``"Q0"``, ``"Q1"``, ``"Z"``, ``"B"`` or ``("B", n)``.
    """
    ylist = _path_set(ys, basis)
    by_ends = defaultdict(list)
    for y in ylist:
        by_ends[(y.source, y.target)].append(y)
    pairs = [(x, y) for x in _path_set(xs, basis) for y in by_ends.get((x.source, x.target), ())]
    name = f"{_tag_name(xs)}//{_tag_name(ys)}"
    return ParallelPairs(name, pairs)


def _tag_name(tag) -> str:
    return tag if isinstance(tag, str) else f"{tag[0]}{tag[1]}"


# -- parallel classes, Q-bar, trees, components ---------------------------------------------


def parallel_classes(q: Quiver) -> list:
    """Partition of the arrow indices into classes of parallel arrows."""
    groups: dict = {}
    for i, a in enumerate(q.arrows):
        groups.setdefault((a.source, a.target), []).append(i)
    return [tuple(g) for g in groups.values()]


def qbar(q: Quiver) -> Quiver:
    """Subquiver keeping the first arrow of every parallel class."""
    keep = [cls[0] for cls in parallel_classes(q)]
    return Quiver(q.vertices, [(q.arrows[i].name, q.vertices[q.arrows[i].source],
                                q.vertices[q.arrows[i].target]) for i in keep])


def _union_find_components(n: int, edges: Iterable[tuple]) -> list:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    comps: dict = {}
    for v in range(n):
        comps.setdefault(find(v), []).append(v)
    return list(comps.values())


def is_tree(q: Quiver) -> bool:
    """Underlying undirected multigraph is connected and acyclic."""
    if q.n_vertices == 0:
        return False
    comps = _union_find_components(q.n_vertices, ((a.source, a.target) for a in q.arrows))
    return len(comps) == 1 and q.n_arrows == q.n_vertices - 1


def connected_components(q: Quiver) -> list:
    """Vertex index lists of the connected components, in declaration order."""
    return _union_find_components(q.n_vertices, ((a.source, a.target) for a in q.arrows))


def split_components(q: Quiver, z: Sequence[Path]) -> list:
    """Restrict ``(q, z)`` to each connected component.

    Returns ``(subquiver, relations, vertex_ids, arrow_ids)`` per component;
    the ids map back into ``q``.
    """
    out = []
    for verts in connected_components(q):
        vset = set(verts)
        arrow_ids = [i for i, a in enumerate(q.arrows) if a.source in vset]
        sub = Quiver([q.vertices[v] for v in verts],
                     [(q.arrows[i].name, q.vertices[q.arrows[i].source],
                       q.vertices[q.arrows[i].target]) for i in arrow_ids])
        rels = tuple(sub.path([q.arrows[a].name for a in p.word]) for p in z
                     if q.arrows[p.word[0]].source in vset)
        out.append((sub, rels, tuple(verts), tuple(arrow_ids)))
    return out
