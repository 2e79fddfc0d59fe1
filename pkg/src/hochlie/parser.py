"""Line-oriented input format.

::

    # comment
    field rational | field prime <p>
    vertex <name> ...
    arrow <name> : <src> -> <dst>
    relation <arrow> <arrow> ...      (traversal order, first arrow first)

Names match ``[A-Za-z_][A-Za-z0-9_]*`` and must be declared before use.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field

from .errors import (DuplicateName, NonComposable, NotPrime, ParseError, UnknownArrow,
                     UnknownVertex)
from .linalg import Field
from .quiver import Path, Quiver, validate_relations

NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_TOKEN = re.compile(r"\S+")


@dataclass
class InputDocument:
    field: Field
    quiver: Quiver
    relations: tuple
    options: dict = dc_field(default_factory=dict)

    def relation_words(self) -> list:
        return [[self.quiver.arrows[a].name for a in p.word] for p in self.relations]

    def to_text(self) -> str:
        q = self.quiver
        f = "field rational" if self.field.is_rational else f"field prime {self.field.characteristic}"
        lines = [f, "vertex " + " ".join(q.vertices)]
        lines += [f"arrow {a.name} : {q.vertices[a.source]} -> {q.vertices[a.target]}" for a in q.arrows]
        lines += ["relation " + " ".join(w) for w in self.relation_words()]
        return "\n".join(lines) + "\n"


def _tokens(line: str):
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]


def _name(tok, lineno):
    text, col = tok
    if not NAME.match(text):
        raise ParseError(f"invalid name {text!r}", lineno, col)
    return text


def parse_input(text: str) -> InputDocument:
    field = None
    vertices: list = []
    arrows: list = []
    arrow_pos: dict = {}
    relations: list = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        toks = _tokens(line)
        if not toks:
            continue
        (kw, kcol), rest = toks[0], toks[1:]
        if kw == "field":
            if field is not None:
                raise ParseError("field declared twice", lineno, kcol)
            if len(rest) == 1 and rest[0][0] == "rational":
                field = Field.rational()
            elif len(rest) == 2 and rest[0][0] == "prime":
                ptxt, pcol = rest[1]
                if not ptxt.isdigit():
                    raise ParseError(f"expected a prime, got {ptxt!r}", lineno, pcol)
                try:
                    field = Field.prime(int(ptxt))
                except NotPrime as e:
                    raise NotPrime(f"line {lineno}, column {pcol}: {e}") from None
            else:
                col = rest[0][1] if rest else kcol + len(kw)
                raise ParseError("expected 'field rational' or 'field prime <p>'", lineno, col)
        elif kw == "vertex":
            if not rest:
                raise ParseError("expected at least one vertex name", lineno, kcol + len(kw))
            for tok in rest:
                name = _name(tok, lineno)
                if name in vertices:
                    raise DuplicateName(f"line {lineno}, column {tok[1]}: vertex {name!r} declared twice")
                vertices.append(name)
        elif kw == "arrow":
            if len(rest) != 5 or rest[1][0] != ":" or rest[3][0] != "->":
                col = rest[0][1] if rest else kcol + len(kw)
                raise ParseError("expected 'arrow <name> : <src> -> <dst>'", lineno, col)
            name = _name(rest[0], lineno)
            if name in arrow_pos:
                raise DuplicateName(f"line {lineno}, column {rest[0][1]}: arrow {name!r} declared twice")
            ends = []
            for tok in (rest[2], rest[4]):
                v = _name(tok, lineno)
                if v not in vertices:
                    raise UnknownVertex(f"line {lineno}, column {tok[1]}: unknown vertex {v!r}")
                ends.append(v)
            arrow_pos[name] = len(arrows)
            arrows.append((name, ends[0], ends[1]))
        elif kw == "relation":
            if not rest:
                raise ParseError("expected arrow names", lineno, kcol + len(kw))
            word = []
            for tok in rest:
                a = _name(tok, lineno)
                if a not in arrow_pos:
                    raise UnknownArrow(f"line {lineno}, column {tok[1]}: unknown arrow {a!r}")
                word.append((arrow_pos[a], tok))
            for (a, _), (b, tok) in zip(word, word[1:]):
                if arrows[a][2] != arrows[b][1]:
                    raise NonComposable(f"line {lineno}, column {tok[1]}: {arrows[a][0]!r} ends at "
                                        f"{arrows[a][2]!r} but {arrows[b][0]!r} starts at {arrows[b][1]!r}")
            relations.append(((lineno, kcol), tuple(a for a, _ in word)))
        else:
            raise ParseError(f"unknown keyword {kw!r}", lineno, kcol)
    if not vertices:
        raise ParseError("no vertices declared", max(1, len(text.splitlines())), 1)
    q = Quiver(vertices, arrows)
    z = []
    for (lineno, col), word in relations:
        p = Path(q.arrows[word[0]].source, q.arrows[word[-1]].target, word)
        if p in z:
            raise DuplicateName(f"line {lineno}, column {col}: duplicate relation")
        z.append(p)
    z = tuple(z)
    validate_relations(q, z)
    return InputDocument(field or Field.rational(), q, z)


def read_input(path: str) -> InputDocument:
    with open(path, encoding="utf-8") as fh:
        return parse_input(fh.read())
