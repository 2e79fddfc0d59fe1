"""n parallel arrows over QQ give sl(n).

The degree-zero pairs (x_i, x_j) behave like matrix units, and the diagonal
ones only matter modulo their sum, which is a coboundary.
"""
from pathlib import Path

from hochlie import analyze, parse_input
from hochlie.analysis import analyze_component
from hochlie.lie import killing_semisimple_char0
from hochlie.quiver import split_components

HERE = Path(__file__).parent

print(analyze(parse_input((HERE / "inputs" / "kronecker.txt").read_text())).render("text").decode())

for n in (2, 3, 4):
    arrows = "".join(f"arrow x{i} : v1 -> v2\n" for i in range(n))
    doc = parse_input("vertex v1 v2\n" + arrows)
    ((sub, rels, _, _),) = split_components(doc.quiver, doc.relations)
    res = analyze_component(sub, rels, doc.field)
    c = res.classification
    print(f"n = {n}: dim {res.h1.dim} = n^2 - 1, {c.summary()}, "
          f"Killing form nondegenerate: {killing_semisimple_char0(res.lie)}")
