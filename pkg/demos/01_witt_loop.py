"""A loop with a^p = 0 over GF(p): H1 is the Witt algebra W(1,1).

Over GF(3) the basis is (a, v), (a, a), (a, aa) in degrees -1, 0, 1, and the
brackets match [x_i, x_j] = (j - i) x_{i+j} of W(1,1). Swapping in a^4 over GF(2)
breaks semisimplicity.
"""
from pathlib import Path

from hochlie import analyze, parse_input
from hochlie.analysis import analyze_component
from hochlie.lie import series_and_center
from hochlie.quiver import split_components

HERE = Path(__file__).parent

doc = parse_input((HERE / "inputs" / "loop3_f3.txt").read_text())
report = analyze(doc)
print(report.render("text").decode())

for m, p in ((3, 3), (5, 5), (4, 2), (2, 2)):
    text = f"field prime {p}\nvertex v\narrow a : v -> v\nrelation {' '.join('a' * m)}\n"
    r = analyze(parse_input(text))
    print(f"a^{m} = 0 over GF({p}): dim H1 = {r.data['h1']['dim']}, {r.data['verdict']}")

# over GF(2) with a^4 = 0 the whole algebra is solvable
doc = parse_input("field prime 2\nvertex v\narrow a : v -> v\nrelation a a a a\n")
((sub, rels, _, _),) = split_components(doc.quiver, doc.relations)
res = analyze_component(sub, rels, doc.field)
print("derived series dims:", series_and_center(res.lie).derived_dims())
