"""Three parallel arrows over GF(3): semisimple but not simple.

Here sl(3) contains the scalars because 3 = 0, so the algebra we get is
pgl(3) = gl(3)/scalars. Its derived algebra is sl(3)/scalars, a proper ideal of
codimension one.
"""
from pathlib import Path

from hochlie import parse_input
from hochlie.analysis import analyze_component
from hochlie.classify import combinatorial_radical, saturation_order, semisimple_quotient_model
from hochlie.lie import compare, pgl, series_and_center
from hochlie.quiver import split_components

HERE = Path(__file__).parent

doc = parse_input((HERE / "inputs" / "pgl3_f3.txt").read_text())
((sub, rels, _, _),) = split_components(doc.quiver, doc.relations)
res = analyze_component(sub, rels, doc.field)
L = res.lie
print("dim H1:", res.h1.dim)
print("verdict:", res.classification.summary())

sat = saturation_order(res.basis)
rad = combinatorial_radical(res.h1, sat, L)
model = semisimple_quotient_model(res.h1, sat, L, rad)
print("radical dim:", rad.dim, "| block sizes:", model.sizes)
print("isomorphic to pgl(3) over GF(3):", compare(pgl(3, doc.field), model.quotient, model.images))

s = series_and_center(L)
derived = L.bracket_span(L.full(), L.full())
print("center dim:", s.center.dim)
print(f"dim [L, L] = {derived.dim} < dim L = {L.dim}")
