"""Blocks of group algebras in characteristic p, modelled by crown quivers.

A crown with n vertices and cyclic relations of length p^a stands in for a block
with cyclic defect. H1 of a direct sum of crowns is the product of the pieces.
"""
import json

from hochlie import CrownSpec, group_algebra

CASES = [
    ("C_3 over GF(3)", CrownSpec(3, 1, (1,))),
    ("C_5 over GF(5)", CrownSpec(5, 1, (1,))),
    ("C_2 over GF(2)", CrownSpec(2, 1, (1,))),
    ("S_3 over GF(3)", CrownSpec(3, 1, (2,))),
    ("C_9 over GF(3)", CrownSpec(3, 2, (1,))),
    ("two crowns", CrownSpec(3, 1, (1, 2))),
]

for label, spec in CASES:
    r = group_algebra(spec)
    ga = r["group_algebra"]
    print(f"{label:>16}: dim H1 = {r['h1']['dim']}, {r['verdict']}; "
          f"predicted {ga['theorem']}, agree {ga['agree']}")

print(json.dumps(group_algebra(CrownSpec(3, 1, (1, 2)))["group_algebra"], indent=2, ensure_ascii=False))
