#!/usr/bin/env python3
"""Build a crystal of tableaux and split it into descent classes.

A crystal is generated from its highest-weight tableau by the lowering
operators; grouping its vertices by descent composition partitions it into
connected classes, one per standard tableau of the shape. Pass a directory
as the first argument to also write colored DOT renderings there.
"""

import sys
from collections import Counter
from pathlib import Path

from qcrystals import (
    decompose, descent_composition, f_tableau, generate_crystal,
    highest_weight_tableau, reading_word, schur_to_f,
)
from qcrystals.render import crystal_to_dot
from qcrystals.symfunc import format_f_expansion

SHAPE, N = (4, 3), 4

source = highest_weight_tableau(SHAPE)
print(f"highest-weight tableau of shape {SHAPE}: {source}")
print(f"its reading word: {''.join(map(str, reading_word(source)))}")
print(f"one lowering step f_1: {f_tableau(source, 1)}")
print()

G = generate_crystal(SHAPE, N)
print(f"crystal on shape {SHAPE} with entries <= {N}: "
      f"{len(G.vertices)} vertices, {len(G.edges)} edges")

subs = decompose(G)
census = Counter(sub.alpha for sub in subs)
print(f"descent classes: {len(subs)} "
      f"({len(census)} distinct types)")
for alpha, count in sorted(census.items(), reverse=True):
    sizes = [s.size for s in subs if s.alpha == alpha]
    print(f"  type {alpha}: multiplicity {count}, class size {sizes[0]}")
print()

print("the class census is exactly the fundamental-basis expansion:")
print(" ", format_f_expansion(schur_to_f(SHAPE)))

total = sum(s.size for s in subs)
assert total == len(G.vertices)
print(f"class sizes sum to the vertex count: {total}")

for sub in subs:
    assert all(descent_composition(G.vertices[v]) == sub.alpha
               for v in sub.vertex_indices)
print("every vertex sits in the class of its own descent composition")

if len(sys.argv) > 1:
    outdir = Path(sys.argv[1])
    outdir.mkdir(parents=True, exist_ok=True)
    path = outdir / "crystal_4_3_alphabet_4.dot"
    path.write_text(crystal_to_dot(G, subs))
    print(f"wrote colored DOT rendering to {path}")
