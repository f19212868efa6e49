#!/usr/bin/env python3
"""Evacuation as rotate + complement + rectify, and the duality it induces.

Evacuation is an involution on each crystal that reverses descent
compositions and flips every edge label i to n-i. It therefore pairs each
descent class with one of the reversed type, sending sources to sinks.
"""

from qcrystals import (
    decompose, descent_composition, evacuate, generate_crystal, jdt_rectify,
    rotate180_complement,
)
from qcrystals.skeleton import check_evac_duality
from qcrystals.tableaux import from_rows

T = from_rows([[1, 1, 2, 3], [2, 2, 3], [3], [4]])
print("tableau:", T)
skew = rotate180_complement(T, 4)
print("after the half turn and complement (blanks per row):", skew.inner, skew.rows)
image = jdt_rectify(skew)
print("rectified:", image)
assert image == evacuate(T, 4)
print("descent composition", descent_composition(T), "->",
      descent_composition(image))
assert evacuate(image, 4) == T
print("applying evacuation again recovers the original\n")

SHAPE, N = (4, 3), 4
G = generate_crystal(SHAPE, N)
subs = decompose(G)
report = check_evac_duality(SHAPE, N)
pairs = dict(report.details)["class_pairs"]
print(f"evacuation pairs the {len(subs)} classes of shape {SHAPE}, alphabet {N}:")
for a, b in pairs:
    print(f"  type {subs[a].alpha} <-> type {subs[b].alpha}"
          + ("  (self-paired)" if a == b else ""))
assert report.passed
print("\nevery class maps onto the class of the reversed type,")
print("with edges reversed, labels complemented, and source sent to sink")
