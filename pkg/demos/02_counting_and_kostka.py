#!/usr/bin/env python3
"""Exact counting: tableaux of a shape, one-row crystals, Kostka numbers.

Every descent class with s parts is isomorphic as an oriented graph to the
one-row crystal on an alphabet shrunk by s-1, so counting tableaux reduces
to binomial coefficients weighted by a descent census of standard tableaux.
"""

from qcrystals import count_bm, count_ssyt_formula, enumerate_ssyt, kostka
from qcrystals.decomposition import descent_count_census
from qcrystals.tableaux import partitions_of

SHAPE = (4, 3)

print(f"descent census of standard tableaux of {SHAPE}:",
      descent_count_census(SHAPE))
print(f"number of tableaux of shape {SHAPE} by maximal entry:")
for n in range(2, 9):
    formula = count_ssyt_formula(SHAPE, n)
    brute = len(enumerate_ssyt(SHAPE, n)) if n <= 7 else None
    note = f" (brute force agrees: {brute})" if brute is not None else ""
    print(f"  n={n}: {formula}{note}")
print()

print("one-row crystals are counted by a single multiset coefficient:")
for m, k in [(7, 2), (10, 5), (6, 1)]:
    print(f"  size {m}, alphabet {k}: {count_bm(m, k)} "
          f"(enumeration: {len(enumerate_ssyt((m,), k))})")
print()

print("Kostka numbers count the classes whose type the weight refines:")
for mu in [(2, 2, 2, 1), (1, 1, 1, 1, 1, 1, 1), (3, 3, 1), (2, 3, 2)]:
    print(f"  weight {mu}: K = {kostka(SHAPE, mu)}")

print()
print("weights that are permutations of one another give equal counts:")
for shape in partitions_of(4):
    values = {kostka(shape, mu) for mu in [(2, 1, 1), (1, 2, 1), (1, 1, 2)]}
    print(f"  shape {shape}: K over all orderings of (2,1,1) = {values}")
    assert len(values) == 1
