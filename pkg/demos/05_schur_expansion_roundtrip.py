#!/usr/bin/env python3
"""From the fundamental basis back to Schur functions, exactly.

A symmetric integer combination of fundamental basis elements is rewritten
in the Schur basis by repeatedly peeling off the lexicographically greatest
support term, which must be a partition. Exact integer arithmetic
throughout; non-symmetric inputs are detected, not mangled.
"""

import random

from qcrystals import schur_to_f, schurify
from qcrystals.errors import NotSymmetric
from qcrystals.symfunc import (
    FExpansion, SchurExpansion, format_f_expansion, format_schur_expansion,
    parse_f_expansion, plethysm_monomial_count, schur_expansion_to_f,
)
from qcrystals.tableaux import partitions_of

print("a single Schur function, expanded and recovered:")
f = schur_to_f((4, 3))
print("  F-side:", format_f_expansion(f))
print("  back:  ", format_schur_expansion(schurify(f)))
print()

print("a combination entered through the text grammar:")
text = "2*F[2,1] + 2*F[1,2] + F[3] + F[1,1,1]"
parsed = parse_f_expansion(text)
print("  input: ", text)
print("  Schur: ", format_schur_expansion(schurify(parsed)))
print()

print("random positive combinations of degree up to 8 round-trip exactly:")
rng = random.Random(0)
for trial in range(5):
    m = rng.randint(2, 8)
    shapes = rng.sample(partitions_of(m), 2)
    g = SchurExpansion({shapes[0]: rng.randint(1, 9),
                        shapes[1]: rng.randint(1, 9)})
    back = schurify(schur_expansion_to_f(g))
    status = "ok" if back == g else "MISMATCH"
    print(f"  degree {m}: {format_schur_expansion(g)} -> {status}")
    assert back == g
print()

print("a lone non-partition term is rejected as non-symmetric:")
try:
    schurify(FExpansion({(1, 2): 1}))
except NotSymmetric as exc:
    print("  ", exc)
print()

print("monomial counts of plethysms via the counting formula:")
for outer, inner, n in [((1,), (2, 1), 3), ((2,), (1,), 2), ((2, 1), (2,), 3)]:
    count = plethysm_monomial_count(outer, inner, n)
    print(f"  outer {outer}, inner {inner}, {n} variables: {count} monomials")
