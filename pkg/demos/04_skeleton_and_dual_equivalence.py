#!/usr/bin/env python3
"""Skeletons of crystals next to dual equivalence graphs.

Collapsing each descent class to its standard tableau, keeping one minimal
label per ordered class pair, gives a graph that stops changing once the
alphabet reaches the longest descent composition. Its unordered structure
contains the dual equivalence graph on the same standard tableaux. Pass a
directory as the first argument to write DOT renderings there.
"""

import sys
from pathlib import Path

from qcrystals import (
    build_skeleton, check_dual_equivalence_conjecture, check_skeleton_strata,
    dual_equivalence_graph, skeleton_stable,
)
from qcrystals.render import dual_equivalence_to_dot, skeleton_to_dot
from qcrystals.skeleton import induced_by_descent_count, classify_subgraph
from qcrystals.tableaux import descent_composition

SHAPE = (4, 3)

skel = skeleton_stable(SHAPE)
print(f"stable skeleton of {SHAPE}: {len(skel.vertices)} standard tableaux, "
      f"{len(skel.edges)} minimal-label edges, stable from alphabet "
      f"{skel.stable_bound} on")
assert build_skeleton(SHAPE, skel.stable_bound + 2) == skel

de = dual_equivalence_graph(SHAPE)
print(f"dual equivalence graph: {len(de.edges)} labelled edges on the same "
      f"vertices")

report = check_dual_equivalence_conjecture(SHAPE)
details = dict(report.details)
print(f"unordered pairs: skeleton {details['skeleton_unordered_pairs']}, "
      f"dual equivalence {details['dual_equivalence_unordered_pairs']}, "
      f"skeleton-only {details['skeleton_only_pairs']}")
assert report.passed
print("containment holds: every dual-equivalence edge is matched\n")

print("fixed-descent-count strata and their structure:")
for d in sorted({len(descent_composition(T)) - 1 for T in skel.vertices}):
    vertices, edges = induced_by_descent_count(skel, d)
    kind = classify_subgraph(vertices, edges)
    print(f"  {d} descents: {len(vertices)} vertices, {len(edges)} edges -> {kind}")
strata = check_skeleton_strata(SHAPE)
assert strata.passed

print("\nthe same checks over all shapes of size up to 5:")
from qcrystals.tableaux import partitions_of
for m in range(1, 6):
    for shape in partitions_of(m):
        ok1 = check_skeleton_strata(shape).passed
        ok2 = check_dual_equivalence_conjecture(shape).passed
        print(f"  {shape}: strata {'ok' if ok1 else 'OTHER!'}, "
              f"containment {'ok' if ok2 else 'violated!'}")

if len(sys.argv) > 1:
    outdir = Path(sys.argv[1])
    outdir.mkdir(parents=True, exist_ok=True)
    (outdir / "skeleton_4_3.dot").write_text(skeleton_to_dot(skel))
    (outdir / "dual_equivalence_4_3.dot").write_text(dual_equivalence_to_dot(de))
    print(f"\nwrote DOT renderings to {outdir}")
