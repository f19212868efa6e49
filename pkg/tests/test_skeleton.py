from collections import Counter

from qcrystals.crystal import generate_crystal
from qcrystals.decomposition import decompose
from qcrystals.skeleton import (
    CHAINS, EVEN_CYCLES, OTHER, SINGLETONS,
    build_skeleton, check_dual_equivalence_conjecture, check_evac_duality,
    check_reordering_conjecture, check_skeleton_strata, classify_subgraph,
    dual_equivalence_graph, dual_equivalence_involution,
    induced_by_descent_count, max_descent_composition_length, skeleton_stable,
)
from qcrystals.tableaux import (
    descent_composition, enumerate_syt, partitions_of,
)


def T(*rows):
    return tuple(tuple(r) for r in rows)


class TestBuildSkeleton:
    def test_vertices_and_strata_of_43(self):
        skel = build_skeleton((4, 3), 4)
        assert len(skel.vertices) == 14
        strata = Counter(len(descent_composition(v)) - 1 for v in skel.vertices)
        assert strata == {1: 2, 2: 8, 3: 4}
        assert len(skel.edges) == 32

    def test_one_row_shape(self):
        skel = build_skeleton((5,), 3)
        assert len(skel.vertices) == 1 and not skel.edges

    def test_stable_at_bound(self):
        assert build_skeleton((4, 3), 4) == build_skeleton((4, 3), 5)

    def test_edges_follow_crystal_edges(self):
        # every skeleton edge comes from some crystal edge between classes
        skel = build_skeleton((3, 2), 3)
        G = generate_crystal((3, 2), 3)
        subs = decompose(G)
        class_of = {}
        for k, sub in enumerate(subs):
            for v in sub.vertex_indices:
                class_of[v] = k
        crossing = {(class_of[u], class_of[v]) for u, v, _ in G.edges
                    if class_of[u] != class_of[v]}
        assert len(crossing) == len(skel.edges)


class TestSkeletonStable:
    def test_bound_of_43(self):
        skel = skeleton_stable((4, 3))
        assert skel.stable_bound == 4 == max_descent_composition_length((4, 3))

    def test_column_shape_single_vertex(self):
        skel = skeleton_stable((1, 1, 1, 1))
        assert skel.stable_bound == 4
        assert len(skel.vertices) == 1 and not skel.edges

    def test_census_of_321(self):
        skel = skeleton_stable((3, 2, 1))
        assert len(skel.vertices) == 16
        assert len(skel.edges) == 26
        v2, e2 = induced_by_descent_count(skel, 2)
        v3, e3 = induced_by_descent_count(skel, 3)
        assert (len(v2), len(e2)) == (8, 8)
        assert (len(v3), len(e3)) == (8, 6)
        assert classify_subgraph(v2, e2) == EVEN_CYCLES
        assert classify_subgraph(v3, e3) == CHAINS

    def test_restriction_below_bound(self):
        stable = skeleton_stable((3, 2))
        small = build_skeleton((3, 2), 2)
        keep = set(small.vertices)
        assert keep == {v for v in stable.vertices
                        if len(descent_composition(v)) <= 2}
        induced = {p: l for p, l in stable.edges.items()
                   if p[0] in keep and p[1] in keep}
        assert small.edges == induced


class TestClassification:
    def test_two_vertex_chain(self):
        a, b = T([1, 2], [3]), T([1, 3], [2])
        assert classify_subgraph((a, b), {(a, b): 1}) == CHAINS

    def test_isolated_vertices(self):
        a, b = T([1, 2], [3]), T([1, 3], [2])
        assert classify_subgraph((a, b), {}) == SINGLETONS

    def test_even_cycle_with_attachments(self):
        skel = skeleton_stable((4, 1, 1))
        vertices, edges = induced_by_descent_count(skel, 2)
        assert len(vertices) == 10
        assert classify_subgraph(vertices, edges) == EVEN_CYCLES

    def test_odd_cycle_is_other(self):
        verts = ("a", "b", "c")
        edges = {("a", "b"): 1, ("b", "c"): 1, ("c", "a"): 1}
        assert classify_subgraph(verts, edges) == OTHER

    def test_never_other_up_to_size_six(self):
        for m in range(1, 7):
            for shape in partitions_of(m):
                report = check_skeleton_strata(shape)
                assert report.passed, report


class TestDualEquivalence:
    def test_superstandard_edges_of_43(self):
        g = dual_equivalence_graph((4, 3))
        a, b = T([1, 2, 3, 4], [5, 6, 7]), T([1, 2, 3, 5], [4, 6, 7])
        labels = {i for u, v, i in g.edges if {u, v} == {a, b}}
        assert labels == {4, 5}

    def test_involutions(self):
        for shape in [(3, 2), (2, 2, 1), (4, 3)]:
            m = sum(shape)
            for t in enumerate_syt(shape):
                for i in range(2, m):
                    image = dual_equivalence_involution(t, i)
                    assert dual_equivalence_involution(image, i) == t

    def test_one_row_no_edges(self):
        assert not dual_equivalence_graph((6,)).edges

    def test_edge_census_of_43(self):
        g = dual_equivalence_graph((4, 3))
        assert len(g.edges) == 25
        assert len(g.unordered_pairs()) == 17


class TestDualEquivalenceConjecture:
    def test_all_small_shapes(self):
        for m in range(1, 7):
            for shape in partitions_of(m):
                assert check_dual_equivalence_conjecture(shape).passed

    def test_seven_extra_edges_for_43(self):
        report = check_dual_equivalence_conjecture((4, 3))
        details = dict((k, v) for k, v in report.details)
        assert report.passed
        assert details["skeleton_only_pairs"] == 7

    def test_tiny_shape(self):
        report = check_dual_equivalence_conjecture((2, 1))
        assert report.passed


class TestReorderingConjecture:
    def test_small_sizes(self):
        for m in range(1, 7):
            assert check_reordering_conjecture(m).passed

    def test_partitions_occur_through_highest_weight(self):
        report = check_reordering_conjecture(5)
        assert report.passed

    def test_report_details(self):
        report = check_reordering_conjecture(4)
        details = dict((k, v) for k, v in report.details)
        assert details["compositions_checked"] == 8
        assert details["missing"] == ()


class TestEvacDuality:
    def test_43(self):
        report = check_evac_duality((4, 3), 4)
        assert report.passed
        pairs = dict(report.details)["class_pairs"]
        # the two repeated-type classes are either swapped or fixed setwise
        G = generate_crystal((4, 3), 4)
        subs = decompose(G)
        repeated = [k for k, s in enumerate(subs) if s.alpha == (2, 3, 2)]
        image = {a: b for a, b in pairs}
        assert sorted(image[k] for k in repeated) == repeated

    def test_symmetric_singleton_fixed(self):
        # a class with full-alphabet type and symmetric composition maps to itself
        report = check_evac_duality((2, 1, 1), 3)
        assert report.passed
        G = generate_crystal((2, 1, 1), 3)
        subs = decompose(G)
        image = {a: b for a, b in dict(report.details)["class_pairs"]}
        fixed = [k for k, sub in enumerate(subs)
                 if sub.alpha == tuple(reversed(sub.alpha)) and sub.size == 1]
        assert fixed  # the type (1,2,1) gives one
        for k in fixed:
            assert image[k] == k

    def test_exhaustive_small(self):
        for m in range(1, 6):
            for shape in partitions_of(m):
                for n in range(len(shape), 5):
                    assert check_evac_duality(shape, n).passed
