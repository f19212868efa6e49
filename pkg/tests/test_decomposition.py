from collections import Counter

import pytest

from qcrystals.crystal import generate_crystal
from qcrystals.decomposition import (
    QuasicrystalClass, canonical_quasicrystal,
    check_descent_composition_conditions, count_bm, count_ssyt_formula,
    decompose, descent_count_census, kostka, subcomponent_longest_path,
    subcomponent_sink, verify_subcomponent_iso, weight_matching_bijection,
    weight_multiplicity_in_subcomponent,
)
from qcrystals.errors import InvalidParameters
from qcrystals.tableaux import (
    descent_composition, enumerate_ssyt, highest_weight_tableau,
    partitions_of, syt_descent_compositions, weight_of,
)


def T(*rows):
    return tuple(tuple(r) for r in rows)


FIG2_EXPANSION = {
    (4, 3): 1, (3, 4): 1, (3, 3, 1): 1, (2, 4, 1): 1, (3, 2, 2): 1,
    (2, 3, 2): 2, (2, 2, 3): 1, (1, 4, 2): 1, (1, 3, 3): 1, (2, 2, 2, 1): 1,
    (1, 3, 2, 1): 1, (1, 2, 3, 1): 1, (1, 2, 2, 2): 1,
}


class TestDecompose:
    def test_classes_of_43(self):
        G = generate_crystal((4, 3), 4)
        subs = decompose(G)
        assert len(subs) == 14
        assert dict(Counter(s.alpha for s in subs)) == FIG2_EXPANSION

    def test_one_row_shape_single_class(self):
        G = generate_crystal((5,), 3)
        subs = decompose(G)
        assert len(subs) == 1
        assert subs[0].size == len(G.vertices)

    def test_small_shape(self):
        G = generate_crystal((2, 1), 3)
        subs = decompose(G)
        assert sorted(s.alpha for s in subs) == [(1, 2), (2, 1)]
        assert len(G.vertices) == 8

    def test_partition_property(self):
        G = generate_crystal((3, 2), 4)
        subs = decompose(G)
        covered = sorted(v for s in subs for v in s.vertex_indices)
        assert covered == list(range(len(G.vertices)))

    def test_sources_have_class_weight(self):
        G = generate_crystal((3, 2), 4)
        for sub in decompose(G):
            source = sub.source
            assert weight_of(source, len(sub.alpha)) == sub.alpha
            assert descent_composition(source) == sub.alpha


class TestSinkAndHeight:
    def test_sink_of_whole_shape_class(self):
        G = generate_crystal((4, 3), 4)
        sub = next(s for s in decompose(G) if s.alpha == (4, 3))
        assert sub.source == highest_weight_tableau((4, 3))
        assert subcomponent_sink(sub, 4) == T([3, 3, 3, 3], [4, 4, 4])

    def test_full_alphabet_class_is_singleton(self):
        # with the alphabet as short as the class type, the shift is zero
        G = generate_crystal((2, 1), 2)
        subs = decompose(G)
        assert [s.size for s in subs] == [1, 1]
        for sub in subs:
            assert subcomponent_sink(sub, 2) == sub.source

    def test_sink_has_no_outgoing_class_edges(self):
        G = generate_crystal((3, 2), 4)
        for sub in decompose(G):
            sink = subcomponent_sink(sub, 4)
            k = G.index_of(sink)
            assert not any(v in sub.vertex_indices for v in G.out_edges(k).values())

    def test_height_law(self):
        G = generate_crystal((4, 3), 4)
        for sub in decompose(G):
            assert subcomponent_longest_path(sub) == 7 * (4 - len(sub.alpha))


class TestCanonicalClass:
    def test_chain_model(self):
        model = canonical_quasicrystal((2, 3, 2), 4)
        assert len(model.vertices) == 8
        assert len(model.edges) == 7

    def test_full_alphabet_singleton(self):
        model = canonical_quasicrystal((1, 2), 2)
        assert len(model.vertices) == 1

    def test_two_part_model(self):
        model = canonical_quasicrystal((4, 3), 4)
        assert len(model.vertices) == 36

    def test_too_many_parts(self):
        with pytest.raises(InvalidParameters):
            canonical_quasicrystal((1, 1, 1), 2)

    def test_signature_helper(self):
        sig = QuasicrystalClass(m=7, s=3, n=4)
        assert sig.height == 8
        assert sig.vertex_count == 8


class TestIsomorphism:
    def test_every_class_of_43(self):
        G = generate_crystal((4, 3), 4)
        for sub in decompose(G):
            ok, witness = verify_subcomponent_iso(G, sub, 4)
            assert ok, witness

    def test_repeated_type_classes_are_isomorphic(self):
        G = generate_crystal((4, 3), 4)
        pair = [s for s in decompose(G) if s.alpha == (2, 3, 2)]
        assert len(pair) == 2
        phi = weight_matching_bijection(G, pair[0], pair[1], 4)
        assert {(phi[u], phi[v], i) for u, v, i in pair[0].edges} == set(pair[1].edges)

    def test_singleton_class(self):
        G = generate_crystal((2, 1), 2)
        for sub in decompose(G):
            ok, _ = verify_subcomponent_iso(G, sub, 2)
            assert ok


class TestCountBm:
    def test_formula_value(self):
        assert count_bm(10, 5) == 1001

    def test_single_column_alphabet(self):
        assert count_bm(6, 1) == 1

    def test_matches_enumeration(self):
        assert count_bm(7, 2) == len(enumerate_ssyt((7,), 2)) == 8
        assert count_bm(10, 5) == len(enumerate_ssyt((10,), 5))


class TestCountFormula:
    def test_counting_shape_43(self):
        assert [count_ssyt_formula((4, 3), n) for n in (4, 5, 6, 7)] == \
            [140, 560, 1764, 4704]

    def test_descent_census_43(self):
        assert descent_count_census((4, 3)) == {1: 2, 2: 8, 3: 4}

    def test_zero_below_length(self):
        assert count_ssyt_formula((2, 1, 1), 2) == 0

    def test_matches_enumeration(self):
        for m in range(1, 7):
            for shape in partitions_of(m):
                for n in range(1, 6):
                    assert count_ssyt_formula(shape, n) == \
                        len(enumerate_ssyt(shape, n))


class TestKostka:
    def test_highest_weight_is_unique(self):
        for m in range(1, 7):
            for shape in partitions_of(m):
                assert kostka(shape, shape) == 1

    def test_standard_weight(self):
        assert kostka((2, 1), (1, 1, 1)) == 2

    def test_zero_parts_ignored(self):
        assert kostka((2, 1), (1, 0, 1, 1)) == kostka((2, 1), (1, 1, 1))

    def test_against_brute_force_small(self):
        from qcrystals.tableaux import compositions_of
        for m in range(1, 6):
            for shape in partitions_of(m):
                tally = Counter(weight_of(t, m) for t in enumerate_ssyt(shape, m))
                for mu in compositions_of(m):
                    padded = mu + (0,) * (m - len(mu))
                    assert kostka(shape, mu) == tally.get(padded, 0)

    def test_size_mismatch(self):
        with pytest.raises(InvalidParameters):
            kostka((2, 1), (2, 2))


class TestWeightMultiplicity:
    def test_refining_weight_occurs(self):
        assert weight_multiplicity_in_subcomponent((2, 3, 2), (2, 1, 2, 2)) == 1

    def test_class_type_itself(self):
        assert weight_multiplicity_in_subcomponent((2, 3, 2), (2, 3, 2)) == 1

    def test_non_refining_weight(self):
        assert weight_multiplicity_in_subcomponent((2, 3, 2), (3, 2, 2)) == 0

    def test_against_actual_classes(self):
        G = generate_crystal((3, 2), 4)
        for sub in decompose(G):
            weights = Counter(weight_of(G.vertices[v], 4)
                              for v in sub.vertex_indices)
            assert all(c == 1 for c in weights.values())
            for mu in weights:
                assert weight_multiplicity_in_subcomponent(sub.alpha, mu) == 1

    def test_accepts_class_object_or_type(self):
        G = generate_crystal((2, 1), 3)
        sub = decompose(G)[0]
        mu = weight_of(G.vertices[next(iter(sub.vertex_indices))], 3)
        assert weight_multiplicity_in_subcomponent(sub, mu) == \
            weight_multiplicity_in_subcomponent(sub.alpha, mu) == 1


class TestFullInvariantDomain:
    def test_decomposition_suite_at_stated_bounds(self):
        # partition/multiplicity/sink/height/isomorphism laws, size <= 7,
        # alphabet <= 5
        from qcrystals.verify import decomposition_suite
        report = decomposition_suite(max_size=7, alphabet=5)
        assert report.passed, report.details


class TestDescentConditions:
    def test_conditions_pass_but_absent(self):
        report = check_descent_composition_conditions((3, 3), (1, 2, 3))
        assert report.all_conditions_pass
        assert not report.occurs
        assert report.multiplicity == 0

    def test_occurs_twice(self):
        report = check_descent_composition_conditions((4, 3), (2, 3, 2))
        assert report.all_conditions_pass
        assert report.occurs and report.multiplicity == 2

    def test_shape_itself_always_occurs(self):
        for m in range(1, 7):
            for shape in partitions_of(m):
                report = check_descent_composition_conditions(shape, shape)
                assert report.occurs and report.multiplicity == 1

    def test_necessity_on_occurring_types(self):
        for shape in [(3, 2), (4, 3), (2, 2, 1)]:
            for alpha in set(syt_descent_compositions(shape)):
                report = check_descent_composition_conditions(shape, alpha,
                                                              n=sum(shape))
                assert report.all_conditions_pass
