import random

import pytest

from qcrystals.crystal import e_word, f_tableau, f_word, generate_crystal
from qcrystals.errors import EmptyInput, EntryOutOfRange, InvalidPair
from qcrystals.rsk import (
    evacuate, jdt_rectify, jdt_rectify_with_order, rot_word,
    rotate180_complement, rsk, rsk_inverse, rsk_of_rot, skew_from_rows,
    skew_reading_word, straight_as_skew,
)
from qcrystals.tableaux import (
    descent_composition, enumerate_ssyt, partitions_of, reading_word,
    word_descent_composition,
)


def T(*rows):
    return tuple(tuple(r) for r in rows)


def random_word(rng, max_n=4, max_len=9):
    n = rng.randint(1, max_n)
    return tuple(rng.randint(1, n) for _ in range(rng.randint(1, max_len))), n


class TestRsk:
    def test_recording_tableau_of_figure_word(self):
        w = (3, 3, 1, 2, 2, 3, 3, 1, 1, 1, 2, 2, 1, 1)
        P, Q = rsk(w)
        assert P == T([1] * 6, [2] * 4, [3] * 4)
        assert Q == T([1, 2, 5, 6, 7, 12], [3, 4, 10, 11], [8, 9, 13, 14])
        assert descent_composition(Q) == (2, 5, 5, 2)

    def test_straight_reading_words_insert_to_themselves(self):
        for shape in [(3, 2), (2, 2, 1), (4, 1)]:
            for t in enumerate_ssyt(shape, 4):
                assert rsk(reading_word(t)).P == t

    def test_decreasing_word(self):
        P, Q = rsk((3, 2, 1))
        assert P == T([1], [2], [3])
        assert Q == T([1], [2], [3])

    def test_empty_rejected(self):
        with pytest.raises(EmptyInput):
            rsk(())

    def test_recording_descents_match_word(self):
        rng = random.Random(2)
        for _ in range(200):
            w, _ = random_word(rng)
            assert descent_composition(rsk(w).Q) == word_descent_composition(w)

    def test_recording_descents_exhaustive(self):
        for n in (1, 2, 3):
            words = [()]
            for _ in range(7):
                words = [w + (x,) for w in words for x in range(1, n + 1)]
                for w in words:
                    assert descent_composition(rsk(w).Q) == \
                        word_descent_composition(w)


class TestRskInverse:
    def test_roundtrip_random(self):
        rng = random.Random(4)
        for _ in range(200):
            w, _ = random_word(rng, max_n=4, max_len=10)
            assert rsk_inverse(rsk(w)) == w

    def test_decreasing_word(self):
        assert rsk_inverse(rsk((3, 2, 1))) == (3, 2, 1)

    def test_singleton(self):
        assert rsk_inverse(rsk((2,))) == (2,)

    def test_malformed_pair(self):
        with pytest.raises(InvalidPair):
            rsk_inverse((T([1, 1]), T([1], [2])))
        with pytest.raises(InvalidPair):
            rsk_inverse((T([1, 1]), T([1, 3])))


class TestJdt:
    def test_five_slide_example(self):
        S = skew_from_rows((3, 2, 0), [[1, 1], [2, 2, 3], [1, 2, 3]])
        assert jdt_rectify(S) == T([1, 1, 1, 2, 3], [2, 2], [3])

    def test_straight_shape_fixed(self):
        t = T([1, 1, 2], [2, 3])
        assert jdt_rectify(straight_as_skew(t)) == t

    def test_order_independent(self):
        rng = random.Random(8)
        S = skew_from_rows((2, 1), [[1, 1], [1, 2, 2]])
        base = jdt_rectify(S)
        for pick in (min, max, lambda corners: rng.choice(corners)):
            assert jdt_rectify_with_order(S, pick) == base

    def test_rectification_matches_insertion(self):
        S = skew_from_rows((3, 2, 0), [[1, 1], [2, 2, 3], [1, 2, 3]])
        assert jdt_rectify(S) == rsk(skew_reading_word(S)).P

    def test_invalid_skew_rejected(self):
        with pytest.raises(InvalidPair):
            jdt_rectify(skew_from_rows((1, 2), [[1], [1]]))


class TestRotWord:
    def test_self_dual_chain(self):
        assert rot_word((1, 2, 3), 3) == (1, 2, 3)

    def test_reverse_and_complement(self):
        assert rot_word((1, 1, 2), 2) == (1, 2, 2)

    def test_involution_random(self):
        rng = random.Random(6)
        for _ in range(500):
            w, n = random_word(rng)
            assert rot_word(rot_word(w, n), n) == w

    def test_descent_reversal(self):
        rng = random.Random(7)
        for _ in range(200):
            w, n = random_word(rng)
            assert word_descent_composition(rot_word(w, n)) == tuple(
                reversed(word_descent_composition(w)))

    def test_out_of_range(self):
        with pytest.raises(EntryOutOfRange):
            rot_word((1, 3), 2)


class TestRotateComplement:
    def test_worked_example(self):
        S = rotate180_complement(T([1, 1, 2, 3], [2, 2, 3], [3], [4]), 4)
        assert S.inner == (3, 3, 1, 0)
        assert S.rows == ((1,), (2,), (2, 3, 3), (2, 3, 4, 4))

    def test_single_cell(self):
        S = rotate180_complement(T([1]), 1)
        assert S.inner == (0,) and S.rows == ((1,),)

    def test_reading_word_identity(self):
        rng = random.Random(10)
        shapes = [s for m in range(1, 6) for s in partitions_of(m) if len(s) <= 4]
        for _ in range(100):
            shape = rng.choice(shapes)
            pool = enumerate_ssyt(shape, 4)
            t = rng.choice(pool)
            assert skew_reading_word(rotate180_complement(t, 4)) == \
                rot_word(reading_word(t), 4)

    def test_entry_out_of_range(self):
        with pytest.raises(EntryOutOfRange):
            rotate180_complement(T([1, 3]), 2)


class TestEvacuate:
    def test_worked_example(self):
        t = T([1, 1, 2, 3], [2, 2, 3], [3], [4])
        assert evacuate(t, 4) == T([1, 2, 2, 3], [2, 3, 4], [3], [4])

    def test_source_maps_to_sink(self):
        for shape, n in [((3, 2), 3), ((2, 2), 4), ((4, 3), 4)]:
            G = generate_crystal(shape, n)
            sink = G.sinks()[0]
            assert evacuate(G.vertices[G.source], n) == G.vertices[sink]

    def test_involution_exhaustive(self):
        for t in enumerate_ssyt((3, 2), 3):
            assert evacuate(evacuate(t, 3), 3) == t

    def test_default_alphabet_is_max_entry(self):
        t = T([1, 2], [2, 3])
        assert evacuate(t) == evacuate(t, 3)

    def test_entry_out_of_range(self):
        with pytest.raises(EntryOutOfRange):
            evacuate(T([1, 4]), 3)


class TestRotatedInsertion:
    def test_identity_random(self):
        rng = random.Random(12)
        for _ in range(300):
            w, n = random_word(rng)
            P, Q = rsk(w)
            RP, RQ = rsk_of_rot(w, n)
            assert RP == evacuate(P, n)
            assert RQ == evacuate(Q, len(w))

    def test_source_word_gives_evacuated_highest_weight(self):
        # the reading word of a highest-weight tableau raises to nothing
        w = reading_word(T([1, 1, 1], [2, 2]))
        n = 3
        assert all(e_word(w, i) is None for i in range(1, n))
        G = generate_crystal((3, 2), n)
        RP, _ = rsk_of_rot(w, n)
        assert RP == evacuate(G.vertices[G.source], n)
        assert RP == G.vertices[G.sinks()[0]]

    def test_single_letter(self):
        assert rsk_of_rot((1,), 1) == rsk((1,))

    def test_rotation_of_source_word_is_a_sink_word(self):
        # rotating a word with no raising moves gives one with no lowering moves
        from qcrystals.crystal import f_word
        for rows in [[[1, 1, 1], [2, 2]], [[1, 1], [2]], [[1, 1, 2, 2]]]:
            w = reading_word(tuple(tuple(r) for r in rows))
            n = max(w)
            if any(e_word(w, i) is not None for i in range(1, n)):
                continue
            r = rot_word(w, n)
            assert all(f_word(r, i) is None for i in range(1, n))


class TestOperatorIdentities:
    def test_insertion_commutes_with_lowering(self):
        rng = random.Random(13)
        for _ in range(200):
            w, n = random_word(rng)
            P = rsk(w).P
            for i in range(1, n):
                fw = f_word(w, i)
                if fw is not None:
                    assert rsk(fw).P == f_tableau(P, i)

    def test_rotation_is_operator_anti_automorphism(self):
        rng = random.Random(14)
        for _ in range(200):
            w, n = random_word(rng)
            for i in range(1, n):
                fw = f_word(w, i)
                if fw is not None:
                    assert rot_word(fw, n) == e_word(rot_word(w, n), n - i)

    def test_evacuation_is_crystal_anti_automorphism(self):
        n = 3
        for t in enumerate_ssyt((2, 2, 1), n):
            for i in range(1, n):
                down = f_tableau(t, i)
                if down is not None:
                    from qcrystals.crystal import e_tableau
                    assert evacuate(down, n) == e_tableau(evacuate(t, n), n - i)
