import random

import pytest

from locarray import (
    ALL_VARIANTS,
    VARIANT_11,
    VARIANT_1_BAR1,
    VARIANT_BAR1_1,
    VARIANT_BAR1_BAR1,
    Spread,
    SpreadSystem,
    TestArray,
    array_to_partitions,
    build_optimal_type,
    generate_la,
    max_columns,
    realize,
    rho,
    spreads_to_array,
    verify_ca2,
    verify_da11,
    verify_la,
)
from conftest import random_array

# the canonical optimal 3x4 array on two symbols
ARR34 = TestArray(((1, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 0)), v=2)

# a strength-2 covering array on four rows
CA42 = TestArray(((0, 0), (0, 1), (1, 0), (1, 1)), v=2)


class TestTestArray:
    def test_shape(self):
        assert ARR34.n_rows == 3 and ARR34.k == 4 and ARR34.v == 2

    def test_ragged_rows_rejected(self):
        with pytest.raises(ValueError):
            TestArray(((0, 1), (0,)), v=2)

    def test_symbol_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            TestArray(((0, 2),), v=2)


class TestRho:
    def test_constant_column(self):
        arr = TestArray(((1,), (1,), (1,)), v=2)
        assert rho(arr, {(1, 1)}) == frozenset({1, 2, 3})
        assert rho(arr, {(1, 0)}) == frozenset()

    def test_empty_interaction_covers_every_row(self):
        assert rho(ARR34, frozenset()) == frozenset({1, 2, 3})

    def test_hand_value(self):
        assert rho(ARR34, {(2, 0)}) == frozenset({1})

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            rho(ARR34, {(5, 0)})
        with pytest.raises(ValueError):
            rho(ARR34, {(1, 2)})
        with pytest.raises(ValueError):
            rho(ARR34, {(1, 0), (1, 1)})


class TestArrayToPartitions:
    def test_classes_partition_the_rows(self):
        rng = random.Random(23)
        for _ in range(30):
            arr = random_array(rng)
            everything = set(range(1, arr.n_rows + 1))
            for classes in array_to_partitions(arr):
                assert len(classes) == arr.v
                elems = [r for cl in classes for r in cl]
                assert len(elems) == arr.n_rows and set(elems) == everything

    def test_hand_classes(self):
        parts = array_to_partitions(ARR34)
        assert parts[0] == [frozenset(), frozenset({1, 2, 3})]
        assert parts[1] == [frozenset({1}), frozenset({2, 3})]
        assert parts[2] == [frozenset({2}), frozenset({1, 3})]
        assert parts[3] == [frozenset({3}), frozenset({1, 2})]

    def test_classes_match_rho(self):
        rng = random.Random(29)
        for _ in range(20):
            arr = random_array(rng)
            parts = array_to_partitions(arr)
            for c in range(1, arr.k + 1):
                for s in range(arr.v):
                    assert parts[c - 1][s] == rho(arr, {(c, s)})


class TestSpreadsToArray:
    def test_small_pipeline(self):
        system = realize(build_optimal_type(3, 2))
        assert spreads_to_array(system, 2) == ARR34

    def test_identity_column(self):
        system = SpreadSystem(3, (Spread(((1,), (2,), (3,)), "requested"),))
        arr = spreads_to_array(system, 3)
        assert arr.rows == ((0,), (1,), (2,))

    def test_overlapping_blocks_rejected(self):
        system = SpreadSystem(3, (Spread(((1, 2), (2,)), "requested"),))
        with pytest.raises(ValueError):
            spreads_to_array(system, 2)

    def test_wrong_block_count_rejected(self):
        system = SpreadSystem(3, (Spread(((1, 2, 3),), "requested"),))
        with pytest.raises(ValueError):
            spreads_to_array(system, 2)

    def test_two_empty_blocks_rejected(self):
        system = SpreadSystem(2, (Spread(((), (), (1, 2)), "requested"),))
        with pytest.raises(ValueError):
            spreads_to_array(system, 3)

    def test_round_trip_with_partitions(self):
        # column classes, sorted canonically, rebuild the spread blocks
        system = realize(build_optimal_type(5, 3))
        arr = spreads_to_array(system, 3)
        parts = array_to_partitions(arr)
        for sp, classes in zip(system.spreads, parts):
            want = sorted(sp.blocks, key=lambda b: (len(b), b))
            got = sorted((tuple(sorted(cl)) for cl in classes), key=lambda b: (len(b), b))
            assert got == list(want)


class TestVerifyLa:
    def test_base_variant_ok(self):
        assert verify_la(ARR34, VARIANT_11)

    def test_d_barred_rejects_empty_class(self):
        verdict = verify_la(ARR34, VARIANT_BAR1_1)
        assert not verdict
        assert verdict.reason == "empty class"
        assert verdict.witness == ((1, 0),)

    def test_t_barred_rejects_full_class(self):
        verdict = verify_la(ARR34, VARIANT_1_BAR1)
        assert not verdict
        assert verdict.witness == ((1, 1),)

    def test_duplicate_columns_fail_every_variant(self):
        arr = TestArray(((0, 0), (1, 1)), v=2)
        for variant in ALL_VARIANTS:
            verdict = verify_la(arr, variant)
            assert not verdict

    def test_names_the_duplicated_pair(self):
        arr = TestArray(((0, 0), (1, 1)), v=2)
        verdict = verify_la(arr, VARIANT_11)
        assert verdict.reason == "two classes with the same row set"
        assert verdict.witness == ((1, 0), (2, 0))


class TestVerifyCa2:
    def test_full_factorial_ok(self):
        assert verify_ca2(CA42)

    def test_optimal_array_is_not_covering(self):
        verdict = verify_ca2(ARR34)
        assert not verdict

    def test_empty_class_fails(self):
        arr = TestArray(((1, 0), (1, 1)), v=2)
        assert not verify_ca2(arr)


class TestVerifyDa11:
    def test_factorial_is_inclusion_free(self):
        assert verify_da11(CA42)

    def test_empty_class_fails(self):
        arr = TestArray(((1, 0), (1, 1)), v=2)
        assert not verify_da11(arr)

    def test_implication_chain_on_random_arrays(self):
        rng = random.Random(31)
        for _ in range(300):
            arr = random_array(rng)
            if verify_da11(arr):
                assert verify_la(arr, VARIANT_BAR1_1)
            if verify_la(arr, VARIANT_BAR1_1):
                assert verify_la(arr, VARIANT_11)
            # a full class forces empty classes beside it, so both-barred
            # reduces to d-barred on every array
            assert bool(verify_la(arr, VARIANT_BAR1_BAR1)) == bool(verify_la(arr, VARIANT_BAR1_1))
            if arr.v >= 3 and verify_la(arr, VARIANT_11):
                assert verify_la(arr, VARIANT_1_BAR1)


class TestGenerateLa:
    def test_three_two(self):
        assert generate_la(3, 2) == ARR34

    def test_five_three(self):
        arr = generate_la(5, 3)
        assert arr.n_rows == 5 and arr.k == 5
        assert verify_la(arr)

    def test_column_counts_match_the_bound(self):
        for n in range(2, 9):
            for v in range(2, n + 2):
                for variant in ALL_VARIANTS:
                    if max_columns(n, v, variant) <= 0:
                        continue
                    arr = generate_la(n, v, variant)
                    assert arr.k == max_columns(n, v, variant)
                    assert verify_la(arr, variant)

    def test_impossible_requests_rejected(self):
        with pytest.raises(ValueError):
            generate_la(3, 5)
        with pytest.raises(ValueError):
            generate_la(3, 4, VARIANT_BAR1_1)
        with pytest.raises(ValueError):
            generate_la(1, 2, VARIANT_1_BAR1)

    def test_deterministic(self):
        assert generate_la(6, 3) == generate_la(6, 3)
