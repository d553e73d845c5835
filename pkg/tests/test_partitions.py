import pytest
from hypothesis import given
from hypothesis import strategies as st

from qinj import (
    CODOMAIN,
    DOMAIN,
    DUAL,
    GEN,
    MAIN,
    EMPTY_PARTITION,
    Family,
    Params,
    Partition,
    enumerate_flat_constrained,
    enumerate_partitions,
    expand_product,
    flat_norm,
    flatten,
    norm,
    nu_decompose,
    part_list,
    product_spec,
    validate_partition,
)

Z, NZ, YZ, NYZ = Family.Z, Family.NZ, Family.YZ, Family.NYZ

PARAMS_A = Params(4, 2, 3, 5, 2, 1)
PARAMS_B = Params(3, 2, 4, 3, 4, 3)


def P(*parts):
    return Partition.from_counts({(f, i): m for f, i, m in parts})


class TestParams:
    def test_part_values(self):
        p = PARAMS_B
        assert [p.part_value(Z, i) for i in (1, 2, 3)] == [3, 7, 11]
        assert [p.part_value(YZ, i) for i in (1, 2, 3)] == [12, 16, 20]
        assert [p.part_value(NZ, i) for i in (1, 2)] == [9, 21]
        assert [p.part_value(NYZ, i) for i in (1, 2)] == [36, 48]

    def test_theorem_mode_rejects_gcd(self):
        with pytest.raises(ValueError, match="gcd"):
            Params(2, 1, 3, 2, 4, 1).validate(MAIN)
        Params(2, 1, 3, 2, 4, 1).validate(MAIN, allow_gcd=True)

    def test_theorem_mode_rejects_k_lt_l(self):
        with pytest.raises(ValueError, match="K"):
            Params(1, 2, 3, 5, 2, 1).validate(MAIN)
        Params(1, 2, 3, 5, 2, 1).validate(MAIN, allow_k_lt_l=True)

    def test_degenerate_y_and_n_accepted(self):
        Params(3, 1, 2, 1, 1, 1).validate(MAIN)
        Params(3, 1, 2, 1, 5, 1).validate(DUAL)

    def test_gen_mode_bounds(self):
        Params(4, 2, 3, 5, 2, 1, S=3, T=1).validate(GEN)
        with pytest.raises(ValueError, match="S and T"):
            Params(4, 2, 3, 5, 2, 1).validate(GEN)
        with pytest.raises(ValueError, match="exceeds K"):
            Params(4, 2, 3, 5, 2, 1, S=5, T=1).validate(GEN)
        with pytest.raises(ValueError, match="exceeds L"):
            Params(4, 2, 3, 5, 2, 1, S=4, T=3).validate(GEN)


class TestNuDecompose:
    def test_zero(self):
        assert nu_decompose(0, 7) == (0, 0)

    def test_euclidean(self):
        assert nu_decompose(13, 5) == (2, 3)

    @given(st.integers(0, 100), st.integers(1, 12))
    def test_multiples(self, k, n):
        assert nu_decompose(n * k, n) == (k, 0)
        q, r = nu_decompose(k, n)
        assert k == n * q + r and 0 <= r < n

    def test_rejects_zero_modulus(self):
        with pytest.raises(ValueError):
            nu_decompose(3, 0)


class TestNormAndFlatten:
    def test_empty_norm(self):
        assert norm(EMPTY_PARTITION, PARAMS_A) == 0

    def test_norms_from_tables(self):
        assert norm(P((YZ, 1, 10)), PARAMS_A) == 20
        assert norm(P((YZ, 1, 2), (NZ, 1, 4)), PARAMS_B) == 60

    def test_flatten_merges_subscripts(self):
        p = P((Z, 1, 1), (Z, 3, 3), (YZ, 2, 2))
        assert flatten(p) == P((Z, 1, 4), (YZ, 1, 2))

    def test_flatten_idempotent(self):
        p = P((Z, 2, 5), (NYZ, 2, 1), (Z, 1, 1))
        assert flatten(flatten(p)) == flatten(p)

    @given(st.integers(0, 9), st.integers(0, 9))
    def test_flat_norm_formula(self, s, t):
        # |F(<(YZ,1)^s, (NZ,1)^t>)| = z*(y*s + n*t)
        parts = {}
        if s:
            parts[(YZ, 1)] = s
        if t:
            parts[(NZ, 1)] = t
        p = Partition.from_counts(parts)
        expected = PARAMS_B.z * (PARAMS_B.y * s + PARAMS_B.n * t)
        assert flat_norm(p, PARAMS_B) == expected

    def test_rejects_bad_index(self):
        with pytest.raises(ValueError):
            norm(P((Z, 0, 1)), PARAMS_A)


class TestPartitionType:
    def test_canonical_sorting_and_equality(self):
        a = P((YZ, 2, 1), (NZ, 1, 3))
        b = Partition.from_counts({(NZ, 1): 3, (YZ, 2): 1})
        assert a == b and hash(a) == hash(b)
        assert [pt.family for pt in a.parts] == [NZ, YZ]

    def test_rejects_nonpositive_multiplicity(self):
        with pytest.raises(ValueError):
            Partition.from_counts({(Z, 1): -2})

    def test_validate_partition_ranges(self):
        validate_partition(P((YZ, 4, 1)), DOMAIN, MAIN, PARAMS_A)
        with pytest.raises(ValueError, match="out of range"):
            validate_partition(P((NZ, 3, 1)), DOMAIN, MAIN, PARAMS_A)
        with pytest.raises(ValueError, match="not a codomain family"):
            validate_partition(P((YZ, 1, 1)), CODOMAIN, MAIN, PARAMS_A)
        # dual mode swaps the domain index ranges
        validate_partition(P((NZ, 4, 1)), DOMAIN, DUAL, PARAMS_A)
        with pytest.raises(ValueError, match="out of range"):
            validate_partition(P((YZ, 3, 1)), DOMAIN, DUAL, PARAMS_A)


class TestEnumerate:
    def test_norm_zero_is_empty_partition(self):
        assert enumerate_partitions(DOMAIN, MAIN, 0, PARAMS_A) == [EMPTY_PARTITION]

    def test_domain_count_at_twenty(self):
        assert len(enumerate_partitions(DOMAIN, MAIN, 20, PARAMS_A)) == 17

    def test_codomain_count_at_sixty(self):
        assert len(enumerate_partitions(CODOMAIN, MAIN, 60, PARAMS_B)) == 15

    @pytest.mark.parametrize("params", [PARAMS_A, PARAMS_B, Params(2, 1, 4, 3, 4, 3)])
    @pytest.mark.parametrize("side,mode", [
        (CODOMAIN, MAIN), (DOMAIN, MAIN), (DOMAIN, DUAL),
    ])
    def test_counts_match_series(self, params, side, mode):
        series = expand_product(product_spec(side, mode, params), 60)
        for x in range(61):
            assert len(enumerate_partitions(side, mode, x, params)) == series[x]

    def test_gen_mode_ranges(self):
        params = Params(4, 2, 3, 5, 2, 1, S=3, T=1)
        parts = part_list(DOMAIN, GEN, params)
        assert parts == [(NZ, 1), (YZ, 1), (YZ, 2), (YZ, 3)]
        series = expand_product(product_spec(DOMAIN, GEN, params), 40)
        for x in range(41):
            assert len(enumerate_partitions(DOMAIN, GEN, x, params)) == series[x]

    def test_all_norms_and_ranges(self):
        for x in range(30):
            for p in enumerate_partitions(DOMAIN, MAIN, x, PARAMS_B):
                assert norm(p, PARAMS_B) == x
                validate_partition(p, DOMAIN, MAIN, PARAMS_B)

    def test_order_is_lexicographic_and_stable(self):
        parts = part_list(DOMAIN, MAIN, PARAMS_A)
        listed = enumerate_partitions(DOMAIN, MAIN, 20, PARAMS_A)
        vectors = [tuple(p.count_of(f, i) for f, i in parts) for p in listed]
        assert vectors == sorted(vectors)
        assert listed == enumerate_partitions(DOMAIN, MAIN, 20, PARAMS_A)

    def test_rejects_negative_norm(self):
        with pytest.raises(ValueError):
            enumerate_partitions(DOMAIN, MAIN, -1, PARAMS_A)


class TestFlatConstrained:
    def test_f_zero_x_zero(self):
        assert enumerate_flat_constrained(DOMAIN, MAIN, 0, 0, PARAMS_A) == [EMPTY_PARTITION]

    @pytest.mark.parametrize("x", [0, 7, 20, 33])
    def test_partition_of_counts_over_f(self, x):
        total = enumerate_partitions(DOMAIN, MAIN, x, PARAMS_A)
        by_f = sum(
            len(enumerate_flat_constrained(DOMAIN, MAIN, x, f, PARAMS_A))
            for f in range(x + 1))
        assert by_f == len(total)

    def test_constraint_filters_flat_norm(self):
        for p in enumerate_flat_constrained(DOMAIN, MAIN, 20, 10, PARAMS_A):
            assert flat_norm(p, PARAMS_A) == 10 * PARAMS_A.z
