from fractions import Fraction

import pytest

from mzv.indices import (
    PHI,
    Combination,
    MultiIndex,
    SubsetCode,
    all_indices,
    as_combination,
    assemble,
    coarsen,
    coarsen_inv,
    concat,
    decode_subset,
    drop_last,
    dual,
    encode_subset,
    format_combination,
    format_index,
    idx,
    lower_last,
    merge_concat,
    ones,
    parse_combination,
    parse_index,
    partition,
    raise_last,
    refine,
    refine_inv,
    refines,
    reverse,
    signed,
)


def test_multiindex_basics():
    mu = idx(1, 2, 3)
    assert mu.weight == 6
    assert mu.length == 3
    assert PHI.weight == 0 and PHI.length == 0
    assert MultiIndex([2, 2]) == (2, 2)
    assert ones(3) == (1, 1, 1)
    assert ones(0) == PHI


def test_multiindex_rejects_bad_parts():
    for bad in [(0,), (-1,), (1.5,), (True,), ("2",)]:
        with pytest.raises((ValueError, TypeError)):
            MultiIndex(bad)


def test_subset_code_examples():
    assert encode_subset((2, 2, 1)) == SubsetCode(5, frozenset({2, 4}))
    assert encode_subset((1, 1, 3)) == SubsetCode(5, frozenset({1, 2}))
    assert encode_subset((4,)) == SubsetCode(4, frozenset())
    assert decode_subset(SubsetCode(5, frozenset({2, 4}))) == (2, 2, 1)
    with pytest.raises(ValueError):
        encode_subset(PHI)
    with pytest.raises(ValueError):
        decode_subset(SubsetCode(3, frozenset({3})))


def test_subset_code_roundtrip():
    for w in range(1, 8):
        for mu in all_indices(w):
            assert decode_subset(encode_subset(mu)) == mu


def test_all_indices_counts_and_order():
    assert all_indices(0) == [PHI]
    assert all_indices(1) == [(1,)]
    assert all_indices(3) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    for w in range(1, 10):
        xs = all_indices(w)
        assert len(xs) == 2 ** (w - 1)
        assert xs == sorted(xs)
        assert all(mu.weight == w for mu in xs)


def test_dual_examples():
    assert dual(idx(1, 2, 3)) == (2, 2, 1, 1)
    assert dual(idx(2, 2, 2)) == (1, 2, 2, 1)
    assert dual(idx(4, 1, 1)) == (1, 1, 1, 3)
    assert dual(idx(2)) == (1, 1)
    assert dual(idx(3)) == (1, 1, 1)
    assert dual(idx(1, 2)) == (2, 1)
    assert dual(PHI) == PHI


def test_dual_involution_and_length():
    # length of an index plus length of its dual is weight + 1
    for w in range(1, 9):
        for mu in all_indices(w):
            assert dual(dual(mu)) == mu
            assert mu.length + dual(mu).length == w + 1


def test_refines():
    assert refines((1, 1, 1), (3,))
    assert refines((1, 2), (3,))
    assert not refines((3,), (1, 2))
    assert refines((2, 1), (2, 1))
    assert not refines((2, 1), (1, 2))
    assert not refines((2,), (3,))  # weight mismatch
    assert refines(PHI, PHI)


def test_combination_arithmetic():
    x = Combination.term((2,), 2) + Combination.term((1, 1), Fraction(1, 2))
    y = x - Combination.term((2,), 2)
    assert y.coefficient((1, 1)) == Fraction(1, 2)
    assert y.coefficient((2,)) == 0
    assert (0 * x).is_zero()
    assert x == x + Combination.zero()
    assert -(-x) == x
    assert (Fraction(2) * x).coefficient((1, 1)) == 1
    assert x.homogeneous_weight() == 2
    with pytest.raises(ValueError):
        (x + Combination.term((3,))).homogeneous_weight()
    assert x.max_length() == 2 and Combination.zero().max_length() == 0


def test_combination_terms_sorted_canonically():
    x = Combination([((2,), 1), ((1, 1), 1), ((1, 1, 1), 1)])
    assert [mu for mu, _ in x.terms()] == [(1, 1), (1, 1, 1), (2,)]


def test_refine_coarsen_examples():
    assert refine(idx(3)) == Combination(
        [((3,), 1), ((1, 2), 1), ((2, 1), 1), ((1, 1, 1), 1)]
    )
    assert refine(idx(1, 1)) == Combination.term((1, 1))
    assert coarsen(idx(1, 1)) == Combination([((1, 1), 1), ((2,), 1)])
    assert coarsen(idx(3)) == Combination.term((3,))
    assert refine(PHI) == Combination.term(PHI)


def test_signed_conjugation_inverts_refine_and_coarsen():
    for w in range(1, 8):
        for mu in all_indices(w):
            x = Combination.term(mu)
            assert refine_inv(refine(x)) == x
            assert refine(refine_inv(x)) == x
            assert coarsen_inv(coarsen(x)) == x
            assert coarsen(coarsen_inv(x)) == x


def test_operator_interplay_with_dual():
    # conjugating coarsen by dual gives refine, and the signed variants
    for w in range(1, 8):
        for mu in all_indices(w):
            x = Combination.term(mu)
            assert dual(coarsen(dual(x))) == refine(x)
            assert coarsen(dual(coarsen_inv(x))) == -refine(signed(x))
            assert refine_inv(dual(refine(x))) == -signed(coarsen(x))


def test_operators_commute_with_reverse():
    for w in range(1, 8):
        for mu in all_indices(w):
            x = Combination.term(mu)
            assert dual(reverse(x)) == reverse(dual(x))
            assert signed(reverse(x)) == reverse(signed(x))
            assert refine(reverse(x)) == reverse(refine(x))
            assert coarsen(reverse(x)) == reverse(coarsen(x))


def test_reverse():
    assert reverse(idx(1, 2, 3)) == (3, 2, 1)
    assert reverse(PHI) == PHI
    x = Combination([((1, 2), 1), ((3,), 2)])
    assert reverse(x) == Combination([((2, 1), 1), ((3,), 2)])


def test_concat_and_merge():
    assert concat(idx(1, 2), idx(3)) == Combination.term((1, 2, 3))
    assert concat(PHI, idx(3)) == Combination.term((3,))
    assert merge_concat(idx(1, 2), idx(3)) == Combination.term((1, 5))
    assert merge_concat(idx(2), PHI) == Combination.term((2,))
    assert merge_concat(PHI, idx(2)) == Combination.term((2,))


def test_dual_swaps_concat_and_merge():
    for wa in range(1, 5):
        for wb in range(1, 5):
            for mu in all_indices(wa):
                for nu in all_indices(wb):
                    lhs = dual(concat(mu, nu))
                    rhs = merge_concat(dual(mu), dual(nu))
                    assert lhs == rhs


def test_raise_lower_drop():
    assert raise_last(idx(2, 1)) == (2, 2)
    assert raise_last(PHI) == (1,)
    assert lower_last(idx(2, 2)) == (2, 1)
    assert lower_last(idx(2, 1)) == (2,)
    assert lower_last(idx(1)) == PHI
    assert drop_last(idx(2, 1)) == (2,)
    with pytest.raises(ValueError):
        lower_last(PHI)
    with pytest.raises(ValueError):
        drop_last(PHI)
    x = Combination([((1, 1), 1), ((2,), -1)])
    assert raise_last(x) == Combination([((1, 2), 1), ((3,), -1)])


def test_partition_examples():
    assert partition((2, 2, 2), [2, 1, 3]) == ((2,), (1,), (1, 2))
    assert partition((2, 2, 2), [3, 0, 3]) == ((2, 1), PHI, (1, 2))
    assert partition((5,), [1, 1, 3]) == ((1,), (1,), (3,))
    assert partition(PHI, [0, 0]) == (PHI, PHI)
    with pytest.raises(ValueError):
        partition((2, 2), [1, 2])
    with pytest.raises(ValueError):
        partition((2, 2), [5, -1])


def test_partition_assemble_roundtrip():
    import itertools

    for w in range(1, 7):
        for mu in all_indices(w):
            for r in range(1, 4):
                for sizes in itertools.product(range(w + 1), repeat=r):
                    if sum(sizes) != w:
                        continue
                    blocks = partition(mu, sizes)
                    assert assemble(mu, blocks) == mu


def test_format_and_parse_index():
    assert format_index(idx(1, 2, 3)) == "(1,2,3)"
    assert format_index(PHI) == "phi"
    assert parse_index("(1,2,3)") == (1, 2, 3)
    assert parse_index("  phi ") == PHI
    assert parse_index("( 4 , 1 )") == (4, 1)
    for bad in ["", "()", "(1,2", "1,2", "(0)", "(1,,2)", "phi phi"]:
        with pytest.raises(ValueError):
            parse_index(bad)


def test_format_and_parse_combination():
    x = Combination([((1, 2), Fraction(3, 2)), ((2, 1), -1), (PHI, 1)])
    s = format_combination(x)
    assert s == "phi + 3/2*(1,2) - (2,1)"
    assert parse_combination(s) == x
    assert format_combination(Combination.zero()) == "0"
    assert parse_combination("(2)") == Combination.term((2,))
    assert parse_combination("2(1,1)") == Combination.term((1, 1), 2)
    assert parse_combination("-(2) + (1,1)") == Combination(
        [((2,), -1), ((1, 1), 1)]
    )
    assert parse_combination("1/3 * phi") == Combination.term(PHI, Fraction(1, 3))
    for bad in ["", "+", "(1) (2)", "1/0*(2)", "x+(2)"]:
        with pytest.raises(ValueError):
            parse_combination(bad)


def test_parse_format_roundtrip_is_canonical():
    for w in range(1, 6):
        for mu in all_indices(w):
            x = Combination.term(mu, Fraction(-7, 3)) + Combination.term(ones(w), 5)
            assert parse_combination(format_combination(x)) == x
