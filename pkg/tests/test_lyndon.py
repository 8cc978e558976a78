import pytest

from mzv.lyndon import (
    binary_lyndon_count,
    dimension_formula,
    enumerate_lyndon,
    is_lyndon,
    moebius,
    psi2,
    zagier_dim,
)


def test_moebius_values():
    expected = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0, -1, 1, 1, 0]
    assert [moebius(n) for n in range(1, 17)] == expected
    with pytest.raises(ValueError):
        moebius(0)


def test_moebius_sum_over_divisors():
    # sum of moebius(d) over divisors d of n is 1 only at n = 1
    for n in range(1, 200):
        total = sum(moebius(d) for d in range(1, n + 1) if n % d == 0)
        assert total == (1 if n == 1 else 0)


def test_binary_lyndon_count_small():
    assert [binary_lyndon_count(n) for n in range(1, 11)] == [
        2, 1, 2, 3, 6, 9, 18, 30, 56, 99,
    ]


def test_psi2_table():
    assert [psi2(m) for m in range(2, 16)] == [
        1, 2, 3, 6, 9, 18, 30, 56, 99, 186, 335, 630, 1161, 2182,
    ]
    with pytest.raises(ValueError):
        psi2(1)


def test_psi2_matches_aperiodic_word_count():
    for m in range(2, 16):
        assert psi2(m) == binary_lyndon_count(m)


def test_necklace_identity():
    # binary words of length n factor uniquely into aperiodic necklaces:
    # sum over divisors d of n of d * (number of binary Lyndon words of
    # length d) equals 2^n
    for n in range(1, 16):
        total = sum(
            d * binary_lyndon_count(d) for d in range(1, n + 1) if n % d == 0
        )
        assert total == 2 ** n


def test_is_lyndon():
    assert is_lyndon((1, 2))
    assert not is_lyndon((2, 1))
    assert not is_lyndon((1, 2, 1, 2))
    assert is_lyndon((5,))
    assert not is_lyndon(())
    assert is_lyndon((1, 1, 2))
    assert not is_lyndon((1, 2, 1))


def test_enumerate_lyndon_small():
    assert enumerate_lyndon(2) == [(2,)]
    assert enumerate_lyndon(3) == [(1, 2), (3,)]
    assert enumerate_lyndon(4) == [(1, 1, 2), (1, 3), (4,)]
    assert enumerate_lyndon(5) == [
        (1, 1, 1, 2), (1, 1, 3), (1, 2, 2), (1, 4), (2, 3), (5,),
    ]


def test_enumerate_lyndon_counts():
    for m in range(2, 16):
        words = enumerate_lyndon(m)
        assert len(words) == psi2(m)
        assert words == sorted(words)
        assert all(is_lyndon(w) for w in words)
        assert all(sum(w) == m for w in words)


def test_dimension_formula():
    assert [dimension_formula(k) for k in range(2, 12)] == [
        1, 2, 5, 10, 23, 46, 98, 200, 413, 838,
    ]


def test_zagier_dim():
    assert [zagier_dim(k) for k in range(1, 12)] == [
        0, 1, 3, 6, 14, 29, 60, 123, 249, 503, 1012,
    ]
    with pytest.raises(ValueError):
        zagier_dim(0)


def test_dimension_formula_complements_lyndon_count():
    for k in range(2, 16):
        assert dimension_formula(k) == 2 ** (k - 1) - psi2(k)
        # this relation count never exceeds the conjectured one
        assert dimension_formula(k) <= zagier_dim(k)
