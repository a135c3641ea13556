"""
整数算术测试
"""

import warnings

import pytest
from hypothesis import given, settings, strategies as st
from sympy import isprime, primerange

from normtuple.arith import (
    exact_power_root, factorize, fundamental_discriminant, is_squarefree, isqrt,
    kronecker, nth_root_exact, squarefree_core,
)
from normtuple.errors import DomainError, FactorizationError


def test_isqrt_examples():
    assert isqrt(49) == (7, True)
    assert isqrt(50) == (7, False)
    assert isqrt(961) == (31, True)
    assert isqrt(0) == (0, True)


def test_isqrt_rejects_negative():
    with pytest.raises(DomainError):
        isqrt(-1)


@settings(max_examples=300, derandomize=True)
@given(st.integers(min_value=0, max_value=10 ** 6))
def test_isqrt_brackets(m):
    root, exact = isqrt(m)
    assert root * root <= m < (root + 1) * (root + 1)
    assert exact == (root * root == m)


def test_isqrt_big_integers():
    big = 10 ** 40 + 123
    root, exact = isqrt(big * big)
    assert (root, exact) == (big, True)
    assert isqrt(big * big + 1) == (big, False)


def test_nth_root_exact():
    assert nth_root_exact(343, 3) == 7
    assert nth_root_exact(1, 5) == 1
    assert nth_root_exact(50653, 3) == 37
    assert nth_root_exact(50, 3) is None
    assert nth_root_exact(337 ** 4, 4) == 337


def test_nth_root_exact_domain():
    with pytest.raises(DomainError):
        nth_root_exact(8, 1)
    with pytest.raises(DomainError):
        nth_root_exact(0, 2)


def test_exact_power_root_edges():
    assert exact_power_root(0, 2) == 0
    assert exact_power_root(-1, 2) is None
    assert exact_power_root(-8, 3) is None
    assert exact_power_root(32, 5) == 2


def test_factorize_examples():
    assert factorize(12).factors == ((2, 2), (3, 1))
    assert factorize(25326).factors == ((2, 1), (3, 3), (7, 1), (67, 1))
    assert factorize(1).factors == ()


def test_factorize_divisors():
    assert factorize(12).divisors() == [1, 2, 3, 4, 6, 12]
    assert factorize(25326).exponent_of(3) == 3
    assert factorize(25326).exponent_of(5) == 0


def test_factorize_reports_unfactored_cofactor():
    m = 1000003 * 2147483647
    with pytest.raises(FactorizationError) as excinfo:
        factorize(m, bound=100)
    cofactor = excinfo.value.cofactor
    assert cofactor > 100
    assert m % cofactor == 0
    assert not isprime(cofactor)


def test_factorize_large_prime_cofactor_is_fine():
    # 试除上界以下没有因子，但余因子是素数
    assert factorize(2 * 1000003, bound=100).factors == ((2, 1), (1000003, 1))


def test_factorize_rejects_nonpositive():
    with pytest.raises(DomainError):
        factorize(0)


@settings(max_examples=300, derandomize=True)
@given(st.integers(min_value=1, max_value=10 ** 5))
def test_factorize_reassembles(m):
    fact = factorize(m)
    product = 1
    for p, e in fact:
        assert isprime(p)
        assert e >= 1
        product *= p ** e
    assert product == m
    assert fact.primes() == sorted(set(fact.primes()))


def test_kronecker_examples():
    assert kronecker(-3, 2) == -1
    assert kronecker(5, 5) == 0
    assert kronecker(13, 3) == 1


def test_kronecker_extension():
    assert kronecker(5, -1) == 1
    assert kronecker(-5, -1) == -1
    assert kronecker(1, 0) == 1
    assert kronecker(2, 0) == 0
    assert kronecker(8, 2) == 0
    assert kronecker(17, 2) == 1
    # 乘性：(D/4) = (D/2)^2
    assert kronecker(5, 4) == 1


def test_kronecker_odd_composite_is_multiplicative_without_warnings():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        for D in range(-60, 61):
            for m, (p, q) in [(15, (3, 5)), (21, (3, 7)), (45, (9, 5)), (-35, (-5, 7))]:
                assert kronecker(D, m) == kronecker(D, p) * kronecker(D, q), (D, m)


ODD_PRIMES = list(primerange(3, 998))


@settings(max_examples=400, derandomize=True)
@given(st.sampled_from(ODD_PRIMES), st.integers(min_value=-200, max_value=200))
def test_kronecker_matches_residue_search(p, D):
    if D % p == 0:
        expected = 0
    else:
        expected = 1 if any((x * x - D) % p == 0 for x in range(p)) else -1
    assert kronecker(D, p) == expected


def test_fundamental_discriminant_examples():
    disc = fundamental_discriminant(5)
    assert (disc.d, disc.D) == (5, 5)
    disc = fundamental_discriminant(-3)
    assert (disc.d, disc.D) == (-3, -3)
    disc = fundamental_discriminant(12)
    assert (disc.d, disc.D) == (3, 12)
    assert disc.sqrt_cofactor == 2
    assert disc.is_fundamental


def test_fundamental_discriminant_degenerate_and_zero():
    assert fundamental_discriminant(4).degenerate
    assert not fundamental_discriminant(4).is_fundamental
    with pytest.raises(DomainError):
        fundamental_discriminant(0)


def test_fundamental_discriminant_non_fundamental_modulus():
    disc = fundamental_discriminant(3)
    assert disc.D == 12
    assert not disc.is_fundamental
    assert fundamental_discriminant(-4).D == -4
    assert fundamental_discriminant(8).D == 8


@pytest.mark.parametrize("d", [d for d in range(-200, 201) if d not in (0, 1) and is_squarefree(d)])
def test_fundamental_discriminant_shape(d):
    D = fundamental_discriminant(d).D
    assert D in (d, 4 * d)
    assert D % 4 in (0, 1)


def test_squarefree_helpers():
    assert squarefree_core(-12) == -3
    assert squarefree_core(45) == 5
    assert is_squarefree(-5)
    assert not is_squarefree(12)
    assert not is_squarefree(0)
