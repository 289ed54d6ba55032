import math

import pytest

from cwlab.errors import UsageError
from cwlab.numtheory import (
    binomial_valuation,
    euler_phi,
    factor_along,
    factorize,
    valuation,
)


def exact_base_valuation(value: int, base: int) -> int:
    """Oracle: divide the exact integer out until it stops."""
    e = 0
    while value % base == 0:
        value //= base
        e += 1
    return e


def test_factorize_examples():
    assert factorize(30).factors == ((2, 1), (3, 1), (5, 1))
    assert factorize(16).factors == ((2, 4),)
    assert factorize(1).factors == ()
    assert factorize(97).factors == ((97, 1),)


def test_factorize_reconstructs():
    for v in range(1, 500):
        fac = factorize(v)
        assert math.prod(p**e for p, e in fac.factors) == v
        assert list(fac.primes()) == sorted(fac.primes())


def test_factorize_rejects_bad_input():
    with pytest.raises(UsageError):
        factorize(0)
    with pytest.raises(UsageError):
        factorize(-4)


def test_euler_phi_examples():
    assert euler_phi(9) == 6
    assert euler_phi(1) == 1
    # oracle: count the units by scan
    assert sum(1 for i in range(1, 30) if math.gcd(i, 30) == 1) == 8
    assert euler_phi(30) == 8


def test_euler_phi_matches_unit_count():
    for v in range(1, 200):
        units = sum(1 for i in range(1, v + 1) if math.gcd(i, v) == 1)
        assert euler_phi(v) == units


def test_factor_along_examples():
    assert factor_along(6, factorize(30)) == (1, (1, 1, 0))
    assert factor_along(8, factorize(16)) == (1, (3,))
    assert factor_along(12, factorize(9)) == (4, (1,))


def test_factor_along_rejects_zero():
    with pytest.raises(UsageError):
        factor_along(0, factorize(30))


def test_valuation_basics():
    assert valuation(12, 2) == 2
    assert valuation(12, 3) == 1
    assert valuation(7, 5) == 0


def test_binomial_valuation_examples():
    assert math.comb(8, 3) == 56  # 2**3 * 7
    assert binomial_valuation(8, 3, 2) == 3
    assert math.comb(4, 1) == 4
    assert binomial_valuation(4, 1, 2) == 2
    assert binomial_valuation(17, 0, 5) == 0
    assert binomial_valuation(17, 17, 5) == 0


def test_binomial_valuation_range_errors():
    with pytest.raises(UsageError):
        binomial_valuation(3, 4, 2)
    with pytest.raises(UsageError):
        binomial_valuation(3, -1, 2)
    with pytest.raises(UsageError):
        binomial_valuation(3, 1, 1)


def test_binomial_valuation_against_exact_oracle():
    for top in range(61):
        for j in range(top + 1):
            value = math.comb(top, j)
            for base in (2, 3, 4, 5, 6, 10, 12):
                assert binomial_valuation(top, j, base) == \
                    exact_base_valuation(value, base), (top, j, base)


def test_prime_power_divides_binomial_of_power():
    # l**(n-j) divides C(l**(n-1), j) for 1 <= j <= n - 1
    for l in range(2, 7):
        for n in range(2, 7):
            for j in range(1, n):
                assert binomial_valuation(l ** (n - 1), j, l) >= n - j


def test_prime_power_divides_binomial_of_doubled_power():
    # l**(n-j) divides C(2 l**(n-2), j) for 2 <= j <= n - 1
    for l in range(2, 7):
        for n in range(3, 7):
            for j in range(2, n):
                assert binomial_valuation(2 * l ** (n - 2), j, l) >= n - j


def test_quotient_by_gcd_divides_binomial():
    # n / gcd(n, k) divides C(n, k)
    for n in range(1, 201):
        for k in range(1, n + 1):
            assert math.comb(n, k) % (n // math.gcd(n, k)) == 0


def test_two_power_divides_binomial_of_half_power():
    # 2**(n+1-j) divides C(2**(n-1), j) for 3 <= j <= n
    for n in range(3, 13):
        for j in range(3, n + 1):
            assert binomial_valuation(2 ** (n - 1), j, 2) >= n + 1 - j
