import pytest

from utils.primes import (euler_phi, factorize, is_prime, is_prime_miller_rabin, is_squarefree,
                          primes_up_to, smallest_prime_factors)


def test_sieve_small_values():
    spf = smallest_prime_factors(30)
    assert [int(spf[k]) for k in range(2, 13)] == [2, 3, 2, 5, 2, 7, 2, 3, 2, 11, 2]
    assert int(spf[29]) == 29


def test_primes_up_to():
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert primes_up_to(1) == []
    assert len(primes_up_to(10 ** 4)) == 1229


def test_miller_rabin_agrees_with_sieve():
    for n in range(2, 5000):
        assert is_prime_miller_rabin(n) == is_prime(n)


@pytest.mark.parametrize('n, expected', [
    (2 ** 61 - 1, True),
    (1_000_000_007, True),
    (3_215_031_751, False),  # strong pseudoprime to bases 2, 3, 5, 7
    (18446744073709551557, True),
    (1_000_000_007 * 998_244_353, False),
])
def test_large_primality(n, expected):
    assert is_prime(n) == expected


def test_factorize():
    assert factorize(1) == ()
    assert factorize(360) == ((2, 3), (3, 2), (5, 1))
    assert factorize(30030) == ((2, 1), (3, 1), (5, 1), (7, 1), (11, 1), (13, 1))


def test_factorize_beyond_sieve():
    n = 1_000_003 * 1_000_033
    assert factorize(n) == ((1_000_003, 1), (1_000_033, 1))
    assert factorize(2 ** 5 * 1_000_003) == ((2, 5), (1_000_003, 1))


def test_euler_phi_and_squarefree():
    assert euler_phi(1) == 1
    assert euler_phi(30030) == 5760
    assert euler_phi(36) == 12
    assert is_squarefree(30030)
    assert not is_squarefree(12)
    assert sum(1 for d in range(2, 101) if is_squarefree(d)) == 60
