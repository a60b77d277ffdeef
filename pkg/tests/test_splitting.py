import pytest

from models.field import make_field
from models.splitting import SplittingType
from services.splitting_service import (is_irreducible_nat, legendre_symbol, min_poly_root_count,
                                        splitting_from_root_count, splitting_type)
from services.totient_service import phi_oracle
from services.verification_service import run_suite
from utils.errors import DegreeOne, NotPrime
from utils.primes import primes_up_to
from tests.conftest import ALL_FIELDS, field_id


def test_gaussian_examples(gaussian):
    assert splitting_type(gaussian, 7) is SplittingType.INERT
    assert splitting_type(gaussian, 5) is SplittingType.SPLIT
    assert splitting_type(gaussian, 2) is SplittingType.RAMIFIED


def test_two_over_half_trace_fields():
    assert splitting_type(make_field(-7), 2) is SplittingType.SPLIT  # -7 = 1 mod 8
    assert splitting_type(make_field(-3), 2) is SplittingType.INERT  # -3 = 5 mod 8
    assert splitting_type(make_field(17), 2) is SplittingType.SPLIT
    assert splitting_type(make_field(2), 2) is SplittingType.RAMIFIED


def test_errors(gaussian, rationals):
    with pytest.raises(NotPrime):
        splitting_type(gaussian, 9)
    with pytest.raises(DegreeOne):
        splitting_type(rationals, 3)


def test_legendre_symbol():
    assert legendre_symbol(2, 7) == 1
    assert legendre_symbol(3, 7) == -1
    assert legendre_symbol(-1, 13) == 1
    assert legendre_symbol(14, 7) == 0


def test_irreducible_naturals(gaussian, rationals):
    assert is_irreducible_nat(gaussian, 3)
    assert not is_irreducible_nat(gaussian, 9)
    assert not is_irreducible_nat(gaussian, 5)
    assert is_irreducible_nat(rationals, 5)
    assert not is_irreducible_nat(rationals, 1)


def test_gaussian_congruence_law(gaussian):
    for p in primes_up_to(10 ** 4):
        assert (splitting_type(gaussian, p) is SplittingType.INERT) == (p % 4 == 3), p


@pytest.mark.parametrize('field', ALL_FIELDS, ids=field_id)
def test_root_count_agrees(field):
    for p in primes_up_to(2000):
        assert splitting_from_root_count(min_poly_root_count(field, p)) is splitting_type(field, p)


@pytest.mark.parametrize('field', ALL_FIELDS, ids=field_id)
def test_totient_trichotomy(field):
    expected = {
        SplittingType.INERT: lambda p: p * p - 1,
        SplittingType.SPLIT: lambda p: (p - 1) ** 2,
        SplittingType.RAMIFIED: lambda p: p * p - p,
    }
    for p in primes_up_to(31):
        assert phi_oracle(field, p) == expected[splitting_type(field, p)](p), p


@pytest.mark.slow
@pytest.mark.parametrize('field', ALL_FIELDS, ids=field_id)
def test_totient_trichotomy_to_ninety_seven(field):
    report = run_suite('splitting', field, 97)
    assert report.passed, report.failures
    assert report.details['trichotomy_limit'] == 97


@pytest.mark.parametrize('field', ALL_FIELDS, ids=field_id)
def test_irreducible_iff_maximal_oracle_value(field):
    for d in range(2, 31):
        assert is_irreducible_nat(field, d) == (phi_oracle(field, d) == d * d - 1), d
