import pytest

from models.field import make_field, supported_fields
from services.classify_service import ClassificationService
from services.totient_service import TotientEngine

ALL_FIELDS = supported_fields()


@pytest.fixture
def gaussian():
    return make_field(-1)


@pytest.fixture
def eisenstein():
    return make_field(-3)


@pytest.fixture
def rationals():
    return make_field(1)


@pytest.fixture
def gaussian_engine(gaussian):
    return TotientEngine(gaussian)


@pytest.fixture
def gaussian_classifier(gaussian):
    return ClassificationService(gaussian)


@pytest.fixture
def rational_classifier(rationals):
    return ClassificationService(rationals)


def field_id(field):
    return f"m={field.m}"
