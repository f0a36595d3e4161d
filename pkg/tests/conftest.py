import random

import pytest
from hypothesis import HealthCheck, settings

from braidrep.ring import LaurentPoly

settings.register_profile(
    "exact",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")


def random_poly(rnd, max_terms=4, max_exp=3, max_coeff=6):
    terms = {}
    for _ in range(rnd.randint(0, max_terms)):
        key = (rnd.randint(-max_exp, max_exp), rnd.randint(-max_exp, max_exp))
        terms[key] = rnd.randint(-max_coeff, max_coeff)
    return LaurentPoly(terms)


@pytest.fixture
def rnd():
    return random.Random(20240817)
