import pytest
from hypothesis import settings, strategies as st

from gzloc.fixtures import fraction_fixtures, random_category

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

seeds = st.integers(min_value=0, max_value=10**6)
categories = seeds.map(random_category)


@pytest.fixture(params=fraction_fixtures(), ids=lambda p: p[0])
def fraction_fixture(request):
    return request.param[1]
