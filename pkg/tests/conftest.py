from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from groupoids.corpus import CORPUS, load

DATA = Path(__file__).resolve().parent.parent / "data"

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

rationals = st.fractions(min_value=-9, max_value=9, max_denominator=7)
nonzero_rationals = rationals.filter(bool)


def sparse_coefficients(elements, draw_from=rationals):
    """Strategy: dict element -> rational on a random subset of ``elements``."""
    return st.dictionaries(st.sampled_from(list(elements)), draw_from, max_size=len(elements))


@pytest.fixture(scope="session")
def corpus():
    return {name: load(name) for name in CORPUS}


@pytest.fixture
def data_dir():
    return DATA


def frac(s):
    return Fraction(s)


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
