from pathlib import Path

import pytest

from dirichlet_bohr import build_prime_table

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def small_table():
    return build_prime_table(1000)


@pytest.fixture(scope="session")
def big_table():
    return build_prime_table(10**6)
