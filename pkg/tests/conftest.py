import functools
import json
from pathlib import Path

import pytest

from mnaq.field import make_field

FIXTURES = Path(__file__).parent / "fixtures"


@functools.lru_cache(maxsize=None)
def field(q):
    """Shared immutable field instances; safe to cache across tests."""
    return make_field(q)


@pytest.fixture(scope="session")
def sigma_small():
    with open(FIXTURES / "sigma_small.json", encoding="utf-8") as fh:
        return {int(k): v for k, v in json.load(fh).items()}
