from functools import lru_cache

import pytest

from shiring import AntichainPoset, RootSystem, enumerate_antichains


@lru_cache(maxsize=None)
def get_rs(type_str: str) -> RootSystem:
    return RootSystem(type_str)


@lru_cache(maxsize=None)
def get_ap(type_str: str) -> AntichainPoset:
    return enumerate_antichains(get_rs(type_str))


# Every buildable type of rank <= 4 (the exhaustive-check tier).
RANK_LE_4 = [
    "A1", "A2", "A3", "A4",
    "B2", "B3", "B4",
    "C2", "C3", "C4",
    "D3", "D4",
    "F4", "G2",
]

# The broader desk-scale tier used for counting identities.
DESK_TYPES = RANK_LE_4 + ["A5", "A6", "B5", "C5", "D5", "E6"]


@pytest.fixture(params=RANK_LE_4)
def small_type(request):
    return request.param
