import random

import pytest

import hopflab as hl

# every bundled algebra that should go through the full pipeline
SEMISIMPLE_CORPUS = [
    "c2_gf5",
    "c3_gf7",
    "c3_gf5",
    "c3_gf49",
    "c4_gf5",
    "k4_gf5",
    "s3_gf7",
    "d4_gf5",
    "q8_gf25",
    "c2dual_gf5",
    "c4dual_gf5",
    "k4dual_gf5",
    "s3dual_gf7",
    "c3c3dual_gf7",
    "d_c2_gf5",
    "d_c3_gf7",
    "d_s3_gf7",
]

# group-algebra members paired with their group table key
GROUP_ALGEBRA_MEMBERS = [
    ("c2_gf5", "c2"),
    ("c3_gf7", "c3"),
    ("c3_gf49", "c3"),
    ("c4_gf5", "c4"),
    ("k4_gf5", "k4"),
    ("s3_gf7", "s3"),
    ("d4_gf5", "d4"),
    ("q8_gf25", "q8"),
]

_cache: dict = {}


def load(name: str) -> hl.HopfAlgebra:
    key = ("H", name)
    if key not in _cache:
        _cache[key] = hl.load_hopf(hl.corpus_path(name + ".hopf"))
    return _cache[key]


def pipeline(name: str):
    """(H, integral data, wedderburn data) for a corpus member, cached.

    Members whose blocks need a bigger field are transparently extended.
    """
    key = ("P", name)
    if key not in _cache:
        H = load(name)
        data = hl.integral_data(H)
        H, data, wd = hl.wedderburn_with_extension(H, data, random.Random(7))
        _cache[key] = (H, data, wd)
    return _cache[key]


@pytest.fixture(scope="session")
def gf5():
    return hl.Field(5)


@pytest.fixture(scope="session")
def gf7():
    return hl.Field(7)


@pytest.fixture(scope="session")
def gf25():
    return hl.Field(5, 2)


@pytest.fixture(scope="session")
def gf49():
    return hl.Field(7, 2)
