import pytest

from weakdo import Language, build_world, make_vocabulary
from weakdo.experiments import raincoat_world


@pytest.fixture(scope="session")
def w1():
    return build_world(
        ["phi1", "phi2", "phi3"],
        {"p1": ["phi1", "phi2"], "p2": ["phi2", "phi3"]},
    )


@pytest.fixture(scope="session")
def w1_lang(w1):
    return Language(make_vocabulary(w1, ["p1", "p2"]))


@pytest.fixture(scope="session")
def w2():
    return raincoat_world()


@pytest.fixture(scope="session")
def w2_full(w2):
    return Language(make_vocabulary(w2, ["r", "c", "u"]))


@pytest.fixture(scope="session")
def w2_reduced(w2):
    return Language(make_vocabulary(w2, ["r", "c"]))
