import pytest

from gaussmap_lab.algebra.points import INF
from gaussmap_lab.algebra.poly import Poly
from gaussmap_lab.algebra.rational import RationalMap
from gaussmap_lab.core.config import Settings
from gaussmap_lab.families import build
from gaussmap_lab.weierstrass.data import WeierstrassData


@pytest.fixture
def catenoid() -> WeierstrassData:
    """g = z, ω = dz/z² on C̄ ∖ {0, ∞}."""
    g = RationalMap.of(Poly([0, 1]))
    h = RationalMap.of(Poly([1]), Poly([0, 0, 1]))
    return WeierstrassData.of(g, h, [0, INF])


@pytest.fixture
def canonical_case_one() -> RationalMap:
    """G = 1/(2z² + 1)²."""
    return RationalMap.of(Poly([1]), Poly([1, 0, 2]) ** 2)


@pytest.fixture
def fresh_settings(monkeypatch: pytest.MonkeyPatch):
    def factory(**overrides) -> Settings:
        for key in list(overrides):
            monkeypatch.delenv(f"GAUSSMAP_LAB_{key}", raising=False)
        return Settings(_env_file=None, **overrides)

    return factory


# (a, t, σ) with σ² = (t + 3)/(a((t − 1)a + 4)) < 0
MS_PARAMS = [
    {"a": -1, "t": 0, "sigma": "i*sqrt(3/5)"},
    {"a": 2, "t": -2, "sigma": "i/2"},
    {"a": -1, "t": 2, "sigma": "i*sqrt(5/3)"},
    {"a": "1/2", "t": -5, "sigma": "2*i"},
    {"a": -2, "t": "1/2", "sigma": "i*sqrt(7/20)"},
]

# (a, b, σ) with σ² = (5a + 11b − 16)/(16ab − 11a − 5b) < 0
KW_PARAMS = [
    {"a": 0, "b": 2, "sigma": "i*sqrt(3/5)"},
    {"a": -1, "b": 0, "sigma": "i*sqrt(21/11)"},
    {"a": 0, "b": -1, "sigma": "i*sqrt(27/5)"},
    {"a": -1, "b": "1/2", "sigma": "i*sqrt(31)"},
    {"a": -1, "b": 2, "sigma": "i*sqrt(1/31)"},
]


@pytest.fixture(params=MS_PARAMS, ids=lambda p: f"a={p['a']},t={p['t']}")
def ms_instance(request):
    return build("ms", request.param)


@pytest.fixture(params=KW_PARAMS, ids=lambda p: f"a={p['a']},b={p['b']}")
def kw_instance(request):
    return build("kw", request.param)
