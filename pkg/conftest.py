from __future__ import annotations

import pytest

from quiv_core import Quiver, QuiverMorphism, validate_morphism
from quiv_io import SAMPLES, parse_quiver
from quiv_oracle import quiver_catalogue, set_catalogue
from quiv_sets import FiniteSet, SetFunction


@pytest.fixture
def isolated_settings(monkeypatch, tmp_path):
    for key in ("QUIV_MAX_VERTEX_MAPS", "QUIV_MAX_EDGE_MAPS", "QUIV_MAX_TOTAL_PAIRS", "QUIV_JOBS", "QUIV_LOG_LEVEL"):
        monkeypatch.delenv(key, raising=False)
    monkeypatch.setenv("QUIV_PRESET", str(tmp_path / "no-such-preset.json"))


@pytest.fixture
def G() -> Quiver:
    return parse_quiver(SAMPLES["G"])


@pytest.fixture
def H() -> Quiver:
    return parse_quiver(SAMPLES["H"])


@pytest.fixture
def phi_GH(G: Quiver, H: Quiver) -> QuiverMorphism:
    fv = SetFunction(G.vertices, H.vertices, {"0": "2", "1": "2"})
    fe = SetFunction(G.edges, H.edges, {"e": "h", "f": "i", "g": "i"})
    return validate_morphism(G, H, fv, fe)


@pytest.fixture(scope="session")
def small_sets() -> list[FiniteSet]:
    return set_catalogue(2)


@pytest.fixture(scope="session")
def small_quivers() -> list[Quiver]:
    return quiver_catalogue(2, 1)
