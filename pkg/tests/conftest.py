from importlib import resources
from pathlib import Path

import pytest

from foliation_indices import parse_polynomial
from foliation_indices.polynomial import VectorField

FIXTURES = Path(str(resources.files("foliation_indices") / "fixtures"))


def fixture_path(name: str) -> Path:
    return FIXTURES / f"{name}.scn"


def P(text: str, n: int):
    return parse_polynomial(text, n)


def V(text: str, n: int) -> VectorField:
    return VectorField([parse_polynomial(c, n) for c in text.split(";")])


# ideals (as text) used to cross-check truncated dimensions against the oracle
CORPUS = [
    (["x1^2", "x2^2"], 2),
    (["x1*x2"], 2),
    (["x1^2 - x2^3"], 2),
    (["x1^2 - x2", "x2^2"], 2),
    (["x1^3 + x2^3", "x1*x2"], 2),
    (["x1 - x2^2 + x1*x2", "x2^3 - x1^2"], 2),
    (["2*x1 + x2^2", "3*x2^2 + x1*x2"], 2),
    (["x1^2 + x2^2 + x3^2"], 3),
    (["x1*x2", "x2*x3", "x1*x3"], 3),
    (["x1^2", "x2^2", "x3^2"], 3),
    (["x1 + x2*x3", "x2 + x1*x3", "x3^2"], 3),
    (["x1^2 - x2*x3", "x2^2 - x1*x3", "x3^2 - x1*x2"], 3),
    (["x1^3", "x2^3 - x1*x3", "x3^2 + x1^2*x2"], 3),
    (["x1*x2*x3"], 3),
    (["1/2*x1^2 + x2", "x2^2 - 3*x3", "x3^2"], 3),
    (["x1^2", "x2^2", "x3^2", "x4^2"], 4),
    (["x1*x2 - x3*x4", "x1^2", "x4^2"], 4),
    (["x1 + x2 + x3 + x4", "x1*x2 + x3*x4", "x1^2 - x4^3"], 4),
    (["x1^2 + x2^2 + x3^2 + x4^2"], 4),
    (["x1*x2", "x3*x4", "x1^2 + x3^2", "x2^2 - x4^2"], 4),
    (["1 + x1"], 2),
    (["x2 - x1^2", "x1*x2 - x2^2 + x1^3"], 2),
]


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES
