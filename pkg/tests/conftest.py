import sys
from pathlib import Path

import pytest

from tclass import Monomial2, NumericalSemigroup, Pullback, QuadOrder

sys.path.insert(0, str(Path(__file__).parent))

ROOT = Path(__file__).resolve().parent.parent
CONFIGS = ROOT / "configs"

ALL_DOMAINS = {
    "ns23": NumericalSemigroup((2, 3)),
    "ns345": NumericalSemigroup((3, 4, 5)),
    "ns469": NumericalSemigroup((4, 6, 9)),
    "zsqrtm5": QuadOrder(-20),
    "zsqrtm3": QuadOrder(-3, 2),
    "z3i": QuadOrder(-4, 3),
    "monomial2": Monomial2(),
    "pullback_xy": Pullback(),
    "pullback_dvr": Pullback("dvr"),
}


@pytest.fixture(params=sorted(ALL_DOMAINS))
def domain(request):
    return ALL_DOMAINS[request.param]
