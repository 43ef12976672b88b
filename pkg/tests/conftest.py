from __future__ import annotations

import pytest

from defpow.core import DEFAULT_BUDGET, Budget
from defpow.poly import polyring
from defpow.rings import build

FINITE_SPECS = [f"zmod:{n}" for n in range(2, 13)] + ["bool:1", "bool:2", "bool:3",
                                                     "fpz2:2", "fpz2:3", "fpz2:5", "trunc:1", "trunc:2"]


@pytest.fixture
def budget() -> Budget:
    return DEFAULT_BUDGET


@pytest.fixture
def Z():
    return build("z")


@pytest.fixture
def Z4():
    return build("zmod:4")


@pytest.fixture
def P2():
    return build("parity2")


@pytest.fixture
def Zx():
    return polyring(build("z"))


@pytest.fixture
def P2x():
    return polyring(build("parity2"))


@pytest.fixture
def Z4x():
    return polyring(build("zmod:4"))


@pytest.fixture(params=FINITE_SPECS)
def finite_ring(request):
    return build(request.param)
