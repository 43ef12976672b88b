"""Logical powers in polynomial rings: ring models, first-order evaluation
and exact deciders for definability of powers."""

from __future__ import annotations

from .core import (
    DEFAULT_BUDGET,
    BadBound,
    BadRing,
    BadSample,
    BadSpec,
    Budget,
    DefpowError,
    MixedRingError,
    Ring,
    RingValue,
    TruthValue,
    UnboundVar,
    Verdict,
    ZeroElement,
)
from .formulas import decide_lpow, decide_pow
from .logic import evaluate, parse
from .poly import PolyRing, polyring
from .rings import build

__all__ = [
    "DEFAULT_BUDGET", "BadBound", "BadRing", "BadSample", "BadSpec", "Budget", "DefpowError",
    "MixedRingError", "PolyRing", "Ring", "RingValue", "TruthValue", "UnboundVar", "Verdict",
    "ZeroElement", "build", "decide_lpow", "decide_pow", "evaluate", "parse", "polyring",
]
