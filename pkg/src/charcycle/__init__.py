"""Numerical character formulas for SL(2,R) and SU(2).

The package computes both sides of the cycle-integral / fixed-point
character equality on the cotangent bundle of the projective line, plus
the compact Weyl/Kirillov pair, and ships a CLI harness for the
verification experiments.
"""

from .lie import (
    Sl2Element, FlagPoint, SpectralData, RegularityClass,
    classify, spectral_data, flow_velocity,
    NotRegularSemisimple, ChartOverflow,
    NORTH, SOUTH, HYPERBOLIC, ELLIPTIC, NILPOTENT, ZERO,
)
from .flag import (
    CovectorValue, CotangentPoint, Weight,
    moment, lambda_transport, twisted_moment, kks_eval, pulled_back_area,
    NotRegular, NotTangent,
)

__all__ = [
    "Sl2Element", "FlagPoint", "SpectralData", "RegularityClass",
    "classify", "spectral_data", "flow_velocity",
    "NotRegularSemisimple", "ChartOverflow",
    "NORTH", "SOUTH", "HYPERBOLIC", "ELLIPTIC", "NILPOTENT", "ZERO",
    "CovectorValue", "CotangentPoint", "Weight",
    "moment", "lambda_transport", "twisted_moment", "kks_eval",
    "pulled_back_area", "NotRegular", "NotTangent",
]
