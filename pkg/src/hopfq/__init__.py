"""Hopf-fibration geometry of one- and two-qubit pure states."""
from .errors import (
    AtPole,
    BadDensityMatrix,
    DegenerateOmega,
    HopfError,
    InconsistentOmega,
    InvalidAxis,
    InvalidFiberPoint,
    NearZeroQuaternion,
    NotNormalized,
    NotSeparable,
    OracleMismatch,
    PoleState,
)
from .hopf_s7 import FibrationChart, QuaternionPair, S4Point
from .quaternion import INFINITY, Quaternion
from .states import BlochVector, QubitState, SchmidtData, TwoQubitState

__version__ = "0.1.0"

__all__ = [
    "AtPole",
    "BadDensityMatrix",
    "BlochVector",
    "DegenerateOmega",
    "FibrationChart",
    "HopfError",
    "INFINITY",
    "InconsistentOmega",
    "InvalidAxis",
    "InvalidFiberPoint",
    "NearZeroQuaternion",
    "NotNormalized",
    "NotSeparable",
    "OracleMismatch",
    "PoleState",
    "Quaternion",
    "QuaternionPair",
    "QubitState",
    "S4Point",
    "SchmidtData",
    "TwoQubitState",
]
