"""Near-field ISAC sensing toolkit.

Library + CLI covering DFT/polar beam-training codebooks, radar data-cube
synthesis with per-element Doppler, reduced-dimension near-field STAP,
CFAR detection, and the evaluation curves of the accompanying simulator.
"""

__version__ = "0.1.0"

from .arrays import (
    SPEED_OF_LIGHT,
    ArrayGeometry,
    BeamDepth,
    PolarPoint,
    array_gain,
    beam_depth_3db,
    ebrd,
    element_distance,
    ff_steering,
    nf_steering,
    rayleigh_distance,
)

__all__ = [
    "SPEED_OF_LIGHT",
    "ArrayGeometry",
    "BeamDepth",
    "PolarPoint",
    "array_gain",
    "beam_depth_3db",
    "ebrd",
    "element_distance",
    "ff_steering",
    "nf_steering",
    "rayleigh_distance",
    "__version__",
]
