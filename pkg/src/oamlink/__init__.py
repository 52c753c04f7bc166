"""Simulation and analysis of a free-space polarization-OAM entanglement link."""

__version__ = "0.1.0"

from .kernels import BACKEND
from .modes import ModeSpec, SampledField, synthesize_mode, superpose
from .optics import TelescopeGeometry, aperture_transmission, fit_geometry
from .quantum import HybridState, visibility, witness
from .stats import blockwise_witness, from_block_values
from .timetags import LinkSimConfig, TimeTagStream, simulate_streams

__all__ = [
    "BACKEND",
    "HybridState",
    "LinkSimConfig",
    "ModeSpec",
    "SampledField",
    "TelescopeGeometry",
    "TimeTagStream",
    "aperture_transmission",
    "blockwise_witness",
    "fit_geometry",
    "from_block_values",
    "simulate_streams",
    "superpose",
    "synthesize_mode",
    "visibility",
    "witness",
]
