"""Closed-form paths and frames used across the tests."""

import math
from typing import Any, Dict, List

import numpy as np

from symplectic_index.core.maslov import Segment, SymplecticPathSpec
from symplectic_index.core.symlin import LagrangianFrame, SympSpace


def rotation_spec(angular_speed: float, duration: float) -> SymplecticPathSpec:
    """t ↦ e^{i·angular_speed·t} on ℂ."""
    return SymplecticPathSpec(SympSpace.standard(1), (Segment(angular_speed * np.eye(2), duration),))


def line(angle: float) -> LagrangianFrame:
    """The real line rotated by ``angle``."""
    return LagrangianFrame(np.array([[math.cos(angle)], [math.sin(angle)]]), SympSpace.standard(1))


def rotation_matrix(angle: float) -> np.ndarray:
    return np.array([[math.cos(angle), -math.sin(angle)], [math.sin(angle), math.cos(angle)]])


def rotation_segments(angular_speed: float, duration: float) -> List[Dict[str, Any]]:
    """JSON segments of a planar rotation path."""
    return [{"S": [[angular_speed, 0.0], [0.0, angular_speed]], "d": duration}]
