import typing as t
from dataclasses import dataclass
import numpy as np


@dataclass(frozen=True)
class SetMeasures:
    """Measures of the four sets ``C_u^±(1,2)`` and ``C_u^±(2,1)`` in the
    projection hyperplane ``u⊥``."""
    plus_12: float
    minus_12: float
    plus_21: float
    minus_21: float

    def as_dict(self) -> t.Dict[str, float]:
        return {
            "plus_12": self.plus_12,
            "minus_12": self.minus_12,
            "plus_21": self.plus_21,
            "minus_21": self.minus_21,
        }


@dataclass(frozen=True)
class OneSidedDerivatives:
    """One-sided derivatives at ``r = 0`` of ``f(r) = |K1 ∩ (ru + K2)|``."""
    forward: float
    backward: float
    direction: np.ndarray
    set_measures: SetMeasures
    #: measure of the overlap of the two projections
    overlap: float
    cells: int

    def as_dict(self) -> t.Dict[str, t.Any]:
        return {
            "forward": self.forward,
            "backward": self.backward,
            "direction": self.direction,
            "set_measures": self.set_measures.as_dict(),
            "overlap": self.overlap,
            "cells": self.cells,
        }


@dataclass(frozen=True)
class BoundaryIntersectionCurve:
    """Sample of ``S = ∂K ∩ ∂(x+τK)``: points with the normals ``N`` of
    ``∂K`` and ``M`` of the translate, and the weights of the surface
    measure on ``S`` (counting measure in the plane, arclength in space).
    """
    points: np.ndarray
    normals_fixed: np.ndarray
    normals_moving: np.ndarray
    weights: np.ndarray

    def __len__(self) -> int:
        return len(self.points)

    @property
    def cosines(self) -> np.ndarray:
        return np.einsum("ij,ij->i", self.normals_fixed, self.normals_moving)

    def as_dict(self) -> t.Dict[str, t.Any]:
        return {
            "points": self.points,
            "normals_fixed": self.normals_fixed,
            "normals_moving": self.normals_moving,
            "weights": self.weights,
        }


@dataclass(frozen=True)
class Gradient:
    """Gradient of ``F`` by the flux of ``M`` over ``K ∩ ∂(x+τK)``,
    together with the reverse form ``-∫ N`` over ``∂K ∩ (x+τK)``."""
    value: np.ndarray
    reverse_form: np.ndarray
    outside_support: bool = False

    def as_dict(self) -> t.Dict[str, t.Any]:
        return {
            "gradient": self.value,
            "reverse_form": self.reverse_form,
            "outside_support": self.outside_support,
        }
