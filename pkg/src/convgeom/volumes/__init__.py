from .model import (
    VolumeEstimate,
    VolumeMethodModel,
    TranslateProblem,
    Placement,
    Region,
    Cut,
)
from .registry import VolumeRegistry, construct_registry, default_registry

__all__ = [
    "VolumeEstimate",
    "VolumeMethodModel",
    "TranslateProblem",
    "Placement",
    "Region",
    "Cut",
    "VolumeRegistry",
    "construct_registry",
    "default_registry",
]
