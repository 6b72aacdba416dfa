from .models import BaseBody, OuterNormal
from .grid import DirectionGrid
from .ellipsoid import Ellipsoid
from .pball import PNormBall
from .polygon import Polygon
from .halfspaces import HalfspaceBody
from .linear import LinearImage

__all__ = [
    "BaseBody",
    "OuterNormal",
    "DirectionGrid",
    "Ellipsoid",
    "PNormBall",
    "Polygon",
    "HalfspaceBody",
    "LinearImage",
]
