from .models import (
    CurvatureSchedule,
    CurvatureReport,
    CapReport,
    Extrapolation,
    DIVERGENT,
    CONVERGED,
)
from .constants import cn_constant
from .xh import locate_xh
from .estimators import volumic_curvature, cap_curvature, normal_curvature
from .extrapolate import extrapolate

__all__ = [
    "CurvatureSchedule",
    "CurvatureReport",
    "CapReport",
    "Extrapolation",
    "DIVERGENT",
    "CONVERGED",
    "cn_constant",
    "locate_xh",
    "volumic_curvature",
    "cap_curvature",
    "normal_curvature",
    "extrapolate",
]
