from .limits import (
    CurvatureSchedule,
    CurvatureReport,
    CapReport,
    DIVERGENT,
    cn_constant,
    locate_xh,
    volumic_curvature,
    cap_curvature,
    normal_curvature,
)

__all__ = [
    "CurvatureSchedule",
    "CurvatureReport",
    "CapReport",
    "DIVERGENT",
    "cn_constant",
    "locate_xh",
    "volumic_curvature",
    "cap_curvature",
    "normal_curvature",
]
