from .profiles import (
    RadialProfile,
    FlatnessReport,
    HomothetyReport,
    convolution_body,
    flatness_probe,
    flatness_sweep,
    homothety_check,
    curvature_positivity_probe,
    body_profile,
    write_svg,
    write_obj,
)

__all__ = [
    "RadialProfile",
    "FlatnessReport",
    "HomothetyReport",
    "convolution_body",
    "flatness_probe",
    "flatness_sweep",
    "homothety_check",
    "curvature_positivity_probe",
    "body_profile",
    "write_svg",
    "write_obj",
]
