from .models import RadialProfile, FlatnessReport, HomothetyReport
from .radial import convolution_body, delta_limit, make_grid
from .probes import (
    flatness_probe,
    flatness_sweep,
    homothety_check,
    curvature_positivity_probe,
    body_profile,
)
from .emit import render_svg, render_obj, write_svg, write_obj

__all__ = [
    "RadialProfile",
    "FlatnessReport",
    "HomothetyReport",
    "convolution_body",
    "delta_limit",
    "make_grid",
    "flatness_probe",
    "flatness_sweep",
    "homothety_check",
    "curvature_positivity_probe",
    "body_profile",
    "render_svg",
    "render_obj",
    "write_svg",
    "write_obj",
]
