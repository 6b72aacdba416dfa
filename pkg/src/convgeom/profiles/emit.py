import typing as t
from pathlib import Path
import numpy as np
from .models import RadialProfile
from ..errors import InvalidParameterError

#: margin around the drawing, relative to the bounding box
SVG_MARGIN = 0.05


def render_svg(profile: RadialProfile, size: int = 512) -> str:
    """A closed polyline through the boundary points of a planar profile,
    with the viewBox fitted to its bounding box (y axis pointing up)."""
    if profile.dim != 2:
        raise InvalidParameterError("SVG output needs a planar profile")
    points = profile.points()
    lo, hi = points.min(axis=0), points.max(axis=0)
    pad = SVG_MARGIN * float(np.max(hi - lo))
    lo, hi = lo - pad, hi + pad
    width, height = hi - lo
    coords = " ".join(f"{x:.9g},{-y:.9g}" for x, y in points)
    return (
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{size}" height="{size}" '
        f'viewBox="{lo[0]:.9g} {-hi[1]:.9g} {width:.9g} {height:.9g}">\n'
        f'  <polygon points="{coords}" fill="none" stroke="black" '
        f'stroke-width="{width / size:.9g}"/>\n'
        "</svg>\n"
    )


def render_obj(profile: RadialProfile) -> str:
    """Wavefront OBJ mesh of a profile on the icosphere grid."""
    faces = profile.grid.faces
    if profile.dim != 3 or faces is None:
        raise InvalidParameterError("OBJ output needs a profile on an icosphere grid")
    lines = [f"v {x:.12g} {y:.12g} {z:.12g}" for x, y, z in profile.points()]
    lines.extend(f"f {a + 1} {b + 1} {c + 1}" for a, b, c in faces)
    return "\n".join(lines) + "\n"


def write_svg(profile: RadialProfile, path: t.Union[str, Path]) -> None:
    Path(path).write_text(render_svg(profile))


def write_obj(profile: RadialProfile, path: t.Union[str, Path]) -> None:
    Path(path).write_text(render_obj(profile))
