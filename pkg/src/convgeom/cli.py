import io
import csv
import sys
import json
import typing as t
import logging
import argparse
from dataclasses import dataclass, field
from pathlib import Path
import numpy as np
from . import __version__
from .bodies import load_body, BaseBody
from .volumes import TranslateProblem
from .volume import intersection_volume, VolumeRegistry
from .calculus import grad_F, hessian_F, one_sided_derivative
from .convolution import (
    convolution_body,
    flatness_probe,
    homothety_check,
    curvature_positivity_probe,
    write_svg,
    write_obj,
)
from .profiles.probes import FLATNESS_RESOLUTION, CURVATURE_RESOLUTION
from .curvature import CurvatureSchedule, volumic_curvature, cap_curvature
from .characterize import shell_spread, curvature_law, homothety_necessity
from .config import DEFAULT_SEED
from .errors import (
    ConvGeomError,
    InvalidParameterError,
    BudgetExceededError,
    NoiseFloorError,
    IllConditionedCrossingError,
    QuadratureMismatchError,
)
from .util import json_dumps, parse_vector, parse_floats

__all__ = ["RunConfig", "build_parser", "config_from_args", "dispatch", "main"]

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PRECONDITION = 2
EXIT_BUDGET = 3

#: errors of numerical budgets, every other library error is a precondition violation
BUDGET_ERRORS = (BudgetExceededError, NoiseFloorError, IllConditionedCrossingError, QuadratureMismatchError)

METHODS = ["auto", "exact", "mc", "exact_poly_2d", "exact_poly_3d"]
FORMATS = ["json", "csv"]


@dataclass
class RunConfig:
    """A validated command line invocation."""
    command: str
    body: t.Optional[Path] = None
    other: t.Optional[Path] = None
    tau: float = 1.0
    delta: t.Optional[float] = None
    alphas: t.List[float] = field(default_factory=list)
    x: t.Optional[str] = None
    u: t.Optional[str] = None
    offset: t.Optional[str] = None
    method: str = "auto"
    tol: t.Optional[float] = None
    seed: int = DEFAULT_SEED
    samples: t.Optional[int] = None
    grid: t.Optional[int] = None
    resolution: t.Optional[int] = None
    n: int = 256
    h0: t.Optional[float] = None
    levels: int = 6
    cap: bool = False
    probe: bool = False
    mode: str = "auto"
    inputs: t.List[Path] = field(default_factory=list)
    markdown: t.Optional[Path] = None
    out: t.Optional[Path] = None
    format: str = "json"
    emit_svg: t.Optional[Path] = None
    emit_obj: t.Optional[Path] = None
    verbose: bool = False

    def validate(self) -> None:
        """Check numeric flags against the preconditions of the command.

        :raise: InvalidParameterError
        """
        if not self.tau > 0:
            raise InvalidParameterError("--tau must be positive")
        if self.tol is not None and not self.tol > 0:
            raise InvalidParameterError("--tol must be positive")
        if self.delta is not None and not self.delta > 0:
            raise InvalidParameterError("--delta must be positive")
        if any(not a > 0 for a in self.alphas):
            raise InvalidParameterError("--alphas must be positive")
        if self.samples is not None and self.samples < 1:
            raise InvalidParameterError("--samples must be positive")
        if self.grid is not None and self.grid < 0:
            raise InvalidParameterError("--grid must not be negative")
        if self.resolution is not None and self.resolution < 1:
            raise InvalidParameterError("--resolution must be positive")
        if self.n < 4:
            raise InvalidParameterError("--n must be at least 4")
        if self.h0 is not None and not self.h0 > 0:
            raise InvalidParameterError("--h0 must be positive")
        if self.levels < 1:
            raise InvalidParameterError("--levels must be at least 1")
        if self.format == "csv" and self.command not in TABULAR:
            raise InvalidParameterError(f'CSV output is not available for "{self.command}"')

    def registry(self) -> t.Optional[VolumeRegistry]:
        if self.samples is None:
            return None
        return VolumeRegistry(samples=self.samples)

    def schedule(self) -> CurvatureSchedule:
        return CurvatureSchedule(h0=self.h0, levels=self.levels)


class Output(t.NamedTuple):
    data: t.Any
    #: flat rows for CSV output
    rows: t.Optional[t.List[t.Dict[str, t.Any]]] = None


def _load(path: t.Optional[Path], flag: str = "--body") -> BaseBody:
    if path is None:
        raise InvalidParameterError(f"{flag} is required")
    return load_body(path)


def _problem(config: RunConfig) -> TranslateProblem:
    body = _load(config.body)
    other = load_body(config.other) if config.other else None
    if config.x is None:
        raise InvalidParameterError("--x is required")
    return TranslateProblem(body, config.tau, parse_vector(config.x, body.dim), other)


def run_volume(config: RunConfig) -> Output:
    problem = _problem(config)
    estimate = intersection_volume(problem, config.method, config.tol, config.seed, config.registry())
    return Output(estimate.as_dict())


def run_convbody(config: RunConfig) -> Output:
    body = _load(config.body)
    if config.delta is None:
        raise InvalidParameterError("--delta is required")
    profile = convolution_body(
        body,
        config.delta,
        config.tau,
        config.grid,
        method=config.method,
        volume_tol=config.tol,
        seed=config.seed,
        registry=config.registry(),
    )
    data: t.Dict[str, t.Any] = {"profile": profile.as_dict()}
    if config.probe:
        data["homothety"] = homothety_check(profile, body).as_dict()
        if profile.dim == 2 and len(profile) >= FLATNESS_RESOLUTION:
            data["flatness"] = flatness_probe(profile).as_dict()
        if profile.dim == 2 and len(profile) >= CURVATURE_RESOLUTION:
            data["min_curvature"] = curvature_positivity_probe(profile)
    if config.emit_svg:
        write_svg(profile, config.emit_svg)
    if config.emit_obj:
        write_obj(profile, config.emit_obj)
    return Output(data)


def run_grad(config: RunConfig) -> Output:
    return Output(grad_F(_problem(config), config.resolution).as_dict())


def run_hess(config: RunConfig) -> Output:
    return Output({"hessian": hessian_F(_problem(config), config.resolution)})


def run_lemma21(config: RunConfig) -> Output:
    first = _load(config.body, "--k1")
    second = _load(config.other, "--k2")
    if config.u is None:
        raise InvalidParameterError("--u is required")
    u = parse_vector(config.u, first.dim)
    offset = parse_vector(config.offset, first.dim) if config.offset else None
    return Output(one_sided_derivative(first, second, u, config.resolution, offset).as_dict())


def run_curvature(config: RunConfig) -> Output:
    body = _load(config.body)
    if config.x is None:
        raise InvalidParameterError("--x is required")
    x = parse_vector(config.x, body.dim)
    if config.cap:
        report = cap_curvature(body, x, config.schedule(), config.method, config.seed, config.registry())
    else:
        report = volumic_curvature(body, x, config.tau, config.schedule(), config.method, config.seed, config.registry())
    return Output(report.as_dict())


def run_shells(config: RunConfig) -> Output:
    body = _load(config.body)
    alphas = config.alphas or [1.0]
    reports = [
        shell_spread(body, config.tau, alpha, config.n, config.seed, config.method, config.tol, config.registry())
        for alpha in alphas
    ]
    rows = [
        {k: v for k, v in r.as_dict().items() if k not in ("argmin", "argmax")}
        for r in reports
    ]
    return Output({"shells": [r.as_dict() for r in reports]}, rows)


def run_charlaw(config: RunConfig) -> Output:
    body = _load(config.body)
    report = curvature_law(body, config.tau, config.grid, config.schedule(), config.mode)
    rows = [
        {"u": ",".join(f"{c:.12g}" for c in u), "value": v if np.isfinite(v) else None, "source": s}
        for u, v, s in zip(report.directions, report.values, report.sources)
    ]
    return Output(report.as_dict(), rows)


def run_homothety(config: RunConfig) -> Output:
    body_k = _load(config.body, "--k")
    body_l = _load(config.other, "--l")
    return Output(homothety_necessity(body_k, body_l, config.tau, config.grid).as_dict())


def _flatten(data: t.Dict[str, t.Any], prefix: str = "") -> t.Dict[str, t.Any]:
    """Scalar fields of a nested report, keys joined by dots."""
    rv: t.Dict[str, t.Any] = {}
    for key, value in data.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            rv.update(_flatten(value, name + "."))
        elif value is None or isinstance(value, (str, int, float, bool)):
            rv[name] = value
    return rv


def _report_rows(path: Path) -> t.List[t.Dict[str, t.Any]]:
    try:
        data = json.loads(path.read_text())
    except OSError as error:
        raise InvalidParameterError(f"{path}: {error.strerror}")
    except json.JSONDecodeError as error:
        raise InvalidParameterError(f"{path}: line {error.lineno} column {error.colno}: {error.msg}")
    if isinstance(data, dict) and isinstance(data.get("shells"), list):
        items = data["shells"]
    else:
        items = [data]
    return [{"source": path.name, **_flatten(item)} for item in items if isinstance(item, dict)]


def markdown_table(rows: t.List[t.Dict[str, t.Any]]) -> str:
    columns = _columns(rows)
    lines = [
        "| " + " | ".join(columns) + " |",
        "|" + "|".join(" --- " for _ in columns) + "|",
    ]
    for row in rows:
        lines.append("| " + " | ".join(_cell(row.get(c)) for c in columns) + " |")
    return "\n".join(lines) + "\n"


def _cell(value: t.Any) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _columns(rows: t.List[t.Dict[str, t.Any]]) -> t.List[str]:
    columns: t.List[str] = []
    for row in rows:
        columns.extend(k for k in row if k not in columns)
    return columns


def run_report(config: RunConfig) -> Output:
    if not config.inputs:
        raise InvalidParameterError("report needs at least one input file")
    rows: t.List[t.Dict[str, t.Any]] = []
    for path in config.inputs:
        rows.extend(_report_rows(path))
    if config.markdown:
        config.markdown.write_text(markdown_table(rows))
    return Output({"reports": rows}, rows)


COMMANDS: t.Dict[str, t.Callable[[RunConfig], Output]] = {
    "volume": run_volume,
    "convbody": run_convbody,
    "grad": run_grad,
    "hess": run_hess,
    "lemma21": run_lemma21,
    "curvature": run_curvature,
    "shells": run_shells,
    "charlaw": run_charlaw,
    "homothety": run_homothety,
    "report": run_report,
}
TABULAR = ("shells", "charlaw", "report")


def render(output: Output, fmt: str) -> str:
    if fmt == "json":
        return json_dumps(output.data, indent=2) + "\n"
    rows = output.rows or []
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=_columns(rows), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _cell(v) for k, v in row.items()})
    return buffer.getvalue()


def dispatch(config: RunConfig) -> str:
    """Run the command of a configuration and render its report.

    :raise: ConvGeomError
    """
    config.validate()
    logger.debug("running %s", config.command)
    return render(COMMANDS[config.command](config), config.format)


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", type=Path, help="write the report to a file instead of stdout")
    parser.add_argument("--format", choices=FORMATS, default="json")
    parser.add_argument("--verbose", action="store_true", help="debug logging on stderr")


def _volume_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--method", choices=METHODS, default="auto")
    parser.add_argument("--tol", type=float, help="absolute volume tolerance, the engine default when omitted")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--samples", type=int, help="fixed Monte Carlo sample count")


def _translate_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--body", type=Path, required=True)
    parser.add_argument("--other", type=Path, help="translate this body instead of the scaled body")
    parser.add_argument("--tau", type=float, default=1.0)
    parser.add_argument("--x", required=True, help='comma separated vector, e.g. "1,0"')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="convgeom", description="Translate intersection volumes of convex bodies")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("volume", help="F(x) = |K ∩ (x+τK)|")
    _translate_flags(p)
    _volume_flags(p)
    _common(p)

    p = sub.add_parser("convbody", help="radial profile of K(δ,τ)")
    p.add_argument("--body", type=Path, required=True)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--tau", type=float, default=1.0)
    p.add_argument("--grid", type=int, help="angles in the plane, icosphere level in space")
    p.add_argument("--probe", action="store_true", help="add flatness, homothety and curvature probes")
    p.add_argument("--emit-svg", type=Path)
    p.add_argument("--emit-obj", type=Path)
    _volume_flags(p)
    _common(p)

    for name, text in (("grad", "gradient of F"), ("hess", "Hessian of F")):
        p = sub.add_parser(name, help=text)
        _translate_flags(p)
        p.add_argument("--resolution", type=int)
        _common(p)

    p = sub.add_parser("lemma21", help="one sided derivatives of |K1 ∩ (ru+K2)|")
    p.add_argument("--k1", type=Path, required=True)
    p.add_argument("--k2", type=Path, required=True)
    p.add_argument("--u", required=True)
    p.add_argument("--offset", help="translation of K2")
    p.add_argument("--resolution", type=int)
    _common(p)

    p = sub.add_parser("curvature", help="volumic curvature estimate")
    p.add_argument("--body", type=Path, required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--tau", type=float, default=1.0)
    p.add_argument("--cap", action="store_true", help="use hyperplane caps")
    p.add_argument("--h0", type=float)
    p.add_argument("--levels", type=int, default=6)
    _volume_flags(p)
    _common(p)

    p = sub.add_parser("shells", help="spread of F over gauge shells")
    p.add_argument("--body", type=Path, required=True)
    p.add_argument("--tau", type=float, default=1.0)
    p.add_argument("--alphas", default="1")
    p.add_argument("--n", type=int, default=256)
    _volume_flags(p)
    _common(p)

    p = sub.add_parser("charlaw", help="curvature function law")
    p.add_argument("--body", type=Path, required=True)
    p.add_argument("--tau", type=float, default=1.0)
    p.add_argument("--grid", type=int)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--volumic", action="store_const", dest="mode", const="volumic")
    group.add_argument("--analytic", action="store_const", dest="mode", const="analytic")
    p.add_argument("--h0", type=float)
    p.add_argument("--levels", type=int, default=6)
    p.set_defaults(mode="auto")
    _common(p)

    p = sub.add_parser("homothety", help="gauge of L indexing F")
    p.add_argument("--k", type=Path, required=True)
    p.add_argument("--l", type=Path, required=True)
    p.add_argument("--tau", type=float, default=1.0)
    p.add_argument("--grid", type=int)
    _common(p)

    p = sub.add_parser("report", help="aggregate JSON reports")
    p.add_argument("inputs", type=Path, nargs="+")
    p.add_argument("--markdown", type=Path, help="write a markdown summary")
    _common(p)
    p.set_defaults(format="csv")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    values = vars(args)
    paths = {
        "k1": "body",
        "k2": "other",
        "k": "body",
        "l": "other",
    }
    data: t.Dict[str, t.Any] = {}
    for key, value in values.items():
        if value is None:
            continue
        if key == "alphas":
            data["alphas"] = parse_floats(value)
        else:
            data[paths.get(key, key)] = value
    return RunConfig(**data)


def main(argv: t.Optional[t.List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        text = dispatch(config_from_args(args))
    except BUDGET_ERRORS as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_BUDGET
    except ConvGeomError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_PRECONDITION

    if args.out:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK
