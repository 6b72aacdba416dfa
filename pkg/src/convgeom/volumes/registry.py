import copy
import typing as t
from .model import VolumeMethodModel, Region
from ..config import DEFAULT_RESOLUTION, MAX_RESOLUTION, MC_MAX_SAMPLES
from ..errors import InvalidParameterError, UnsupportedMethodError


class VolumeRegistry:
    """A registry of volume engines together with the engine parameters
    used by a call.

    :param methods: allowed method names, all registered methods by default
    :param resolution: starting polygonization resolution of smooth bodies
    :param max_resolution: largest polygonization resolution
    :param max_samples: Monte Carlo sample budget
    :param samples: fixed Monte Carlo sample count, ignoring the tolerance
    :param rtol: relative tolerance, used on top of the absolute one
    """
    methods: t.Dict[str, VolumeMethodModel] = {}
    #: order in which "auto" tries the methods
    preferred: t.List[str] = []

    def __init__(
            self,
            methods: t.Optional[t.List[str]] = None,
            resolution: int = DEFAULT_RESOLUTION,
            max_resolution: int = MAX_RESOLUTION,
            max_samples: int = MC_MAX_SAMPLES,
            samples: t.Optional[int] = None,
            rtol: t.Optional[float] = None):
        if samples is not None and samples < 1:
            raise InvalidParameterError("samples must be positive")
        if rtol is not None and not rtol > 0:
            raise InvalidParameterError("rtol must be positive")
        self.allowed = methods
        self.resolution = resolution
        self.max_resolution = max(resolution, max_resolution)
        self.max_samples = max_samples
        self.samples = samples
        self.rtol = rtol

    def with_rtol(self, rtol: float) -> "VolumeRegistry":
        """A copy of this registry with another relative tolerance."""
        rv = copy.copy(self)
        rv.rtol = rtol
        return rv

    @classmethod
    def register(cls, method: VolumeMethodModel) -> None:
        """Register a given volume method instance to the registry."""
        cls.methods[method.name] = method
        if method.name not in cls.preferred:
            cls.preferred.append(method.name)

    def get_method(self, name: str) -> VolumeMethodModel:
        """Get the allowed method instance of the given name.

        :param name: e.g. ``exact_poly_2d``, ``mc``
        :raise: UnsupportedMethodError
        """
        if name not in self.methods:
            raise UnsupportedMethodError(f'Volume method "{name}" is not supported')
        if self.allowed is not None and name not in self.allowed:
            raise UnsupportedMethodError(f'Volume method "{name}" is not allowed')
        return self.methods[name]

    def choose(self, region: Region, exact_only: bool = False) -> VolumeMethodModel:
        """The first allowed method in preferred order that supports the region."""
        for name in self.preferred:
            if self.allowed is not None and name not in self.allowed:
                continue
            method = self.methods[name]
            if exact_only and not method.exact:
                continue
            if method.supports(region):
                return method
        raise UnsupportedMethodError("No volume method supports this region")


#: default volume registry
default_registry = VolumeRegistry()


def construct_registry(methods: t.Optional[t.List[str]] = None, **params: t.Any) -> VolumeRegistry:
    if methods or params:
        return VolumeRegistry(methods=methods, **params)
    return default_registry
