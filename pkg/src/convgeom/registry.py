import typing as t
import math

BodySpecDict = t.Dict[str, t.Any]


def is_number(value: t.Any) -> None:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValueError("must be a number")
    if not math.isfinite(value):
        raise ValueError("must be finite")


def is_positive(value: t.Any) -> None:
    is_number(value)
    if value <= 0:
        raise ValueError("must be positive")


def is_vector(value: t.Any) -> None:
    if not isinstance(value, list) or not value:
        raise ValueError("must be a list[number]")
    for v in value:
        is_number(v)


def is_positive_vector(value: t.Any) -> None:
    is_vector(value)
    if not all(v > 0 for v in value):
        raise ValueError("must be a list of positive numbers")


def is_matrix(value: t.Any) -> None:
    if not isinstance(value, list) or not value:
        raise ValueError("must be a matrix")
    try:
        for row in value:
            is_vector(row)
    except ValueError:
        raise ValueError("must be a matrix")

    if len(set(len(row) for row in value)) != 1:
        raise ValueError("must be a matrix with rows of equal length")


def is_square_matrix(value: t.Any) -> None:
    is_matrix(value)
    if len(value) != len(value[0]):
        raise ValueError("must be a square matrix")


def is_body(value: t.Any) -> None:
    if not isinstance(value, dict) or "kind" not in value:
        raise ValueError("must be a body spec")


def in_choices(choices: t.List[str]) -> t.Callable[[t.Any], None]:
    def _is_one_of(value: t.Any) -> None:
        if value not in choices:
            raise ValueError(f"must be one of {choices}")

    return _is_one_of


Validate = t.Callable[[t.Any], None]
_value_validators: t.Dict[str, Validate] = {
    "number": is_number,
    "positive": is_positive,
    "vector": is_vector,
    "list[positive]": is_positive_vector,
    "matrix": is_matrix,
    "square": is_square_matrix,
    "body": is_body,
}


class BodyParameter:
    """Define a parameter of a body spec."""
    def __init__(self, description: str, validate: t.Union[str, Validate], required: bool = False):
        #: a short description of the body parameter
        self.description = description
        #: a function for validating the body parameter's value
        self.validate = _value_validators[validate] if isinstance(validate, str) else validate
        #: if this body parameter is required
        self.required = required


#: Define parameters for body specs
BodyParameterRegistryDict = t.Dict[str, BodyParameter]


def validate_registry_spec(registry: BodyParameterRegistryDict, data: BodySpecDict) -> None:
    for key, reg in registry.items():
        if reg.required and key not in data:
            raise ValueError(f'"{key}" is required')

        if key in data:
            try:
                reg.validate(data[key])
            except ValueError as error:
                raise ValueError(f'"{key}" {error}')


def check_supported_fields(registry: BodyParameterRegistryDict, data: BodySpecDict) -> None:
    allowed_keys = set(registry.keys())
    allowed_keys.add("kind")
    unsupported_keys = sorted(set(data.keys()) - allowed_keys)
    if unsupported_keys:
        raise ValueError(f'Unsupported {unsupported_keys} in body spec')
