from ..errors import InvalidParameterError
from ..util import ball_volume


def cn_constant(n: int) -> float:
    """``c_n = 2(ω_{n-1}/(n+1))^{2/(n+1)}`` where ``ω_k`` is the volume of
    the k-dimensional unit ball; ``c_1 = 1``.

    :raise: InvalidParameterError
    """
    if int(n) != n or n < 1:
        raise InvalidParameterError("Dimension must be a positive integer")
    n = int(n)
    return 2 * (ball_volume(n - 1) / (n + 1)) ** (2 / (n + 1))
