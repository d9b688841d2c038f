import os


class StarDecompError(Exception):
    pass


class MalformedGraph6(StarDecompError, ValueError):
    pass


class UnsupportedSize(StarDecompError, ValueError):
    pass


class VertexOutOfRange(StarDecompError, IndexError):
    pass


class InvalidOrder(StarDecompError, ValueError):
    pass


class ScaleExceeded(StarDecompError):
    """An exact routine was asked to work beyond its supported size."""


class PreconditionViolated(StarDecompError, ValueError):
    pass


class NotIndependent(PreconditionViolated):
    pass


class NotRegular(PreconditionViolated):
    pass


class NotCubic(NotRegular):
    pass


class NotBipartite(PreconditionViolated):
    pass


class BadOrder(PreconditionViolated):
    pass


class BadCenterSet(PreconditionViolated):
    pass


# exact solvers (independence, domination, matching) refuse beyond this
SOLVER_MAX_N = 64


def scale_max() -> int:
    """Vertex cap for exhaustive center-set search, per connected component."""
    raw = os.environ.get("STARDECOMP_SCALE_MAX")
    if not raw:
        return 24
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"STARDECOMP_SCALE_MAX must be an integer, got {raw!r}")
    if value < 1:
        raise ValueError("STARDECOMP_SCALE_MAX must be positive")
    return value


def check_scale(n: int, limit: int = SOLVER_MAX_N, what: str = "graph") -> None:
    if n > limit:
        raise ScaleExceeded(f"{what} has {n} vertices; exact mode supports at most {limit}")
