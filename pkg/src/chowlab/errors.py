"""Exception types and size caps shared by the whole package."""
import os
import warnings
from contextlib import contextmanager


class InvalidArgument(ValueError):
    """Input violates a precondition (bad spec, malformed object)."""


class SizeLimitError(RuntimeError):
    """A computation would exceed a configured size cap."""


class InternalError(RuntimeError):
    """A condition that should be impossible for valid input."""


MAX_GROUND = 20
DEFAULT_PERM_CAP = 9

_lifted = False


def perm_cap() -> int:
    """Largest n for exhaustive loops over S_n (CHOWLAB_MAX_N overrides)."""
    raw = os.environ.get("CHOWLAB_MAX_N")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise InvalidArgument(f"CHOWLAB_MAX_N must be an integer, got {raw!r}")
    return DEFAULT_PERM_CAP


def check_cap(n: int, cap: int | None = None, override: bool = False, what: str = "n"):
    if cap is None:
        cap = perm_cap()
    if n <= cap:
        return
    if override or _lifted:
        warnings.warn(f"{what}={n} exceeds cap {cap}; running anyway (cost grows like {n}!)")
        return
    raise SizeLimitError(f"{what}={n} exceeds cap {cap} (set CHOWLAB_MAX_N or pass override)")


@contextmanager
def caps_lifted():
    """Within this block every check_cap warns instead of raising."""
    global _lifted
    prev, _lifted = _lifted, True
    try:
        yield
    finally:
        _lifted = prev
