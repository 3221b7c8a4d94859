"""Runtime configuration read from the environment.

Values can be overridden on the command line; library functions take explicit
arguments and fall back to :func:`get_settings` only for resource bounds.
"""

import logging
import os
from collections.abc import Iterable, Mapping
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Callable, Optional, TypeVar

from pfhat.errors import ValidationError

log = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

ENV_PREFIX = "PFHAT_"


@dataclass(frozen=True)
class Settings:
    """Resource bounds and parallelism.

    Attributes:
        workers: Worker processes for brute-force and polynomial expansion loops.
        table_max_n: Largest degree accepted by ``symfun.character_table``.
        slim_max_n: Largest n for slim-graph spans without an explicit opt-in.
        slim_big_n: Largest n for slim-graph spans with ``allow_big``.

    Example:
        >>> Settings.from_env({"PFHAT_WORKERS": "4"}).workers
        4
    """

    workers: int = 1
    table_max_n: int = 12
    slim_max_n: int = 5
    slim_big_n: int = 6

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "Settings":
        """Build settings from ``PFHAT_*`` environment variables.

        Args:
            environ: Mapping to read from, defaults to ``os.environ``.

        Returns:
            Settings with every unset variable at its default.

        Raises:
            ValidationError: If a variable is not a positive integer.
        """
        env = os.environ if environ is None else environ
        values = {}
        for name in ("workers", "table_max_n", "slim_max_n", "slim_big_n"):
            raw = env.get(ENV_PREFIX + name.upper())
            if raw is None:
                continue
            try:
                value = int(raw)
            except ValueError as exc:
                raise ValidationError(f"{ENV_PREFIX}{name.upper()} must be an integer") from exc
            if value < 1:
                raise ValidationError(f"{ENV_PREFIX}{name.upper()} must be >= 1, got {value}")
            values[name] = value
        return cls(**values)

    def with_workers(self, workers: Optional[int]) -> "Settings":
        """Return a copy with ``workers`` replaced when given."""
        if workers is None:
            return self
        if workers < 1:
            raise ValidationError(f"workers must be >= 1, got {workers}")
        return replace(self, workers=workers)


_current: Optional[Settings] = None


def get_settings() -> Settings:
    """Process-wide settings, read from the environment on first use."""
    global _current
    if _current is None:
        _current = Settings.from_env()
    return _current


def set_settings(settings: Optional[Settings]) -> None:
    """Install ``settings`` process-wide; ``None`` re-reads the environment lazily."""
    global _current
    _current = settings


def parallel_map(
    fn: Callable[[T], R], items: Iterable[T], workers: Optional[int] = None
) -> list[R]:
    """Map ``fn`` over ``items`` and return results in input order.

    Args:
        fn: Picklable callable (module-level function or ``functools.partial``).
        items: Inputs.
        workers: Process count; ``None`` uses the configured value.

    Returns:
        ``[fn(x) for x in items]``, computed in a process pool when ``workers > 1``.
    """
    seq = list(items)
    count = get_settings().workers if workers is None else workers
    if count <= 1 or len(seq) < 2:
        return [fn(x) for x in seq]
    log.debug("mapping %d items over %d workers", len(seq), count)
    with ProcessPoolExecutor(max_workers=count) as pool:
        return list(pool.map(fn, seq))
