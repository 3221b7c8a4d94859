"""Serialization of results: JSON documents, CSV tables and orbit plots.

JSON never contains floats: integers are JSON integers and rationals are
``"num/den"`` strings (see :func:`pfhat.models.format_rational`).
"""

import json
import logging
import os
from collections.abc import Iterable
from typing import Any, Optional

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import pandas as pd  # noqa: E402

from pfhat.character import character_vector  # noqa: E402
from pfhat.errors import ValidationError  # noqa: E402
from pfhat.models import format_rational  # noqa: E402
from pfhat.numth import partitions_of, z_of  # noqa: E402
from pfhat.orbits import orbit_sequence  # noqa: E402

log = logging.getLogger(__name__)

__all__ = [
    "character_frame",
    "format_rational",
    "orbit_frame",
    "plot_orbit_counts",
    "to_json",
    "write_csv",
]


def to_json(payload: Any) -> str:
    """Render a result as JSON.

    Objects with a ``to_json`` method are converted first; lists of them too.
    Key order is preserved, so equal inputs give byte-identical output.
    """
    if hasattr(payload, "to_json"):
        payload = payload.to_json()
    elif isinstance(payload, list):
        payload = [p.to_json() if hasattr(p, "to_json") else p for p in payload]
    return json.dumps(payload, indent=2, ensure_ascii=False)


def character_frame(n: int, cs: Optional[Iterable[int]] = None) -> pd.DataFrame:
    """Closed-form characters of τ_{n,c} as a table, one row per cycle type.

    Args:
        n: Degree.
        cs: Values of c, default ``1..n``.

    Returns:
        Columns ``lambda``, ``z`` and one ``c=<c>`` column per requested c.
    """
    cs = list(range(1, n + 1)) if cs is None else list(cs)
    if not cs:
        raise ValidationError("need at least one value of c")
    lams = partitions_of(n)
    data: dict[str, list] = {
        "lambda": [lam.key for lam in lams],
        "z": [z_of(lam) for lam in lams],
    }
    for c in cs:
        vector = character_vector(n, c)
        data[f"c={c}"] = [vector[lam] for lam in lams]
    return pd.DataFrame(data)


def orbit_frame(max_n: int) -> pd.DataFrame:
    """Rows ``n, o_{n,1}, o_{n,n}``."""
    return pd.DataFrame(orbit_sequence(max_n), columns=["n", "orbits_c1", "orbits_cn"])


def write_csv(frame: pd.DataFrame, path: str) -> None:
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    frame.to_csv(path, index=False)
    log.info("wrote %d rows to %s", len(frame), path)


def plot_orbit_counts(path: str, max_n: int) -> None:
    """Save a log-scale plot of ``o_{n,1}`` and ``o_{n,n}`` for ``n = 1..max_n``."""
    df = orbit_frame(max_n)
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    fig = plt.figure()
    plt.semilogy(df["n"], [float(v) for v in df["orbits_c1"]], marker="o", label="c = 1")
    plt.semilogy(df["n"], [float(v) for v in df["orbits_cn"]], marker="s", label="c = n")
    plt.xlabel("n")
    plt.ylabel("orbits")
    plt.title("Orbits of the extended parking function modules")
    plt.legend()
    plt.tight_layout()
    plt.savefig(path)
    plt.close(fig)
    log.info("saved orbit plot to %s", path)
