"""Error norms and table rendering for solver-versus-exact comparisons."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .basis import UniformPartition
from .scheme import NodalState

__all__ = ["ErrorReport", "error_norms", "table_report"]

KNOT_MATCH_TOL = 1e-9


@dataclass
class ErrorReport:
    """Pointwise errors at the knots plus the two discrete norms.

    ``l2`` is the mesh-weighted root sum of squares sqrt(h * sum err^2);
    ``pointwise`` rows are (x, t, numerical, exact, abs_error).
    """

    l_inf: float
    l2: float
    pointwise: list[tuple[float, float, float, float, float]]


def error_norms(
    num: NodalState,
    exact_fn: Callable[[float, float], float],
    t: float,
    part: UniformPartition,
) -> ErrorReport:
    """Compare a nodal state against an exact solution at time ``t``."""
    rows = []
    errs = []
    for i in range(part.n_cells + 1):
        x = part.knot(i)
        ue = exact_fn(x, t)
        un = float(num.u[i])
        err = abs(un - ue)
        rows.append((x, t, un, ue, err))
        errs.append(err)
    e = np.asarray(errs)
    return ErrorReport(
        l_inf=float(np.max(e)),
        l2=float(math.sqrt(part.h * float(np.sum(e * e)))),
        pointwise=rows,
    )


def _knot_index(x: float, part: UniformPartition) -> int:
    i = round((x - part.a) / part.h)
    if not 0 <= i <= part.n_cells or abs(part.knot(i) - x) > KNOT_MATCH_TOL:
        raise ValueError(f"sample x={x} is not a knot of the partition (h={part.h})")
    return i


def table_report(
    states: dict[float, NodalState],
    sample_xs: list[float],
    exact_fn: Callable[[float, float], float] | None,
    part: UniformPartition,
    decimals: int = 5,
) -> str:
    """Render (x, t, numerical, exact) rows as fixed-decimal text.

    Rows are grouped by x (ascending) with times ascending inside each
    group, matching the layout of the published benchmark tables.  Sample
    points must coincide with knots.
    """
    width = max(decimals + 4, 9)
    header = (
        f"{'x':>8} {'t':>8} {'numerical':>{width}}"
        + (f" {'exact':>{width}}" if exact_fn is not None else "")
    )
    lines = [header]
    for x in sorted(sample_xs):
        i = _knot_index(x, part)
        for t in sorted(states):
            row = f"{x:8.3f} {t:8.3f} {states[t].u[i]:{width}.{decimals}f}"
            if exact_fn is not None:
                row += f" {exact_fn(x, t):{width}.{decimals}f}"
            lines.append(row)
    return "\n".join(lines) + "\n"
