"""Tolerance configuration shared by every numerical routine.

All geometric predicates in this package are tolerance-explicit: nothing is
compared with ``==`` on floats.  The four knobs below cover the distinct
failure modes (orthonormality drift, rank decisions, geometric residuals,
and certified-supremum widths).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

from .errors import SchemaError

ENV_TOL = "HYPERCONVEX_TOL"


@dataclass(frozen=True)
class ToleranceConfig:
    """Numeric tolerances.

    tau_orth : max deviation of a stored basis from exact orthonormality
    tau_rank : relative singular-value cutoff for rank decisions
    tau_geom : geometric residual tolerance (projection certificates,
               set membership, subspace equality via the gap)
    eps_sup  : default target width for certified supremum enclosures
    """

    tau_orth: float = 1e-9
    tau_rank: float = 1e-8
    tau_geom: float = 1e-9
    eps_sup: float = 1e-3

    def __post_init__(self) -> None:
        for name in ("tau_orth", "tau_rank", "tau_geom", "eps_sup"):
            v = getattr(self, name)
            if not (v > 0.0):
                raise ValueError(f"{name} must be positive, got {v!r}")


def default_tolerances() -> ToleranceConfig:
    """Default config; HYPERCONVEX_TOL (a float) overrides tau_geom."""
    cfg = ToleranceConfig()
    raw = os.environ.get(ENV_TOL)
    if raw is not None:
        try:
            cfg = replace(cfg, tau_geom=float(raw))
        except ValueError as exc:
            raise SchemaError(f"{ENV_TOL} must be a positive float, got {raw!r}") from exc
    return cfg


def resolve(tol: ToleranceConfig | None) -> ToleranceConfig:
    return tol if tol is not None else default_tolerances()
