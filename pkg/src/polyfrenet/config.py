"""Numeric tolerances and their overrides (environment and key=value files)."""
from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

ENV_VAR = "POLYFRENET_TOL"


@dataclass(frozen=True)
class Tolerances:
    ode_rel: float = 1e-10
    ode_abs: float = 1e-12
    drift_max: float = 1e-8
    defect_max: float = 1e-8
    residual_max: float = 1e-6

    def updated(self, **kw) -> "Tolerances":
        known = {f.name for f in fields(self)}
        bad = set(kw) - known
        if bad:
            raise ValueError(f"unknown tolerance keys: {sorted(bad)}")
        return replace(self, **{k: float(v) for k, v in kw.items()})

    @classmethod
    def from_env(cls, base: "Tolerances | None" = None) -> "Tolerances":
        """Apply ``POLYFRENET_TOL="ode_rel=1e-10,drift_max=1e-8"`` on top of ``base``."""
        base = base or cls()
        text = os.environ.get(ENV_VAR, "").strip()
        if not text:
            return base
        return base.updated(**parse_pairs(text.replace(",", "\n")))


def parse_pairs(text: str) -> dict:
    """Parse ``key=value`` lines; blank lines and ``#`` comments are skipped."""
    out = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"expected key=value, got {raw!r}")
        key, value = line.split("=", 1)
        out[key.strip().replace("-", "_")] = value.strip()
    return out
