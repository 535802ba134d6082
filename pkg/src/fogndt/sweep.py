"""Parameter grids for sweeps and audits."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Sequence, Union

from .core import ConfigError, NetworkConfig

QUANTITIES = ("achievable", "lower_bound", "gap", "per_scheme")
DEFAULT_QUANTITIES = ("achievable", "lower_bound", "gap")

# the literal "1/M" is resolved per M so the branch point is hit exactly
MuValue = Union[float, str]


def frange(start: float, stop: float, step: float) -> list[float]:
    """Inclusive arithmetic range, rounded to 12 decimals to keep grid points clean."""
    if step <= 0:
        raise ConfigError(f"step must be > 0, got {step}")
    if stop < start:
        raise ConfigError(f"stop {stop} is below start {start}")
    n = int(round((stop - start) / step))
    if start + n * step > stop + 1e-9:
        n -= 1
    return [round(start + i * step, 12) for i in range(n + 1)]


def parse_values(text: str, *, integer: bool = False, allow_one_over_m: bool = False) -> list:
    """Parse ``a,b,c`` or ``start:stop:step`` (inclusive)."""
    text = text.strip()
    if not text:
        raise ConfigError("empty value list")
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ConfigError(f"range must be start:stop:step, got {text!r}")
        start, stop, step = (float(p) for p in parts)
        vals = frange(start, stop, step)
        return [int(round(v)) for v in vals] if integer else vals
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if allow_one_over_m and tok == "1/M":
            out.append("1/M")
        elif integer:
            out.append(int(tok))
        else:
            out.append(float(tok))
    return out


def resolve_mu(mu: MuValue, M: int) -> float:
    if mu == "1/M":
        return 1.0 / M
    if isinstance(mu, str):
        raise ConfigError(f"unknown mu literal {mu!r}")
    return float(mu)


@dataclass
class SweepSpec:
    M_values: Sequence[int]
    K_values: Sequence[int]
    mu_values: Sequence[MuValue]
    r_values: Sequence[float]
    quantities: Sequence[str] = DEFAULT_QUANTITIES
    # drop r values above r_cap * min{M, K} for each (M, K)
    r_cap: float | None = None

    def __post_init__(self):
        for name in ("M_values", "K_values", "mu_values", "r_values"):
            if not len(getattr(self, name)):
                raise ConfigError(f"{name} is empty")
        bad = set(self.quantities) - set(QUANTITIES)
        if bad:
            raise ConfigError(f"unknown quantities {sorted(bad)}")
        if self.r_cap is not None and self.r_cap <= 0:
            raise ConfigError(f"r_cap must be > 0, got {self.r_cap}")
        # validates every value range up front
        for _ in self.points():
            pass

    def points(self) -> Iterator[NetworkConfig]:
        """Grid points in lexicographic (M, K, mu, r) order, with N = K."""
        for M, K in itertools.product(sorted(self.M_values), sorted(self.K_values)):
            mus = sorted(resolve_mu(mu, M) for mu in self.mu_values)
            rs = sorted(self.r_values)
            if self.r_cap is not None:
                cap = self.r_cap * min(M, K) + 1e-9
                rs = [r for r in rs if r <= cap]
            for mu, r in itertools.product(mus, rs):
                yield NetworkConfig(int(M), int(K), int(K), mu, float(r))

    @classmethod
    def from_dict(cls, d: dict) -> "SweepSpec":
        def values(key, **kw):
            v = d[key]
            if isinstance(v, str):
                return parse_values(v, **kw)
            if isinstance(v, dict):
                vals = frange(float(v["start"]), float(v["stop"]), float(v["step"]))
                return [int(round(x)) for x in vals] if kw.get("integer") else vals
            return list(v)

        try:
            return cls(
                M_values=values("M_values", integer=True),
                K_values=values("K_values", integer=True),
                mu_values=values("mu_values", allow_one_over_m=True),
                r_values=values("r_values"),
                quantities=tuple(d.get("quantities", DEFAULT_QUANTITIES)),
                r_cap=d.get("r_cap"),
            )
        except KeyError as e:
            raise ConfigError(f"missing sweep field {e.args[0]}") from None

    @classmethod
    def from_json(cls, path: str | Path) -> "SweepSpec":
        return cls.from_dict(json.loads(Path(path).read_text()))


def standard_grid() -> SweepSpec:
    """M, K in 2..6, mu in 0..1 step 0.05, r in 0.1..2*min{M,K} step 0.1."""
    return SweepSpec(
        M_values=range(2, 7),
        K_values=range(2, 7),
        mu_values=frange(0.0, 1.0, 0.05),
        r_values=frange(0.1, 12.0, 0.1),
        r_cap=2.0,
    )


def figure1_grid() -> SweepSpec:
    return SweepSpec([3], [2, 3, 4], ["1/M"], frange(0.25, 4.0, 0.25))


def figure2_grid() -> SweepSpec:
    return SweepSpec([2], [2, 3, 4], frange(0.0, 1.0, 0.05), [1.0])
