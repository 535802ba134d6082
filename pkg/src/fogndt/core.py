"""Per-scheme NDT pairs, serial/pipelined composition and the r-regime structure.

NDT values are plain floats; ``math.inf`` stands for an unbounded fronthaul
delay (zero fronthaul rate with a nonzero load).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

CACHE_TOL = 1e-12


class ConfigError(ValueError):
    """Invalid network configuration."""


class CachePointError(ValueError):
    """A scheme was evaluated away from the cache fraction it is defined at."""

    def __init__(self, scheme: "Scheme", required: float, got: float):
        self.scheme = scheme
        self.required = required
        self.got = got
        super().__init__(
            f"scheme {scheme.value} is defined only at mu={required:.12g}, got mu={got:.12g}"
        )


class TimeShareError(ValueError):
    """Bad anchors or target cache fraction for time sharing."""


class Scheme(str, enum.Enum):
    ZF = "ZF"  # cache-aided zero forcing, mu = 1
    IA = "IA"  # cache-aided interference alignment, mu = 1/M
    CA = "CA"  # cloud-aided, any mu
    CC = "CC"  # coded multicasting, mu = 1/M


@dataclass(frozen=True)
class NetworkConfig:
    M: int
    K: int
    N: int
    mu: float
    r: float

    def __post_init__(self):
        for name in ("M", "K", "N"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise ConfigError(f"{name} must be an integer, got {v!r}")
        if self.M < 1:
            raise ConfigError(f"M must be >= 1, got {self.M}")
        if self.K < 1:
            raise ConfigError(f"K must be >= 1, got {self.K}")
        if self.N < self.K:
            raise ConfigError(f"N must be >= K, got N={self.N}, K={self.K}")
        if not (0.0 <= self.mu <= 1.0):
            raise ConfigError(f"mu must lie in [0, 1], got {self.mu}")
        if not (self.r >= 0.0) or math.isnan(self.r):
            raise ConfigError(f"r must be >= 0, got {self.r}")

    @property
    def min_mk(self) -> int:
        return min(self.M, self.K)

    @property
    def max_mk(self) -> int:
        return max(self.M, self.K)

    def at(self, *, mu: float | None = None, r: float | None = None) -> "NetworkConfig":
        return NetworkConfig(
            self.M, self.K, self.N, self.mu if mu is None else mu, self.r if r is None else r
        )


@dataclass(frozen=True)
class NdtPair:
    delta_f: float
    delta_e: float

    def __post_init__(self):
        if not (self.delta_f >= 0 and self.delta_e >= 0):
            raise ValueError(f"NDT components must be >= 0, got {self}")


@dataclass(frozen=True)
class RegimeThresholds:
    r1: float
    r2: float
    r3: float


def ratio(num: float, den: float) -> float:
    """num/den for a nonnegative load over a nonnegative rate; x/0 is inf, 0/0 is 0."""
    if num == 0:
        return 0.0
    if den == 0:
        return math.inf
    return num / den


def scheme_cache_point(scheme: Scheme, M: int) -> float | None:
    """Cache fraction the scheme is defined at (None: any)."""
    if scheme is Scheme.ZF:
        return 1.0
    if scheme in (Scheme.IA, Scheme.CC):
        return 1.0 / M
    return None


def scheme_ndt(scheme: Scheme, cfg: NetworkConfig) -> NdtPair:
    scheme = Scheme(scheme)
    required = scheme_cache_point(scheme, cfg.M)
    if required is not None and abs(cfg.mu - required) > CACHE_TOL:
        raise CachePointError(scheme, required, cfg.mu)

    M, K, r = cfg.M, cfg.K, cfg.r
    edge_zf = K / cfg.min_mk
    if scheme is Scheme.ZF:
        return NdtPair(0.0, edge_zf)
    if scheme is Scheme.IA:
        return NdtPair(0.0, (M + K - 1) / M)
    if scheme is Scheme.CA:
        return NdtPair(ratio(K, r), edge_zf)
    # XOR chains of adjacent subfiles: K(M-1) messages of L/M bits each
    return NdtPair(ratio(K * (M - 1), M * r), edge_zf)


def pipelined_ndt(pair: NdtPair) -> float:
    return max(pair.delta_e, pair.delta_f)


def serial_ndt(pair: NdtPair) -> float:
    return pair.delta_e + pair.delta_f


def time_share(
    delta1: float, mu1: float, delta2: float, mu2: float, mu: float
) -> tuple[float, float]:
    """Run policy 1 for a fraction alpha of the time and policy 2 for the rest.

    Returns ``(alpha, delta)`` with ``mu = alpha*mu1 + (1-alpha)*mu2`` and
    ``delta = alpha*delta1 + (1-alpha)*delta2``. A zero-weight anchor does not
    contribute, even if its NDT is infinite.
    """
    if mu1 == mu2:
        raise TimeShareError(f"anchors share the same cache fraction mu={mu1}")
    lo, hi = min(mu1, mu2), max(mu1, mu2)
    if not (lo - CACHE_TOL <= mu <= hi + CACHE_TOL):
        raise TimeShareError(f"mu={mu} outside the anchor interval [{lo}, {hi}]")

    alpha = (mu - mu2) / (mu1 - mu2)
    alpha = min(1.0, max(0.0, alpha))
    if alpha == 1.0:
        return alpha, delta1
    if alpha == 0.0:
        return alpha, delta2
    return alpha, alpha * delta1 + (1.0 - alpha) * delta2


def regime_thresholds(cfg: NetworkConfig) -> RegimeThresholds:
    M, K = cfg.M, cfg.K
    m = min(M, K)
    return RegimeThresholds(
        r1=K * (M - 1) / (M + K - 1),
        r2=(M - 1) * m / M,
        r3=float(m),
    )


BRANCHES = ("E_IA", "F_CC", "E_CC", "E_CA")
_BRANCH_SCHEME = {"E_IA": Scheme.IA, "F_CC": Scheme.CC, "E_CC": Scheme.CC, "E_CA": Scheme.CA}


def best_pipelined_at_cache_one_over_m(cfg: NetworkConfig) -> tuple[Scheme, str, float]:
    """Best pipelined scheme among IA, CC and CA when each EN caches 1/M of the library.

    The value is the minimum of the three pipelined NDTs. The branch label is
    picked by the r-interval, with breakpoints going to the lower interval.
    Above r3 coded multicasting and cloud-aided delivery tie at K/min{M,K};
    the label is then E_CA.
    """
    if cfg.M < 2:
        raise ConfigError("best pipelined scheme at mu=1/M needs M >= 2")
    if abs(cfg.mu - 1.0 / cfg.M) > CACHE_TOL:
        raise CachePointError(Scheme.CC, 1.0 / cfg.M, cfg.mu)

    values = {s: pipelined_ndt(scheme_ndt(s, cfg)) for s in (Scheme.IA, Scheme.CC, Scheme.CA)}
    best = min(values.values())

    th = regime_thresholds(cfg)
    if cfg.r <= th.r1:
        branch = "E_IA"
    elif cfg.r <= th.r2:
        branch = "F_CC"
    elif cfg.r <= th.r3:
        branch = "E_CC"
    else:
        branch = "E_CA"
    scheme = _BRANCH_SCHEME[branch]
    if not (values[scheme] == best or math.isclose(values[scheme], best, rel_tol=1e-12)):
        raise RuntimeError(f"{scheme.value} does not attain the minimum in branch {branch}: {values}")
    return scheme, branch, best
