"""Achievable NDT over all (mu, r): closed forms and the time-sharing construction behind them."""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    NetworkConfig,
    Scheme,
    pipelined_ndt,
    ratio,
    regime_thresholds,
    scheme_ndt,
    time_share,
)

REGIMES = ("LOW", "MID_I", "MID_II", "HIGH")

# scheme used at the mu = 1/M anchor in each regime
_ANCHOR_SCHEME = {"LOW": Scheme.IA, "MID_I": Scheme.CC, "MID_II": Scheme.CC}


@dataclass(frozen=True)
class DeliveryPlan:
    anchor1: tuple[Scheme, float]
    anchor2: tuple[Scheme, float]
    alpha: float
    regime: str
    value: float
    degenerate: bool = False  # M = 1: plain ZF/CA sharing

    @property
    def mu(self) -> float:
        return self.alpha * self.anchor1[1] + (1.0 - self.alpha) * self.anchor2[1]

    def to_dict(self) -> dict:
        return {
            "anchor1": {"scheme": self.anchor1[0].value, "mu": self.anchor1[1]},
            "anchor2": {"scheme": self.anchor2[0].value, "mu": self.anchor2[1]},
            "alpha": self.alpha,
            "regime": self.regime,
            "value": self.value,
            "degenerate": self.degenerate,
        }


def regime_of(cfg: NetworkConfig) -> str:
    th = regime_thresholds(cfg)
    if cfg.r <= th.r1:
        return "LOW"
    if cfg.r <= th.r2:
        return "MID_I"
    if cfg.r <= th.r3:
        return "MID_II"
    return "HIGH"


def _small_cache(cfg: NetworkConfig) -> bool:
    return cfg.mu * cfg.M <= 1.0


def achievable_ndt(cfg: NetworkConfig) -> float:
    M, K, mu, r = cfg.M, cfg.K, cfg.mu, cfg.r
    lo, hi = cfg.min_mk, cfg.max_mk

    if M == 1:
        return _degenerate_closed_form(cfg)

    regime = regime_of(cfg)
    if regime == "HIGH":
        return K / lo

    small = _small_cache(cfg)
    # uncached fraction, fetched over the fronthaul at rate r
    uncached = max(0.0, 1.0 - mu * M)
    if regime == "LOW":
        if small:
            return mu * (M + K - 1) + ratio(K * uncached, r)
        return (M + K - 1 - mu * (lo - 1) - K / lo) / (M - 1)
    if regime == "MID_I":
        if small:
            return ratio(K * (1.0 - mu), r)
        return K * (mu * M - 1) / ((M - 1) * lo) + ratio(K * (1.0 - mu), r)
    if small:
        return mu * hi + ratio(K * uncached, r)
    return K / lo


def _degenerate_closed_form(cfg: NetworkConfig) -> float:
    K, mu, r = cfg.K, cfg.mu, cfg.r
    cloud = max(float(K), ratio(K, r))
    if mu == 1.0:
        return float(K)
    if mu == 0.0:
        return cloud
    return mu * K + (1.0 - mu) * cloud


def _pipelined_at(scheme: Scheme, cfg: NetworkConfig, mu: float) -> float:
    return pipelined_ndt(scheme_ndt(scheme, cfg.at(mu=mu)))


def achievable_plan(cfg: NetworkConfig) -> DeliveryPlan:
    """Construct the achieving policy by time sharing two pipelined anchor schemes."""
    M, mu = cfg.M, cfg.mu
    regime = regime_of(cfg)

    if M == 1:
        a1, a2 = (Scheme.ZF, 1.0), (Scheme.CA, 0.0)
        degenerate = True
    elif regime == "HIGH":
        a1 = a2 = (Scheme.CA, mu)
        value = _pipelined_at(Scheme.CA, cfg, mu)
        return DeliveryPlan(a1, a2, 1.0, regime, value)
    else:
        a1 = (_ANCHOR_SCHEME[regime], 1.0 / M)
        a2 = (Scheme.CA, 0.0) if _small_cache(cfg) else (Scheme.ZF, 1.0)
        degenerate = False

    d1 = _pipelined_at(a1[0], cfg, a1[1])
    d2 = _pipelined_at(a2[0], cfg, a2[1])
    alpha, value = time_share(d1, a1[1], d2, a2[1], mu)
    return DeliveryPlan(a1, a2, alpha, regime, value, degenerate)
