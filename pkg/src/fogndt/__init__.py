"""Normalized delivery time of fog-RAN delivery schemes with multicast fronthaul."""

from .bounds import BoundBreakdown, gap_audit, lower_bound, lower_bound_term, optimality_gap
from .core import (
    CachePointError,
    ConfigError,
    NdtPair,
    NetworkConfig,
    RegimeThresholds,
    Scheme,
    TimeShareError,
    best_pipelined_at_cache_one_over_m,
    pipelined_ndt,
    regime_thresholds,
    scheme_ndt,
    serial_ndt,
    time_share,
)
from .envelope import DeliveryPlan, achievable_ndt, achievable_plan, regime_of
from .multicast import DeliveryReport, Library, run_delivery
from .sweep import SweepSpec, standard_grid

__all__ = [
    "BoundBreakdown", "CachePointError", "ConfigError", "DeliveryPlan", "DeliveryReport",
    "Library", "NdtPair", "NetworkConfig", "RegimeThresholds", "Scheme", "SweepSpec",
    "TimeShareError", "achievable_ndt", "achievable_plan", "best_pipelined_at_cache_one_over_m",
    "gap_audit", "lower_bound", "lower_bound_term", "optimality_gap", "pipelined_ndt",
    "regime_of", "regime_thresholds", "run_delivery", "scheme_ndt", "serial_ndt",
    "standard_grid", "time_share",
]
