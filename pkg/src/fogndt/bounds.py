"""Cut-set lower bounds on the minimum NDT and the achievable-to-bound gap audit."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .core import NetworkConfig
from .envelope import achievable_ndt
from .sweep import SweepSpec

GAP_FACTOR = 3.0
GAP_TOL = 1e-9


@dataclass(frozen=True)
class BoundBreakdown:
    edge_bound: float
    cutset_terms: tuple[tuple[int, float], ...]
    best: float
    argmax_l: int | None  # None when the edge bound is strictly the largest

    def to_dict(self) -> dict:
        return {
            "edge_bound": self.edge_bound,
            "cutset_terms": [{"l": l, "value": v} for l, v in self.cutset_terms],
            "best": self.best,
            "argmax_l": self.argmax_l,
        }


def lower_bound_term(cfg: NetworkConfig, l: int) -> float:
    """Cut-set bound (K - (K-l)(M-l) mu) / (l + r), clamped at zero."""
    M, K = cfg.M, cfg.K
    if isinstance(l, bool) or not isinstance(l, int) or not (0 <= l <= min(M, K)):
        raise ValueError(f"l must be an integer in [0, {min(M, K)}], got {l!r}")
    num = K - (K - l) * (M - l) * cfg.mu
    if num <= 0:
        return 0.0
    den = l + cfg.r
    if den == 0:
        return math.inf
    return num / den


def lower_bound(cfg: NetworkConfig) -> BoundBreakdown:
    edge = cfg.K / cfg.min_mk
    terms = tuple((l, lower_bound_term(cfg, l)) for l in range(cfg.min_mk + 1))
    best_l, best_term = max(terms, key=lambda t: t[1])  # first l wins ties
    if best_term > edge:
        return BoundBreakdown(edge, terms, best_term, best_l)
    return BoundBreakdown(edge, terms, edge, None)


def optimality_gap(cfg: NetworkConfig) -> float:
    """achievable / lower bound; infinite whenever the achievable NDT is."""
    ach = achievable_ndt(cfg)
    if math.isinf(ach):
        return math.inf
    return ach / lower_bound(cfg).best


@dataclass
class GapReport:
    max_ratio: float
    argmax: NetworkConfig | None
    n_points: int
    violations: list[tuple[NetworkConfig, float]] = field(default_factory=list)
    skipped: list[NetworkConfig] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        def point(c: NetworkConfig) -> dict:
            return {"M": c.M, "K": c.K, "N": c.N, "mu": c.mu, "r": c.r}

        return {
            "max_ratio": self.max_ratio,
            "argmax": None if self.argmax is None else point(self.argmax),
            "n_points": self.n_points,
            "violations": [dict(point(c), ratio=v) for c, v in self.violations],
            "skipped": len(self.skipped),
        }


def gap_audit(grid: SweepSpec, factor: float = GAP_FACTOR, tol: float = GAP_TOL) -> GapReport:
    """Evaluate the achievable/lower-bound ratio over a grid.

    Points with an infinite achievable NDT (r = 0 and part of the library
    uncached) are skipped. Points are visited in lexicographic (M, K, mu, r)
    order and the argmax keeps the first maximiser.
    """
    points = list(grid.points())
    if not points:
        raise ValueError("empty grid")

    report = GapReport(max_ratio=-math.inf, argmax=None, n_points=len(points))
    for cfg in points:
        ratio = optimality_gap(cfg)
        if math.isinf(ratio):
            report.skipped.append(cfg)
            continue
        if ratio > report.max_ratio:
            report.max_ratio, report.argmax = ratio, cfg
        if ratio > factor + tol:
            report.violations.append((cfg, ratio))
    return report
