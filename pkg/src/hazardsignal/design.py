"""Information design over signal quality beta.

Accident probability is single-peaked in beta (weakly increasing then
weakly decreasing), so its minimum sits at an endpoint and two solves
settle the question. Social cost has no such global structure: full
display is optimal unless some quality lands the game in the NCVR region,
where cost can move against beta; there we grid-sample and refine the best
cell by golden section.
"""

from __future__ import annotations

import dataclasses
import enum
import math

from .model import InputError, SignalingGame
from .equilibrium import Region, solve_equilibrium

__all__ = [
    "DesignObjective",
    "SweepRecord",
    "DesignResult",
    "with_beta",
    "sweep_beta",
    "optimal_beta_accidents",
    "optimal_beta_social",
    "single_peaked",
]

#: beta-interval width at which golden-section refinement stops
REFINE_BETA_TOL = 1e-6

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
_INV_PHI_SQ = (3.0 - math.sqrt(5.0)) / 2.0


class DesignObjective(enum.Enum):
    ACCIDENT_PROBABILITY = "accident_probability"
    SOCIAL_COST = "social_cost"


@dataclasses.dataclass(frozen=True)
class SweepRecord:
    """One fully solved beta sample."""

    beta: float
    region: Region
    P: float
    S: float
    x_n: float
    x_vu: float
    Q: float
    posterior: float


@dataclasses.dataclass(frozen=True)
class DesignResult:
    """Optimizer output plus the two endpoint values for context."""

    objective: DesignObjective
    beta_star: float
    value_at_star: float
    endpoint_comparison: tuple[float, float]


def with_beta(game: SignalingGame, beta: float) -> SignalingGame:
    """Same game, different signal quality (revalidated)."""
    return dataclasses.replace(game, beta=float(beta))


def sweep_beta(
    game: SignalingGame, grid_n: int, lo: float = 0.0, hi: float = 1.0
) -> list[SweepRecord]:
    """Solve grid_n evenly spaced signal qualities in [lo, hi], in order.

    The game's own beta is ignored; each sample is solved independently.
    """
    if grid_n < 2:
        raise InputError(f"sweep needs at least two grid points, got {grid_n!r}")
    if not 0.0 <= lo <= hi <= 1.0:
        raise InputError(f"sweep range [{lo!r}, {hi!r}] must be ordered within [0, 1]")
    records = []
    for i in range(grid_n):
        beta = lo + (hi - lo) * i / (grid_n - 1)
        rep = solve_equilibrium(with_beta(game, beta))
        records.append(
            SweepRecord(
                beta=beta,
                region=rep.region,
                P=rep.P,
                S=rep.social_cost,
                x_n=rep.x_ne.x_n,
                x_vu=rep.x_ne.x_vu,
                Q=rep.Q,
                posterior=rep.posterior,
            )
        )
    return records


def optimal_beta_accidents(game: SignalingGame) -> DesignResult:
    """Minimize equilibrium accident probability over beta.

    Single-peakedness reduces the search to the endpoints; ties go to
    beta = 0, the cheaper policy.
    """
    p0 = solve_equilibrium(with_beta(game, 0.0)).P
    p1 = solve_equilibrium(with_beta(game, 1.0)).P
    if p0 <= p1:
        return DesignResult(DesignObjective.ACCIDENT_PROBABILITY, 0.0, p0, (p0, p1))
    return DesignResult(DesignObjective.ACCIDENT_PROBABILITY, 1.0, p1, (p0, p1))


def optimal_beta_social(game: SignalingGame, grid_n: int = 101) -> DesignResult:
    """Minimize equilibrium social cost over beta.

    Fast path: if no sampled quality classifies as NCVR, cost is
    nonincreasing in beta everywhere sampled and beta = 1 is optimal.
    Otherwise take the grid argmin (ties toward smaller beta) and refine
    inside its bracketing cell by golden section; if refinement fails to
    improve, the grid best stands.
    """
    records = sweep_beta(game, grid_n)
    endpoints = (records[0].S, records[-1].S)
    if not any(rec.region is Region.NCVR for rec in records):
        return DesignResult(DesignObjective.SOCIAL_COST, 1.0, records[-1].S, endpoints)

    best_i = 0
    for i, rec in enumerate(records):
        if rec.S < records[best_i].S:
            best_i = i
    best = records[best_i]
    lo = records[max(best_i - 1, 0)].beta
    hi = records[min(best_i + 1, grid_n - 1)].beta
    refined_beta, refined_s = _golden_min(
        lambda b: solve_equilibrium(with_beta(game, b)).social_cost,
        lo,
        hi,
        REFINE_BETA_TOL,
    )
    if refined_s < best.S:
        return DesignResult(DesignObjective.SOCIAL_COST, refined_beta, refined_s, endpoints)
    return DesignResult(DesignObjective.SOCIAL_COST, best.beta, best.S, endpoints)


def _golden_min(f, a: float, b: float, tol: float) -> tuple[float, float]:
    """Golden-section search on [a, b]; returns the best probed point.

    Assumes a single local minimum in the interval; endpoint evaluations
    guard the degenerate case where the minimum sits on the boundary.
    """
    best_x, best_f = a, f(a)
    fb = f(b)
    if fb < best_f:
        best_x, best_f = b, fb
    h = b - a
    if h <= tol:
        return best_x, best_f
    steps = max(int(math.ceil(math.log(tol / h) / math.log(_INV_PHI))), 1)
    c = a + _INV_PHI_SQ * h
    d = a + _INV_PHI * h
    yc, yd = f(c), f(d)
    for _ in range(steps - 1):
        if yc < yd:
            b, d, yd = d, c, yc
            h *= _INV_PHI
            c = a + _INV_PHI_SQ * h
            yc = f(c)
        else:
            a, c, yc = c, d, yd
            h *= _INV_PHI
            d = a + _INV_PHI * h
            yd = f(d)
    for x, fx in ((c, yc), (d, yd)):
        if fx < best_f:
            best_x, best_f = x, fx
    return best_x, best_f


def single_peaked(values, tol: float = 1e-9) -> bool:
    """True when the sequence rises to its maximum and falls afterwards,
    allowing tol of slack per comparison."""
    values = list(values)
    if len(values) < 2:
        return True
    peak = max(range(len(values)), key=values.__getitem__)
    rising = all(values[i + 1] >= values[i] - tol for i in range(peak))
    falling = all(values[i + 1] <= values[i] + tol for i in range(peak, len(values) - 1))
    return rising and falling
