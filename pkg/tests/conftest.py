"""Shared game factories for the test suite."""

import math
import random
from pathlib import Path

from hazardsignal import (
    AffineHazard,
    ConstantReach,
    LinearReach,
    PowerHazard,
    SignalingGame,
)

REPO_ROOT = Path(__file__).resolve().parents[1]
SCENARIO_DIR = REPO_ROOT / "scenarios"


def adoption_backfire_game(beta: float) -> SignalingGame:
    """High adoption, moderate stakes; accidents peak at interior beta."""
    return SignalingGame(
        beta=beta, y=0.9, r=3.0, hazard=AffineHazard(0.3, 0.1), signal_reach=LinearReach(0.9)
    )


def steep_hazard_game(beta: float) -> SignalingGame:
    """Steep hazard and high stakes; zero display quality is optimal."""
    return SignalingGame(
        beta=beta, y=0.7, r=20.0, hazard=AffineHazard(0.8, 0.1), signal_reach=LinearReach(0.9)
    )


def cost_reversal_game(beta: float) -> SignalingGame:
    """Sparse adoption, near-indifferent stakes; social cost prefers beta < 1."""
    return SignalingGame(
        beta=beta, y=0.07, r=1.001, hazard=PowerHazard(0.25), signal_reach=LinearReach(0.9)
    )


def all_reckless_game(beta: float) -> SignalingGame:
    """Shallow hazard, low stakes; everyone drives recklessly (NRVR)."""
    return SignalingGame(
        beta=beta, y=0.9, r=1.5, hazard=AffineHazard(0.2, 0.1), signal_reach=LinearReach(0.9)
    )


def random_game(rng: random.Random, beta: float | None = None) -> SignalingGame:
    """A random valid game: affine or power hazard, linear or constant reach.

    Slopes stay off the extremes so indifference points remain numerically
    well conditioned.
    """
    if rng.random() < 0.5:
        slope = rng.uniform(0.15, 0.85)
        intercept = rng.uniform(0.01, min(0.5, 0.99 - slope))
        hazard = AffineHazard(slope, intercept)
    else:
        hazard = PowerHazard(math.exp(rng.uniform(math.log(0.3), math.log(3.0))))
    if rng.random() < 0.8:
        reach = LinearReach(rng.uniform(0.1, 1.0))
    else:
        reach = ConstantReach(rng.uniform(0.1, 1.0))
    if beta is None:
        beta = rng.choice([0.0, 1.0]) if rng.random() < 0.1 else rng.random()
    return SignalingGame(
        beta=beta,
        y=rng.uniform(0.05, 0.95),
        r=rng.uniform(1.01, 25.0),
        hazard=hazard,
        signal_reach=reach,
    )
