"""Independent equilibrium verification straight from the cost definitions.

Nothing in this module consults the region classification or the
closed-form solutions: membership is decided purely by the six
equilibrium implications (any action in use must be weakly cost-minimal,
with slack eps) evaluated at a profile's own consistent accident
probability. That keeps the brute-force search and best-response dynamics
usable as cross-checks of the analytic solver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import (
    BehaviorProfile,
    InputError,
    SignalingGame,
    validate_profile,
)
from .consistency import group_costs, solve_profile_P

__all__ = [
    "ConditionStatus",
    "ConditionCheck",
    "EpsilonEquilibriumSet",
    "BestResponsePath",
    "check_equilibrium_conditions",
    "epsilon_equilibria",
    "best_response_dynamics",
]

#: cost-gap band treated as exact indifference by the best-response map
TIE_EPS = 1e-9

#: a profile within this L-inf distance of its best response counts as settled
CONVERGENCE_TOL = 1e-9


@dataclass(frozen=True)
class ConditionStatus:
    """One equilibrium implication.

    active: the antecedent mass condition holds (some of the group uses
    the action). margin: cost advantage of that action over the
    alternative; the implication is ok when inactive or margin >= -eps.
    """

    name: str
    active: bool
    ok: bool
    margin: float


@dataclass(frozen=True)
class ConditionCheck:
    """Joint verdict over the six implications for one profile."""

    ok: bool
    conditions: tuple[ConditionStatus, ...]
    P: float
    posterior: float
    epsilon: float

    def failures(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.conditions if not c.ok)

    def binding(self) -> tuple[str, ...]:
        """Conditions that hold with no slack to spare (near indifference)."""
        return tuple(
            c.name for c in self.conditions if c.active and abs(c.margin) <= self.epsilon
        )


def check_equilibrium_conditions(
    game: SignalingGame, profile: BehaviorProfile, eps: float
) -> ConditionCheck:
    """Test the six equilibrium implications at the profile's own fixed point."""
    if not eps >= 0:
        raise InputError(f"eps must be nonnegative, got {eps!r}")
    res = solve_profile_P(game, profile)
    costs = group_costs(game, res.P, res.posterior_no_signal)
    y = game.y
    checks = (
        ("n_careful_in_use", profile.x_n < 1.0 - y, costs.n_reckless - costs.n_careful),
        ("n_reckless_in_use", profile.x_n > 0.0, costs.n_careful - costs.n_reckless),
        ("vu_careful_in_use", profile.x_vu < y, costs.vu_reckless - costs.vu_careful),
        ("vu_reckless_in_use", profile.x_vu > 0.0, costs.vu_careful - costs.vu_reckless),
        ("vs_careful_in_use", profile.x_vs < y, costs.vs_reckless - costs.vs_careful),
        ("vs_reckless_in_use", profile.x_vs > 0.0, costs.vs_careful - costs.vs_reckless),
    )
    conditions = tuple(
        ConditionStatus(name, active, (not active) or margin >= -eps, margin)
        for name, active, margin in checks
    )
    return ConditionCheck(
        ok=all(c.ok for c in conditions),
        conditions=conditions,
        P=res.P,
        posterior=res.posterior_no_signal,
        epsilon=eps,
    )


@dataclass(frozen=True)
class EpsilonEquilibriumSet:
    """Profiles surviving the eps-equilibrium scan, sorted by (x_n, x_vu)."""

    epsilon: float
    grid_step: float
    members: tuple[BehaviorProfile, ...]


def epsilon_equilibria(
    game: SignalingGame, grid_step: float, eps: float
) -> EpsilonEquilibriumSet:
    """Scan behavior profiles for eps-equilibria.

    Candidates are the uniform lattice over [0, 1-y] x [0, y] (always
    containing the exact corners) plus, along every lattice row and
    column, the point where the moving group's cost gap crosses zero,
    located by bisection on the gap itself. Interior indifference bands
    are generically narrower than any affordable lattice spacing, so a
    pure lattice scan would come back empty for games whose equilibrium
    is interior even though one always exists; the crossing candidates
    close that hole without consulting any closed form.

    x_vs > 0 is excluded analytically: signaled drivers strictly prefer
    caution (margin r > eps for any sane eps), so such profiles can never
    pass. Equal-cost ties keep candidates in place, hence corners matter.
    """
    if not eps > 0:
        raise InputError(f"eps must be positive, got {eps!r}")
    if not grid_step > 0:
        raise InputError(f"grid_step must be positive, got {grid_step!r}")
    y = game.y
    if 0.0 < y < 1.0 and grid_step > min(y, 1.0 - y) + 1e-12:
        raise InputError(
            f"grid_step {grid_step!r} exceeds min(y, 1-y) = {min(y, 1.0 - y):.12g}; "
            "the lattice would skip an entire group"
        )

    xn_axis = _axis(1.0 - y, grid_step)
    xvu_axis = _axis(y, grid_step)
    grid_n, grid_vu = np.meshgrid(xn_axis, xvu_axis, indexing="ij")
    cand_n = [grid_n.ravel()]
    cand_vu = [grid_vu.ravel()]

    cross_n, along_vu = _gap_crossings(game, moving="n", fixed_axis=xvu_axis)
    cand_n.append(cross_n)
    cand_vu.append(along_vu)
    along_n, cross_vu = _gap_crossings(game, moving="vu", fixed_axis=xn_axis)
    cand_n.append(along_n)
    cand_vu.append(cross_vu)

    xs = np.concatenate(cand_n)
    vus = np.concatenate(cand_vu)
    P = _consistent_P(game, xs, vus)
    rate = game.signal_rate
    posterior = _no_signal_posterior(P, rate)
    gap_n = 1.0 - (1.0 + game.r) * P
    gap_vu = 1.0 - (1.0 + game.r) * posterior
    ok = (
        (~(xs < 1.0 - y) | (gap_n <= eps))
        & (~(xs > 0.0) | (gap_n >= -eps))
        & (~(vus < y) | (gap_vu <= eps))
        & (~(vus > 0.0) | (gap_vu >= -eps))
    )
    points = np.column_stack([xs[ok], vus[ok]])
    if len(points):
        points = np.unique(points, axis=0)
    members = tuple(BehaviorProfile(float(a), float(b), 0.0) for a, b in points)
    return EpsilonEquilibriumSet(epsilon=eps, grid_step=grid_step, members=members)


@dataclass(frozen=True)
class BestResponsePath:
    """Damped best-response trajectory and its terminal diagnosis."""

    trajectory: tuple[BehaviorProfile, ...]
    converged: bool
    final_check: ConditionCheck


def best_response_dynamics(
    game: SignalingGame,
    start: BehaviorProfile,
    steps: int,
    rate: float,
    check_eps: float = 1e-6,
) -> BestResponsePath:
    """Iterate x <- x + rate * (BR(x) - x), recording every iterate.

    BR sends each group fully toward its strictly cheaper action and holds
    it in place inside the TIE_EPS indifference band. Once an iterate sits
    within CONVERGENCE_TOL of its own best response, the exact limit point
    is recorded as the final iterate (damping alone only approaches
    corners asymptotically). This is a verification aid only; the model
    itself prescribes no adjustment process. Non-convergence within the
    step budget is reported via the converged flag, not an error.
    """
    if not 0.0 < rate <= 1.0:
        raise InputError(f"rate must lie in (0, 1], got {rate!r}")
    if steps < 0:
        raise InputError(f"steps must be nonnegative, got {steps!r}")
    validate_profile(game, start)
    x = start
    trajectory = [start]
    converged = False
    for _ in range(steps):
        target = _best_response(game, x)
        move = _dist(target, x)
        if move <= CONVERGENCE_TOL:
            converged = True
            if move > 0.0:
                x = target
                trajectory.append(x)
            break
        x = BehaviorProfile(
            x.x_n + rate * (target.x_n - x.x_n),
            x.x_vu + rate * (target.x_vu - x.x_vu),
            x.x_vs + rate * (target.x_vs - x.x_vs),
        )
        trajectory.append(x)
    else:
        converged = _dist(_best_response(game, x), x) <= CONVERGENCE_TOL
    return BestResponsePath(
        trajectory=tuple(trajectory),
        converged=converged,
        final_check=check_equilibrium_conditions(game, trajectory[-1], check_eps),
    )


def _dist(a: BehaviorProfile, b: BehaviorProfile) -> float:
    return max(abs(a.x_n - b.x_n), abs(a.x_vu - b.x_vu), abs(a.x_vs - b.x_vs))


def _best_response(game: SignalingGame, profile: BehaviorProfile) -> BehaviorProfile:
    res = solve_profile_P(game, profile)
    costs = group_costs(game, res.P, res.posterior_no_signal)
    y = game.y
    if costs.n_careful < costs.n_reckless - TIE_EPS:
        t_n = 0.0
    elif costs.n_reckless < costs.n_careful - TIE_EPS:
        t_n = 1.0 - y
    else:
        t_n = profile.x_n
    if costs.vu_careful < costs.vu_reckless - TIE_EPS:
        t_vu = 0.0
    elif costs.vu_reckless < costs.vu_careful - TIE_EPS:
        t_vu = y
    else:
        t_vu = profile.x_vu
    return BehaviorProfile(t_n, t_vu, 0.0)  # caution strictly dominates when signaled


def _axis(bound: float, step: float) -> np.ndarray:
    """Lattice 0, step, 2*step, ... with the exact bound as the last point."""
    if bound <= 0.0:
        return np.array([0.0])
    n = int(math.floor(bound / step + 1e-9))
    pts = step * np.arange(n + 1, dtype=float)
    if bound - pts[-1] > 1e-12:
        pts = np.append(pts, bound)
    else:
        pts[-1] = bound
    return pts


def _consistent_P(game: SignalingGame, x_n: np.ndarray, x_vu: np.ndarray) -> np.ndarray:
    """Vectorized fixed-point bisection, same equation as solve_profile_P."""
    rate = game.signal_rate
    hazard = game.hazard
    lo = np.full_like(x_n, hazard.floor, dtype=float)
    hi = np.full_like(x_n, hazard.ceiling, dtype=float)
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        arg = np.clip(x_n + (1.0 - mid * rate) * x_vu, 0.0, 1.0)
        high = mid - hazard(arg) > 0.0
        hi = np.where(high, mid, hi)
        lo = np.where(high, lo, mid)
    return 0.5 * (lo + hi)


def _no_signal_posterior(P: np.ndarray, rate: float) -> np.ndarray:
    denom = np.maximum(1.0 - P * rate, 1e-15)
    return P * (1.0 - rate) / denom


def _gap_crossings(
    game: SignalingGame, moving: str, fixed_axis: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Zero crossings of one group's cost gap along its own mass axis.

    For each value on the other group's axis, bisect the strictly
    decreasing gap (1 - (1+r) * belief) for the moving mass where the
    group is exactly indifferent; rows/columns whose gap does not change
    sign contribute nothing (their optimum sits at a lattice corner).
    Returns aligned (x_n, x_vu) candidate arrays.

    The sign test avoids nesting a full fixed-point solve per bisection
    step: with threshold t for the group's belief, the consistency map
    F(P) = P - p(x_n + (1 - P*rate)*x_vu) is strictly increasing in P
    with root P*, so P* < t exactly when F(t) > 0, one curve evaluation.
    (For the unsignaled group the posterior is increasing in P, which
    moves its 1/(1+r) threshold to t = 1/(1 + r(1 - rate)) in P-space.)
    Crossings are only candidates; membership is still decided by the
    cost conditions at each candidate's own solved P.
    """
    y = game.y
    rate = game.signal_rate
    hazard = game.hazard
    bound = (1.0 - y) if moving == "n" else y
    empty = (np.array([]), np.array([]))
    if bound <= 0.0 or len(fixed_axis) == 0:
        return empty
    if moving == "n":
        t = 1.0 / (1.0 + game.r)
    else:
        t = 1.0 / (1.0 + game.r * (1.0 - rate))

    def gap_positive(m: np.ndarray, f: np.ndarray) -> np.ndarray:
        x_n = m if moving == "n" else f
        x_vu = f if moving == "n" else m
        arg = np.clip(x_n + (1.0 - t * rate) * x_vu, 0.0, 1.0)
        return t - hazard(arg) > 0.0

    fixed = np.asarray(fixed_axis, dtype=float)
    zeros = np.zeros_like(fixed)
    full = np.full_like(fixed, bound)
    mask = gap_positive(zeros, fixed) & ~gap_positive(full, fixed)
    if not np.any(mask):
        return empty
    fixed = fixed[mask]
    lo = np.zeros_like(fixed)
    hi = np.full_like(fixed, bound)
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        positive = gap_positive(mid, fixed)
        lo = np.where(positive, mid, lo)
        hi = np.where(positive, hi, mid)
    crossing = 0.5 * (lo + hi)
    if moving == "n":
        return crossing, fixed
    return fixed, crossing
