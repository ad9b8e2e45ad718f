"""Closed-form rate bounds for the shared radar/communications band.

All rates are in bits/s except the multiple-access pentagon, which is in
bits per channel use with noise normalized to unit variance. Estimation
rate treats each tracked target as an information channel whose input is
the Gaussian delay-process deviation and whose output is the delay
estimate; the per-observation information is the entropy gap between the
process-plus-estimation uncertainty and the estimation uncertainty alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .scenario import LinkBudget


class DegenerateLinkError(ValueError):
    """Radar link has zero received power; delay variance is unbounded."""


class MultiTargetError(ValueError):
    """Operation is defined for single-target link budgets only."""


@dataclass(frozen=True)
class RatePoint:
    """One (estimation rate, communications rate) pair in bits/s."""

    r_est: float
    r_com: float

    def __post_init__(self) -> None:
        for name, v in (("r_est", self.r_est), ("r_com", self.r_com)):
            if not math.isfinite(v) or v < 0:
                raise ValueError(f"{name} must be finite and nonnegative, got {v}")


@dataclass(frozen=True)
class RateCurve:
    """Labeled polyline of rate points."""

    label: str
    points: tuple[RatePoint, ...]

    def __post_init__(self) -> None:
        if len(self.points) == 0:
            raise ValueError("a rate curve needs at least one point")
        object.__setattr__(self, "points", tuple(self.points))


@dataclass(frozen=True)
class PentagonRegion:
    """Two-user multiple-access rate region, bits per channel use."""

    r1_max: float
    r2_max: float
    sum_max: float
    vertex_a: tuple[float, float]
    vertex_b: tuple[float, float]


def ma_pentagon(snr1: float, snr2: float) -> PentagonRegion:
    """Two-user multiple-access pentagon for unit-noise SNRs.

    The vertices are the corner points where one user is decoded first
    (treating the other as noise) and the other is decoded clean. The
    corner coordinates are computed as differences of the single-user and
    sum bounds so each vertex sum-rate equals the sum bound exactly in
    floating point.
    """
    if snr1 < 0 or snr2 < 0:
        raise ValueError("SNRs must be nonnegative")
    r1_max = math.log2(1.0 + snr1)
    r2_max = math.log2(1.0 + snr2)
    sum_max = math.log2(1.0 + snr1 + snr2)
    vertex_a = (sum_max - r2_max, r2_max)
    vertex_b = (r1_max, sum_max - r1_max)
    return PentagonRegion(
        r1_max=r1_max,
        r2_max=r2_max,
        sum_max=sum_max,
        vertex_a=vertex_a,
        vertex_b=vertex_b,
    )


def crb_delay_variance(lb: LinkBudget, target_idx: int = 0) -> float:
    """Delay-estimation variance floor for one target, in s^2.

    k_B T_temp / (gamma^2 B (TB) a^2 P_radar): thermal spectral density
    over the mean-square bandwidth times the integrated SNR factors.
    """
    a_sq = lb.a_sq[target_idx]
    if a_sq * lb.radar_power_w == 0:
        raise DegenerateLinkError(
            f"target {target_idx} has a^2*P_radar = 0; delay variance is unbounded"
        )
    return lb.kt_w_per_hz / (
        lb.gamma_sq * lb.bandwidth_hz * lb.time_bandwidth * a_sq * lb.radar_power_w
    )


def estimation_entropy(variance_s2: float) -> float:
    """Differential entropy log2(pi e sigma^2) in bits (complex-Gaussian convention)."""
    if not variance_s2 > 0:
        raise ValueError(f"variance must be positive, got {variance_s2}")
    return math.log2(math.pi * math.e * variance_s2)


def est_outer_rate(lb: LinkBudget) -> float:
    """Estimation-rate outer bound in bits/s, summed over targets.

    Per target: (entropy of process-plus-estimation error minus entropy of
    estimation error) per pulse repetition interval, with the repetition
    interval tied to the pulse duration by the duty factor.
    """
    pulse_duration_s = lb.time_bandwidth / lb.bandwidth_hz
    t_pri_s = pulse_duration_s / lb.duty_factor
    total = 0.0
    for m in range(lb.n_targets):
        proc = lb.sigma_tau_proc_sq[m]
        if proc == 0.0:
            continue
        est = crb_delay_variance(lb, m)
        total += (estimation_entropy(proc + est) - estimation_entropy(est)) / t_pri_s
    return total


def est_outer_rate_log_form(lb: LinkBudget) -> float:
    """Algebraically equivalent closed form of :func:`est_outer_rate`.

    B log2(1 + sigma_proc^2 gamma^2 B (TB) a^2 P_radar / (k_B T_temp))
    raised to delta/(TB), summed over targets. Kept separate so the two
    printed forms can be cross-checked.
    """
    kt = lb.kt_w_per_hz
    total = 0.0
    for m in range(lb.n_targets):
        snr = (
            lb.sigma_tau_proc_sq[m]
            * lb.gamma_sq
            * lb.bandwidth_hz
            * lb.time_bandwidth
            * lb.a_sq[m]
            * lb.radar_power_w
            / kt
        )
        total += (
            lb.bandwidth_hz
            * (lb.duty_factor / lb.time_bandwidth)
            * math.log2(1.0 + snr)
        )
    return total


def int_plus_noise_variance(lb: LinkBudget, bandwidth_hz: float) -> float:
    """Residual radar interference plus thermal noise, in watts.

    The predicted radar return is subtracted at the receiver; what is left
    is the derivative-scale residual of the delay-process jitter, with
    mean-square power P_radar a^2 gamma^2 bw^2 sigma_proc^2 per target,
    plus thermal noise over ``bandwidth_hz``.
    """
    if not 0 < bandwidth_hz <= lb.bandwidth_hz:
        raise ValueError(
            f"bandwidth_hz must lie in (0, {lb.bandwidth_hz}], got {bandwidth_hz}"
        )
    residual = lb.radar_power_w * sum(
        a_sq * lb.gamma_sq * bandwidth_hz**2 * proc_sq
        for a_sq, proc_sq in zip(lb.a_sq, lb.sigma_tau_proc_sq)
    )
    return residual + lb.kt_w_per_hz * bandwidth_hz


def comms_outer_rate(lb: LinkBudget) -> float:
    """Communications rate bound with no radar in band, bits/s."""
    return lb.bandwidth_hz * math.log2(
        1.0 + lb.b_sq * lb.comms_power_w / lb.noise_power_w
    )


def sic_comms_rate(lb: LinkBudget) -> float:
    """Communications rate decodable before radar estimation, bits/s.

    At or below this rate the communications signal can be decoded and
    subtracted, so it sees the full band with the predicted radar return
    removed: interference-plus-noise instead of noise alone.
    """
    return lb.bandwidth_hz * math.log2(
        1.0
        + lb.b_sq
        * lb.comms_power_w
        / int_plus_noise_variance(lb, lb.bandwidth_hz)
    )


def _require_single_target(lb: LinkBudget, what: str) -> None:
    if lb.n_targets != 1:
        raise MultiTargetError(
            f"{what} is defined for a single target; got {lb.n_targets}"
        )


def interpolated_inner(lb: LinkBudget) -> RateCurve:
    """Straight-line inner bound between the comms-alone point and the
    full-cancellation vertex."""
    _require_single_target(lb, "interpolated inner bound")
    return RateCurve(
        label="interpolated",
        points=(
            RatePoint(0.0, comms_outer_rate(lb)),
            RatePoint(est_outer_rate(lb), sic_comms_rate(lb)),
        ),
    )


def rate_region(lb: LinkBudget, alpha_grid: Sequence[float]) -> list[RateCurve]:
    """All displayed curves for one scenario.

    Returns, in order: "outer" (rectangle edges), "sic" (horizontal line
    at the post-cancellation comms rate), "interpolated", "waterfill"
    (self-consistent subband-split points over ``alpha_grid``), and
    "hull" (upper convex hull of the two inner curves). A grid value of
    exactly 0 maps to the analytic limit of the waterfill point, which is
    the cancellation vertex.
    """
    from . import waterfill

    grid = [float(a) for a in alpha_grid]
    if any(not 0.0 <= a < 1.0 for a in grid):
        raise ValueError("alpha grid values must lie in [0, 1)")
    if any(b < a for a, b in zip(grid, grid[1:])):
        raise ValueError("alpha grid must be sorted ascending")
    _require_single_target(lb, "rate region")

    r_est_max = est_outer_rate(lb)
    r_com_max = comms_outer_rate(lb)
    r_com_sic = sic_comms_rate(lb)

    outer = RateCurve(
        label="outer",
        points=(
            RatePoint(0.0, r_com_max),
            RatePoint(r_est_max, r_com_max),
            RatePoint(r_est_max, 0.0),
        ),
    )
    sic = RateCurve(
        label="sic",
        points=(RatePoint(0.0, r_com_sic), RatePoint(r_est_max, r_com_sic)),
    )
    interpolated = interpolated_inner(lb)

    wf_points: list[RatePoint] = []
    for a in grid:
        if a == 0.0:
            wf_points.append(RatePoint(r_est_max, r_com_sic))
        else:
            p = waterfill.waterfill_point(lb, a)
            if p.self_consistent:
                wf_points.append(RatePoint(p.r_est, p.r_com_com + p.r_com_mix))
    if not wf_points:
        raise ValueError("no self-consistent waterfill point on the given grid")
    wf = RateCurve(label="waterfill", points=tuple(wf_points))

    hull = waterfill.upper_convex_hull(list(interpolated.points) + wf_points)
    return [outer, sic, interpolated, wf, hull]
