"""Seeded Monte Carlo checks of the two analytic variance claims.

Two desk-scale experiments back the closed-form bounds:

* ``crb_experiment`` runs repeated matched-filter delay estimations on a
  band-limited Gaussian waveform and compares the empirical squared error
  against the delay-variance floor.
* ``residual_experiment`` subtracts the waveform at the predicted delay
  from the waveform at the true (jittered) delay, exactly, and compares
  the measured residual power against the derivative-approximation
  formula behind the interference-plus-noise variance.

Waveforms are synthesized in the frequency domain: independent complex
Gaussian coefficients on the in-band bins give time samples that are
Gaussian with a flat band-limited spectrum. Fractional delays are applied
as frequency-domain phase ramps, which is exact for these (circular)
band-limited signals, so discretization never competes with the variances
under test. Receiver noise for the delay experiment is added to the
frequency-domain coefficients; for white Gaussian noise this is exactly
equivalent to adding it per time sample.

Each trial draws from its own generator seeded by (seed, trial index), so
results do not depend on execution order, and per-trial statistics are
reduced with numpy's pairwise summation over the trial-indexed array.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bounds import crb_delay_variance, int_plus_noise_variance, _require_single_target
from .scenario import GAMMA_SQ, LinkBudget, SpectralShape


class ExperimentPreconditionError(ValueError):
    """Scenario falls outside the regime the analytic claim covers."""


@dataclass(frozen=True)
class WaveformSpec:
    """Sampled-waveform description: ``oversample`` samples per 1/B."""

    n_samples: int = 2048
    oversample: int = 8
    spectral_shape: SpectralShape = SpectralShape.FLAT
    unit_variance: bool = True

    def __post_init__(self) -> None:
        if self.n_samples <= 0 or self.oversample <= 0:
            raise ValueError("n_samples and oversample must be positive")
        if self.n_samples // self.oversample < 4:
            raise ValueError("need at least 4 in-band frequency bins")

    @property
    def n_band_bins(self) -> int:
        return self.n_samples // self.oversample


@dataclass(frozen=True)
class McReport:
    """Outcome of one experiment: empirical vs analytic with a tolerance."""

    experiment: str
    trials: int
    seed: int
    empirical: float
    analytic: float
    rel_error: float
    tolerance: float
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "experiment": self.experiment,
            "trials": self.trials,
            "seed": self.seed,
            "empirical": self.empirical,
            "analytic": self.analytic,
            "rel_error": self.rel_error,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }


def _report(
    experiment: str, trials: int, seed: int, empirical: float, analytic: float,
    tolerance: float,
) -> McReport:
    rel_error = abs(empirical - analytic) / analytic
    return McReport(
        experiment=experiment,
        trials=trials,
        seed=seed,
        empirical=float(empirical),
        analytic=float(analytic),
        rel_error=float(rel_error),
        tolerance=tolerance,
        passed=bool(rel_error <= tolerance),
    )


def _trial_rng(seed: int, trial: int) -> np.random.Generator:
    # stream keyed on (seed, trial) so execution order never matters
    return np.random.default_rng([seed, trial])


def _signed_bins(n: int) -> np.ndarray:
    return ((np.arange(n) + n // 2) % n) - n // 2


def _band_mask(n: int, oversample: int) -> np.ndarray:
    nb = n // oversample
    signed = _signed_bins(n)
    half = nb // 2
    return (signed >= -half) & (signed < nb - half)


def _waveform_freq(spec: WaveformSpec, rng: np.random.Generator) -> np.ndarray:
    """Frequency-domain coefficients of one waveform realization."""
    if spec.spectral_shape is not SpectralShape.FLAT:
        raise ValueError(f"unsupported spectral shape {spec.spectral_shape}")
    n = spec.n_samples
    mask = _band_mask(n, spec.oversample)
    k = int(mask.sum())
    coeffs = np.zeros(n, dtype=complex)
    coeffs[mask] = (rng.standard_normal(k) + 1j * rng.standard_normal(k)) / math.sqrt(2)
    if spec.unit_variance:
        s = np.fft.ifft(coeffs)
        scale = math.sqrt(float(np.mean(np.abs(s) ** 2)))
        if scale > 0:
            coeffs /= scale
    return coeffs


def generate_waveform(spec: WaveformSpec, seed: int) -> np.ndarray:
    """Complex time samples of one flat-spectrum band-limited waveform.

    Deterministic in ``seed``; unit sample variance when the waveform
    spec asks for it.
    """
    rng = np.random.default_rng(seed)
    return np.fft.ifft(_waveform_freq(spec, rng))


def measured_gamma_sq(samples: np.ndarray, oversample: int) -> float:
    """Spectral-shape constant (2 pi B_rms)^2 / B^2 from a periodogram."""
    n = len(samples)
    power = np.abs(np.fft.fft(samples)) ** 2
    # frequency in units of B: the occupied band spans [-1/2, 1/2)
    f = _signed_bins(n) / n * oversample
    b_rms_sq = float(np.sum(f**2 * power) / np.sum(power))
    return (2.0 * math.pi) ** 2 * b_rms_sq


def matched_filter_delay(
    observed: np.ndarray,
    reference: np.ndarray,
    search_window: tuple[int, int],
    sample_rate_hz: float = 1.0,
) -> float:
    """Delay of ``reference`` inside ``observed`` in seconds.

    Circular cross-correlation via FFT; the magnitude peak inside the
    signed-lag window [lo, hi) is refined to sub-sample precision with a
    three-point parabolic fit. With a zero-power input the peak location
    is arbitrary; callers should gate on SNR.
    """
    if len(observed) != len(reference):
        raise ValueError("observed and reference must have equal length")
    lo, hi = search_window
    if hi <= lo:
        raise ValueError(f"empty search window [{lo}, {hi})")
    n = len(observed)
    corr = np.fft.ifft(np.fft.fft(observed) * np.conj(np.fft.fft(reference)))
    mag = np.abs(corr)
    candidates = np.arange(lo, hi)
    peak_lag = int(candidates[np.argmax(mag[candidates % n])])
    y0 = mag[(peak_lag - 1) % n]
    y1 = mag[peak_lag % n]
    y2 = mag[(peak_lag + 1) % n]
    denom = y0 - 2.0 * y1 + y2
    if denom < 0:
        offset = 0.5 * (y0 - y2) / denom
        offset = min(0.5, max(-0.5, offset))
    else:
        offset = 0.0
    return (peak_lag + offset) / sample_rate_hz


def integrated_snr(lb: LinkBudget, target_idx: int = 0) -> float:
    """Post-pulse-compression SNR: TB a^2 P_radar / noise power."""
    return (
        lb.time_bandwidth * lb.a_sq[target_idx] * lb.radar_power_w / lb.noise_power_w
    )


def delay_error_trials(
    lb: LinkBudget, spec: WaveformSpec, trials: int, seed: int
) -> np.ndarray:
    """Per-trial delay-estimation errors in seconds.

    Each trial draws a fresh waveform (known at the receiver), a uniform
    sub-sample true delay around a fixed center, and frequency-domain
    noise scaled so the matched-filter output SNR equals the scenario's
    integrated SNR.
    """
    n = spec.n_samples
    fs = spec.oversample * lb.bandwidth_hz
    isnr = integrated_snr(lb)
    # Noise is scaled so the scenario's integrated SNR is realized per
    # quadrature component: total complex noise variance 2n/ISNR for a
    # unit-variance n-sample signal. Under this convention the analytic
    # delay-variance floor is the exact Cramer-Rao bound of the simulated
    # matched-filter model.
    noise_var = 2.0 * n / isnr
    freq_noise_scale = math.sqrt(n * noise_var / 2.0)
    f_norm = _signed_bins(n) / n
    center = n // 4
    window = (center - 2 * spec.oversample, center + 2 * spec.oversample + 1)

    errors = np.empty(trials)
    for t in range(trials):
        rng = _trial_rng(seed, t)
        coeffs = _waveform_freq(spec, rng)
        true_lag = center + rng.uniform(-0.5, 0.5)
        ramp = np.exp(-2j * np.pi * f_norm * true_lag)
        noise_f = freq_noise_scale * (
            rng.standard_normal(n) + 1j * rng.standard_normal(n)
        )
        observed = np.fft.ifft(coeffs * ramp + noise_f)
        reference = np.fft.ifft(coeffs)
        est_s = matched_filter_delay(observed, reference, window, fs)
        errors[t] = est_s - true_lag / fs
    return errors


def crb_experiment(
    lb: LinkBudget, spec: WaveformSpec, trials: int, seed: int
) -> McReport:
    """Empirical delay-estimation variance vs the analytic floor.

    Rejects scenarios with integrated SNR below 10, where the matched
    filter is not variance-efficient and the floor is not a meaningful
    prediction. Tolerance 25% relative, tightening to 15% from integrated
    SNR 1e4 where the estimator is deep in the asymptotic regime.
    """
    _require_single_target(lb, "delay-variance experiment")
    if trials <= 0:
        raise ValueError("trials must be positive")
    isnr = integrated_snr(lb)
    if isnr < 10.0:
        raise ExperimentPreconditionError(
            f"integrated SNR {isnr:.3g} is below 10: the delay estimator is not "
            "variance-efficient there, so the comparison would be meaningless. "
            "Raise radar power, antenna gain, or time-bandwidth."
        )
    errors = delay_error_trials(lb, spec, trials, seed)
    empirical = float(np.mean(errors**2))
    analytic = crb_delay_variance(lb, 0)
    tolerance = 0.15 if isnr >= 1e4 else 0.25
    return _report("crb", trials, seed, empirical, analytic, tolerance)


def residual_power_trials(
    lb: LinkBudget, spec: WaveformSpec, trials: int, seed: int
) -> np.ndarray:
    """Per-trial received residual power a^2 P_radar |s(t-tau) - s(t-tau_pre)|^2.

    The shift by the drawn process jitter is applied exactly via a
    frequency-domain phase ramp; no derivative approximation enters.
    """
    n = spec.n_samples
    fs = spec.oversample * lb.bandwidth_hz
    sigma_tau = math.sqrt(lb.sigma_tau_proc_sq[0])
    scale = lb.a_sq[0] * lb.radar_power_w
    f_norm = _signed_bins(n) / n

    powers = np.empty(trials)
    for t in range(trials):
        rng = _trial_rng(seed, t)
        coeffs = _waveform_freq(spec, rng)
        jitter_lag = rng.normal(0.0, sigma_tau) * fs
        diff = np.fft.ifft(coeffs * (np.exp(-2j * np.pi * f_norm * jitter_lag) - 1.0))
        powers[t] = scale * float(np.mean(np.abs(diff) ** 2))
    return powers


def residual_experiment(
    lb: LinkBudget, spec: WaveformSpec, trials: int, seed: int
) -> McReport:
    """Measured interference-plus-noise power vs the derivative formula.

    Valid while the process jitter stays well inside one over the
    bandwidth; rejects sigma_tau_proc * B above 0.2. Thermal noise is an
    exact additive constant on both sides, so it is added analytically.
    """
    _require_single_target(lb, "residual-interference experiment")
    if trials <= 0:
        raise ValueError("trials must be positive")
    sigma_tau_b = math.sqrt(lb.sigma_tau_proc_sq[0]) * lb.bandwidth_hz
    if sigma_tau_b > 0.2:
        raise ExperimentPreconditionError(
            f"sigma_tau_proc * B = {sigma_tau_b:.3g} exceeds 0.2; the derivative "
            "approximation only covers jitter well inside one over the bandwidth."
        )
    analytic = int_plus_noise_variance(lb, lb.bandwidth_hz)
    if sigma_tau_b == 0.0:
        empirical = lb.noise_power_w
    else:
        powers = residual_power_trials(lb, spec, trials, seed)
        empirical = float(np.mean(powers)) + lb.noise_power_w
    return _report("residual", trials, seed, empirical, analytic, tolerance=0.10)


def gamma_experiment(spec: WaveformSpec, trials: int, seed: int) -> McReport:
    """Measured spectral-shape constant vs (2 pi)^2 / 12 for a flat band."""
    if trials <= 0:
        raise ValueError("trials must be positive")
    measured = np.empty(trials)
    for t in range(trials):
        rng = _trial_rng(seed, t)
        samples = np.fft.ifft(_waveform_freq(spec, rng))
        measured[t] = measured_gamma_sq(samples, spec.oversample)
    empirical = float(np.mean(measured))
    analytic = GAMMA_SQ[SpectralShape.FLAT]
    return _report("gamma", trials, seed, empirical, analytic, tolerance=0.05)
