"""Physical scenario description and link-budget derivation.

A scenario file carries the user-facing quantities (powers in dBm, antenna
gains in dBi, ranges in meters). Everything downstream works in linear SI
units, so loading converts once and validation happens here. The derived
``LinkBudget`` bundles the handful of numbers every rate bound consumes:
per-target two-way gain, communications path gain, thermal noise power,
per-target process-delay variance, and the spectral-shape constant.

Propagation model: the per-target gain uses the monostatic radar range
equation; the communications path gain uses free-space loss with the
(sidelobe) antenna gain applied at both link ends. Both live in
``derive_link_budget`` only, so alternate models can be swapped in one
place.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace
from enum import Enum
from importlib import resources
from pathlib import Path

SPEED_OF_LIGHT_M_S = 299_792_458.0
# 2019 SI exact value, J/K
BOLTZMANN_J_K = 1.380649e-23


class ScenarioError(ValueError):
    """A scenario file failed to parse or a field failed validation."""


class SpectralShape(Enum):
    """Power-spectral-density shape of the radar waveform."""

    FLAT = "flat"


#: (2 pi B_rms)^2 = GAMMA_SQ[shape] * B^2 for a unit-variance waveform.
GAMMA_SQ = {SpectralShape.FLAT: (2.0 * math.pi) ** 2 / 12.0}


@dataclass(frozen=True)
class Target:
    """One radar target: geometry, size, and track-prediction jitter."""

    range_m: float
    cross_section_m2: float
    process_range_std_m: float

    def __post_init__(self) -> None:
        if not self.range_m > 0:
            raise ScenarioError("target range_m must be positive")
        if not self.cross_section_m2 > 0:
            raise ScenarioError("target cross_section_m2 must be positive")
        if self.process_range_std_m < 0:
            raise ScenarioError("target process_range_std_m must be nonnegative")


@dataclass(frozen=True)
class Scenario:
    """Validated scenario in linear SI units.

    Use :func:`load_scenario` to build one from a JSON file with the
    conventional dBm / dBi fields.
    """

    bandwidth_hz: float
    center_freq_hz: float
    temperature_k: float
    comms_range_m: float
    comms_power_w: float
    comms_antenna_gain_lin: float
    radar_power_w: float
    radar_antenna_gain_lin: float
    targets: tuple[Target, ...]
    time_bandwidth: float
    duty_factor: float
    spectral_shape: SpectralShape = SpectralShape.FLAT

    def __post_init__(self) -> None:
        positive = {
            "bandwidth_hz": self.bandwidth_hz,
            "center_freq_hz": self.center_freq_hz,
            "temperature_k": self.temperature_k,
            "comms_range_m": self.comms_range_m,
            "comms_power_w": self.comms_power_w,
            "comms_antenna_gain_lin": self.comms_antenna_gain_lin,
            "radar_power_w": self.radar_power_w,
            "radar_antenna_gain_lin": self.radar_antenna_gain_lin,
        }
        for name, value in positive.items():
            if not value > 0:
                raise ScenarioError(f"{name} must be positive, got {value}")
        if not 0 < self.duty_factor <= 1:
            raise ScenarioError(
                f"duty_factor must lie in (0, 1], got {self.duty_factor}"
            )
        if not self.time_bandwidth >= 1:
            raise ScenarioError(
                f"time_bandwidth must be >= 1, got {self.time_bandwidth}"
            )
        if len(self.targets) == 0:
            raise ScenarioError("targets must be a nonempty list")
        object.__setattr__(self, "targets", tuple(self.targets))


@dataclass(frozen=True)
class LinkBudget:
    """Derived quantities consumed by every bound formula.

    ``a_sq`` is the combined two-way antenna-gain, cross-section, and
    propagation factor per target; ``b_sq`` the one-way communications
    path-gain product. Both are linear power ratios.
    """

    a_sq: tuple[float, ...]
    b_sq: float
    noise_power_w: float
    sigma_tau_proc_sq: tuple[float, ...]
    gamma_sq: float
    bandwidth_hz: float
    time_bandwidth: float
    duty_factor: float
    comms_power_w: float
    radar_power_w: float

    @property
    def n_targets(self) -> int:
        return len(self.a_sq)

    @property
    def kt_w_per_hz(self) -> float:
        """Thermal noise spectral density k_B * T_temp in W/Hz."""
        return self.noise_power_w / self.bandwidth_hz


def db_to_linear(db: float) -> float:
    return 10.0 ** (db / 10.0)


def dbm_to_watts(dbm: float) -> float:
    return 10.0 ** ((dbm - 30.0) / 10.0)


def delay_from_range(range_m: float) -> float:
    """Two-way propagation delay in seconds for a target at ``range_m``."""
    if not range_m > 0:
        raise ScenarioError(f"range_m must be positive, got {range_m}")
    return 2.0 * range_m / SPEED_OF_LIGHT_M_S


def range_from_delay(delay_s: float) -> float:
    """Inverse of :func:`delay_from_range`."""
    if not delay_s > 0:
        raise ScenarioError(f"delay_s must be positive, got {delay_s}")
    return delay_s * SPEED_OF_LIGHT_M_S / 2.0


def noise_power(temperature_k: float, bandwidth_hz: float) -> float:
    """Thermal noise power k_B * T * B in watts."""
    if not temperature_k > 0:
        raise ScenarioError(f"temperature_k must be positive, got {temperature_k}")
    if not bandwidth_hz > 0:
        raise ScenarioError(f"bandwidth_hz must be positive, got {bandwidth_hz}")
    return BOLTZMANN_J_K * temperature_k * bandwidth_hz


def derive_link_budget(s: Scenario) -> LinkBudget:
    """Derive the link budget from a validated scenario.

    Per target: a^2 = G_radar^2 lambda^2 sigma_rcs / ((4 pi)^3 r^4).
    Comms path: b^2 = G_comms^2 lambda^2 / (4 pi r_comms)^2.
    """
    lam = SPEED_OF_LIGHT_M_S / s.center_freq_hz
    a_sq = tuple(
        s.radar_antenna_gain_lin**2
        * lam**2
        * t.cross_section_m2
        / ((4.0 * math.pi) ** 3 * t.range_m**4)
        for t in s.targets
    )
    b_sq = s.comms_antenna_gain_lin**2 * lam**2 / (4.0 * math.pi * s.comms_range_m) ** 2
    sigma_tau_proc_sq = tuple(
        (2.0 * t.process_range_std_m / SPEED_OF_LIGHT_M_S) ** 2 for t in s.targets
    )
    return LinkBudget(
        a_sq=a_sq,
        b_sq=b_sq,
        noise_power_w=noise_power(s.temperature_k, s.bandwidth_hz),
        sigma_tau_proc_sq=sigma_tau_proc_sq,
        gamma_sq=GAMMA_SQ[s.spectral_shape],
        bandwidth_hz=s.bandwidth_hz,
        time_bandwidth=s.time_bandwidth,
        duty_factor=s.duty_factor,
        comms_power_w=s.comms_power_w,
        radar_power_w=s.radar_power_w,
    )


def _require(obj: dict, key: str, context: str) -> object:
    if key not in obj:
        raise ScenarioError(f"missing field '{context}{key}'")
    return obj[key]


def _number(obj: dict, key: str, context: str = "") -> float:
    value = _require(obj, key, context)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ScenarioError(f"field '{context}{key}' must be a number, got {value!r}")
    return float(value)


def load_scenario(path: str | Path) -> Scenario:
    """Load and validate a scenario JSON file.

    Expected layout::

        {
          "bandwidth_hz": ..., "center_freq_hz": ..., "temperature_k": ...,
          "comms": {"range_m": ..., "power_dbm": ..., "antenna_gain_dbi": ...},
          "radar": {"power_w": ..., "antenna_gain_dbi": ...,
                    "duty_factor": ..., "time_bandwidth": ...},
          "targets": [{"range_m": ..., "cross_section_m2": ...,
                       "process_range_std_m": ...}],
          "spectral_shape": "flat"
        }

    dB-valued fields are converted to linear at load time.
    """
    path = Path(path)
    try:
        raw = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"could not parse {path}: {exc}") from exc
    if not isinstance(raw, dict):
        raise ScenarioError(f"scenario file {path} must contain a JSON object")

    comms = _require(raw, "comms", "")
    radar = _require(raw, "radar", "")
    if not isinstance(comms, dict):
        raise ScenarioError("field 'comms' must be an object")
    if not isinstance(radar, dict):
        raise ScenarioError("field 'radar' must be an object")

    shape_name = _require(raw, "spectral_shape", "")
    try:
        shape = SpectralShape(str(shape_name).lower())
    except ValueError:
        valid = ", ".join(s.value for s in SpectralShape)
        raise ScenarioError(
            f"field 'spectral_shape' must be one of: {valid}; got {shape_name!r}"
        ) from None

    targets_raw = _require(raw, "targets", "")
    if not isinstance(targets_raw, list) or len(targets_raw) == 0:
        raise ScenarioError("field 'targets' must be a nonempty list")
    targets = tuple(
        Target(
            range_m=_number(t, "range_m", f"targets[{i}]."),
            cross_section_m2=_number(t, "cross_section_m2", f"targets[{i}]."),
            process_range_std_m=_number(t, "process_range_std_m", f"targets[{i}]."),
        )
        for i, t in enumerate(targets_raw)
    )

    return Scenario(
        bandwidth_hz=_number(raw, "bandwidth_hz"),
        center_freq_hz=_number(raw, "center_freq_hz"),
        temperature_k=_number(raw, "temperature_k"),
        comms_range_m=_number(comms, "range_m", "comms."),
        comms_power_w=dbm_to_watts(_number(comms, "power_dbm", "comms.")),
        comms_antenna_gain_lin=db_to_linear(
            _number(comms, "antenna_gain_dbi", "comms.")
        ),
        radar_power_w=_number(radar, "power_w", "radar."),
        radar_antenna_gain_lin=db_to_linear(
            _number(radar, "antenna_gain_dbi", "radar.")
        ),
        targets=targets,
        time_bandwidth=_number(radar, "time_bandwidth", "radar."),
        duty_factor=_number(radar, "duty_factor", "radar."),
        spectral_shape=shape,
    )


def bundled_scenario_path(name: str = "table2") -> Path:
    """Path to a scenario file shipped with the package."""
    return Path(str(resources.files("mudr").joinpath(f"data/{name}.json")))


def replace_scenario_field(s: Scenario, field: str, value: float) -> Scenario:
    """Return a copy of ``s`` with one numeric field replaced.

    Target fields (range_m, cross_section_m2, process_range_std_m) are
    applied to every target. Raises ScenarioError for unknown fields.
    """
    scenario_fields = {
        "bandwidth_hz",
        "center_freq_hz",
        "temperature_k",
        "comms_range_m",
        "comms_power_w",
        "comms_antenna_gain_lin",
        "radar_power_w",
        "radar_antenna_gain_lin",
        "time_bandwidth",
        "duty_factor",
    }
    target_fields = {"range_m", "cross_section_m2", "process_range_std_m"}
    if field in scenario_fields:
        return replace(s, **{field: value})
    if field in target_fields:
        new_targets = tuple(replace(t, **{field: value}) for t in s.targets)
        return replace(s, targets=new_targets)
    valid = ", ".join(sorted(scenario_fields | target_fields))
    raise ScenarioError(f"unknown sweep field '{field}'; valid fields: {valid}")
