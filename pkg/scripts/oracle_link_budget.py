#!/usr/bin/env python3
"""Independent hand evaluation of the bundled example scenario.

Recomputes every derived quantity and closed-form rate from first
principles with explicit arithmetic and no imports from src/. The frozen
expected values in tests/ come from this script's output; rerun it after
touching the example scenario.
"""

import math

C = 299792458.0
KB = 1.380649e-23

# bundled example scenario, converted by hand
B = 5e6
FC = 3e9
TEMP = 1000.0
R_COM = 10e3
P_COM = 10 ** ((20 - 30) / 10)          # 20 dBm -> W
G_COM = 10 ** (0 / 10)                  # 0 dBi
R_TGT = 100e3
G_RAD = 10 ** (30 / 10)                 # 30 dBi
P_RAD = 1000.0
RCS = 10.0
PROC_STD_M = 100.0
TB = 100.0
DUTY = 0.01


def main() -> None:
    lam = C / FC
    a_sq = G_RAD**2 * lam**2 * RCS / ((4 * math.pi) ** 3 * R_TGT**4)
    b_sq = G_COM**2 * lam**2 / (4 * math.pi * R_COM) ** 2
    noise = KB * TEMP * B
    gamma_sq = (2 * math.pi) ** 2 / 12
    sigma_tau_proc = 2 * PROC_STD_M / C
    sigma_tau_proc_sq = sigma_tau_proc**2

    print(f"wavelength_m            = {lam!r}")
    print(f"a_sq                    = {a_sq!r}")
    print(f"b_sq                    = {b_sq!r}")
    print(f"noise_power_w           = {noise!r}")
    print(f"gamma_sq                = {gamma_sq!r}")
    print(f"sigma_tau_proc_s        = {sigma_tau_proc!r}")
    print(f"sigma_tau_proc_sq_s2    = {sigma_tau_proc_sq!r}")

    # delay-estimation variance floor and estimation rate
    crb = KB * TEMP / (gamma_sq * B * TB * a_sq * P_RAD)
    print(f"crb_delay_variance_s2   = {crb!r}")
    print(f"crb_range_sigma_m       = {C * math.sqrt(crb) / 2!r}")
    ratio = sigma_tau_proc_sq / crb
    print(f"proc_over_est_ratio     = {ratio!r}")
    pulse_t = TB / B
    t_pri = pulse_t / DUTY
    est_rate = math.log2(1 + ratio) / t_pri
    print(f"est_outer_rate_bps      = {est_rate!r}")

    # communications rates
    comms_outer = B * math.log2(1 + b_sq * P_COM / noise)
    print(f"comms_outer_rate_bps    = {comms_outer!r}")
    int_plus_noise = P_RAD * a_sq * gamma_sq * B**2 * sigma_tau_proc_sq + noise
    print(f"int_plus_noise_w        = {int_plus_noise!r}")
    sic = B * math.log2(1 + b_sq * P_COM / int_plus_noise)
    print(f"sic_comms_rate_bps      = {sic!r}")

    # integrated SNR of the example as given
    print(f"integrated_snr          = {TB * a_sq * P_RAD / noise!r}")

    # delay conversions quoted in docs/tests
    print(f"delay_100km_s           = {2 * 100e3 / C!r}")
    print(f"delay_100m_s            = {2 * 100.0 / C!r}")


if __name__ == "__main__":
    main()
