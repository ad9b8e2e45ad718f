#!/usr/bin/env python3
"""Independent evaluation of the two-subband water-filling split.

Recomputes the subband channels, the closed-form power fraction, and the
three subband rates for the bundled example scenario by direct
substitution, with no imports from src/. Also maximizes the total
communications rate over a dense brute-force beta grid to confirm the
closed form attains the optimum. Frozen reference values in tests/ come
from this output.
"""

import math

C = 299792458.0
KB = 1.380649e-23

B = 5e6
FC = 3e9
TEMP = 1000.0
R_COM = 10e3
P_COM = 10 ** ((20 - 30) / 10)
G_COM = 1.0
R_TGT = 100e3
G_RAD = 1000.0
P_RAD = 1000.0
RCS = 10.0
PROC_STD_M = 100.0
TB = 100.0
DUTY = 0.01

LAM = C / FC
A_SQ = G_RAD**2 * LAM**2 * RCS / ((4 * math.pi) ** 3 * R_TGT**4)
B_SQ = G_COM**2 * LAM**2 / (4 * math.pi * R_COM) ** 2
KT = KB * TEMP
GAMMA_SQ = (2 * math.pi) ** 2 / 12
SIG_SQ = (2 * PROC_STD_M / C) ** 2


def channels(alpha: float) -> tuple[float, float]:
    mu_com = B_SQ / (KT * alpha * B)
    denom = A_SQ * P_RAD * (1 - alpha) ** 2 * GAMMA_SQ * B**2 * SIG_SQ + KT * (
        1 - alpha
    ) * B
    return mu_com, B_SQ / denom


def total_rate(alpha: float, beta: float) -> float:
    mu_com, mu_mix = channels(alpha)
    sigma_int = A_SQ * P_RAD * (1 - alpha) ** 2 * GAMMA_SQ * B**2 * SIG_SQ + KT * (
        1 - alpha
    ) * B
    r_com = alpha * B * math.log2(1 + beta * P_COM * B_SQ / (KT * alpha * B))
    r_mix = (1 - alpha) * B * math.log2(1 + B_SQ * (1 - beta) * P_COM / sigma_int)
    return r_com + r_mix


def closed_form_beta(alpha: float) -> float:
    mu_com, mu_mix = channels(alpha)
    return alpha + ((alpha - 1) / mu_com + alpha / mu_mix) / P_COM


def main() -> None:
    for alpha in (0.1, 0.25, 0.5, 0.75, 0.9):
        mu_com, mu_mix = channels(alpha)
        threshold = alpha / ((1 - alpha) * mu_mix) - 1 / mu_com
        beta = closed_form_beta(alpha) if P_COM >= threshold else 1.0
        nu = (
            P_COM + 1 / mu_com + 1 / mu_mix
            if P_COM >= threshold
            else (P_COM + 1 / mu_com) / alpha
        )

        # brute-force check of the closed-form optimum
        grid_best = max(total_rate(alpha, b / 99999.0) for b in range(100000))
        analytic = total_rate(alpha, beta)

        kappa = TB
        snr_radar = SIG_SQ * GAMMA_SQ * (1 - alpha) * B * kappa * A_SQ * P_RAD / KT
        r_est = (1 - alpha) * B * (DUTY / kappa) * math.log2(1 + snr_radar)
        sigma_int = A_SQ * P_RAD * (1 - alpha) ** 2 * GAMMA_SQ * B**2 * SIG_SQ + KT * (
            1 - alpha
        ) * B
        r_com_com = alpha * B * math.log2(1 + beta * P_COM * B_SQ / (KT * alpha * B))
        r_com_mix = (1 - alpha) * B * math.log2(
            1 + B_SQ * (1 - beta) * P_COM / sigma_int
        )

        print(f"alpha                = {alpha!r}")
        print(f"  mu_com             = {mu_com!r}")
        print(f"  mu_mix             = {mu_mix!r}")
        print(f"  dual_use_threshold = {threshold!r}")
        print(f"  nu                 = {nu!r}")
        print(f"  beta               = {beta!r}")
        print(f"  r_com_com_bps      = {r_com_com!r}")
        print(f"  r_com_mix_bps      = {r_com_mix!r}")
        print(f"  r_est_bps          = {r_est!r}")
        print(f"  total_analytic     = {analytic!r}")
        print(f"  total_grid_best    = {grid_best!r}")
        print(f"  grid_minus_analytic= {grid_best - analytic!r}")


if __name__ == "__main__":
    main()
