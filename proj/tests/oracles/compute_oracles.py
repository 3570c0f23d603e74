#!/usr/bin/env python3
"""Independent high-precision reference values for the test suite.

Run once; the printed header is frozen into oracle_values.hpp. Nothing here
shares code with the library.
"""
import mpmath as mp

mp.mp.dps = 40



def emit(name, value):
    value = mp.mpc(value)
    print(f"inline constexpr double {name}_re = {mp.nstr(value.real, 20)};")
    print(f"inline constexpr double {name}_im = {mp.nstr(value.imag, 20)};")


def mean(h, z, n=1):
    return mp.quad(lambda u: h(u**n * z), [0, 1])


print("#pragma once")
print("// Generated by compute_oracles.py (mpmath, 40 digits). Do not edit.")
print("namespace oracle {")

# Cauchy-type mean of the half-plane map at z = 0.5, and its derivative.
h_hp = lambda z: (1 + z) / (1 - z)
emit("q_hp_half", mean(h_hp, mp.mpf("0.5")))
emit("q_hp_d1_half", mp.quad(lambda u: 2 * u / (1 - u * mp.mpf("0.5"))**2, [0, 1]))
z = mp.mpc("0.3", "0.6")
emit("q_hp_complex", -2 * mp.log(1 - z) / z - 1)
emit("q_hp_n2_complex", mean(h_hp, z, 2))

# exponential target, alpha = -1/3, beta = 1/2, gamma = 1
a0_exp = 2 * ((mp.mpf(2) / 3)**(mp.mpf(3) / 4) - 1)
emit("a0_exp", a0_exp)
emit("q_exp_one", 2 * ((2 * (mp.e - 1) / 3)**(mp.mpf(3) / 4) - 1))
emit("q_exp_complex", 2 * ((2 * (mp.exp(z) - 1) / (3 * z))**(mp.mpf(3) / 4) - 1))
emit("H_exp_complex", 2 * ((2 * mp.exp(z) / 3)**(mp.mpf(3) / 4) - 1))
emit("psi1_one_exp", (mp.mpf("1.5"))**(mp.mpf(4) / 3) / (mp.mpf("0.5") * mp.mpf(4) / 3))

# half-plane x0 = 2, psi2 alpha = -2/3, beta = 1, gamma = 1/4
a0_tan = (mp.mpf("0.5") * mp.tan(mp.mpf("0.5")))**(mp.mpf(3) / 5)
emit("a0_tan", a0_tan)
q_tan = lambda z: (mp.tan(-mp.mpf(1) / 2 - (2 / z) * mp.log((2 - z) / 2)) / 2)**(mp.mpf(3) / 5)
H_tan = lambda z: (mp.mpf("0.5") * mp.tan(mp.mpf("0.5") * (2 + z) / (2 - z)))**(mp.mpf(3) / 5)
emit("q_tan_half", q_tan(mp.mpf("0.5")))
emit("H_tan_half", H_tan(mp.mpf("0.5")))
emit("psi2_one_tan", 2 * mp.atan(2))

# bound constants
emit("two_ln2_minus_1", 2 * mp.log(2) - 1)
emit("zeta_exp", 2 * ((2 * (1 - mp.exp(-1)) / 3)**(mp.mpf(3) / 4) - 1))
emit("xi_tan", (mp.mpf("0.5") * mp.tan((2 * mp.log(2) - 1) / 2))**(mp.mpf(3) / 5))
lam = 2 * mp.log(2) - 1
emit("eta_lambda", mp.sqrt(2 * (1 - lam) * mp.log(2) + 2 * lam - 1))
emit("eta_half", mp.sqrt(mp.log(2)))
emit("lambda3_k1_n1", mp.quad(lambda u: mp.sqrt(1 - u), [0, 1]))
emit("lambda2_mu_half_n2", mp.quad(lambda u: mp.exp(-mp.mpf("0.5") * u**2), [0, 1]))
emit("lambda1_A05_Bm03_n3",
     mp.quad(lambda u: (1 - mp.mpf("0.5") * u**3) / (1 - mp.mpf("-0.3") * u**3), [0, 1]))
# sector(1, 1/2): rho' = 3/4, c = exp(i pi/3)
cc = mp.exp(1j * mp.pi / 3)
emit("sector_half", ((1 + cc * mp.mpf("0.5")) / (1 - mp.mpf("0.5")))**mp.mpf("0.75"))
emit("lambda4_rho1_rho05_n1",
     mp.quad(lambda u: ((1 - cc * u) / (1 + u))**mp.mpf("0.75"), [0, 1]))
emit("lambda4_rho06_n2",
     mp.quad(lambda u: ((1 - u**2) / (1 + u**2))**mp.mpf("0.6"), [0, 1]))
emit("hyp2f1_m05_05_15_m1", mp.hyp2f1(-0.5, 0.5, 1.5, -1))
emit("hyp2f1_075_1_2_m1", mp.hyp2f1(0.75, 1, 2, -1))
emit("hyp1f1_05_15_m07", mp.hyp1f1(0.5, 1.5, -0.7))
emit("gamma_3_7", mp.gamma(mp.mpf("3.7")))
print("}  // namespace oracle")
