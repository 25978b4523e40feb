"""Regenerates tests/oracles/reference_values.hpp with mpmath at 40 digits.

Every value here is computed from first principles, independently of the C++
library.  Run from the repository root:

    python3 tests/oracles/reference_values.py > tests/oracles/reference_values.hpp
"""

from mpmath import mp, mpf, sqrt, log, log1p, pi, quad, findroot

mp.dps = 40

alpha = 1 / mpf("137.03599944")
m_e = mpf("1.2355897e20")
r_inf = mpf("3.28984124e15")
b = {"H": mpf("5.446170255e-4"), "D": mpf("2.724436319e-4"), "He": mpf("0.0001371")}
z = {"H": 1, "D": 1, "He": 2}
r_n = {"H": mpf("0.862"), "D": mpf("2.115"), "He": mpf("1.2")}
g_e = 2 * mpf("1.0011596522")


def f_dirac(n, two_j, za):
    k = mpf(two_j + 1) / 2
    beta = k - sqrt(k * k - za * za)
    return (1 + za**2 / (n - beta) ** 2) ** mpf(-0.5)


def mu(atom):
    return m_e / (1 + b[atom])


def zeta_s(Z, n):
    t = 2 * pi * (1 + alpha / (3 * pi)) * mpf(Z) ** 2 * alpha / mpf(n) ** 2
    return findroot(lambda x: x * (1 - 2 * log(x)) - t, (mpf("1e-8"), mpf("0.5")), solver="anderson")


def zeta_v(Z, n):
    return 2 * mpf(Z) ** 2 * alpha**2 / mpf(n) ** 2


def zeta(scheme, Z, n):
    s, v = zeta_s(Z, n), zeta_v(Z, n)
    return {"S": s, "V": v, "S+V": (s + v) / 2, "SV": sqrt(s * v)}[scheme]


def rde(atom, n, l, two_j):
    return mu(atom) * (f_dirac(n, two_j, z[atom] * alpha) - 1)


def recoil1(atom, n, l, two_j):
    fb = b[atom]
    return -m_e * fb / (2 * (1 + fb) ** 3) * (f_dirac(n, two_j, z[atom] * alpha) - 1) ** 2


def recoil2(atom, n, l, two_j):
    if l == 0:
        return mpf(0)
    m_n = m_e / b[atom]
    return (z[atom] * alpha) ** 4 * mu(atom) ** 3 / (2 * n**3 * m_n**2) * (2 / mpf(two_j + 1) - 1 / (l + mpf(1) / 2))


def nuclear(atom, n, l, two_j):
    if l:
        return mpf(0)
    return (1 / (1 + b[atom])) ** 3 * mpf(z[atom]) ** 4 / n**3 * mpf("4.386454987e7") * (r_n[atom] / mpf("5.2917725")) ** 2


def rad(atom, n, l, two_j, scheme):
    x = zeta(scheme, z[atom], n)
    pre = 1 / (1 + b[atom]) * mpf(z[atom]) ** 4 / n**3 * alpha**3 * r_inf / pi
    if l == 0:
        br = -mpf(8) / 3 * log(x) + mpf(2) / 15 + 2 * x * (1 - log(x))
    else:
        c = 1 / mpf(l + 1) if two_j == 2 * l + 1 else -1 / mpf(l)
        br = (1 + x * (3 + 2 * log(x))) * c / (2 * l + 1)
    return pre * br


def level(atom, st, scheme):
    return rde(atom, *st) + recoil1(atom, *st) + recoil2(atom, *st) + nuclear(atom, *st) + rad(atom, *st, scheme)


def self_energy(x_zeta):
    d = x_zeta
    x = 1 - d
    a = alpha / pi * (mpf(1) / 3 + d / x * log(d))
    bb = alpha / (4 * pi) * (-mpf(4) / 3 - d / x * (1 + (1 + x) / x * log(d)))
    return a, bb, (a + bb) / (1 - bb)


def vertex_numeric(zt, s):
    def inner(u):
        a = (1 - zt + s) * u * u + zt * u
        if s == 0:
            return 2 * u * log(a)
        c = sqrt(a / s)
        return 2 * u * log(s) + 2 * ((c + u) * log(c + u) - (c - u) * log(c - u) - 2 * u)

    return quad(inner, [0, zt, 1])


S1, S2, P2, S4, D4 = (1, 0, 1), (2, 0, 1), (2, 1, 1), (4, 0, 1), (4, 2, 5)

values = {}
values["kFm1_H_1S"] = f_dirac(1, 1, alpha) - 1
values["kFm1_H_2S"] = f_dirac(2, 1, alpha) - 1
values["kFm1_H_2P3"] = f_dirac(2, 3, alpha) - 1
values["kFm1_H_4D5"] = f_dirac(4, 5, alpha) - 1
values["kFm1_Z92_1S"] = f_dirac(1, 1, 92 * alpha) - 1
values["kF2minusF1"] = f_dirac(2, 1, alpha) - f_dirac(1, 1, alpha)
values["kZetaS_n4"] = zeta_s(1, 4)
values["kZetaS_n2"] = zeta_s(1, 2)
values["kZetaS_n1"] = zeta_s(1, 1)
values["kZetaS_Z2n1"] = zeta_s(2, 1)
values["kZetaV_n1"] = zeta_v(1, 1)
values["kRecoil1_H_1S"] = recoil1("H", *S1)
values["kRecoil2_H_2P1"] = recoil2("H", *P2)
values["kRecoil2_H_4D5"] = recoil2("H", *D4)
values["kNs_H_2S"] = nuclear("H", *S2)
values["kNs_He_2S"] = nuclear("He", *S2)
values["kRad_H_2S_S"] = rad("H", *S2, "S")
values["kRad_H_2P1_V"] = rad("H", *P2, "V")
values["kRad_H_4D5_SV"] = rad("H", *D4, "SV")
values["kRad_He_2S_SpV"] = rad("He", *S2, "S+V")
a_mu, b_t, dmu = self_energy(mpf("1e-3"))
values["kSelfEnergyA_1em3"] = a_mu
values["kSelfEnergyB_1em3"] = b_t
values["kSelfEnergyDmu_1em3"] = dmu
values["kVertexNumeric_1em3_1em3"] = vertex_numeric(mpf("1e-3"), mpf("1e-3"))
values["kVertexNumeric_1em2_0"] = vertex_numeric(mpf("1e-2"), mpf(0))
values["kTotal_H_2S1S_S"] = level("H", S2, "S") - level("H", S1, "S")
values["kTotal_H_2S1S_V"] = level("H", S2, "V") - level("H", S1, "V")
values["kTotal_DH_2S1S_V"] = (level("D", S2, "V") - level("D", S1, "V")) - (level("H", S2, "V") - level("H", S1, "V"))
values["kTotal_H_hyper4S_V"] = level("H", S4, "V") - mpf(5) / 4 * level("H", S2, "V") + level("H", S1, "V") / 4
values["kTotal_H_classic_SpV"] = level("H", S2, "S+V") - level("H", P2, "S+V")
beta = g_e**2 * alpha / (2 * pi) * (mpf(4) / 3 * log(2) + 2)
values["kNoncovBeta"] = beta
values["kNoncovB2LeadingUnits"] = -mpf(2) / 15 - g_e**2 / 60 + pi / (8 * alpha) * 3 * beta
values["kNoncovB2FullUnitsMuObs"] = (-mpf(2) / 15 - g_e**2 / 60 + pi / (8 * alpha) * (3 * beta + 3 * beta**2 + beta**3)) / (1 + beta) ** 3
mu_h = mu("H")
b2_lead = values["kNoncovB2LeadingUnits"] * alpha / (pi * mu_h**3)
se_lead = (13 - mpf(7) / 3) * b2_lead * alpha**4 * mu_h**4 / 16
ueh = -mpf(4) / 15 * alpha**2 / m_e**2 * alpha**3 * mu_h**3 / (pi * 8)
values["kNoncovLambLeading"] = se_lead + ueh + nuclear("H", *S2)
values["kNoncovUehling2S"] = ueh
p = mpf("0.01")
values["kTwoParticleGapA"] = (sqrt(1 + p * p) + sqrt(1836**2 + p * p)) - (1837 + p * p / (2 * (mpf(1836) / 1837)) - p**4 / (8 * (mpf(1836) / 1837) ** 3))
values["kZmax"] = (4 / alpha**2) ** mpf(0.25)

print("#pragma once")
print()
print("// Generated by tests/oracles/reference_values.py (mpmath, 40 digits). Do not edit.")
print()
print("namespace oracle {")
for k, v in values.items():
    print(f"inline constexpr double {k} = {mp.nstr(v, 20, min_fixed=0, max_fixed=0)};")
print("}  // namespace oracle")
