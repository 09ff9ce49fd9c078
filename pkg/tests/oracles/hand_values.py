"""High-precision evaluations of closed-form example values.

Each quantity is written out from its defining formula in mpmath at 40
digits, independent of the package; the printed numbers are frozen in the
test suite.

    python tests/oracles/hand_values.py
"""
import mpmath as mp

mp.mp.dps = 40
S_HALF = mp.mpf("1.0909391332379943")  # series_bruteforce.py, alpha = 0.5

# screened effective potential, hbar=M=1, A=2, D=4, l=2, alpha=0.5, delta=0.1
A, D, l, delta = mp.mpf(2), mp.mpf(4), 2, mp.mpf("0.1")
K = S_HALF / 2
for r in (mp.mpf("0.5"), mp.mpf("1.5"), mp.mpf(4)):
    v = (l * (l + 1) / (2 * r**2)
         - 2 * D * (A * mp.e**(-delta * r) / r - A**2 * mp.e**(-2 * delta * r) / (2 * r**2))
         + K * mp.e**(-delta * r) / r)
    print(f"V_screened(r={r}) = {mp.nstr(v, 20)}")

# screened level, hbar=M=e=1, alpha=1 (S=0), A=0.5, D=1, l=1, n=0, via -2 delta^2 k'^2
A, D, l, n = mp.mpf("0.5"), mp.mpf(1), 1, 0
for delta in (mp.mpf("0.01"), mp.mpf("0.001"), mp.mpf("0.0001")):
    zeta = -2 * A * D
    lamK = 2 * D * A**2
    d = (1 + mp.sqrt(4 * l * (l + 1) + 4 * lamK + 1)) / 2
    kp = (lamK - zeta / delta - (d + n) ** 2) / (2 * (d + n))
    print(f"E_screened(delta={delta}) = {mp.nstr(-2 * delta**2 * kp**2, 20)}")
ell = (1 + mp.sqrt(11)) / 2
print(f"E_kratzer(n=0,l=1) = {mp.nstr(-mp.mpf(1) / 2 / ell**2, 20)}")

# Kratzer levels of the fig-1 set at alpha = 0.6, 0.8 from the brute-force S values
for alpha, S in ((mp.mpf("0.6"), mp.mpf("0.7438315333549155")), (mp.mpf("0.8"), mp.mpf("0.292801288748471"))):
    zeta = (S / 2 - 1) / alpha**2
    for l in (1, 2):
        jsq = (l * (l + 1) + mp.mpf("0.5")) / alpha**2
        ell = (1 + mp.sqrt(4 * jsq + 1)) / 2
        for n in range(3):
            E = -alpha**2 / 2 * zeta**2 / (n + ell) ** 2
            print(f"E(alpha={alpha}, n={n}, l={l}) = {mp.nstr(E, 20)}")
