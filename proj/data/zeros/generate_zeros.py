#!/usr/bin/env python3
"""Offline generator for zeros_100k.txt.

Locates the first N ordinates of nontrivial zeta zeros by sign changes of
the Hardy Z-function, evaluated with the Riemann-Siegel formula including
the C0..C4 remainder terms. Low zeros (t < LOW_T) are polished with
mpmath.siegelz. A sample of indices is cross-checked against
mpmath.zetazero, and the running count is compared to the smooth
Riemann-von Mangoldt term theta(T)/pi + 1 to catch missed zero pairs.

Usage: python3 generate_zeros.py [count] > zeros_100k.txt
"""
import math
import sys

import mpmath
import numpy as np

LOW_T = 3000.0
DIGITS = 10


def _psi_taylor(degree=60):
    mpmath.mp.dps = 60
    psi = lambda p: mpmath.cos(2 * mpmath.pi * (p * p - p - mpmath.mpf(1) / 16)) / mpmath.cos(2 * mpmath.pi * p)
    coeffs = mpmath.taylor(psi, mpmath.mpf("0.5"), degree)
    return np.array([float(c) for c in coeffs])


_PSI = _psi_taylor()


def _psi_derivs(p, orders):
    z = p - 0.5
    out = {}
    for m in orders:
        c = np.array([_PSI[j] * math.factorial(j) / math.factorial(j - m) for j in range(m, len(_PSI))])
        out[m] = np.polynomial.polynomial.polyval(z, c)
    return out


def theta(t):
    return t / 2 * np.log(t / (2 * np.pi)) - t / 2 - np.pi / 8 + 1 / (48 * t) + 7 / (5760 * t**3)


def hardy_z(t):
    t = np.asarray(t, dtype=np.float64)
    a = np.sqrt(t / (2 * np.pi))
    n_terms = np.floor(a).astype(np.int64)
    p = a - n_terms
    th = theta(t)
    nmax = int(n_terms.max())
    total = np.zeros_like(t)
    for n in range(1, nmax + 1):
        mask = n_terms >= n
        total += np.where(mask, np.cos(th - t * math.log(n)) / math.sqrt(n), 0.0)
    total *= 2
    pi = np.pi
    d = _psi_derivs(p, range(0, 13))
    c0 = d[0]
    c1 = -d[3] / (96 * pi**2)
    c2 = d[2] / (64 * pi**2) + d[6] / (18432 * pi**4)
    c3 = -d[1] / (64 * pi**2) - d[5] / (3840 * pi**4) - d[9] / (5308416 * pi**6)
    c4 = (d[0] / (128 * pi**2) + 19 * d[4] / (24576 * pi**4) + 11 * d[8] / (5898240 * pi**6)
          + d[12] / (2038431744 * pi**8))
    sign = np.where(n_terms % 2 == 1, 1.0, -1.0)
    rem = sign * a**-0.5 * (c0 + c1 / a + c2 / a**2 + c3 / a**3 + c4 / a**4)
    return total + rem


def locate(t_max):
    # The grid step is set from the zero density at the top of each block, so
    # it never exceeds 1/40 of the local mean spacing inside the block.
    brackets = []
    t = 10.0
    while t < t_max:
        t_end = min(max(2 * t, t + 50.0), t_max + 1)
        step = 2 * np.pi / max(np.log(t_end / (2 * np.pi)), 1.0) / 40
        grid = np.append(np.arange(t, t_end, step), t_end)
        for start in range(0, len(grid) - 1, 200000):
            part = grid[start:start + 200001]
            z = hardy_z(part)
            s = np.signbit(z)
            idx = np.nonzero(s[1:] != s[:-1])[0]
            brackets.extend(zip(part[idx], part[idx + 1]))
        t = t_end
    return np.array(brackets)


def refine(brackets, iters=48):
    lo = brackets[:, 0].copy()
    hi = brackets[:, 1].copy()
    zlo = hardy_z(lo)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        zm = hardy_z(mid)
        same = np.signbit(zm) == np.signbit(zlo)
        lo = np.where(same, mid, lo)
        zlo = np.where(same, zm, zlo)
        hi = np.where(same, hi, mid)
    return 0.5 * (lo + hi)


def polish_low(gammas):
    mpmath.mp.dps = 25
    out = gammas.copy()
    for i, g in enumerate(gammas):
        if g >= LOW_T:
            break
        out[i] = float(mpmath.findroot(mpmath.siegelz, (g - 1e-6, g + 1e-6), solver="secant", tol=1e-24))
    return out


def main():
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 100000
    t_max = 74921.5 if count == 100000 else float(sys.argv[2])
    brackets = locate(t_max)
    gammas = polish_low(refine(brackets))
    gammas = gammas[:count]
    if len(gammas) < count:
        sys.exit(f"only {len(gammas)} zeros found below {t_max}")
    # Smooth count check: N(T) - theta(T)/pi - 1 = S(T) has mean ~0; a missed
    # pair would show up as a persistent offset of -2.
    idx = np.arange(1, count + 1)
    mids = 0.5 * (gammas[:-1] + gammas[1:])
    s_vals = idx[:-1] - theta(mids) / np.pi - 1
    worst = np.max(np.abs(s_vals))
    if worst > 3 or abs(np.mean(s_vals[-1000:])) > 0.5:
        sys.exit(f"count check failed: max|S|={worst}")
    mpmath.mp.dps = 20
    checks = [1, 2, 10, 100, 1000, 10000, 25000, 50000, 75000, count]
    max_err = 0.0
    for n in checks:
        ref = float(mpmath.zetazero(n).imag)
        max_err = max(max_err, abs(ref - gammas[n - 1]))
    if max_err > 1e-9:
        sys.exit(f"spot check failed: {max_err}")
    print(f"# First {count} ordinates of nontrivial zeros of zeta(s), ascending.")
    print("# Generated by generate_zeros.py (Riemann-Siegel Z with C0..C4 remainder,")
    print(f"# mpmath polish below t={LOW_T:g}); spot-checked against mpmath.zetazero")
    print(f"# at n in {checks}: max abs error {max_err:.2e}. max|S(T)| at midpoints {worst:.3f}.")
    for g in gammas:
        print(f"{g:.{DIGITS}f}")


if __name__ == "__main__":
    main()
