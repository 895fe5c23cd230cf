#!/usr/bin/env python3
"""Generate arbitrary-precision reference values for the xi-lab test suite.

Uses mpmath at 50 decimal digits. The output is committed under
crates/core/tests/data/oracle.json; rerun only when the fixture set changes.
"""
import json
import random
import sys

import mpmath as mp

mp.mp.dps = 50


def xi(s):
    s = mp.mpc(s)
    if s == 1 or s == 0:
        return mp.mpc(0.5)
    return s * (s - 1) / 2 * mp.pi ** (-s / 2) * mp.gamma(s / 2) * mp.zeta(s)


def log_polar(z):
    z = mp.mpc(z)
    return {"log_magnitude": float(mp.log(abs(z))), "phase": float(mp.arg(z))}


def big_xi(t):
    return mp.re(xi(mp.mpf(0.5) + 1j * mp.mpf(t)))


def main(out):
    rng = random.Random(20160304)

    ln_gamma = []
    for sigma, t in [(1, 0), (0.5, 0), (0.25, 0), (2, 0), (0.3, 7.5), (1.75, -42.0),
                     (0.125, 250.0), (0.0, 3.0), (1.0, 500.0), (0.5, 123.456)]:
        s = mp.mpc(sigma, t)
        ln_gamma.append({"sigma": sigma, "t": t, **log_polar(mp.gamma(s))})

    zeta = []
    for sigma, t in [(0, 0), (0.5, 0), (2, 0), (-1, 0), (-2.5, 3.0), (0.5, 14.134725141734694),
                     (0.5, 100.0), (0.75, 333.0), (0.2, 480.0), (1.5, 20.0), (1.0, 1.0)]:
        z = mp.zeta(mp.mpc(sigma, t))
        zeta.append({"sigma": sigma, "t": t, "re": float(mp.re(z)), "im": float(mp.im(z))})

    xi_points = []
    for _ in range(50):
        sigma = rng.uniform(0.0, 1.0)
        t = rng.uniform(5.0, 200.0)
        xi_points.append({"sigma": sigma, "t": t, **log_polar(xi(mp.mpc(sigma, t)))})

    zeros = [float(mp.im(mp.zetazero(n))) for n in range(1, 202)]

    # Xi' at the ends of (14.0, 14.3): same sign means no extremum inside.
    d_lo = float(mp.diff(big_xi, 14.0))
    d_hi = float(mp.diff(big_xi, 14.3))

    fixtures = {
        "gamma_half": float(mp.gamma(0.5)),
        "gamma_quarter": float(mp.gamma(0.25)),
        "zeta_half": float(mp.zeta(0.5)),
        "xi_half": float(mp.re(xi(0.5))),
        "ln_gamma": ln_gamma,
        "zeta": zeta,
        "xi": xi_points,
        "zeros": zeros,
        "big_xi_derivative_14_0": d_lo,
        "big_xi_derivative_14_3": d_hi,
    }
    with open(out, "w") as fh:
        json.dump(fixtures, fh, indent=1)
        fh.write("\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "crates/core/tests/data/oracle.json")
