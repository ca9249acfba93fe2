#!/usr/bin/env python3
"""Independent oracle for frozen test values.

Everything here is computed from first principles: exact binomials via
math.comb, brute-force enumeration of level sets, and mpmath for reals.
Nothing imports or mirrors the C++ evaluators.  Run it to regenerate the
constants pasted into tests/*.cpp and the PBM golden files.
"""
import math
import sys
from pathlib import Path

import mpmath

mpmath.mp.prec = 200


def member(m, n, p):
    return math.comb(m, n) % p != 0


def phi_linear(p, a, b, q):
    """# (m, n), m >= n >= 0, binom(m, n) != 0 mod p, a*m + b*n = q."""
    if q < 0:
        return 0
    count = 0
    for n in range(0, q // (a + b) + 1):
        rest = q - b * n
        if rest % a:
            continue
        m = rest // a
        if m >= n and member(m, n, p):
            count += 1
    return count


def summatory_linear(p, a, b, u):
    return sum(phi_linear(p, a, b, q) for q in range(u))


def theta(p):
    return mpmath.log(mpmath.mpf(p * (p + 1)) / 2) / mpmath.log(p)


def coeff(p, a, b, u):
    return mpmath.mpf(summatory_linear(p, a, b, u)) / mpmath.power(u, theta(p))


def accum_diag(p, u):
    return coeff(p, 1, 1, u) - mpmath.mpf(phi_linear(p, 1, 1, u - 1)) / (2 * mpmath.power(u, theta(p)))


def accum_skew(u):
    t = theta(2)
    return coeff(2, 1, 2, u) - (3 * phi_linear(2, 1, 2, u - 1) + phi_linear(2, 1, 2, u - 2)) / (5 * mpmath.power(u, t))


def pbm(p, rows):
    out = [f"P1\n{rows} {rows}\n"]
    for m in range(rows):
        out.append(" ".join("1" if n <= m and member(m, n, p) else "0" for n in range(rows)) + "\n")
    return "".join(out)


def main():
    print("phi X+Y p=2 q=4:", phi_linear(2, 1, 1, 4))
    print("phi X+2Y p=2 q=7,3,8:", phi_linear(2, 1, 2, 7), phi_linear(2, 1, 2, 3), phi_linear(2, 1, 2, 8))
    print("phi X p=2 m=5, p=3 m=8:", sum(member(5, n, 2) for n in range(6)), sum(member(8, n, 3) for n in range(9)))
    print("phi_3^{X+Y}(8):", phi_linear(3, 1, 1, 8))
    print("phi_2^{X+Y}(0..16):", [phi_linear(2, 1, 1, q) for q in range(17)])
    print("phi_2^{X+2Y}(0..16):", [phi_linear(2, 1, 2, q) for q in range(17)])
    print("phi_3^{X+3Y}(0..16):", [phi_linear(3, 1, 3, q) for q in range(17)])
    print("phi_3^{2X+Y}(0..16):", [phi_linear(3, 2, 1, q) for q in range(17)])
    print("S_2^{X+Y}(4):", summatory_linear(2, 1, 1, 4))
    print("S_2^{X+2Y}(9):", summatory_linear(2, 1, 2, 9))
    print("S_3^{X+Y}(9):", summatory_linear(3, 1, 1, 9))
    print("S_2^{X+2Y}(8):", summatory_linear(2, 1, 2, 8))
    print("S_3^{X+3Y}(27):", summatory_linear(3, 1, 3, 27))
    print("S_5^{X+Y}(50):", summatory_linear(5, 1, 1, 50))
    for p in (2, 3, 5, 7):
        print(f"theta_{p}:", mpmath.nstr(theta(p), 30))
    print("A_diag(2,3):", mpmath.nstr(accum_diag(2, 3), 30))
    print("3^(1-theta2):", mpmath.nstr(mpmath.power(3, 1 - theta(2)), 30))
    print("A_diag(2,17):", mpmath.nstr(accum_diag(2, 17), 30))
    for p in (3, 5, 7):
        print(f"A_diag({p},2):", mpmath.nstr(accum_diag(p, 2), 30), mpmath.nstr(3 / mpmath.power(2, theta(p) + 1), 30))
    print("A_skew(1):", mpmath.nstr(accum_skew(1), 30))
    print("A_skew(9):", mpmath.nstr(accum_skew(9), 30), mpmath.nstr(64 / (5 * mpmath.power(9, theta(2))), 30))
    print("5*S(9)-3phi(8)-phi(7):", 5 * summatory_linear(2, 1, 2, 9) - 3 * phi_linear(2, 1, 2, 8) - phi_linear(2, 1, 2, 7))
    print("A_diag(2,u), u=1..20:")
    for u in range(1, 21):
        print("  ", u, mpmath.nstr(accum_diag(2, u), 20))
    print("A_skew(u), u=1..12:")
    for u in range(1, 13):
        print("  ", u, mpmath.nstr(accum_skew(u), 20))
    print("C_2^{X+Y}(2) :", mpmath.nstr(coeff(2, 1, 1, 2), 30))
    for p in (2, 3, 5):
        t = theta(p)
        lo = (1 - mpmath.power(2, 1 / (1 - t))) ** (t - 1)
        hi = (3 - t) / (2 * (2 - t) ** (2 - t))
        print(f"Wilson p={p}:", mpmath.nstr(lo, 15), mpmath.nstr(hi, 15))
    # c2 for X+2Y over phi in [0, pi/4]
    print("max cos+2sin on [0,pi/4]:", mpmath.nstr(3 / mpmath.sqrt(2), 20))

    if len(sys.argv) > 1:
        dest = Path(sys.argv[1])
        dest.mkdir(parents=True, exist_ok=True)
        (dest / "pas2_16.pbm").write_text(pbm(2, 16))
        (dest / "pas3_27.pbm").write_text(pbm(3, 27))


if __name__ == "__main__":
    main()
