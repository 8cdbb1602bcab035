"""Exponent of E(Z/p^e Z) for y^2 = x^3 + Ax + B by full enumeration.

Points are projective triples with a unit coordinate; the group law is the
Renes-Costello-Batina complete addition, which needs no inversions and is
complete when E(F_p) has no point of order 2.
"""
import sys
from math import gcd


def rcb_add(P, Q, a, b3, m):
    X1, Y1, Z1 = P
    X2, Y2, Z2 = Q
    t0 = X1 * X2 % m; t1 = Y1 * Y2 % m; t2 = Z1 * Z2 % m
    t3 = (X1 + Y1) * (X2 + Y2) % m; t4 = (t0 + t1) % m; t3 = (t3 - t4) % m
    t4 = (X1 + Z1) * (X2 + Z2) % m; t5 = (t0 + t2) % m; t4 = (t4 - t5) % m
    t5 = (Y1 + Z1) * (Y2 + Z2) % m; X3 = (t1 + t2) % m; t5 = (t5 - X3) % m
    Z3 = a * t4 % m; X3 = b3 * t2 % m; Z3 = (X3 + Z3) % m
    X3 = (t1 - Z3) % m; Z3 = (t1 + Z3) % m; Y3 = X3 * Z3 % m
    t1 = 3 * t0 % m; t2 = a * t2 % m; t4 = b3 * t4 % m
    t1 = (t1 + t2) % m; t2 = (t0 - t2) % m; t2 = a * t2 % m; t4 = (t4 + t2) % m
    t0 = t1 * t4 % m; Y3 = (Y3 + t0) % m
    t0 = t5 * t4 % m; X3 = (t3 * X3 - t0) % m
    t0 = t3 * t1 % m; Z3 = (t5 * Z3 + t0) % m
    return X3, Y3, Z3


def canon(P, p, m):
    for c in (2, 1, 0):
        if P[c] % p:
            inv = pow(P[c], -1, m)
            return tuple(v * inv % m for v in P)
    raise ValueError("no unit coordinate")


def points(A, B, p, e):
    m = p ** e
    out = [(x, y, 1) for x in range(m) for y in range(m) if (y * y - x ** 3 - A * x - B) % m == 0]
    # Z divisible by p forces Y to be a unit; scale Y = 1 and solve Z = X^3 + A X Z^2 + B Z^3
    for X in range(0, m, p):
        for Z in range(0, m, p):
            if (Z - X ** 3 - A * X * Z * Z - B * Z ** 3) % m == 0:
                out.append((X, 1, Z))
    return out


def exponent(A, B, p, e):
    m = p ** e
    b3 = 3 * B % m
    identity = (0, 1, 0)
    eps = 1
    for P in points(A, B, p, e):
        R, k = P, 1
        while canon(R, p, m) != identity:
            R = rcb_add(R, P, A % m, b3, m)
            k += 1
        eps = eps * k // gcd(eps, k)
    return eps, len(points(A, B, p, e))


if __name__ == "__main__":
    for A, B, p, e in [(7, 3, 13, 2), (7, 3, 43, 2), (1, 1, 5, 2), (1, 1, 5, 3), (2, 1, 7, 2), (0, 80, 29, 2)]:
        if (4 * A ** 3 + 27 * B * B) % p == 0:
            continue
        eps, n = exponent(A, B, p, e)
        print(f"[{A},{B}] mod {p}^{e}: order {n} exponent {eps}")
    sys.exit(0)
