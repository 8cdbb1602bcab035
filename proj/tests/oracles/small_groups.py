"""Brute-force oracle for small-prime group data (exponent, 2-torsion count,
anomalous primes). Enumerates every point and walks multiples by repeated
addition; no structure theory is used."""
from math import lcm, isqrt
from sympy import primerange


def points(A, B, p):
    sq = {}
    for y in range(p):
        sq.setdefault(y * y % p, []).append(y)
    pts = [None]
    for x in range(p):
        for y in sq.get((x**3 + A * x + B) % p, []):
            pts.append((x, y))
    return pts


def add(P, Q, A, p):
    if P is None:
        return Q
    if Q is None:
        return P
    (x1, y1), (x2, y2) = P, Q
    if x1 == x2 and (y1 + y2) % p == 0:
        return None
    if P == Q:
        lam = (3 * x1 * x1 + A) * pow(2 * y1, -1, p) % p
    else:
        lam = (y2 - y1) * pow(x2 - x1, -1, p) % p
    x3 = (lam * lam - x1 - x2) % p
    return (x3, (lam * (x1 - x3) - y1) % p)


def order(P, A, p):
    k, R = 1, P
    while R is not None:
        R = add(R, P, A, p)
        k += 1
    return k


def exponent(A, B, p):
    return lcm(*[order(P, A, p) for P in points(A, B, p)])


def two_torsion(A, B, p):
    return sum(1 for x in range(p) if (x**3 + A * x + B) % p == 0)


def count(A, B, p):
    return len(points(A, B, p))


if __name__ == "__main__":
    print("eps (0,80) 29:", exponent(0, 80, 29), " 211:", exponent(0, 80, 211))
    print("eps (14,6) 3:", exponent(14, 6, 3), " 7:", exponent(14, 6, 7))
    print("eps (7,3) 43:", exponent(7, 3, 43), " 641:", exponent(7, 3, 641))
    print("order-two x(x-1)(x+1) mod 7:", two_torsion(-1, 0, 7))
    anom = [p for p in primerange(5, 2001) if (-16 * (4 * 343 + 27 * 9)) % p and count(7, 3, p) == p]
    print("anomalous (7,3) 5..2000:", anom)
    print("a_p (7,3) at 43, 641:", 44 - count(7, 3, 43), 642 - count(7, 3, 641))
    print("a_p (14,6) at 3, 7:", 4 - count(14, 6, 3), 8 - count(14, 6, 7))
