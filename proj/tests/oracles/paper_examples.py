"""Independent oracle for the worked examples.

Uses plain Python integers, affine chord-tangent arithmetic computed
separately modulo each prime factor, and CRT recombination. Nothing here
shares code with the C++ library.
"""
from math import gcd, isqrt
from sympy import factorint, legendre_symbol, jacobi_symbol


def disc(A, B):
    return -16 * (4 * A**3 + 27 * B**2)


def add(P, Q, A, p):
    if P is None:
        return Q
    if Q is None:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 % p == x2 % p and (y1 + y2) % p == 0:
        return None
    if P == Q:
        lam = (3 * x1 * x1 + A) * pow(2 * y1, -1, p) % p
    else:
        lam = (y2 - y1) * pow(x2 - x1, -1, p) % p
    x3 = (lam * lam - x1 - x2) % p
    return (x3, (lam * (x1 - x3) - y1) % p)


def mul(k, P, A, p):
    R = None
    Q = (P[0] % p, P[1] % p)
    while k:
        if k & 1:
            R = add(R, Q, A, p)
        Q = add(Q, Q, A, p)
        k >>= 1
    return R


def trace(A, B, p):
    return -sum(legendre_symbol((x**3 + A * x + B) % p, p) if (x**3 + A * x + B) % p else 0 for x in range(p))


def crt(rs):
    x, m = 0, 1
    for r, n in rs:
        t = (r - x) * pow(m, -1, n) % n
        x, m = x + m * t, m * n
    return x % m


def per_prime_multiple(N, A, k, P):
    return {p: mul(k, P, A, p) for p in factorint(N)}


def a_N(A, B, N):
    out = 1
    for p, e in factorint(N).items():
        ap = trace(A, B, p)
        prev2, prev = 1, ap
        for _ in range(e - 1):
            prev2, prev = prev, ap * prev - p * prev2
        out *= prev
    return out


if __name__ == "__main__":
    NM = 676258600736819377469073681570025709
    A, B = -3500, -98000
    print("muller factors", factorint(NM))
    print("jacobi(-7,NM)", jacobi_symbol(-7, NM))
    print("gcd(NM, 6*disc)", gcd(NM, 6 * disc(A, B)))
    for p in factorint(NM):
        print(" a_p", p, trace(A, B, p) if p < 400000 else "(skipped)")
    half = (NM + 1) // 2
    r = per_prime_multiple(NM, A, half, (84, 448))
    print("half multiple per prime", r)
    print("crt x", crt([(v[0], p) for p, v in r.items()]))
    full = per_prime_multiple(NM, A, NM + 1, (84, 448))
    print("(N+1)P per prime", full)
    Q = (427631894156657698513741722706642740, 349223536492541846798816891095072158)
    print("Q on curve", (Q[1]**2 - Q[0]**3 - A * Q[0] - B) % NM == 0)
    d = per_prime_multiple(NM, A, 2, Q)
    print("2Q per prime", all(d[p] == (84 % p, 448 % p) for p in d))
    print("(84,884) on curve", (884**2 - 84**3 - A * 84 - B) % NM == 0)

    N = 7739
    A, B = -1056, 13352
    print("7739 jacobi(-11)", jacobi_symbol(-11, N), "gcd", gcd(N, 6 * disc(A, B)), "a_N", a_N(A, B, N))
    print("1935P", per_prime_multiple(N, A, 1935, (33, 121)))
    print("3870P", per_prime_multiple(N, A, 3870, (33, 121)))
    print("traces 71,109", trace(A, B, 71), trace(A, B, 109))

    N = 9090870127122419
    A, B = -5, 0
    print("909 factors", factorint(N), "jacobi(-1)", jacobi_symbol(-1, N), "gcd", gcd(N, 6 * disc(A, B)))
    print("(N+1)P", per_prime_multiple(N, A, N + 1, (5, 10)))
    print("a_N", a_N(A, B, N))

    N = 32759
    A, B = -3500, -98000
    print("32759 jacobi(-7)", jacobi_symbol(-7, N), "gcd", gcd(N, 6 * disc(A, B)), "a_N", a_N(A, B, N))
    r = per_prime_multiple(N, A, (N + 1) // 8, (84, 448))
    print("(N+1)/8 P", r, crt([(v[0], p) for p, v in r.items()]), crt([(v[1], p) for p, v in r.items()]))

    for (A, B, N) in [(0, 80, 6119), (7, 3, 27563), (14, 6, 21)]:
        print(N, {p: trace(A, B, p) for p in factorint(N)}, "a_N", a_N(A, B, N), "disc", disc(A, B))
    print("jacobi(-3,6119)", jacobi_symbol(-3, 6119))
