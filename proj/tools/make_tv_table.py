#!/usr/bin/env python3
"""Write a Turaev-Viro constant table as JSON.

Colours are half-integers a/2 with a in 0..r-2 (keys "0", "1/2", ...).
  q0    = exp(i pi k / r)
  beta  = (-1)^a [a+1]
  gamma = i^(sum of the six numerators) * quantum 6j symbol (Racah formula)
  alpha = -(q0 - 1/q0)^2 / (2r)
The gamma entry order follows the tetrahedron edges 01 02 12 23 13 03.
"""
import argparse
import cmath
import itertools
import json
import math


def qint(n, q):
    return (q ** n - q ** (-n)) / (q - q ** (-1))


def qfact(n, q):
    out = 1
    for k in range(1, n + 1):
        out *= qint(k, q)
    return out


def admissible(a, b, c, r):
    return (a + b + c) % 2 == 0 and a <= b + c and b <= a + c and c <= a + b and a + b + c <= 2 * (r - 2)


def delta(a, b, c, q):
    x = qfact((a + b - c) // 2, q) * qfact((a - b + c) // 2, q) * qfact((-a + b + c) // 2, q)
    return cmath.sqrt(x / qfact((a + b + c) // 2 + 1, q))


def sixj(j1, j2, j3, j4, j5, j6, q):
    t1, t2 = (j1 + j2 + j3) // 2, (j1 + j5 + j6) // 2
    t3, t4 = (j4 + j2 + j6) // 2, (j4 + j5 + j3) // 2
    s1, s2, s3 = (j1 + j2 + j4 + j5) // 2, (j2 + j3 + j5 + j6) // 2, (j3 + j1 + j6 + j4) // 2
    total = 0
    for z in range(max(t1, t2, t3, t4), min(s1, s2, s3) + 1):
        den = qfact(z - t1, q) * qfact(z - t2, q) * qfact(z - t3, q) * qfact(z - t4, q)
        den *= qfact(s1 - z, q) * qfact(s2 - z, q) * qfact(s3 - z, q)
        total += (-1) ** z * qfact(z + 1, q) / den
    return delta(j1, j2, j3, q) * delta(j1, j5, j6, q) * delta(j4, j2, j6, q) * delta(j4, j5, j3, q) * total


def half(a):
    return str(a // 2) if a % 2 == 0 else f"{a}/2"


def pair(z):
    return [z.real, z.imag]


def table(r, k):
    q = cmath.exp(1j * math.pi * k / r)
    beta = {a: (-1) ** a * qint(a + 1, q) for a in range(r - 1)}
    alpha = -((q - 1 / q) ** 2) / (2 * r)
    gamma = {}
    for s in itertools.product(range(r - 1), repeat=6):
        i, j, kk, l, m, n = s
        if all(admissible(*t, r) for t in ((i, j, kk), (kk, l, m), (i, m, n), (j, l, n))):
            gamma[",".join(half(x) for x in s)] = pair(1j ** sum(s) * sixj(*s, q))
    return {
        "r": r,
        "q0": pair(q),
        "alpha": pair(alpha),
        "beta": {half(a): pair(v) for a, v in beta.items()},
        "gamma": gamma,
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--r", type=int, default=3)
    ap.add_argument("--k", type=int, default=1, help="q0 = exp(i pi k / r)")
    ap.add_argument("--out", default="-")
    args = ap.parse_args()
    text = json.dumps(table(args.r, args.k), indent=1)
    if args.out == "-":
        print(text)
    else:
        with open(args.out, "w") as f:
            f.write(text + "\n")


if __name__ == "__main__":
    main()
