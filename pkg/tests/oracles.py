"""Reference values computed by routes independent of the code under test."""

from fractions import Fraction
from math import comb


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def motzkin(n: int) -> int:
    row = [1]
    while len(row) <= n:
        m = len(row) - 1
        row.append(row[m] + sum(row[i] * row[m - 1 - i] for i in range(m)))
    return row[n]


def square_animals(n: int) -> int:
    """Convolution recurrence q_n = qs_n + sum qs_a q_{n-a}, qs from Motzkin."""
    qs = [0] + [motzkin(i - 1) for i in range(1, n + 1)]
    q = [0] * (n + 1)
    for m in range(1, n + 1):
        q[m] = qs[m] + sum(qs[a] * q[m - a] for a in range(1, m))
    return q[n]


def binomial_sqrt(a: int, order: int) -> list[Fraction]:
    """Coefficients of (1 + a z)^(1/2) from the generalized binomial series."""
    out = [Fraction(1)]
    c = Fraction(1)
    for k in range(1, order + 1):
        c = c * (Fraction(1, 2) - (k - 1)) / k * a
        out.append(c)
    return out


def convolve(xs: list[Fraction], ys: list[Fraction]) -> list[Fraction]:
    order = min(len(xs), len(ys)) - 1
    return [
        sum((xs[i] * ys[k - i] for i in range(k + 1)), Fraction(0))
        for k in range(order + 1)
    ]
